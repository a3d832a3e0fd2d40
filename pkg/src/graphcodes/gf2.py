"""Bit-packed linear algebra over GF(2).

Vectors are Python ints: bit i is coordinate i, so coordinate 0 is the
first character of the '0'/'1' string form.  A matrix is a list of such
row ints plus an explicit width.  Codeword lengths are capped at 128 so
every row fits two machine words in the enumeration engine.

Column permutations produced by :func:`standard_form` are always
recorded, never applied silently: rows derived from a graph must stay
traceable to its vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_LENGTH = 128


class GF2Error(ValueError):
    """Raised on dimension mismatches and rank failures."""


def vector_weight(bits: int) -> int:
    return bits.bit_count()


def parity(bits: int) -> int:
    return bits.bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """A GF(2) vector of fixed length, packed into an int."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_LENGTH:
            raise GF2Error(f"vector length {self.n} outside 1..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.n:
            raise GF2Error(f"bits 0x{self.bits:x} do not fit in length {self.n}")

    @classmethod
    def from_string(cls, s: str) -> BitVector:
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise GF2Error(f"not a 0/1 string: {s!r}")
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
        return cls(len(s), bits)

    @classmethod
    def from_bits(cls, coords) -> BitVector:
        coords = list(coords)
        bits = 0
        for i, b in enumerate(coords):
            if b & 1:
                bits |= 1 << i
        return cls(len(coords), bits)

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: BitVector) -> BitVector:
        if self.n != other.n:
            raise GF2Error(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.bits ^ other.bits)

    def __str__(self) -> str:
        return "".join("1" if self.bit(i) else "0" for i in range(self.n))


def inner_product(x: BitVector, y: BitVector) -> int:
    """Standard inner product over GF(2)."""
    if x.n != y.n:
        raise GF2Error(f"length mismatch: {x.n} vs {y.n}")
    return (x.bits & y.bits).bit_count() & 1


class BinaryMatrix:
    """A k x n matrix over GF(2), rows bit-packed into ints."""

    def __init__(self, rows, n: int):
        if not 1 <= n <= MAX_LENGTH:
            raise GF2Error(f"width {n} outside 1..{MAX_LENGTH}")
        self.n = n
        self.rows = [int(r) for r in rows]
        for r in self.rows:
            if r < 0 or r >> n:
                raise GF2Error(f"row 0x{r:x} does not fit in width {n}")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, lines) -> BinaryMatrix:
        vecs = [BitVector.from_string(s) for s in lines]
        if not vecs:
            raise GF2Error("empty matrix")
        n = vecs[0].n
        if any(v.n != n for v in vecs):
            raise GF2Error("rows of unequal length")
        return cls([v.bits for v in vecs], n)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls([1 << i for i in range(n)], n)

    def row(self, i: int) -> BitVector:
        return BitVector(self.n, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def copy(self) -> BinaryMatrix:
        return BinaryMatrix(list(self.rows), self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.k))

    def transpose(self) -> BinaryMatrix:
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return BinaryMatrix(cols, self.k)

    def times_transpose(self) -> BinaryMatrix:
        """Self times its own transpose (k x k Gram matrix)."""
        out = []
        for ri in self.rows:
            acc = 0
            for j, rj in enumerate(self.rows):
                acc |= ((ri & rj).bit_count() & 1) << j
            out.append(acc)
        return BinaryMatrix(out, self.k)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)


def rank(m: BinaryMatrix) -> int:
    """GF(2) rank by elimination; does not modify the input."""
    rows = list(m.rows)
    r = 0
    for col in range(m.n):
        mask = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        r += 1
        if r == len(rows):
            break
    return r


def rref(m: BinaryMatrix) -> BinaryMatrix:
    """Reduced row echelon form; canonical for the row space."""
    rows = list(m.rows)
    r = 0
    for col in range(m.n):
        mask = 1 << col
        pivot = next((i for i in range(r, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        r += 1
    return BinaryMatrix(rows[:r] if r else [0], m.n)


def standard_form(m: BinaryMatrix) -> tuple[BinaryMatrix, list[int]]:
    """Reduce a full-rank matrix to [I_k | A] form.

    Pivots greedily on the leftmost usable column; a column swap happens
    only when column r has no pivot in rows r.., and every swap is
    recorded.  Returns the reduced matrix and ``perm`` where position i
    of the output holds original column ``perm[i]``.
    """
    rows = list(m.rows)
    k, n = len(rows), m.n
    perm = list(range(n))
    for r in range(k):
        pivot_col = None
        for col in range(r, n):
            if any(rows[i] & (1 << col) for i in range(r, k)):
                pivot_col = col
                break
        if pivot_col is None:
            raise GF2Error(f"rank-deficient matrix: rank {r} < {k}")
        if pivot_col != r:
            for i in range(k):
                bi = (rows[i] >> r) & 1
                bj = (rows[i] >> pivot_col) & 1
                if bi != bj:
                    rows[i] ^= (1 << r) | (1 << pivot_col)
            perm[r], perm[pivot_col] = perm[pivot_col], perm[r]
        pivot = next(i for i in range(r, k) if rows[i] & (1 << r))
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(k):
            if i != r and rows[i] & (1 << r):
                rows[i] ^= rows[r]
    return BinaryMatrix(rows, n), perm


def permute_columns(m: BinaryMatrix, perm: list[int]) -> BinaryMatrix:
    """Apply a recorded permutation: output column i = input column perm[i]."""
    if sorted(perm) != list(range(m.n)):
        raise GF2Error("not a permutation of the column indices")
    out = []
    for r in m.rows:
        x = 0
        for i, src in enumerate(perm):
            if (r >> src) & 1:
                x |= 1 << i
        out.append(x)
    return BinaryMatrix(out, m.n)


class BinaryCode:
    """Linear binary code given by a full-rank generator matrix."""

    def __init__(self, generator: BinaryMatrix):
        k = rank(generator)
        if k != generator.k:
            raise GF2Error(
                f"generator rows dependent: rank {k} < {generator.k}"
            )
        self.generator = generator

    @property
    def n(self) -> int:
        return self.generator.n

    @property
    def k(self) -> int:
        return self.generator.k

    def __repr__(self) -> str:
        return f"BinaryCode[{self.n},{self.k}]"

    def is_self_dual(self) -> bool:
        """True iff the code equals its Euclidean dual (forces k = n/2)."""
        if self.n != 2 * self.k:
            return False
        return self.generator.times_transpose().is_zero()

    def codewords(self):
        """All 2^k codewords in Gray order; only sensible for small k."""
        word = 0
        yield word
        for j in range(1, 1 << self.k):
            word ^= self.generator.rows[(j & -j).bit_length() - 1]
            yield word

    def codeword_set(self) -> frozenset[int]:
        return frozenset(self.codewords())

    def row_space_key(self) -> tuple[int, ...]:
        """Canonical row-space fingerprint (RREF rows); equal iff same code."""
        return tuple(rref(self.generator).rows)

    def contains(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise GF2Error(f"length mismatch: {v.n} vs {self.n}")
        stack = BinaryMatrix(self.generator.rows + [v.bits], self.n)
        return rank(stack) == self.k


def parse_matrix_text(text: str) -> BinaryMatrix:
    """Matrix text format: one 0/1 row per line, '#' starts a comment line."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise GF2Error("no matrix rows found")
    return BinaryMatrix.from_strings(lines)


def format_matrix_text(m: BinaryMatrix) -> str:
    return str(m) + "\n"
