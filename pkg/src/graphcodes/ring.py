"""Arithmetic in the 16-element ring F2 + uF2 + vF2 + uvF2.

An element a + ub + vc + uvd is stored as the nibble with bit layout
(d, c, b, a) from high to low, which is exactly its hex digit: '7' is
0111, the element 1 + u + v.  Both nilpotents square to zero and
commute, so squaring kills everything but the constant term and the
units are precisely the eight nibbles with a = 1, each its own inverse.

Multiplication goes through a 16 x 16 table built at import time from
the bit formula and cross-checked against a direct polynomial
expansion.

Hex vector strings put the first entry first: string position i is
entry i of the vector.
"""

from __future__ import annotations

from .gf2 import BinaryMatrix, BitVector

ZERO = 0x0
ONE = 0x1
U = 0x2
V = 0x4
UV = 0x8

_HEX_DIGITS = "0123456789ABCDEF"


class RingError(ValueError):
    """Raised on malformed hex input and shape mismatches."""


def element(a: int, b: int = 0, c: int = 0, d: int = 0) -> int:
    """Pack components of a + ub + vc + uvd into a nibble."""
    return (a & 1) | (b & 1) << 1 | (c & 1) << 2 | (d & 1) << 3


def parts(x: int) -> tuple[int, int, int, int]:
    """Unpack a nibble into (a, b, c, d)."""
    return x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1


def _mul_bits(x: int, y: int) -> int:
    xa, xb, xc, xd = parts(x)
    ya, yb, yc, yd = parts(y)
    a = xa & ya
    b = (xa & yb) ^ (xb & ya)
    c = (xa & yc) ^ (xc & ya)
    d = (xa & yd) ^ (xb & yc) ^ (xc & yb) ^ (xd & ya)
    return element(a, b, c, d)


def _mul_poly(x: int, y: int) -> int:
    # (u-degree, v-degree) exponent pairs; u^2 = v^2 = 0 drops any
    # product where an exponent reaches 2.
    acc = 0
    for i in range(4):
        if not (x >> i) & 1:
            continue
        ui, vi = (i & 1), (i >> 1) & 1
        for j in range(4):
            if not (y >> j) & 1:
                continue
            uj, vj = (j & 1), (j >> 1) & 1
            if ui + uj > 1 or vi + vj > 1:
                continue
            acc ^= 1 << ((ui + uj) | ((vi + vj) << 1))
    return acc


MUL_TABLE: tuple[tuple[int, ...], ...] = tuple(
    tuple(_mul_poly(x, y) for y in range(16)) for x in range(16)
)

for _x in range(16):
    for _y in range(16):
        if MUL_TABLE[_x][_y] != _mul_bits(_x, _y):
            raise AssertionError("ring multiplication table disagrees with formula")
del _x, _y


def mul(x: int, y: int) -> int:
    return MUL_TABLE[x][y]


def add(x: int, y: int) -> int:
    return x ^ y


def is_unit(x: int) -> bool:
    return bool(x & 1)


def hex_encode(x: int) -> str:
    if not 0 <= x <= 15:
        raise RingError(f"not a ring element nibble: {x}")
    return _HEX_DIGITS[x]


def hex_decode(ch: str) -> int:
    x = _HEX_DIGITS.find(ch.upper())
    if len(ch) != 1 or x < 0:
        raise RingError(f"not a hex digit: {ch!r}")
    return x


def vector_from_hex(s: str) -> list[int]:
    return [hex_decode(ch) for ch in s]


def vector_to_hex(vec) -> str:
    return "".join(hex_encode(x) for x in vec)


def vector_inner(x, y) -> int:
    if len(x) != len(y):
        raise RingError(f"length mismatch: {len(x)} vs {len(y)}")
    acc = 0
    for xi, yi in zip(x, y):
        acc ^= MUL_TABLE[xi][yi]
    return acc


def scale(c: int, vec) -> list[int]:
    row = MUL_TABLE[c]
    return [row[x] for x in vec]


def gray_map(vec) -> BitVector:
    """Map a ring vector of length n to the 4n-bit image.

    Block layout, first coordinate block first: d, b+d, c+d, a+b+c+d.
    The middle-block order is pinned by the published extension vectors,
    which are the only bundled data that can see it; every weight or
    orthogonality property is invariant under swapping the two nilpotent
    generators.  Additive, and preserves orthogonality of vectors.
    """
    n = len(vec)
    bits = 0
    for i, x in enumerate(vec):
        a, b, c, d = parts(x)
        if d:
            bits |= 1 << i
        if b ^ d:
            bits |= 1 << (n + i)
        if c ^ d:
            bits |= 1 << (2 * n + i)
        if a ^ b ^ c ^ d:
            bits |= 1 << (3 * n + i)
    return BitVector(4 * n, bits)


def projection(vec) -> BitVector:
    """Component-wise constant term: the binary shadow of a ring vector."""
    bits = 0
    for i, x in enumerate(vec):
        if x & 1:
            bits |= 1 << i
    return BitVector(len(vec), bits)


def embed(v: BitVector) -> list[int]:
    """Binary vector as a ring vector; a section of the projection."""
    return [v.bit(i) for i in range(v.n)]


class R2Matrix:
    """A k x m matrix of ring nibbles."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        if not self.rows:
            raise RingError("empty matrix")
        self.m = len(self.rows[0])
        if any(len(r) != self.m for r in self.rows):
            raise RingError("rows of unequal length")
        for r in self.rows:
            for x in r:
                if not 0 <= x <= 15:
                    raise RingError(f"not a ring element nibble: {x}")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_hex_rows(cls, lines) -> R2Matrix:
        return cls([vector_from_hex(s) for s in lines])

    def to_hex_rows(self) -> list[str]:
        return [vector_to_hex(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, R2Matrix) and self.rows == other.rows

    def __str__(self) -> str:
        return "\n".join(self.to_hex_rows())

    def projection(self) -> BinaryMatrix:
        return BinaryMatrix([projection(r).bits for r in self.rows], self.m)

    def scaled(self, c: int) -> R2Matrix:
        return R2Matrix([scale(c, r) for r in self.rows])


def augment_identity(k: R2Matrix) -> R2Matrix:
    """Rows of [I | K] as ring vectors."""
    if k.k > k.m:
        raise RingError(f"more rows than columns: {k.k}x{k.m}")
    rows = []
    for i, r in enumerate(k.rows):
        ident = [ONE if j == i else ZERO for j in range(k.k)]
        rows.append(ident + list(r))
    return R2Matrix(rows)


def is_self_dual_r2(k: R2Matrix) -> bool:
    """True iff [I | K] generates a self-dual code: K K^T = I over the ring."""
    if k.k != k.m:
        raise RingError(f"square matrix required, got {k.k}x{k.m}")
    for i in range(k.k):
        for j in range(i, k.k):
            want = ONE if i == j else ZERO
            if vector_inner(k.rows[i], k.rows[j]) != want:
                return False
    return True


def gram_identity_defect(k: R2Matrix) -> list[tuple[int, int]]:
    """Index pairs (i, j), i <= j, where K K^T differs from the identity."""
    bad = []
    for i in range(k.k):
        for j in range(i, k.k):
            want = ONE if i == j else ZERO
            if vector_inner(k.rows[i], k.rows[j]) != want:
                bad.append((i, j))
    return bad


