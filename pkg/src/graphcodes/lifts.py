"""Lifting binary self-dual codes to the 16-element ring.

A lift base is the right half A of a generator [I | A] whose leading
principal minors are all invertible.  Published lifts are shipped as
36-digit hex strings holding the upper triangle of the 8x8 ring matrix
K row-wise; the lower triangle is not free: once the upper triangle is
fixed, row k of K must be orthogonal to every earlier row, which pins
the unknown entries down to a square linear system over GF(2) per row.
The solver walks rows top to bottom, enumerates every solution of each
row system, and returns all full matrices passing the exact K K^T = I
check, so the completion count is measured rather than assumed.

Random lifts draw the 108 free upper-triangle bits from a seeded
Mersenne Twister (`random.Random.getrandbits`, stable across Python
versions), making searches replayable from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import ring
from .analysis import EnumeratorReport, analyze, distance_upper_bound
from .extension import build_gray_generator
from .gf2 import BinaryCode, BinaryMatrix, rank
from .ring import R2Matrix

UPPER_LENGTH = 36
LIFT_SIZE = 8
SOLUTION_CAP = 1 << 16
RNG_NAME = "mt19937-getrandbits"


class LiftError(ValueError):
    """Raised on malformed hex strings, bad bases, and solver overflow."""


class HexLengthError(LiftError):
    """Wrong upper-triangle string length; carries the offending length."""

    def __init__(self, got: int):
        super().__init__(
            f"upper-triangle string has {got} digits, expected {UPPER_LENGTH}"
        )
        self.got = got


Upper = list[list["int | None"]]


def _check_base(a: BinaryMatrix) -> None:
    if a.k != a.n:
        raise LiftError(f"base must be square, got {a.k}x{a.n}")
    gen = BinaryMatrix(
        [(1 << i) | (a.rows[i] << a.k) for i in range(a.k)], 2 * a.k
    )
    if not BinaryCode(gen).is_self_dual():
        raise LiftError("[I|A] does not generate a self-dual code")


def base_code(a: BinaryMatrix) -> BinaryCode:
    """The binary code generated by [I | A]."""
    _check_base(a)
    return BinaryCode(
        BinaryMatrix([(1 << i) | (a.rows[i] << a.k) for i in range(a.k)], 2 * a.k)
    )


def is_lrm(a: BinaryMatrix) -> bool:
    """True iff every leading principal submatrix of A is invertible."""
    _check_base(a)
    for t in range(1, a.k + 1):
        mask = (1 << t) - 1
        minor = BinaryMatrix([r & mask for r in a.rows[:t]], t)
        if rank(minor) != t:
            return False
    return True


def decode_upper(s: str) -> Upper:
    """Hex string to the upper triangle of an 8x8 ring matrix, row-wise."""
    s = s.strip()
    if len(s) != UPPER_LENGTH:
        raise HexLengthError(len(s))
    upper: Upper = [[None] * LIFT_SIZE for _ in range(LIFT_SIZE)]
    pos = 0
    for i in range(LIFT_SIZE):
        for j in range(i, LIFT_SIZE):
            upper[i][j] = ring.hex_decode(s[pos])
            pos += 1
    return upper


def encode_upper(k: R2Matrix) -> str:
    """Upper triangle of K as the 36-digit row-wise hex string."""
    if k.k != LIFT_SIZE or k.m != LIFT_SIZE:
        raise LiftError(f"expected an 8x8 matrix, got {k.k}x{k.m}")
    return "".join(
        ring.hex_encode(k.rows[i][j])
        for i in range(LIFT_SIZE)
        for j in range(i, LIFT_SIZE)
    )


@dataclass(frozen=True)
class LiftCandidate:
    """A completed lift: pi(K) equals the base and K K^T = I."""

    base: BinaryMatrix
    k: R2Matrix

    def __post_init__(self):
        if self.k.projection() != self.base:
            raise LiftError("projection of K does not match the base")
        if not ring.is_self_dual_r2(self.k):
            raise LiftError("K K^T is not the identity")

    def upper_hex(self) -> str:
        return encode_upper(self.k)

    def gray_code(self) -> BinaryCode:
        return BinaryCode(build_gray_generator(self.k))


def _solve_affine(equations: list[tuple[int, int]], n_unknowns: int) -> list[int] | None:
    """All solutions of a GF(2) system given as (coefficient mask, constant).

    Returns None when inconsistent; raises when the solution set would
    exceed the enumeration cap.
    """
    rows = list(equations)
    pivot_of: dict[int, int] = {}
    r = 0
    for col in range(n_unknowns):
        piv = next(
            (i for i in range(r, len(rows)) if (rows[i][0] >> col) & 1), None
        )
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i][0] >> col) & 1:
                rows[i] = (rows[i][0] ^ rows[r][0], rows[i][1] ^ rows[r][1])
        pivot_of[col] = r
        r += 1
    if any(m == 0 and c == 1 for m, c in rows):
        return None
    free = [col for col in range(n_unknowns) if col not in pivot_of]
    if len(free) > SOLUTION_CAP.bit_length() - 1:
        raise LiftError(
            f"row system has 2^{len(free)} solutions, beyond the cap {SOLUTION_CAP}"
        )
    solutions = []
    for assign in range(1 << len(free)):
        x = 0
        for bit, col in enumerate(free):
            if (assign >> bit) & 1:
                x |= 1 << col
        for col, prow in pivot_of.items():
            mask, const = rows[prow]
            val = const ^ ((mask & x).bit_count() & 1)
            if val:
                x |= 1 << col
        solutions.append(x)
    return solutions


def complete_lower(upper: Upper, a: BinaryMatrix) -> list[LiftCandidate]:
    """All completions of an upper triangle into a full lift of [I | A].

    Row k is solved from its orthogonality against rows 1..k-1: the
    constant-term component of each relation already holds because
    [I | A] is self-dual, leaving 3(k-1) linear equations over GF(2) in
    the 3(k-1) free bits of row k.  Singular-but-consistent systems
    branch over the whole affine solution set.
    """
    _check_base(a)
    size = a.k
    for i in range(size):
        for j in range(i, size):
            x = upper[i][j]
            if x is None:
                raise LiftError(f"missing upper entry ({i},{j})")
            if (x & 1) != a.entry(i, j):
                raise LiftError(
                    f"upper entry ({i},{j}) projects to {x & 1}, base has {a.entry(i, j)}"
                )

    results: list[LiftCandidate] = []

    def row_solutions(ki: int, done: list[list[int]]) -> list[list[int]] | None:
        n_unknowns = 3 * ki
        equations: list[tuple[int, int]] = []
        for i in range(ki):
            known = 0
            for j in range(ki, size):
                known ^= ring.mul(done[i][j], upper[ki][j])
            _, kb, kc, kd = ring.parts(known)
            mask_b = mask_c = mask_d = 0
            const_b, const_c, const_d = kb, kc, kd
            for j in range(ki):
                xa, xb, xc, xd = ring.parts(done[i][j])
                ya = a.entry(ki, j)
                if xa:
                    mask_b |= 1 << (3 * j)
                    mask_c |= 1 << (3 * j + 1)
                    mask_d |= 1 << (3 * j + 2)
                if xb:
                    mask_d |= 1 << (3 * j + 1)
                if xc:
                    mask_d |= 1 << (3 * j)
                const_b ^= xb & ya
                const_c ^= xc & ya
                const_d ^= xd & ya
            equations += [(mask_b, const_b), (mask_c, const_c), (mask_d, const_d)]
        packed = _solve_affine(equations, n_unknowns)
        if packed is None:
            return None
        rows = []
        for x in packed:
            row = [0] * size
            for j in range(ki):
                row[j] = ring.element(
                    a.entry(ki, j),
                    (x >> (3 * j)) & 1,
                    (x >> (3 * j + 1)) & 1,
                    (x >> (3 * j + 2)) & 1,
                )
            for j in range(ki, size):
                row[j] = upper[ki][j]
            rows.append(row)
        return rows

    def descend(ki: int, done: list[list[int]]) -> None:
        if ki == size:
            results.append(LiftCandidate(a, R2Matrix(done)))
            return
        rows = row_solutions(ki, done)
        if rows is None:
            raise LiftError(
                f"orthogonality system for row {ki + 1} is inconsistent; no completion"
            )
        for row in rows:
            if len(results) >= SOLUTION_CAP:
                raise LiftError(f"more than {SOLUTION_CAP} completions")
            descend(ki + 1, done + [row])

    descend(1, [[x for x in upper[0]]])
    return results


@dataclass(frozen=True)
class RandomLift:
    """A random lift plus the data needed to regenerate it."""

    candidate: LiftCandidate
    seed: int
    tries: int
    rng: str = RNG_NAME


def _random_upper(a: BinaryMatrix, rng: random.Random) -> Upper:
    upper: Upper = [[None] * a.k for _ in range(a.k)]
    for i in range(a.k):
        for j in range(i, a.k):
            free = rng.getrandbits(3)
            upper[i][j] = ring.element(
                a.entry(i, j), free & 1, (free >> 1) & 1, (free >> 2) & 1
            )
    return upper


def random_lift(a: BinaryMatrix, seed: int, max_tries: int = 200) -> RandomLift:
    """Seeded random upper triangle, completed; retries until one works."""
    _check_base(a)
    rng = random.Random(seed)
    for attempt in range(1, max_tries + 1):
        upper = _random_upper(a, rng)
        try:
            candidates = complete_lower(upper, a)
        except LiftError:
            continue
        if candidates:
            return RandomLift(candidates[0], seed=seed, tries=attempt)
    raise LiftError(f"no completable upper triangle in {max_tries} tries")


@dataclass(frozen=True)
class Discovery:
    """A search hit, recorded by its replayable construction."""

    base_name: str
    hex: str
    seed: int
    family: str
    beta: int | None
    a12_pair: int | None
    report: EnumeratorReport


def default_analyzer(threads: int = 1):
    def run(candidate: LiftCandidate) -> EnumeratorReport:
        return analyze(candidate.gray_code(), threads=threads)

    return run


def search_lifts(
    a: BinaryMatrix,
    *,
    budget: int,
    seed: int = 0,
    min_distance: int | None = None,
    targets: set[tuple[str, int]] | None = None,
    base_name: str = "",
    threads: int = 1,
    analyzer=None,
) -> list[Discovery]:
    """Random-lift search for Gray images meeting the given criteria.

    Every hit is re-verified by rebuilding the lift from its hex string
    before being reported, and hits duplicating an earlier (weight
    distribution, pair invariant) are dropped.
    """
    run = analyzer if analyzer is not None else default_analyzer(threads)
    found: list[Discovery] = []
    seen: set[tuple] = set()
    for i in range(budget):
        lift = random_lift(a, seed=seed + i)
        report = run(lift.candidate)
        if min_distance is not None and report.d < min_distance:
            continue
        if targets is not None and (report.family, report.beta) not in targets:
            continue
        key = (tuple(sorted(report.distribution.items())), report.a12_pair)
        if key in seen:
            continue
        hex_str = lift.candidate.upper_hex()
        redone = complete_lower(decode_upper(hex_str), a)
        match = next((c for c in redone if c.k == lift.candidate.k), None)
        if match is None:
            continue
        reverified = run(match)
        if (
            reverified.distribution != report.distribution
            or reverified.a12_pair != report.a12_pair
        ):
            continue
        seen.add(key)
        found.append(
            Discovery(
                base_name=base_name,
                hex=hex_str,
                seed=lift.seed,
                family=report.family,
                beta=report.beta,
                a12_pair=report.a12_pair,
                report=report,
            )
        )
    return found


def _run_trials(
    trials: list[str],
    a: BinaryMatrix,
    expected_family: str,
    expected_beta: int,
    threads: int,
    analyzer,
) -> list[str]:
    run = analyzer if analyzer is not None else default_analyzer(threads)
    screen = analyzer is None and expected_family in ("W64_1", "W64_2")
    good: list[str] = []
    seen: set[str] = set()
    for cand in trials:
        if cand in seen:
            continue
        seen.add(cand)
        try:
            completions = complete_lower(decode_upper(cand), a)
        except LiftError:
            continue
        for completion in completions:
            if screen and distance_upper_bound(completion.gray_code()) < 12:
                continue
            report = run(completion)
            if report.family == expected_family and report.beta == expected_beta:
                good.append(cand)
                break
    return good


def repair_hex(
    s: str,
    a: BinaryMatrix,
    expected_family: str,
    expected_beta: int,
    *,
    threads: int = 1,
    analyzer=None,
) -> list[str]:
    """Candidate 36-digit strings recovering a wrong-length table entry.

    A 35-digit string is repaired by trying every insertion, a 37-digit
    one by every deletion; a candidate survives only if it completes to
    a lift whose Gray image matches the expected family and beta.
    """
    s = s.strip()
    if len(s) == UPPER_LENGTH:
        raise LiftError("string already has 36 digits; nothing to repair")
    if len(s) == UPPER_LENGTH - 1:
        trials = [
            s[:pos] + digit + s[pos:]
            for pos in range(UPPER_LENGTH)
            for digit in "0123456789ABCDEF"
        ]
    elif len(s) == UPPER_LENGTH + 1:
        trials = [s[:pos] + s[pos + 1 :] for pos in range(UPPER_LENGTH + 1)]
    else:
        raise LiftError(
            f"repair handles lengths 35 and 37 only, got {len(s)} digits"
        )
    return _run_trials(trials, a, expected_family, expected_beta, threads, analyzer)


def repair_substitution(
    s: str,
    a: BinaryMatrix,
    expected_family: str,
    expected_beta: int,
    *,
    threads: int = 1,
    analyzer=None,
) -> list[str]:
    """Candidate repairs for a 36-digit entry that fails to reproduce.

    Tries every single-digit substitution, keeping candidates whose
    completion exists and whose Gray image matches the expected family
    and beta.  Recovers entries misprinted in content rather than in
    length.
    """
    s = s.strip()
    if len(s) != UPPER_LENGTH:
        raise LiftError(f"substitution repair needs 36 digits, got {len(s)}")
    trials = [
        s[:pos] + digit + s[pos + 1 :]
        for pos in range(UPPER_LENGTH)
        for digit in "0123456789ABCDEF"
        if digit != s[pos]
    ]
    return _run_trials(trials, a, expected_family, expected_beta, threads, analyzer)
