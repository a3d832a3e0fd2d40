"""Exhaustive codeword analysis: weight distribution, type, enumerator family.

The enumerator walks all 2^k codewords, k up to 33.  The message space
is split into blocks by fixing the top t message bits; each block's
codewords are the block seed XORed against a table of the low-part
codewords laid out in reflected-Gray order, so the whole walk touches
every codeword exactly once and one hardware popcount per word gives
the weights.  Blocks merge by integer histogram addition in fixed block
order, which makes the result independent of the thread count.

Weight-12 codewords are collected during the same pass; when the
minimum distance turns out to be 12 they feed the pairwise-distance
invariant that separates inequivalent codes with equal enumerators.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .gf2 import BinaryCode
from .published import KNOWN_BETAS

MAX_DIMENSION = 33
NAIVE_MAX_DIMENSION = 20
DEFAULT_BLOCK_BITS = 20
PAIR_WEIGHT = 12
DEFAULT_WORD_CAP = 10**6

_MASK64 = (1 << 64) - 1


class AnalysisError(ValueError):
    """Raised on dimension limits, classification failures, and caps."""


if hasattr(np, "bitwise_count"):
    _popcount = np.bitwise_count
else:  # pre-2.0 numpy: 16-bit table lookup, four gathers per word
    _LUT16 = np.array([i.bit_count() for i in range(1 << 16)], dtype=np.uint8)

    def _popcount(a):
        m = np.uint64(0xFFFF)
        return (
            _LUT16[(a & m).astype(np.intp)]
            + _LUT16[((a >> np.uint64(16)) & m).astype(np.intp)]
            + _LUT16[((a >> np.uint64(32)) & m).astype(np.intp)]
            + _LUT16[(a >> np.uint64(48)).astype(np.intp)]
        )


def _gray_tables(rows: list[int], two_words: bool):
    lo = np.zeros(1, dtype=np.uint64)
    hi = np.zeros(1, dtype=np.uint64)
    for r in rows:
        lo = np.concatenate([lo, lo[::-1] ^ np.uint64(r & _MASK64)])
        if two_words:
            hi = np.concatenate([hi, hi[::-1] ^ np.uint64(r >> 64)])
    return lo, (hi if two_words else None)


def _block_seed(high_rows: list[int], block_index: int) -> int:
    seed = 0
    g = block_index ^ (block_index >> 1)
    while g:
        seed ^= high_rows[(g & -g).bit_length() - 1]
        g &= g - 1
    return seed


def _enumerate(
    rows: list[int],
    n: int,
    *,
    collect_weight: int | None = None,
    word_cap: int = DEFAULT_WORD_CAP,
    threads: int = 1,
    block_bits: int | None = None,
):
    """Histogram of all 2^k subset XORs of ``rows``, plus collected words.

    Returns (hist, words_lo, words_hi, collected_count); the word arrays
    hold at most ``word_cap`` entries even if more matched.
    """
    k = len(rows)
    two_words = n > 64
    b = min(k, DEFAULT_BLOCK_BITS if block_bits is None else block_bits)
    lo, hi = _gray_tables(rows[:b], two_words)
    high = rows[b:]
    nblocks = 1 << (k - b)

    def run_chunk(start: int, stop: int):
        hist = np.zeros(n + 1, dtype=np.int64)
        got_lo, got_hi = [], []
        count = 0
        seed = _block_seed(high, start)
        for m in range(start, stop):
            if m != start:
                seed ^= high[(m & -m).bit_length() - 1]
            arr = lo ^ np.uint64(seed & _MASK64)
            w = _popcount(arr)
            if two_words:
                arr_hi = hi ^ np.uint64(seed >> 64)
                w = w + _popcount(arr_hi)
            hist += np.bincount(w, minlength=n + 1)
            if collect_weight is not None:
                idx = np.nonzero(w == collect_weight)[0]
                if idx.size:
                    if count <= word_cap:
                        got_lo.append(arr[idx])
                        if two_words:
                            got_hi.append(arr_hi[idx])
                    count += int(idx.size)
        return hist, got_lo, got_hi, count

    threads = max(1, threads)
    if threads == 1 or nblocks == 1:
        chunks = [run_chunk(0, nblocks)]
    else:
        bounds = [nblocks * i // threads for i in range(threads + 1)]
        ranges = [
            (bounds[i], bounds[i + 1])
            for i in range(threads)
            if bounds[i] < bounds[i + 1]
        ]
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            futures = [pool.submit(run_chunk, a, z) for a, z in ranges]
            chunks = [f.result() for f in futures]

    hist = np.zeros(n + 1, dtype=np.int64)
    all_lo, all_hi = [], []
    collected = 0
    for h, glo, ghi, cnt in chunks:
        hist += h
        all_lo.extend(glo)
        all_hi.extend(ghi)
        collected += cnt
    words_lo = np.concatenate(all_lo) if all_lo else np.zeros(0, dtype=np.uint64)
    words_hi = (
        (np.concatenate(all_hi) if all_hi else np.zeros(0, dtype=np.uint64))
        if two_words
        else None
    )
    return hist, words_lo, words_hi, collected


def _check_dimension(code: BinaryCode) -> None:
    if code.k > MAX_DIMENSION:
        raise AnalysisError(f"dimension {code.k} exceeds limit {MAX_DIMENSION}")


def distance_upper_bound(code: BinaryCode, bits: int = 20) -> int:
    """Cheap upper bound on the minimum distance from two subcodes.

    Enumerates the subcodes spanned by the first and the last ``bits``
    generator rows; every word seen is a codeword, so the smallest
    nonzero weight observed bounds the distance from above.  Used to
    discard repair candidates without a full enumeration.
    """
    rows = code.generator.rows
    two_words = code.n > 64
    best = code.n
    picks = [rows[:bits]]
    if len(rows) > bits:
        picks.append(rows[-bits:])
    for pick in picks:
        lo, hi = _gray_tables(pick, two_words)
        w = _popcount(lo)
        if two_words:
            w = w + _popcount(hi)
        w = w.astype(np.int64)
        w[0] = code.n
        best = min(best, int(w.min()))
    return best


def weight_distribution(
    code: BinaryCode,
    threads: int = 1,
    block_bits: int | None = None,
) -> dict[int, int]:
    """Exact weight counts over all 2^k codewords, as a sparse map."""
    _check_dimension(code)
    hist, _, _, _ = _enumerate(
        code.generator.rows, code.n, threads=threads, block_bits=block_bits
    )
    return {w: int(c) for w, c in enumerate(hist) if c}


def naive_distribution_oracle(code: BinaryCode) -> dict[int, int]:
    """Message-by-message encoding; the slow reference for the enumerator."""
    if code.k > NAIVE_MAX_DIMENSION:
        raise AnalysisError(
            f"dimension {code.k} exceeds oracle limit {NAIVE_MAX_DIMENSION}"
        )
    rows = code.generator.rows
    counts: dict[int, int] = {}
    for msg in range(1 << code.k):
        word = 0
        m = msg
        while m:
            word ^= rows[(m & -m).bit_length() - 1]
            m &= m - 1
        w = word.bit_count()
        counts[w] = counts.get(w, 0) + 1
    return dict(sorted(counts.items()))


def min_distance(dist: dict[int, int]) -> int:
    positive = [w for w, c in dist.items() if w > 0 and c > 0]
    if not positive:
        raise AnalysisError("trivial code has no nonzero codeword")
    return min(positive)


def classify_type(dist: dict[int, int]) -> str:
    """'II' when every weight is divisible by four, 'I' otherwise."""
    weights = [w for w, c in dist.items() if c > 0 and w > 0]
    odd = [w for w in weights if w & 1]
    if odd:
        raise AnalysisError(f"odd weights present (not self-dual): {sorted(odd)[:4]}")
    return "II" if all(w % 4 == 0 for w in weights) else "I"


def classify_w64(dist: dict[int, int], n: int, k: int) -> tuple[str, int]:
    """Place a [64,32,12] type I distribution in one of the two families."""
    if (n, k) != (64, 32):
        raise AnalysisError(f"expected [64,32], got [{n},{k}]")
    if min_distance(dist) != 12:
        raise AnalysisError(f"expected minimum distance 12, got {min_distance(dist)}")
    if classify_type(dist) != "I":
        raise AnalysisError("doubly-even distribution cannot match these families")
    a12, a14 = dist.get(12, 0), dist.get(14, 0)
    q, r = divmod(a12 - 1312, 16)
    if r or q < 0:
        raise AnalysisError(f"A_12 = {a12} does not fit 1312 + 16*beta")
    beta = q
    if a14 == 22016 - 64 * beta:
        family, lower, upper = "W64_1", 14, 284
    elif a14 == 23040 - 64 * beta:
        family, lower, upper = "W64_2", 0, 277
    else:
        raise AnalysisError(f"A_14 = {a14} matches neither family at beta = {beta}")
    if not lower <= beta <= upper:
        warnings.warn(
            f"beta = {beta} outside the admissible range {lower}..{upper} of {family}",
            stacklevel=2,
        )
    return family, beta


def classify_w66(dist: dict[int, int], n: int, k: int) -> tuple[str, int | None]:
    """Place a [66,33,12] distribution in one of the three families."""
    if (n, k) != (66, 33):
        raise AnalysisError(f"expected [66,33], got [{n},{k}]")
    if min_distance(dist) != 12:
        raise AnalysisError(f"expected minimum distance 12, got {min_distance(dist)}")
    a12, a14 = dist.get(12, 0), dist.get(14, 0)
    if (a12, a14) == (1690, 7990):
        return "W66_2", None
    q, r = divmod(a12 - 858, 8)
    if r or q < 0:
        raise AnalysisError(f"A_12 = {a12} does not fit 858 + 8*beta")
    beta = q
    if a14 == 18678 - 24 * beta:
        family, lower, upper = "W66_1", 0, 778
    elif a14 == 18166 - 24 * beta:
        family, lower, upper = "W66_3", 14, 756
    else:
        raise AnalysisError(f"A_14 = {a14} matches no family at beta = {beta}")
    if not lower <= beta <= upper:
        warnings.warn(
            f"beta = {beta} outside the admissible range {lower}..{upper} of {family}",
            stacklevel=2,
        )
    return family, beta


def _pair_count_at(words_lo, words_hi, distance: int) -> int:
    total = 0
    target = np.uint8(distance)
    for i in range(len(words_lo) - 1):
        d = _popcount(words_lo[i] ^ words_lo[i + 1 :])
        if words_hi is not None:
            d = d + _popcount(words_hi[i] ^ words_hi[i + 1 :])
        total += int((d == target).sum())
    return total


def pair_invariant_a12(
    code: BinaryCode,
    threads: int = 1,
    word_cap: int = DEFAULT_WORD_CAP,
) -> int:
    """Unordered pairs of weight-12 codewords at Hamming distance 12.

    Permutation-invariant, so unequal values certify inequivalence of
    codes sharing a weight enumerator.
    """
    _check_dimension(code)
    hist, words_lo, words_hi, collected = _enumerate(
        code.generator.rows,
        code.n,
        collect_weight=PAIR_WEIGHT,
        word_cap=word_cap,
        threads=threads,
    )
    dist = {w: int(c) for w, c in enumerate(hist) if c}
    if min_distance(dist) != PAIR_WEIGHT:
        raise AnalysisError(
            f"pair invariant requires minimum distance {PAIR_WEIGHT}, got {min_distance(dist)}"
        )
    if collected > word_cap:
        raise AnalysisError(
            f"{collected} weight-{PAIR_WEIGHT} codewords exceed the cap {word_cap}"
        )
    return _pair_count_at(words_lo, words_hi, PAIR_WEIGHT)


def novelty_check(family: str, beta: int | None) -> bool:
    """True when no construction was previously reported for (family, beta)."""
    known = KNOWN_BETAS.get(family)
    if known is None or beta is None:
        return False
    return beta not in known


@dataclass
class EnumeratorReport:
    """Full analysis record of one binary code."""

    n: int
    k: int
    d: int
    type: str | None
    family: str
    beta: int | None
    a12_pair: int | None
    novelty: bool
    distribution: dict[int, int] = field(repr=False)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "type": self.type,
            "family": self.family,
            "beta": self.beta,
            "a12_pair": self.a12_pair,
            "novelty": self.novelty,
            "distribution": {str(w): c for w, c in sorted(self.distribution.items())},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> EnumeratorReport:
        return cls(
            n=data["n"],
            k=data["k"],
            d=data["d"],
            type=data["type"],
            family=data["family"],
            beta=data["beta"],
            a12_pair=data["a12_pair"],
            novelty=data["novelty"],
            distribution={int(w): c for w, c in data["distribution"].items()},
        )

    def summary(self) -> str:
        bits = [f"[{self.n},{self.k},{self.d}]"]
        bits.append(f"type {self.type}" if self.type else "not even")
        if self.family != "none":
            tag = f"{self.family}"
            if self.beta is not None:
                tag += f" beta={self.beta}"
            if self.novelty:
                tag += " (novel)"
            bits.append(tag)
        if self.a12_pair is not None:
            bits.append(f"A12-pairs={self.a12_pair}")
        return " ".join(bits)


def analyze(
    code: BinaryCode,
    threads: int = 1,
    word_cap: int = DEFAULT_WORD_CAP,
) -> EnumeratorReport:
    """One-pass full analysis; deterministic in the code alone."""
    _check_dimension(code)
    collect = PAIR_WEIGHT if code.n >= PAIR_WEIGHT else None
    hist, words_lo, words_hi, collected = _enumerate(
        code.generator.rows,
        code.n,
        collect_weight=collect,
        word_cap=word_cap,
        threads=threads,
    )
    dist = {w: int(c) for w, c in enumerate(hist) if c}
    d = min_distance(dist)
    try:
        code_type = classify_type(dist)
    except AnalysisError:
        code_type = None

    family: str = "none"
    beta: int | None = None
    if code_type == "I" and (code.n, code.k) == (64, 32) and d == 12:
        try:
            family, beta = classify_w64(dist, code.n, code.k)
        except AnalysisError:
            family = "none"
    elif (code.n, code.k) == (66, 33) and d == 12:
        try:
            family, beta = classify_w66(dist, code.n, code.k)
        except AnalysisError:
            family = "none"

    a12_pair: int | None = None
    if d == PAIR_WEIGHT:
        if collected > word_cap:
            raise AnalysisError(
                f"{collected} weight-{PAIR_WEIGHT} codewords exceed the cap {word_cap}"
            )
        a12_pair = _pair_count_at(words_lo, words_hi, PAIR_WEIGHT)

    return EnumeratorReport(
        n=code.n,
        k=code.k,
        d=d,
        type=code_type,
        family=family,
        beta=beta,
        a12_pair=a12_pair,
        novelty=novelty_check(family, beta),
        distribution=dist,
    )
