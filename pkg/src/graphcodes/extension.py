"""Building-up extension of self-dual binary codes, and Gray generators.

Extending a self-dual [n, n/2] code by a vector X of odd weight appends
two coordinates: one new row (1 0 | X), and each old row r picks up the
prefix (y, y) where y = <r, X>.  The result is self-dual of length
n + 2, and the construction is verified on every call.

Over the binary field the scaling unit of the general construction can
only be 1, so it does not appear as a parameter here.
"""

from __future__ import annotations

import re

from .gf2 import BinaryCode, BinaryMatrix, BitVector, rank
from .ring import ONE, U, UV, V, R2Matrix, augment_identity, gray_map, scale


class ExtensionError(ValueError):
    """Raised on even-weight extension vectors and malformed notation."""


def build_gray_generator(k: R2Matrix) -> BinaryMatrix:
    """Binary generator of the Gray image of the ring code of [I | K].

    Rows are the Gray images of the rows of [I|K], u[I|K], v[I|K] and
    uv[I|K], stacked in that order; for an 8x8 K this is the 32 x 64
    generator.  A rank drop would mean the ring code was not free.
    """
    aug = augment_identity(k)
    rows = []
    for c in (ONE, U, V, UV):
        for r in aug.rows:
            rows.append(gray_map(scale(c, r)).bits)
    out = BinaryMatrix(rows, 4 * aug.m)
    if rank(out) != len(rows):
        raise ExtensionError(
            f"Gray image generator has rank {rank(out)} < {len(rows)}"
        )
    return out


_X_TOKEN = re.compile(r"([01])(?:\^\{(\d+)\})?")


def expand_x(notation: str, n: int) -> BitVector:
    """Expand repetition notation like '0110...1^{32}' to an n-bit vector."""
    s = notation.strip().replace(" ", "")
    bits = []
    pos = 0
    while pos < len(s):
        m = _X_TOKEN.match(s, pos)
        if not m:
            raise ExtensionError(f"bad extension vector notation at {s[pos:pos+8]!r}")
        reps = int(m.group(2)) if m.group(2) else 1
        bits.extend([int(m.group(1))] * reps)
        pos = m.end()
    if len(bits) != n:
        raise ExtensionError(f"vector expands to {len(bits)} bits, expected {n}")
    return BitVector.from_bits(bits)


def extend(code: BinaryCode, x: BitVector) -> BinaryCode:
    """Length n+2 self-dual code from a self-dual code and odd-weight X."""
    if x.n != code.n:
        raise ExtensionError(f"X has length {x.n}, code has length {code.n}")
    if x.weight % 2 == 0:
        raise ExtensionError(f"X must have odd weight, got {x.weight}")
    if not code.is_self_dual():
        raise ExtensionError("base code is not self-dual")
    rows = [1 | (x.bits << 2)]
    for r in code.generator.rows:
        y = (r & x.bits).bit_count() & 1
        rows.append(y | (y << 1) | (r << 2))
    out = BinaryCode(BinaryMatrix(rows, code.n + 2))
    if not out.is_self_dual():
        raise ExtensionError("extension failed to produce a self-dual code")
    return out
