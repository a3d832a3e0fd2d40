import itertools
import random

import pytest

from graphcodes import ring
from graphcodes.gf2 import BitVector, inner_product
from graphcodes.published import A1
from graphcodes.ring import ONE, U, UV, V, R2Matrix

from conftest import K1_COMPLETED_ROWS


def test_nilpotent_squares():
    assert ring.mul(U, U) == 0
    assert ring.mul(V, V) == 0
    assert ring.mul(UV, UV) == 0


def test_basis_product():
    assert ring.mul(U, V) == UV
    assert ring.mul(V, U) == UV


def test_one_plus_u_squares_to_one():
    x = ONE ^ U
    assert ring.mul(x, x) == ONE


def test_ring_axioms_exhaustive():
    for x, y, z in itertools.product(range(16), repeat=3):
        assert ring.mul(x, y) == ring.mul(y, x)
        assert ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))
        assert ring.mul(x, y ^ z) == ring.mul(x, y) ^ ring.mul(x, z)


def test_squares_keep_only_constant_term():
    for x in range(16):
        assert ring.mul(x, x) == (x & 1)


def test_units_are_odd_nibbles_and_self_inverse():
    units = [x for x in range(16) if ring.is_unit(x)]
    assert units == [x for x in range(16) if x & 1]
    assert len(units) == 8
    for x in units:
        assert ring.mul(x, x) == ONE


def test_hex_codec_examples():
    assert ring.hex_decode("7") == ring.element(1, 1, 1, 0)  # 1 + u + v
    assert ring.hex_decode("0") == 0
    assert ring.hex_decode("9") == ring.element(1, 0, 0, 1)  # 1 + uv
    assert ring.hex_encode(ring.element(1, 1, 1, 0)) == "7"


def test_hex_codec_round_trip():
    for x in range(16):
        assert ring.hex_decode(ring.hex_encode(x)) == x


def test_hex_decode_rejects_non_hex():
    with pytest.raises(ring.RingError):
        ring.hex_decode("G")
    with pytest.raises(ring.RingError):
        ring.hex_decode("77")


def test_gray_map_basis_elements():
    assert str(ring.gray_map([ONE])) == "0001"
    assert str(ring.gray_map([UV])) == "1111"
    assert str(ring.gray_map([ring.hex_decode("7")])) == "0111"


def test_gray_map_additive():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 12)
        x = [rng.randrange(16) for _ in range(n)]
        y = [rng.randrange(16) for _ in range(n)]
        s = [a ^ b for a, b in zip(x, y)]
        assert ring.gray_map(s) == ring.gray_map(x) ^ ring.gray_map(y)


def _random_orthogonal_pair(rng, n):
    """Random x, y with <x, y> = 0, solving the last unit coordinate."""
    while True:
        x = [rng.randrange(16) for _ in range(n)]
        units = [i for i, e in enumerate(x) if ring.is_unit(e)]
        if not units:
            continue
        i = units[-1]
        y = [rng.randrange(16) for _ in range(n)]
        partial = 0
        for j in range(n):
            if j != i:
                partial ^= ring.mul(x[j], y[j])
        # x[i] is a self-inverse unit: y[i] = x[i]^-1 * partial closes the sum
        y[i] = ring.mul(x[i], partial)
        assert ring.vector_inner(x, y) == 0
        return x, y


def test_gray_map_preserves_orthogonality():
    rng = random.Random(4)
    for _ in range(1000):
        n = rng.randint(1, 16)
        x, y = _random_orthogonal_pair(rng, n)
        assert inner_product(ring.gray_map(x), ring.gray_map(y)) == 0


def test_projection_examples():
    for w in range(16):
        assert ring.projection([ring.mul(U, w)]).bits == 0
    assert ring.projection([ring.hex_decode("9")]).bits == 1


def test_projection_is_ring_homomorphism():
    for x, y in itertools.product(range(16), repeat=2):
        px, py = x & 1, y & 1
        assert ring.projection([ring.mul(x, y)]).bits == (px & py)
        assert ring.projection([x ^ y]).bits == px ^ py


def test_projection_section_of_embedding():
    v = BitVector.from_string("101101")
    assert ring.projection(ring.embed(v)) == v


def test_is_self_dual_r2_one_by_one():
    assert ring.is_self_dual_r2(R2Matrix([[ONE]]))


def test_is_self_dual_r2_completed_k1():
    k1 = R2Matrix.from_hex_rows(K1_COMPLETED_ROWS)
    assert ring.is_self_dual_r2(k1)
    assert k1.projection() == A1


def test_is_self_dual_r2_zero_row_fails():
    k1 = R2Matrix.from_hex_rows(K1_COMPLETED_ROWS)
    rows = [list(r) for r in k1.rows]
    rows[3] = [0] * 8
    assert not ring.is_self_dual_r2(R2Matrix(rows))


def test_hex_vector_strings_first_entry_first():
    vec = ring.vector_from_hex("9C08E4D7")
    assert vec[0] == ring.hex_decode("9")
    assert ring.vector_to_hex(vec) == "9C08E4D7"
