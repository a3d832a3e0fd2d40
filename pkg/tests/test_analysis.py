import random

import pytest

from graphcodes.analysis import (
    AnalysisError,
    EnumeratorReport,
    analyze,
    classify_type,
    classify_w64,
    classify_w66,
    distance_upper_bound,
    min_distance,
    naive_distribution_oracle,
    novelty_check,
    pair_invariant_a12,
    weight_distribution,
)
from graphcodes.gf2 import BinaryCode, BinaryMatrix
from graphcodes.graphs import builtin_graph, graph_to_selfdual_code
from graphcodes.published import A1

from conftest import base_with_identity, random_binary_code

HAMMING_DIST = {0: 1, 4: 14, 8: 1}
G1_DIST = {0: 1, 4: 28, 8: 198, 12: 28, 16: 1}


def _w64_dist(beta, family):
    a14 = (22016 if family == "W64_1" else 23040) - 64 * beta
    a12 = 1312 + 16 * beta
    rest = (1 << 32) - 2 * (1 + a12 + a14)
    return {0: 1, 12: a12, 14: a14, 32: rest, 50: a14, 52: a12, 64: 1}


def _w66_dist(a12, a14):
    rest = (1 << 33) - 2 * (1 + a12 + a14)
    return {0: 1, 12: a12, 14: a14, 33: rest, 52: a14, 54: a12, 66: 1}


def test_weight_distribution_repetition_pair():
    assert weight_distribution(BinaryCode(BinaryMatrix([0b11], 2))) == {0: 1, 2: 1}


def test_weight_distribution_graph_codes():
    assert weight_distribution(base_with_identity(A1)) == G1_DIST
    cube = graph_to_selfdual_code(builtin_graph("cube"))
    assert weight_distribution(cube) == HAMMING_DIST
    assert naive_distribution_oracle(cube) == HAMMING_DIST


def test_weight_distribution_dimension_cap():
    code = BinaryCode(BinaryMatrix([1 << i for i in range(34)], 40))
    with pytest.raises(AnalysisError):
        weight_distribution(code)


def test_naive_oracle_dimension_cap():
    code = BinaryCode(BinaryMatrix([1 << i for i in range(21)], 30))
    with pytest.raises(AnalysisError):
        naive_distribution_oracle(code)


def test_enumerator_matches_oracle_on_random_codes():
    rng = random.Random(801)
    for trial in range(100):
        k = rng.randint(1, 16)
        n = rng.randint(max(2, k), 64)
        code = random_binary_code(rng, k, n)
        assert weight_distribution(code) == naive_distribution_oracle(code), (
            f"trial {trial}: [{n},{k}]"
        )


def test_distribution_totals():
    rng = random.Random(17)
    for _ in range(20):
        k = rng.randint(1, 12)
        code = random_binary_code(rng, k, rng.randint(k, 40))
        dist = weight_distribution(code)
        assert sum(dist.values()) == 1 << k
        assert dist[0] == 1


def test_partitioned_enumeration_matches_single_block():
    rng = random.Random(23)
    code = random_binary_code(rng, 12, 48)
    reference = weight_distribution(code, block_bits=12)
    for t in range(9):  # fix the top t message bits
        assert weight_distribution(code, block_bits=12 - t) == reference


def test_thread_count_does_not_change_result():
    rng = random.Random(29)
    code = random_binary_code(rng, 14, 60)
    assert weight_distribution(code, threads=4) == weight_distribution(code)


def test_symmetric_distribution_when_all_ones_present():
    from graphcodes.gf2 import BitVector

    for name in ("G1", "G2"):
        code = graph_to_selfdual_code(builtin_graph(name))
        assert code.contains(BitVector(code.n, (1 << code.n) - 1))
        dist = weight_distribution(code)
        assert all(dist.get(w, 0) == dist.get(code.n - w, 0) for w in range(code.n + 1))


def test_classify_type_examples():
    assert classify_type(G1_DIST) == "II"
    assert classify_type({0: 1, 4: 12, 6: 64, 8: 102, 10: 64, 12: 12, 16: 1}) == "I"
    assert classify_type({0: 1, 2: 1}) == "I"
    with pytest.raises(AnalysisError):
        classify_type({0: 1, 3: 2, 4: 1})


def test_classify_w64_beta_20():
    family, beta = classify_w64(_w64_dist(20, "W64_1"), 64, 32)
    assert (family, beta) == ("W64_1", 20)


def test_classify_w64_beta_zero_second_family():
    family, beta = classify_w64(_w64_dist(0, "W64_2"), 64, 32)
    assert (family, beta) == ("W64_2", 0)
    assert _w64_dist(0, "W64_2")[12] == 1312 and _w64_dist(0, "W64_2")[14] == 23040


def test_classify_w64_derived_coefficients():
    dist = _w64_dist(20, "W64_1")
    assert dist[12] == 1632 and dist[14] == 20736
    assert classify_w64(dist, 64, 32) == ("W64_1", 20)


def test_classify_w64_errors():
    bad = _w64_dist(20, "W64_1")
    bad[14] += 2  # matches neither family shape
    with pytest.raises(AnalysisError):
        classify_w64(bad, 64, 32)
    odd = _w64_dist(20, "W64_1")
    odd[12] += 1  # beta no longer integral
    with pytest.raises(AnalysisError):
        classify_w64(odd, 64, 32)
    with pytest.raises(AnalysisError):
        classify_w64(_w64_dist(20, "W64_1"), 66, 33)


def test_classify_w64_range_warning():
    with pytest.warns(UserWarning):
        classify_w64(_w64_dist(4, "W64_1"), 64, 32)


def test_classify_w66_fixed_family():
    assert classify_w66(_w66_dist(1690, 7990), 66, 33) == ("W66_2", None)


def test_classify_w66_parameterized_families():
    a12 = 858 + 8 * 24
    assert classify_w66(_w66_dist(a12, 18166 - 24 * 24), 66, 33) == ("W66_3", 24)
    assert classify_w66(_w66_dist(858, 18678), 66, 33) == ("W66_1", 0)


def test_classify_w66_no_match():
    with pytest.raises(AnalysisError):
        classify_w66(_w66_dist(858 + 8, 9999), 66, 33)


def test_consistency_reconstructing_counts():
    for beta, family in ((20, "W64_1"), (26, "W64_2")):
        dist = _w64_dist(beta, family)
        fam, b = classify_w64(dist, 64, 32)
        a14 = (22016 if fam == "W64_1" else 23040) - 64 * b
        assert dist[12] == 1312 + 16 * b and dist[14] == a14


def test_pair_invariant_single_word():
    # one generator of weight 12: the only weight-12 codeword has no partner
    code = BinaryCode(BinaryMatrix([(1 << 12) - 1], 12))
    assert pair_invariant_a12(code) == 0


def test_pair_invariant_counts_distance_12_pairs_only():
    # disjoint supports: the two weight-12 words sit at distance 24
    rows = [(1 << 12) - 1, ((1 << 12) - 1) << 12]
    assert pair_invariant_a12(BinaryCode(BinaryMatrix(rows, 24))) == 0
    # half-overlapping supports: all three nonzero words have weight 12
    # and are pairwise at distance 12
    rows = [(1 << 12) - 1, ((1 << 12) - 1) << 6]
    assert pair_invariant_a12(BinaryCode(BinaryMatrix(rows, 18))) == 3


def test_pair_invariant_requires_distance_12():
    code = BinaryCode(BinaryMatrix([0b11], 2))
    with pytest.raises(AnalysisError):
        pair_invariant_a12(code)


def test_pair_invariant_word_cap():
    rows = [((1 << 12) - 1) << (12 * i) for i in range(3)]
    code = BinaryCode(BinaryMatrix(rows, 36))
    with pytest.raises(AnalysisError):
        pair_invariant_a12(code, word_cap=2)


def test_novelty_check_registry():
    assert novelty_check("W64_1", 20) is True
    assert novelty_check("W64_1", 14) is False
    assert novelty_check("W64_2", 0) is False
    assert novelty_check("W66_3", 42) is True
    assert novelty_check("W66_2", None) is False
    assert novelty_check("none", None) is False


def test_analyze_report_fields_and_json():
    code = graph_to_selfdual_code(builtin_graph("G2"))
    report = analyze(code)
    assert (report.n, report.k, report.d, report.type) == (16, 8, 4, "I")
    assert report.family == "none" and report.beta is None
    assert report.a12_pair is None
    data = report.to_json_dict()
    assert list(data) == [
        "n", "k", "d", "type", "family", "beta", "a12_pair", "novelty", "distribution",
    ]
    assert EnumeratorReport.from_json_dict(data) == report


def test_analyze_non_self_dual_has_no_type():
    code = BinaryCode(BinaryMatrix([0b111, 0b010], 3))
    report = analyze(code)
    assert report.type is None
    assert report.family == "none"


def test_distance_upper_bound_never_below_distance():
    rng = random.Random(31)
    for _ in range(20):
        code = random_binary_code(rng, rng.randint(2, 12), rng.randint(12, 70))
        dist = weight_distribution(code)
        assert distance_upper_bound(code, bits=8) >= min_distance(dist)
