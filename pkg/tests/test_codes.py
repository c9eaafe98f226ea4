"""Parity-check matrices, coset-leader decoding and the cross-checked verdict."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasilee.codes import (CosetLeaderTable, VerificationError, build_code,
                            code_parameters, coset_leader_table, decode,
                            lee_ball_vectors, lee_distance, lee_weight,
                            matrix_from_json_dict, matrix_from_text,
                            parity_check_matrix, rank_mod_p, round_trip_check,
                            syndrome, verify_quasi_perfect)
from quasilee.curves import generator_set
from quasilee.fields import make_field
from quasilee.sumsets import CoverageError, cumulative_layers


def gen_for(p, k, family):
    return generator_set(make_field(p, k), family)


def table_for(p, k, family, cap=8) -> CosetLeaderTable:
    return coset_leader_table(parity_check_matrix(gen_for(p, k, family)), cap)


# -- Lee metric ----------------------------------------------------------------

def test_lee_weight_frozen():
    assert lee_weight([0, 1, 6, 7], 13) == 0 + 1 + 6 + 6
    assert lee_weight([0, 0, 0], 5) == 0
    assert lee_weight([4], 7) == 3
    assert lee_weight([-1], 7) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2).map([5, 7, 13].__getitem__),
       st.lists(st.integers(-30, 30), min_size=1, max_size=6),
       st.lists(st.integers(-30, 30), min_size=1, max_size=6))
def test_lee_distance_is_a_metric(p, a, b):
    m = min(len(a), len(b))
    a, b = a[:m], b[:m]
    assert lee_distance(a, b, p) == lee_distance(b, a, p)
    assert (lee_distance(a, b, p) == 0) == all((x - y) % p == 0
                                               for x, y in zip(a, b))
    zero = [0] * m
    assert lee_distance(a, zero, p) == lee_weight(a, p)
    assert lee_distance(a, b, p) <= lee_weight(a, p) + lee_weight(b, p)
    assert lee_weight(a, p) <= m * (p - 1) // 2


def test_lee_distance_length_check():
    with pytest.raises(ValueError, match="length mismatch"):
        lee_distance([1, 2], [1], 5)


def test_ball_vectors_are_distinct_and_light():
    ball = lee_ball_vectors(3, 7, 2)
    assert len(ball) == len(set(ball)) == 25
    assert all(lee_weight(v, 7) <= 2 for v in ball)
    assert all(0 <= c < 7 for v in ball for c in v)
    # wraparound regime: radius 2 over Z_3 in two coordinates gives all words
    assert len(lee_ball_vectors(2, 3, 2)) == 9


# -- matrices and syndromes ------------------------------------------------------

def test_frozen_p13_matrix():
    mat = parity_check_matrix(gen_for(13, 1, "plus"))
    assert mat.entries.tolist() == [[1, 4, 9, 3, 10, 5, 8],
                                    [0, 1, 1, 2, 2, 5, 5]]
    assert (mat.p, mat.n) == (13, 7)


def test_syndrome_is_additive():
    mat = parity_check_matrix(gen_for(13, 1, "plus"))
    ctx = mat.generator.base
    rng = np.random.default_rng(7)
    for _ in range(25):
        a = rng.integers(0, 13, size=7)
        b = rng.integers(0, 13, size=7)
        lhs = syndrome(mat, (a + b) % 13)
        from quasilee.fields import pair_add
        assert lhs == pair_add(ctx, syndrome(mat, a), syndrome(mat, b))
    assert syndrome(mat, [0] * 7) == 0


def test_syndrome_rejects_wrong_length():
    mat = parity_check_matrix(gen_for(13, 1, "plus"))
    with pytest.raises(ValueError, match="expected 7, got 3"):
        syndrome(mat, [1, 2, 3])


def test_rank_mod_p():
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), 5) == 1
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), 7) == 1
    assert rank_mod_p(np.array([[1, 0], [0, 1]]), 5) == 2
    assert rank_mod_p(np.zeros((2, 3), dtype=int), 5) == 0
    # full rank over Q but rank 1 mod 3
    assert rank_mod_p(np.array([[1, 4], [4, 16]]), 3) == 1


def test_matrix_text_roundtrip():
    mat = parity_check_matrix(gen_for(23, 1, "minus"))
    back = matrix_from_text(mat.to_text())
    assert back.entries.tolist() == mat.entries.tolist()
    assert back.generator.reps == mat.generator.reps
    # comments and blank lines are ignored
    noisy = mat.to_text() + "\n# trailing comment\n\n"
    assert matrix_from_text(noisy).entries.tolist() == mat.entries.tolist()


def test_matrix_json_roundtrip():
    mat = parity_check_matrix(gen_for(3, 2, "plus"))
    back = matrix_from_json_dict(mat.to_json_dict())
    assert back.entries.tolist() == mat.entries.tolist()
    assert back.generator.k == 2


def test_matrix_text_preserves_column_order():
    text = "13 1 2 plus\n4 1\n1 0\n"
    mat = matrix_from_text(text)
    assert mat.entries.tolist() == [[4, 1], [1, 0]]


@pytest.mark.parametrize("text,msg", [
    ("", "empty"),
    ("13 1 7\n1 2\n", "header"),
    ("13 1 7 plus\n1 2 3\n", "rows"),
    ("13 1 2 plus\n0 1\n0 1\n", "zero"),
    ("13 1 2 plus\n1 12\n0 0\n", "collide"),
])
def test_matrix_text_rejects_malformed(text, msg):
    with pytest.raises(ValueError, match=msg):
        matrix_from_text(text)


# -- coset leader table -----------------------------------------------------------

def test_table_weights_and_syndromes_agree():
    table = table_for(13, 1, "plus")
    mat = table.matrix
    for syn, err in enumerate(table.leaders):
        assert syndrome(mat, err) == syn
        assert lee_weight(err, 13) == table.weights[syn]
    assert table.max_weight == 3
    assert table.histogram() == {0: 1, 1: 14, 2: 98, 3: 56}


def test_table_census_equals_layer_sizes():
    for p, k, family in [(13, 1, "plus"), (23, 1, "minus"), (5, 1, "minus")]:
        table = table_for(p, k, family)
        layers = cumulative_layers(gen_for(p, k, family))
        for w, s in enumerate(layers.sizes):
            assert table.census(w) == s


@pytest.mark.parametrize("p,k,family", [
    (5, 1, "plus"), (7, 1, "minus"), (13, 1, "plus"), (11, 1, "minus"),
])
def test_leaders_attain_minimal_weight(p, k, family):
    """Exhaustive oracle: brute-force minimum Lee weight per syndrome."""
    table = table_for(p, k, family)
    mat = table.matrix
    n = mat.n
    best = {}
    for v in lee_ball_vectors(n, p, table.max_weight):
        s = syndrome(mat, v)
        w = lee_weight(v, p)
        best[s] = min(best.get(s, n * p), w)
    assert len(best) == table.size
    for s, w in best.items():
        assert table.weights[s] == w


def test_table_is_deterministic():
    t1 = table_for(13, 1, "plus")
    t2 = table_for(13, 1, "plus")
    assert t1.leaders == t2.leaders


def test_uncoverable_generator_raises():
    gen = gen_for(3, 1, "minus")
    with pytest.raises(CoverageError, match="stalled"):
        coset_leader_table(parity_check_matrix(gen))


def test_cap_too_small_raises():
    gen = gen_for(5, 1, "minus")  # needs 4 levels
    with pytest.raises(CoverageError, match="exceeded 2 levels"):
        coset_leader_table(parity_check_matrix(gen), cap=2)


# -- decoding ---------------------------------------------------------------------

def test_decode_identifies_planted_errors():
    table = table_for(13, 1, "plus")
    cw = tuple([0] * 7)
    for err in lee_ball_vectors(7, 13, 2):
        got = decode(table, err)
        assert got.codeword == cw
        assert got.error == err
        assert got.weight == lee_weight(err, 13)


def test_decode_is_translation_invariant():
    table = table_for(13, 1, "plus")
    rng = np.random.default_rng(3)
    base = decode(table, rng.integers(0, 13, size=7)).codeword
    for _ in range(20):
        w = rng.integers(0, 13, size=7)
        plain = decode(table, w)
        shifted = decode(table, (w + np.array(base)) % 13)
        assert shifted.error == plain.error
        assert shifted.codeword == tuple((c + b) % 13
                                         for c, b in zip(plain.codeword, base))


def test_round_trips_both_example_codes():
    for p, family in [(13, "plus"), (23, "minus")]:
        table = table_for(p, 1, family)
        ok, trials = round_trip_check(table, trials=1000, seed=0)
        assert (ok, trials) == (1000, 1000)


def test_round_trip_at_weight_three_can_fail():
    # beyond the guarantee: radius-3 errors are corrected only when the
    # planted error happens to be its coset's chosen leader
    table = table_for(13, 1, "plus")
    ok, trials = round_trip_check(table, trials=300, seed=1, max_weight=3)
    assert ok < trials


# -- code parameters and verification ----------------------------------------------

def test_code_parameters_p13():
    code = build_code(13, 1, "plus")
    assert (code.n, code.dimension, code.codeword_count) == (7, 5, 371293)
    assert code.density == pytest.approx(1 / 169)
    assert (code.error_correction, code.covering_radius) == (2, 3)
    assert code.verdict == "QuasiPerfect2"


def test_code_parameters_p23():
    code = build_code(23, 1, "minus")
    assert (code.n, code.dimension) == (11, 9)
    assert code.codeword_count == 23 ** 9
    assert (code.error_correction, code.covering_radius) == (2, 3)
    assert code.verdict == "QuasiPerfect2"


def test_verify_quasi_perfect_p13():
    rep = verify_quasi_perfect(build_code(13, 1, "plus"))
    assert rep.quasi_perfect
    assert rep.census_consistent and rep.unique_minimal
    assert (rep.error_correction, rep.covering_radius) == (2, 3)
    d = rep.to_json_dict()
    assert d["quasi_perfect"] is True
    assert d["leader_weight_histogram"] == {"0": 1, "1": 14, "2": 98, "3": 56}


def test_verify_rejects_mismatched_table():
    code = build_code(13, 1, "plus")
    other = table_for(5, 1, "minus")
    with pytest.raises(VerificationError):
        verify_quasi_perfect(code, other)


def test_verify_q5_minus_not_quasi_perfect():
    code = build_code(5, 1, "minus")
    assert (code.dimension, code.codeword_count) == (0, 1)
    rep = verify_quasi_perfect(code)
    assert not rep.quasi_perfect
    assert (rep.error_correction, rep.covering_radius) == (2, 4)
    assert rep.census_consistent


def test_verify_q7_minus_low_correction():
    rep = verify_quasi_perfect(build_code(7, 1, "minus"))
    assert (rep.error_correction, rep.covering_radius) == (1, 4)
    assert not rep.unique_minimal
    assert not rep.quasi_perfect


def test_verify_q11_minus_is_quasi_perfect():
    assert verify_quasi_perfect(build_code(11, 1, "minus")).quasi_perfect
