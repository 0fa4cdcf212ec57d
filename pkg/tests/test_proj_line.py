from fractions import Fraction

import pytest
from hypothesis import assume, given

from goncurve.errors import DegenerateInput, ZeroPoint
from goncurve.proj_line import (INF, ONE, ZERO, MoebiusMap, ProjPoint, apply_moebius, bracket,
                                canonicalize_point, cross_ratio, eval_vector, format_point,
                                moebius_from_three_pairs, parse_point, point)
from strategies import distinct_points, moebius_maps, proj_points

SHIFT = MoebiusMap.from_matrix([[1, 0], [1, 1]])     # z -> z + 1
SWAP = MoebiusMap.from_matrix([[0, 1], [1, 0]])      # z -> 1/z


def test_canonicalize_examples():
    assert canonicalize_point(ProjPoint(Fraction(2, 3), Fraction(4, 3))) == ProjPoint(1, 2)
    assert canonicalize_point(ProjPoint(0, -5)) == ProjPoint(0, 1)
    assert canonicalize_point(ProjPoint(7, 0)) == ProjPoint(1, 0)


def test_zero_point_rejected():
    with pytest.raises(ZeroPoint):
        point(0, 0)


@given(proj_points())
def test_canonicalize_idempotent(p):
    assert canonicalize_point(p) == p


def test_eval_vector_examples():
    assert eval_vector(point(1, 0), 2) == [1, 0, 0]
    assert eval_vector(point(1, 1), 2) == [1, 1, 1]
    assert eval_vector(point(1, 2), 3) == [1, 2, 4, 8]


@given(distinct_points(2))
def test_eval_vectors_of_distinct_points_independent(pts):
    p, q = pts
    assert any(eval_vector(p, 3))
    e, f = eval_vector(p, 1), eval_vector(q, 1)
    assert e[0] * f[1] - e[1] * f[0] != 0


def test_affine_reading():
    assert ZERO.affine == 0 and ONE.affine == 1 and INF.is_infinity
    assert point(Fraction(3, 7)).affine == Fraction(3, 7)


def test_moebius_from_three_pairs_examples():
    assert moebius_from_three_pairs([ZERO, ONE, INF], [ZERO, ONE, INF]) == MoebiusMap.identity()
    assert moebius_from_three_pairs([ZERO, ONE, INF], [INF, ONE, ZERO]) == SWAP
    assert moebius_from_three_pairs([ZERO, ONE, INF], [ONE, point(2), INF]) == SHIFT


def test_moebius_from_three_pairs_rejects_repeats():
    with pytest.raises(DegenerateInput):
        moebius_from_three_pairs([ZERO, ZERO, INF], [ZERO, ONE, INF])


def test_apply_moebius_examples():
    assert apply_moebius(MoebiusMap.identity(), point(3, 5)) == point(3, 5)
    assert apply_moebius(SWAP, point(1, 0)) == point(0, 1)
    assert apply_moebius(SHIFT, point(1, 2)) == point(1, 3)


def test_singular_matrix_rejected():
    with pytest.raises(DegenerateInput):
        MoebiusMap.from_matrix([[1, 2], [2, 4]])


def test_cross_ratio_examples():
    assert cross_ratio(point(1), point(2), point(3), point(4)) == point(-3)
    assert cross_ratio(ZERO, ONE, INF, point(Fraction(5, 9))) == point(Fraction(5, 9))
    assert cross_ratio(ZERO, ONE, INF, ZERO) == ZERO
    with pytest.raises(DegenerateInput):
        cross_ratio(ONE, ONE, INF, ZERO)


@given(distinct_points(6), distinct_points(3))
def test_three_pair_fit_reproduces_targets(src, dst):
    m = moebius_from_three_pairs(src[:3], dst)
    assert [apply_moebius(m, p) for p in src[:3]] == list(dst)


@given(moebius_maps(), proj_points())
def test_inverse_round_trip(m, p):
    assert apply_moebius(m.inverse(), apply_moebius(m, p)) == p


@given(moebius_maps(), moebius_maps(), proj_points())
def test_compose_matches_sequential_application(m1, m2, p):
    assert apply_moebius(m1.compose(m2), p) == apply_moebius(m1, apply_moebius(m2, p))


@given(distinct_points(3), proj_points(), moebius_maps())
def test_cross_ratio_invariance(pts, p4, m):
    before = cross_ratio(*pts, p4)
    after = cross_ratio(*(apply_moebius(m, p) for p in pts), apply_moebius(m, p4))
    assert before == after


def test_parse_and_format():
    assert parse_point("inf") == INF
    assert parse_point("3/4") == point(Fraction(3, 4))
    assert parse_point(["2", "6"]) == point(1, 3)
    p = point(Fraction(-7, 11))
    assert parse_point(format_point(p)) == p
    for bad in ["x", "1/0/2", ["1"], ["0", "0"], 5.5]:
        with pytest.raises((ValueError, ZeroPoint)):
            parse_point(bad)


def test_bracket_detects_coincidence():
    assert bracket(point(2, 4), point(1, 2)) == 0
    assert bracket(ZERO, INF) != 0
