import pytest
from hypothesis import given, settings, strategies as st

from goncurve.curve_model import random_curve
from goncurve.errors import DegenerateInput
from goncurve.gonality_engine import identify_pairs
from goncurve.lowrank_solver import NotFound
from goncurve.oracle import (EMPTY, EXISTS, exact_min_identify_degree, planted_binary_curve,
                             vanish_pole_pencil)
from goncurve.pencil import Pencil, evaluate, identity_pencil, images_match
from goncurve.proj_line import INF, ZERO, point


def test_vanish_pole_examples():
    W = vanish_pole_pencil([point(0), point(1)], [point(2), point(3)])
    assert evaluate(W, point(0)) == evaluate(W, point(1)) == ZERO
    assert evaluate(W, point(2)) == evaluate(W, point(3)) == INF
    W1 = vanish_pole_pencil([ZERO], [INF])
    assert W1.k == 1 and evaluate(W1, ZERO) == ZERO and evaluate(W1, INF) == INF
    W3 = vanish_pole_pencil([point(i) for i in range(3)], [point(i) for i in range(3, 6)])
    assert W3.k == 3
    assert all(images_match(W3, point(0), point(i)) for i in (1, 2))
    assert all(images_match(W3, point(3), point(i)) for i in (4, 5))


def test_vanish_pole_rejects_bad_groups():
    with pytest.raises(DegenerateInput):
        vanish_pole_pencil([ZERO], [ZERO])
    with pytest.raises(DegenerateInput):
        vanish_pole_pencil([ZERO, INF], [point(1)])


def test_exact_min_identify_examples():
    assert exact_min_identify_degree([(ZERO, point(1))], 1)[1] == EMPTY
    two = [(point(0), point(1)), (point(2), point(3))]
    assert exact_min_identify_degree(two, 2)[2] == EXISTS
    three = random_curve("irreducible", 3, 9).curve.pairs
    assert exact_min_identify_degree(three, 2)[2] == EMPTY


@settings(max_examples=30)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_oracle_agrees_with_identify(ell, seed):
    pairs = random_curve("irreducible", max(ell, 2), seed).curve.pairs[:ell]
    for k, verdict in exact_min_identify_degree(pairs, 3).items():
        res = identify_pairs(pairs, k)
        if verdict == EXISTS:
            assert not isinstance(res, NotFound)
        elif verdict == EMPTY:
            assert isinstance(res, NotFound) and res.exact


def test_planted_examples():
    c = planted_binary_curve(identity_pencil(), [ZERO, point(1), INF])
    assert c.side1 == c.side2
    sq = Pencil.exact([1, 0, 0], [0, 0, 1])
    c = planted_binary_curve(sq, [point(i) for i in range(5)])
    assert [p.affine for p in c.side2] == [0, 1, 4, 9, 16]


def test_planted_resamples_collisions():
    sq = Pencil.exact([1, 0, 0], [0, 0, 1])
    c = planted_binary_curve(sq, [point(1), point(-1), point(2)], seed=3)
    assert len(set(c.side2)) == 3
    assert all(evaluate(sq, p) == q for p, q in zip(c.side1, c.side2))
