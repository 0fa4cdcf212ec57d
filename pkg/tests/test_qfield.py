from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from goncurve.qfield import QuadraticNumber, exact_sqrt, squarefree_part


def test_squarefree_part_small():
    assert squarefree_part(72) == (6, 2)
    assert squarefree_part(-12) == (2, -3)
    assert squarefree_part(49) == (7, 1)


def test_squarefree_part_large_square_is_detected():
    p = 1_000_000_007
    c, d = squarefree_part(p * p * 5)
    assert d == 5 and c == p


def test_exact_sqrt_rational_and_surd():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    r = exact_sqrt(2)
    assert isinstance(r, QuadraticNumber)
    assert r * r == 2


def test_mixing_radicands_raises():
    with pytest.raises(ValueError):
        QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3)


q_elems = st.builds(lambda a, b: QuadraticNumber(a, b, 5),
                    st.fractions(-50, 50, max_denominator=20),
                    st.fractions(-50, 50, max_denominator=20))


@given(q_elems, q_elems, q_elems)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    if x != 0:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(q_elems)
def test_norm_is_product_with_conjugate(x):
    assert x * x.conjugate() == x.norm()
    assert abs(complex(x) * complex(x.conjugate()) - float(x.norm())) < 1e-6 * (1 + abs(float(x.norm())))
