"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from goncurve.proj_line import MoebiusMap, point

small_int = st.integers(-60, 60)


@st.composite
def proj_points(draw, height=60):
    a0 = draw(st.integers(-height, height))
    a1 = draw(st.integers(-height, height))
    if a0 == 0 and a1 == 0:
        a0 = 1
    return point(a0, a1)


@st.composite
def distinct_points(draw, n, height=60):
    pts = draw(st.lists(proj_points(height), min_size=n, max_size=n, unique=True))
    return pts


@st.composite
def moebius_maps(draw, height=9):
    # lower times upper triangular with nonzero diagonals: always invertible
    nz = st.integers(1, height) | st.integers(-height, -1)
    l11, l22, u11, u22 = (draw(nz) for _ in range(4))
    l21, u12 = draw(st.integers(-height, height)), draw(st.integers(-height, height))
    rows = [[l11 * u11, l11 * u12], [l21 * u11, l21 * u12 + l22 * u22]]
    return MoebiusMap.from_matrix(rows)


@st.composite
def binary_forms(draw, k, height=9):
    return [Fraction(draw(st.integers(-height, height))) for _ in range(k + 1)]
