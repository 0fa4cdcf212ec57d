"""Brute-force constructions and tiny-case decisions used as independent ground truth.

Nothing here calls the solver or the package's own elimination code: the
exact decisions go through sympy matrices built from scratch, and witnesses
are plain products of linear forms.
"""
import random
from fractions import Fraction
from itertools import combinations

import sympy

from .curve_model import BinaryCurve
from .errors import BasePoint, DegenerateInput, ExhaustedRetries
from .pencil import Pencil, evaluate
from .proj_line import ProjPoint, point

__all__ = ["vanish_pole_pencil", "exact_min_identify_degree", "planted_binary_curve",
           "EXISTS", "EMPTY", "UNDECIDED"]

EXISTS, EMPTY, UNDECIDED = "EXISTS", "EMPTY", "UNDECIDED"


def _product_of_linear_forms(points):
    # coefficients in the basis a0^(s-i) a1^i of prod (x0*p1 - x1*p0)
    poly = [Fraction(1)]
    for p in points:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * p.a1
            nxt[i + 1] -= c * p.a0
        poly = nxt
    return poly


def vanish_pole_pencil(group0, group_inf) -> Pencil:
    """Degree-s pencil sending every point of ``group0`` to 0 and of ``group_inf`` to infinity."""
    group0, group_inf = list(group0), list(group_inf)
    if not group0 or len(group0) != len(group_inf):
        raise DegenerateInput("groups must be nonempty and of equal size")
    pts = group0 + group_inf
    for i, j in combinations(range(len(pts)), 2):
        if pts[i].a0 * pts[j].a1 == pts[i].a1 * pts[j].a0:
            raise DegenerateInput("points must be distinct")
    # [f : g] is the image, with 0 = [1:0]: g vanishes on group0, f on group_inf
    return Pencil.exact(_product_of_linear_forms(group_inf), _product_of_linear_forms(group0))


def _sym_point(p: ProjPoint):
    return sympy.Rational(p.a0), sympy.Rational(p.a1)


def _monomials(p, k):
    x0, x1 = _sym_point(p)
    return [x0 ** (k - i) * x1 ** i for i in range(k + 1)]


def _constraint_matrix(pairs, k):
    cols = list(combinations(range(k + 1), 2))
    rows = []
    for a, b in pairs:
        ma, mb = _monomials(a, k), _monomials(b, k)
        rows.append([ma[s] * mb[t] - ma[t] * mb[s] for s, t in cols])
    return sympy.Matrix(rows), cols


def exact_min_identify_degree(pairs, kmax=3) -> dict:
    """Map ``k -> EXISTS | EMPTY | UNDECIDED`` for the identify problem at degree k."""
    pairs = [tuple(p) for p in pairs]
    table = {}
    for k in range(1, kmax + 1):
        A, cols = _constraint_matrix(pairs, k)
        null = A.nullspace() if len(pairs) else [sympy.eye(len(cols))[:, i] for i in range(len(cols))]
        if not null:
            table[k] = EMPTY
        elif k + 1 <= 3:
            # every nonzero antisymmetric matrix of size <= 3 has rank 2
            table[k] = EXISTS
        elif k == 3:
            t = sympy.symbols(f"t0:{len(null)}")
            v = sum((ti * n for ti, n in zip(t, null)), sympy.zeros(len(cols), 1))
            P = {c: v[i] for i, c in enumerate(cols)}
            pf = sympy.expand(P[(0, 1)] * P[(2, 3)] - P[(0, 2)] * P[(1, 3)] + P[(0, 3)] * P[(1, 2)])
            if len(null) >= 2:
                table[k] = EXISTS   # a quadric in P^(D-1), D >= 2, always has a complex point
            else:
                table[k] = EXISTS if pf == 0 else EMPTY
        else:
            table[k] = UNDECIDED
    return table


def planted_binary_curve(phi: Pencil, nodes1, seed=0, height=1000, attempts=1000) -> BinaryCurve:
    """Binary curve with ``side2_j = phi(side1_j)``, resampling nodes that collide."""
    rng = random.Random(seed)
    side1 = list(nodes1)
    side2 = [None] * len(side1)

    def image(p):
        try:
            return evaluate(phi, p)
        except BasePoint:
            return None

    for _ in range(attempts):
        bad = None
        for j, p in enumerate(side1):
            side2[j] = image(p)
            if side2[j] is None or side2[j] in side2[:j] or p in side1[:j]:
                bad = j
                break
        if bad is None:
            return BinaryCurve(tuple(side1), tuple(side2))
        side1[bad] = point(Fraction(rng.randint(-height, height), rng.randint(1, height)))
    raise ExhaustedRetries("could not plant distinct node images")
