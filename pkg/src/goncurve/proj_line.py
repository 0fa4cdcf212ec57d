"""Exact points and Moebius maps of the projective line.

A point is a homogeneous pair ``[a0 : a1]``; the affine coordinate is
``z = a1 / a0``, so ``[1 : 0]`` is ``0`` and ``[0 : 1]`` is infinity.
Rational points are stored as coprime integers with the first nonzero
coordinate positive. Points over a quadratic field (images under pencils
with irrational coefficients) are scaled so the first nonzero coordinate
is ``1``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateInput, ZeroPoint
from .qfield import QuadraticNumber

__all__ = [
    "ProjPoint", "MoebiusMap", "ZERO", "ONE", "INF",
    "point", "canonicalize_point", "eval_vector", "bracket",
    "moebius_from_three_pairs", "apply_moebius", "cross_ratio",
    "parse_point", "format_point",
]


def _rationalize(x):
    if isinstance(x, QuadraticNumber) and x.b == 0:
        return x.a
    if isinstance(x, QuadraticNumber):
        return x
    return Fraction(x)


def _integer_scale(values):
    """Scale a list of rationals to coprime integers, first nonzero positive."""
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints


@dataclass(frozen=True)
class ProjPoint:
    """Canonical point of P^1. Build with :func:`point`, not the constructor."""

    a0: object
    a1: object

    @property
    def is_infinity(self) -> bool:
        return self.a0 == 0

    @property
    def affine(self):
        """Affine coordinate ``a1/a0``, or None at infinity."""
        if self.a0 == 0:
            return None
        return Fraction(self.a1) / self.a0 if not isinstance(self.a1, QuadraticNumber) \
            else self.a1 / self.a0

    @property
    def is_rational(self) -> bool:
        return isinstance(self.a0, int) and isinstance(self.a1, int)

    def coords(self):
        return (self.a0, self.a1)

    def __iter__(self):
        return iter((self.a0, self.a1))

    def __getitem__(self, i):
        return (self.a0, self.a1)[i]

    def __len__(self):
        return 2

    def __repr__(self):
        return f"[{self.a0}:{self.a1}]"


def point(a0, a1=None) -> ProjPoint:
    """Canonical point from homogeneous coordinates, or from one affine value.

    ``point(z)`` gives ``[1 : z]``; ``point(a0, a1)`` gives ``[a0 : a1]``.
    """
    if a1 is None:
        if a0 == "inf" or a0 is None:
            return INF
        return canonicalize_point(ProjPoint(1, a0))
    return canonicalize_point(ProjPoint(a0, a1))


def canonicalize_point(p: ProjPoint) -> ProjPoint:
    a0, a1 = _rationalize(p.a0), _rationalize(p.a1)
    if a0 == 0 and a1 == 0:
        raise ZeroPoint("both coordinates of the point are zero")
    if isinstance(a0, QuadraticNumber) or isinstance(a1, QuadraticNumber):
        lead = a0 if a0 != 0 else a1
        a0, a1 = _rationalize(a0 / lead), _rationalize(a1 / lead)
        if isinstance(a0, Fraction) and isinstance(a1, Fraction):
            return canonicalize_point(ProjPoint(a0, a1))
        return ProjPoint(a0, a1)
    b0, b1 = _integer_scale([a0, a1])
    return ProjPoint(b0, b1)


def eval_vector(p: ProjPoint, k: int):
    """Degree-k monomials ``(a0^k, a0^(k-1) a1, ..., a1^k)`` at ``p``."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    a0, a1 = p.a0, p.a1
    if a0 == 0 and a1 == 0:
        raise ZeroPoint("both coordinates of the point are zero")
    return [a0 ** (k - i) * a1 ** i for i in range(k + 1)]


def bracket(p, q):
    """The 2x2 determinant ``p0*q1 - p1*q0`` (zero iff the points coincide)."""
    return p[0] * q[1] - p[1] * q[0]


ZERO = ProjPoint(1, 0)
ONE = ProjPoint(1, 1)
INF = ProjPoint(0, 1)


@dataclass(frozen=True)
class MoebiusMap:
    """Invertible 2x2 matrix acting on column vectors ``(a0, a1)``.

    In the affine coordinate, ``[[a, b], [c, d]]`` is ``z -> (c + d z)/(a + b z)``.
    """

    m: tuple

    @classmethod
    def from_matrix(cls, rows) -> "MoebiusMap":
        (a, b), (c, d) = rows
        entries = [Fraction(a), Fraction(b), Fraction(c), Fraction(d)]
        if entries[0] * entries[3] - entries[1] * entries[2] == 0:
            raise DegenerateInput("Moebius matrix is singular")
        a, b, c, d = _integer_scale(entries)
        return cls(((a, b), (c, d)))

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(((1, 0), (0, 1)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.m
        return a * d - b * c

    def inverse(self) -> "MoebiusMap":
        (a, b), (c, d) = self.m
        return MoebiusMap.from_matrix(((d, -b), (-c, a)))

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """``self o other`` (apply ``other`` first)."""
        (a, b), (c, d) = self.m
        (e, f), (g, h) = other.m
        return MoebiusMap.from_matrix(((a * e + b * g, a * f + b * h),
                                       (c * e + d * g, c * f + d * h)))

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply_moebius(self, p)

    def __repr__(self):
        return f"MoebiusMap({list(map(list, self.m))})"


def apply_moebius(m: MoebiusMap, p: ProjPoint) -> ProjPoint:
    (a, b), (c, d) = m.m
    return canonicalize_point(ProjPoint(a * p.a0 + b * p.a1, c * p.a0 + d * p.a1))


def _check_distinct(points, what):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if bracket(points[i], points[j]) == 0:
                raise DegenerateInput(f"{what}: points {i} and {j} coincide")


def _to_standard_frame(p1, p2, p3):
    """Rows of the matrix sending p1, p2, p3 to 0, 1, infinity."""
    alpha = bracket(p2, p1)
    beta = bracket(p2, p3)
    return ((alpha * p3.a1, -alpha * p3.a0), (beta * p1.a1, -beta * p1.a0))


def moebius_from_three_pairs(src, dst) -> MoebiusMap:
    """The unique Moebius map with ``psi(src[i]) == dst[i]`` for i = 0, 1, 2."""
    src, dst = list(src), list(dst)
    if len(src) != 3 or len(dst) != 3:
        raise DegenerateInput("need exactly three source and three target points")
    _check_distinct(src, "source")
    _check_distinct(dst, "target")
    s = MoebiusMap.from_matrix(_to_standard_frame(*src))
    t = MoebiusMap.from_matrix(_to_standard_frame(*dst))
    return t.inverse().compose(s)


def cross_ratio(p1, p2, p3, p4) -> ProjPoint:
    """Image of ``p4`` under the map sending ``p1, p2, p3`` to ``0, 1, infinity``."""
    _check_distinct([p1, p2, p3], "cross-ratio")
    return apply_moebius(MoebiusMap.from_matrix(_to_standard_frame(p1, p2, p3)), p4)


def parse_point(obj) -> ProjPoint:
    """Decode the text form: ``["a0", "a1"]``, ``"inf"``, or an affine ``"p/q"``."""
    if isinstance(obj, str):
        s = obj.strip()
        if s.lower() in ("inf", "infinity", "oo"):
            return INF
        try:
            return point(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed point string {obj!r}") from exc
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        try:
            a0, a1 = (Fraction(str(x)) if not isinstance(x, int) else Fraction(x) for x in obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed point {obj!r}") from exc
        return point(a0, a1)
    raise ValueError(f"malformed point {obj!r}")


def format_point(p: ProjPoint):
    if not p.is_rational:
        raise ValueError("only rational points have a text encoding")
    return [str(p.a0), str(p.a1)]
