"""Pencils of binary forms: degree-k rational maps of P^1.

A pencil ``(f, g)`` holds two coefficient vectors of length ``k+1`` in the
monomial order of :func:`~goncurve.proj_line.eval_vector`, so coefficient
``i`` multiplies ``a0^(k-i) a1^i``. The map is ``p -> [f(p) : g(p)]``; in
the affine coordinate this is ``z -> g(z)/f(z)``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import BasePoint, DegeneratePencil
from .proj_line import MoebiusMap, ProjPoint, canonicalize_point, eval_vector
from .qfield import QuadraticNumber, common_radicand

__all__ = [
    "Pencil", "evaluate", "reduce", "images_match", "precompose_moebius",
    "postcompose_moebius", "effective_degree", "identity_pencil",
    "plucker_matrix", "points_match", "bracket_value", "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-9


def _is_numeric_value(x):
    return isinstance(x, (complex, float, np.complexfloating, np.floating))


def _canonical_exact(f, g):
    values = list(f) + list(g)
    d = common_radicand(values)
    values = [x.a if isinstance(x, QuadraticNumber) and x.b == 0 else Fraction(x)
              if not isinstance(x, QuadraticNumber) else x for x in values]
    lead = next((v for v in values if v != 0), None)
    if lead is None:
        raise DegeneratePencil("both forms are zero")
    if d is not None:
        values = [v / lead for v in values]
        parts = []
        for v in values:
            if isinstance(v, QuadraticNumber):
                parts += [v.a, v.b]
            else:
                parts += [Fraction(v), Fraction(0)]
        den = 1
        for x in parts:
            den = den * x.denominator // gcd(den, x.denominator)
        nums = [int(x * den) for x in parts]
        common = 0
        for x in nums:
            common = gcd(common, x)
        out = [QuadraticNumber(Fraction(nums[2 * i], common), Fraction(nums[2 * i + 1], common), d)
               for i in range(len(values))]
        out = [x.a if x.b == 0 else x for x in out]
    else:
        den = 1
        for x in values:
            den = den * x.denominator // gcd(den, x.denominator)
        nums = [int(x * den) for x in values]
        common = 0
        for x in nums:
            common = gcd(common, x)
        sign = 1 if next(x for x in nums if x != 0) > 0 else -1
        out = [Fraction(sign * x // common) for x in nums]
    n = len(f)
    return tuple(out[:n]), tuple(out[n:])


@dataclass(frozen=True)
class Pencil:
    """A pair of degree-k binary forms; exact or complex floating point."""

    k: int
    f: tuple
    g: tuple
    numeric: bool = False

    def __post_init__(self):
        if len(self.f) != self.k + 1 or len(self.g) != self.k + 1:
            raise ValueError("coefficient vectors must have length k+1")

    @classmethod
    def exact(cls, f, g) -> "Pencil":
        """Exact pencil, scaled to a canonical representative."""
        f, g = list(f), list(g)
        if len(f) != len(g):
            raise ValueError("forms must have the same nominal degree")
        cf, cg = _canonical_exact(f, g)
        p = cls(len(f) - 1, cf, cg, False)
        if _exact_proportional(cf, cg):
            raise DegeneratePencil("the two forms are proportional")
        return p

    @classmethod
    def from_numeric(cls, f, g, tol=DEFAULT_TOL) -> "Pencil":
        f = np.asarray(f, dtype=complex)
        g = np.asarray(g, dtype=complex)
        big = max(np.max(np.abs(f)), np.max(np.abs(g)))
        if not np.isfinite(big):
            raise ValueError("non-finite pencil coefficients")
        if big > 0:
            f, g = f / big, g / big
        s = np.linalg.svd(np.vstack([f, g]), compute_uv=False)
        if s[0] == 0 or s[1] <= tol * s[0]:
            raise DegeneratePencil("the two forms are numerically proportional")
        scale = np.linalg.norm(np.concatenate([f, g]))
        return cls(len(f) - 1, tuple(complex(x) for x in f / scale),
                   tuple(complex(x) for x in g / scale), True)

    @property
    def radicand(self):
        return None if self.numeric else common_radicand(self.f + self.g)

    def coeff_arrays(self):
        return (np.array([complex(x) for x in self.f]), np.array([complex(x) for x in self.g]))


def _exact_proportional(f, g):
    # rank of the 2 x (k+1) matrix [f; g] is < 2
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            if f[i] * g[j] - f[j] * g[i] != 0:
                return False
    return True


def identity_pencil() -> Pencil:
    return Pencil.exact([1, 0], [0, 1])


def _dot(c, e):
    total = 0
    for a, b in zip(c, e):
        total = total + a * b
    return total


def bracket_value(P: Pencil, p: ProjPoint, q: ProjPoint):
    """``f(p) g(q) - f(q) g(p)``; zero iff ``P`` does not separate p and q."""
    ep, eq = eval_vector(p, P.k), eval_vector(q, P.k)
    if P.numeric:
        f, g = P.coeff_arrays()
        ep = np.array([complex(x) for x in ep])
        eq = np.array([complex(x) for x in eq])
        return (f @ ep) * (g @ eq) - (f @ eq) * (g @ ep)
    return _dot(P.f, ep) * _dot(P.g, eq) - _dot(P.f, eq) * _dot(P.g, ep)


def evaluate(P: Pencil, p: ProjPoint, tol=DEFAULT_TOL):
    """Image ``[f(p) : g(p)]``: a ProjPoint, or a unit complex 2-vector if numeric."""
    e = eval_vector(p, P.k)
    if P.numeric:
        f, g = P.coeff_arrays()
        ev = np.array([complex(x) for x in e])
        w = np.array([f @ ev, g @ ev])
        scale = np.linalg.norm(ev) * max(np.linalg.norm(f), np.linalg.norm(g))
        nrm = np.linalg.norm(w)
        if nrm <= tol * scale:
            raise BasePoint(f"{p!r} is a base point of the pencil")
        return w / nrm
    fv, gv = _dot(P.f, e), _dot(P.g, e)
    if fv == 0 and gv == 0:
        raise BasePoint(f"{p!r} is a base point of the pencil")
    return canonicalize_point(ProjPoint(fv, gv))


def points_match(x, y, tol=DEFAULT_TOL) -> bool:
    """Equality of two images; exact for ProjPoints, relative ``tol`` otherwise."""
    if isinstance(x, ProjPoint) and isinstance(y, ProjPoint):
        return x == y
    xv = np.array([complex(c) for c in x])
    yv = np.array([complex(c) for c in y])
    det = xv[0] * yv[1] - xv[1] * yv[0]
    return abs(det) <= tol * np.linalg.norm(xv) * np.linalg.norm(yv)


def plucker_matrix(P: Pencil):
    """Antisymmetric matrix ``f g^T - g f^T`` (numpy array)."""
    f, g = P.coeff_arrays()
    return np.outer(f, g) - np.outer(g, f)


def images_match(P: Pencil, p: ProjPoint, q: ProjPoint, tol=DEFAULT_TOL) -> bool:
    """Whether ``P`` sends ``p`` and ``q`` to the same point.

    Numeric pencils compare the bracket against
    ``|e(p)| |e(q)| |f g^T - g f^T|``, which is invariant under a change of
    target coordinates.
    """
    b = bracket_value(P, p, q)
    if not P.numeric:
        return b == 0
    ep = np.array([complex(x) for x in eval_vector(p, P.k)])
    eq = np.array([complex(x) for x in eval_vector(q, P.k)])
    scale = np.linalg.norm(ep) * np.linalg.norm(eq) * np.linalg.norm(plucker_matrix(P))
    return abs(b) <= tol * scale


# polynomial helpers: ascending coefficient lists over an exact field

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        coef = r[-1] / lead
        q[shift] = coef
        for i, bc in enumerate(b):
            r[i + shift] = r[i + shift] - coef * bc
        r = _trim(r)
    return _trim(q), r


def _poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [x / lead for x in a]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _form_gcd_degree_and_quotients(f, g, k):
    """Common factor of two degree-k forms: returns (deg, f/h, g/h)."""
    af, ag = _trim(f), _trim(g)
    inf_f = k - (len(af) - 1) if af else k
    inf_g = k - (len(ag) - 1) if ag else k
    if not af:
        h = ag
    elif not ag:
        h = af
    else:
        h = _poly_gcd(af, ag)
    if not af or not ag:
        # one form vanishes: the pencil is constant, handled by the caller
        return None
    m_inf = min(inf_f, inf_g)
    dh = len(h) - 1
    qf, rf = _poly_divmod(af, h)
    qg, rg = _poly_divmod(ag, h)
    assert not rf and not rg
    kk = k - dh - m_inf
    pad = lambda c: list(c) + [Fraction(0)] * (kk + 1 - len(c))
    return dh + m_inf, pad(qf), pad(qg)


def reduce(P: Pencil):
    """Divide out the common factor of ``f`` and ``g``.

    Returns ``(reduced_pencil, effective_degree)``.
    """
    if P.numeric:
        raise ValueError("reduce needs exact coefficients; use effective_degree")
    if _exact_proportional(P.f, P.g):
        raise DegeneratePencil("the two forms are proportional")
    res = _form_gcd_degree_and_quotients(P.f, P.g, P.k)
    if res is None:
        raise DegeneratePencil("one form is identically zero")
    _, qf, qg = res
    R = Pencil.exact(qf, qg)
    return R, R.k


def _rotated(c, k):
    # coefficients after the real rotation x -> R x, which keeps roots away from infinity
    t = 0.7390851332151607
    ct, st = np.cos(t), np.sin(t)
    table = _linear_power_table([ct, -st], [st, ct], k)
    return np.array(_substitute(list(c), table), dtype=complex)


def _chart_roots(c, k):
    """Roots of a binary form in a rotated chart; infinite roots reported as ``inf``."""
    cr = _rotated(c, k)
    lead = np.max(np.abs(cr))
    deg = k
    while deg > 0 and abs(cr[deg]) <= 1e-14 * lead:
        deg -= 1
    roots = list(np.roots(cr[:deg + 1][::-1])) if deg > 0 else []
    return roots + [np.inf] * (k - deg)


def _chordal(r, s):
    if np.isinf(r) and np.isinf(s):
        return 0.0
    if np.isinf(r) or np.isinf(s):
        x = s if np.isinf(r) else r
        return 1.0 / np.sqrt(1 + abs(x) ** 2)
    return abs(r - s) / np.sqrt((1 + abs(r) ** 2) * (1 + abs(s) ** 2))


def _common_root_count(f, g, tol):
    """Number of roots of ``f`` matched to distinct roots of ``g`` within chordal ``tol``."""
    k = len(f) - 1
    rf, rg = _chart_roots(f, k), _chart_roots(g, k)
    used = set()
    count = 0
    for r in rf:
        best, idx = None, None
        for j, s in enumerate(rg):
            if j in used:
                continue
            d = _chordal(r, s)
            if best is None or d < best:
                best, idx = d, j
        if best is not None and best <= tol:
            used.add(idx)
            count += 1
    return count


def effective_degree(P: Pencil, tol=1e-6) -> int:
    """Degree after removing common factors.

    Exact pencils use :func:`reduce`. Numeric ones pair up roots of ``f`` and
    ``g`` that agree within chordal distance ``tol`` on the Riemann sphere.
    """
    if not P.numeric:
        return reduce(P)[1]
    if P.k == 0:
        return 0
    f, g = P.coeff_arrays()
    f = f / np.max(np.abs(f))
    g = g / np.max(np.abs(g))
    common = _common_root_count(f, g, tol)
    return P.k - common


def _linear_power_table(l0, l1, k):
    """Coefficient lists of ``l0^(k-i) * l1^i`` for i = 0..k."""
    pw0 = [[1]]
    pw1 = [[1]]
    for _ in range(k):
        pw0.append(_poly_mul(pw0[-1], l0))
        pw1.append(_poly_mul(pw1[-1], l1))
    return [_poly_mul(pw0[k - i], pw1[i]) for i in range(k + 1)]


def _substitute(coeffs, table):
    out = [0] * len(coeffs)
    for c, row in zip(coeffs, table):
        if c == 0:
            continue
        for j, x in enumerate(row):
            out[j] = out[j] + c * x
    return out


def precompose_moebius(P: Pencil, m: MoebiusMap) -> Pencil:
    """The pencil ``P o m``, same nominal degree."""
    (a, b), (c, d) = m.m
    if P.numeric:
        table = _linear_power_table([complex(a), complex(b)], [complex(c), complex(d)], P.k)
        f = _substitute(P.coeff_arrays()[0], table)
        g = _substitute(P.coeff_arrays()[1], table)
        return Pencil.from_numeric(f, g)
    table = _linear_power_table([a, b], [c, d], P.k)
    return Pencil.exact(_substitute(P.f, table), _substitute(P.g, table))


def postcompose_moebius(P: Pencil, m: MoebiusMap) -> Pencil:
    """The pencil ``m o P``: rows ``(f, g)`` mixed by the matrix of ``m``."""
    (a, b), (c, d) = m.m
    if P.numeric:
        f, g = P.coeff_arrays()
        return Pencil.from_numeric(a * f + b * g, c * f + d * g)
    f = [a * x + b * y for x, y in zip(P.f, P.g)]
    g = [c * x + d * y for x, y in zip(P.f, P.g)]
    return Pencil.exact(f, g)


# JSON encoding

def _scalar_to_json(x, radicand):
    if radicand is not None:
        if isinstance(x, QuadraticNumber):
            return [str(x.a), str(x.b)]
        return [str(Fraction(x)), "0"]
    return str(Fraction(x))


def pencil_to_json(P: Pencil) -> dict:
    if P.numeric:
        return {"k": P.k, "numeric": True,
                "f": [[float(np.real(x)), float(np.imag(x))] for x in P.f],
                "g": [[float(np.real(x)), float(np.imag(x))] for x in P.g]}
    d = P.radicand
    out = {"k": P.k, "numeric": False,
           "f": [_scalar_to_json(x, d) for x in P.f],
           "g": [_scalar_to_json(x, d) for x in P.g]}
    if d is not None:
        out["sqrt"] = d
    return out


def pencil_from_json(obj) -> Pencil:
    k = int(obj["k"])
    if obj.get("numeric"):
        f = [complex(re, im) for re, im in obj["f"]]
        g = [complex(re, im) for re, im in obj["g"]]
        if len(f) != k + 1:
            raise ValueError("coefficient count does not match k")
        return Pencil(k, tuple(f), tuple(g), True)
    d = obj.get("sqrt")
    if d is not None:
        conv = lambda s: QuadraticNumber(Fraction(s[0]), Fraction(s[1]), int(d))
    else:
        conv = lambda s: Fraction(s)
    f = [conv(x) for x in obj["f"]]
    g = [conv(x) for x in obj["g"]]
    if len(f) != k + 1:
        raise ValueError("coefficient count does not match k")
    return Pencil.exact(f, g)
