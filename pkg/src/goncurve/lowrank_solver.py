"""Rank-2 elements of linear spaces of matrices.

Two shapes of problem arise: antisymmetric ``n x n`` spaces (Pluecker
matrices of pencils) and rectangular ``m x n`` spaces (joint maps of the
two components of a binary curve). :func:`find_rank_le2` decides small
cases exactly and otherwise runs a seeded Newton search over factored
matrices ``u v^T - v u^T`` / ``x y^T - z w^T``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import BadShape, ExhaustedRetries, RankMismatch, SingularSystem
from .linear_core import exact_rank, generic_element, rref, solve_linear
from .qfield import QuadraticNumber, exact_sqrt

__all__ = [
    "SolverConfig", "LinearMatrixSpace", "Rank2Witness", "NotFound", "RankReport",
    "find_rank_le2", "factor_rank2", "verify_rank2", "pfaffian4",
]


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-9
    restarts: int = 200
    max_iter: int = 50
    seed: int = 0
    force_numeric: bool = False
    max_restarts: int = 1600
    rank_floor: float = 1e-6

    def to_json(self) -> dict:
        return {"tol": self.tol, "restarts": self.restarts, "max_iter": self.max_iter,
                "seed": self.seed}

    def replace(self, **kw) -> "SolverConfig":
        d = dict(self.__dict__)
        d.update(kw)
        return SolverConfig(**d)


def _is_exact_matrix(M):
    return isinstance(M, (list, tuple))


@dataclass
class LinearMatrixSpace:
    """Span of ``basis``; entries exact (lists of rows) or numpy arrays."""

    shape: tuple
    antisymmetric: bool
    basis: list

    def __post_init__(self):
        m, n = self.shape
        if self.antisymmetric and m != n:
            raise BadShape("antisymmetric spaces must be square")
        for B in self.basis:
            if _is_exact_matrix(B):
                if len(B) != m or any(len(r) != n for r in B):
                    raise BadShape("basis matrix has the wrong shape")
                if self.antisymmetric and any(B[i][j] != -B[j][i]
                                              for i in range(n) for j in range(n)):
                    raise BadShape("basis matrix is not antisymmetric")
            else:
                B = np.asarray(B)
                if B.shape != (m, n):
                    raise BadShape("basis matrix has the wrong shape")
                if self.antisymmetric and not np.allclose(B, -B.T):
                    raise BadShape("basis matrix is not antisymmetric")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def exact(self) -> bool:
        return all(_is_exact_matrix(B) for B in self.basis)

    def coords(self, M):
        """Coordinate vector of a matrix (upper triangle if antisymmetric)."""
        m, n = self.shape
        if self.antisymmetric:
            return [M[i][j] for i, j in combinations(range(n), 2)]
        return [M[i][j] for i in range(m) for j in range(n)]

    def numeric_basis(self):
        """Columns of vectorized basis matrices, each scaled to unit norm."""
        cols = []
        for B in self.basis:
            v = np.array([complex(x) for x in self.coords(B)])
            cols.append(v / np.linalg.norm(v))
        return np.array(cols).T

    def combine(self, coeffs):
        m, n = self.shape
        if self.exact and all(not isinstance(c, (complex, float)) for c in coeffs):
            return [[sum((c * B[i][j] for c, B in zip(coeffs, self.basis)), Fraction(0))
                     for j in range(n)] for i in range(m)]
        out = np.zeros((m, n), dtype=complex)
        for c, B in zip(coeffs, self.basis):
            out += c * _to_array(B)
        return out


@dataclass
class Rank2Witness:
    matrix: object
    factors: tuple
    residual: float
    exact: bool
    path: str = ""

    @property
    def found(self):
        return True


@dataclass
class NotFound:
    exact: bool
    reason: str = ""
    log: list = field(default_factory=list)

    @property
    def kind(self) -> str:
        if self.exact:
            return "exact"
        return "undecided" if self.reason == "undecided" else "search-exhausted"

    @property
    def found(self):
        return False

    def __bool__(self):
        return False


@dataclass
class RankReport:
    residual: float
    accept: bool
    rank: int


def _to_array(M):
    if _is_exact_matrix(M):
        return np.array([[complex(x) for x in row] for row in M], dtype=complex)
    return np.asarray(M, dtype=complex)


def pfaffian4(P, idx=(0, 1, 2, 3)):
    i, j, k, l = idx
    return P[i][j] * P[k][l] - P[i][k] * P[j][l] + P[i][l] * P[j][k]


def _det3(M, rows, cols):
    (a, b, c) = rows
    (x, y, z) = cols
    return (M[a][x] * (M[b][y] * M[c][z] - M[b][z] * M[c][y])
            - M[a][y] * (M[b][x] * M[c][z] - M[b][z] * M[c][x])
            + M[a][z] * (M[b][x] * M[c][y] - M[b][y] * M[c][x]))


def _det2(M, rows, cols):
    (a, b), (x, y) = rows, cols
    return M[a][x] * M[b][y] - M[a][y] * M[b][x]


def verify_rank2(M, tol=1e-9) -> RankReport:
    """Third-to-first singular value ratio and whether ``M`` has rank exactly 2."""
    if _is_exact_matrix(M):
        r = exact_rank(M)
        return RankReport(0.0 if r <= 2 else 1.0, r == 2, r)
    s = np.linalg.svd(np.asarray(M, dtype=complex), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return RankReport(0.0, False, 0)
    ratio3 = float(s[2] / s[0]) if s.size > 2 else 0.0
    rank = int(np.sum(s > tol * s[0]))
    return RankReport(ratio3, ratio3 <= tol and s.size > 1 and s[1] > tol * s[0], rank)


def factor_rank2(M, antisymmetric: bool, tol=1e-9):
    """Factors of a rank-2 matrix.

    Antisymmetric: ``(u, v)`` with ``M = u v^T - v u^T``.
    Rectangular: ``(x, y, z, w)`` with ``M = x y^T - z w^T``.
    """
    if _is_exact_matrix(M):
        m, n = len(M), len(M[0])
        R, pivots = rref(M)
        if len(pivots) != 2:
            raise RankMismatch(f"matrix has rank {len(pivots)}, expected 2")
        if antisymmetric:
            s, t = next((i, j) for i in range(n) for j in range(i + 1, n) if M[i][j] != 0)
            pst = M[s][t]
            u = [M[i][s] / pst for i in range(n)]
            v = [M[i][t] for i in range(n)]
            return u, v
        c0 = [M[i][pivots[0]] for i in range(m)]
        c1 = [M[i][pivots[1]] for i in range(m)]
        return c0, list(R[0]), [-x for x in c1], list(R[1])
    M = np.asarray(M, dtype=complex)
    U, s, Vh = np.linalg.svd(M)
    if s.size < 2 or s[0] == 0 or s[1] <= tol * s[0] or (s.size > 2 and s[2] > tol * s[0]):
        raise RankMismatch("matrix does not have numerical rank 2")
    if antisymmetric:
        Q = U[:, :2]
        C = Q.conj().T @ M @ Q.conj()
        c = (C[0, 1] - C[1, 0]) / 2
        return c * Q[:, 0], Q[:, 1]
    A = U[:, :2] * s[:2]
    B = Vh[:2].T
    return A[:, 0], B[:, 0], -A[:, 1], B[:, 1]


def _recompose(factors, antisymmetric):
    if antisymmetric:
        u, v = (np.asarray(x, dtype=complex) for x in factors)
        return np.outer(u, v) - np.outer(v, u)
    x, y, z, w = (np.asarray(a, dtype=complex) for a in factors)
    return np.outer(x, y) - np.outer(z, w)


def _exact_recompose(factors, antisymmetric):
    if antisymmetric:
        u, v = factors
        return [[u[i] * v[j] - v[i] * u[j] for j in range(len(u))] for i in range(len(u))]
    x, y, z, w = factors
    return [[x[i] * y[j] - z[i] * w[j] for j in range(len(y))] for i in range(len(x))]


def _exact_witness(M, L, path):
    factors = factor_rank2(M, L.antisymmetric)
    assert _exact_recompose(factors, L.antisymmetric) == \
        [[Fraction(x) if isinstance(x, int) else x for x in row] for row in M]
    return Rank2Witness(M, tuple(factors), 0.0, True, path)


def _identically_rank_le1(L) -> bool:
    """Every element of the space has rank <= 1 (all 2x2 minors vanish identically)."""
    m, n = L.shape
    B = L.basis
    for rows in combinations(range(m), 2):
        for cols in combinations(range(n), 2):
            for a in range(len(B)):
                if _det2(B[a], rows, cols) != 0:
                    return False
                for b in range(a + 1, len(B)):
                    S = [[B[a][i][j] + B[b][i][j] for j in range(n)] for i in range(m)]
                    polar = _det2(S, rows, cols) - _det2(B[a], rows, cols) - _det2(B[b], rows, cols)
                    if polar != 0:
                        return False
    return True


def _rank_of(M):
    return exact_rank(M)


def _generic_exact(L, config, accept, path, rank_ok):
    """Seeded generic elements until one has rank 2 and passes ``accept``."""
    dim = L.dim
    vecs = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]

    def reject(c):
        M = L.combine(c)
        if not rank_ok(M):
            return True
        if accept is not None:
            w = _exact_witness(M, L, path)
            return not accept(w)
        return False

    try:
        c = generic_element(vecs, seed=config.seed, reject=reject)
    except ExhaustedRetries:
        return None
    M = L.combine(c)
    return _exact_witness(M, L, path)


def _binary_form_coeffs(func, degree):
    """Coefficients of a homogeneous form of given degree in (s, t), from values."""
    # c(t) = F(1, t) has degree <= degree; interpolate at t = 0..degree
    xs = list(range(degree + 1))
    ys = [func(Fraction(1), Fraction(x)) for x in xs]
    coeffs = [Fraction(0)] * (degree + 1)
    for i, xi in enumerate(xs):
        # Lagrange basis polynomial for node i
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [(basis[k - 1] if k > 0 else 0) - (xj * basis[k] if k < len(basis) else 0)
                     for k in range(len(basis) + 1)]
            denom *= (xi - xj)
        for k, b in enumerate(basis):
            coeffs[k] = coeffs[k] + ys[i] * b / denom
    return coeffs


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pdivmod(a, b):
    a, b = _trim(a), _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        coef = r[-1] / b[-1]
        q[shift] = coef
        for i, bc in enumerate(b):
            r[i + shift] = r[i + shift] - coef * bc
        r = _trim(r)
    return _trim(q), r


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return [x / a[-1] for x in a] if a else []


def _forms_gcd(forms):
    """gcd of binary forms given as (coeffs, degree); returns (affine poly, mult at s=0).

    Returns None when every form vanishes identically.
    """
    h = None
    inf_mult = None
    for coeffs, deg in forms:
        c = _trim(coeffs)
        if not c:
            continue
        mult = deg - (len(c) - 1)
        inf_mult = mult if inf_mult is None else min(inf_mult, mult)
        h = c if h is None else _pgcd(h, c)
    if h is None:
        return None
    return h, inf_mult


def _strip_common(h, inf_mult, other):
    """Remove from (h, inf_mult) every root shared with ``other``."""
    if other is None:
        return [Fraction(0)], 0   # rank <= 1 everywhere: nothing survives
    oh, om = other
    if om > 0:
        inf_mult = 0
    while True:
        g = _pgcd(h, oh)
        if len(g) <= 1:
            break
        h = _pdivmod(h, g)[0]
    return h, inf_mult


def _pencil_space_decision(L, config, accept):
    """Exact decision for two-dimensional spaces ``s X + t Y``."""
    X, Y = L.basis
    m, n = L.shape

    def element(s, t):
        return [[s * X[i][j] + t * Y[i][j] for j in range(n)] for i in range(m)]

    if L.antisymmetric:
        eqs = [(lambda s, t, idx=idx: pfaffian4(element(s, t), idx), 2)
               for idx in combinations(range(n), 4)]
        low = None
    else:
        eqs = [(lambda s, t, r=r, c=c: _det3(element(s, t), r, c), 3)
               for r in combinations(range(m), 3) for c in combinations(range(n), 3)]
        low = [(lambda s, t, r=r, c=c: _det2(element(s, t), r, c), 2)
               for r in combinations(range(m), 2) for c in combinations(range(n), 2)]
    forms = [(_binary_form_coeffs(fn, d), d) for fn, d in eqs]
    G = _forms_gcd(forms)
    if low is not None:
        H = _forms_gcd([(_binary_form_coeffs(fn, d), d) for fn, d in low])
    else:
        H = "nonzero"
    if G is None:
        # every element has rank <= 2; need one of rank exactly 2
        if H is None:
            return NotFound(True, "space consists of rank <= 1 matrices")
        w = _generic_exact(L, config, accept, "pencil-space", lambda M: _rank_of(M) == 2)
        return w if w is not None else NotFound(False, "generic elements rejected")
    h, inf_mult = G
    if H != "nonzero":
        h, inf_mult = _strip_common(h, inf_mult, H)
    roots = []
    if inf_mult > 0:
        roots.append((Fraction(0), Fraction(1)))
    deg = len(_trim(h)) - 1
    numeric_roots = []
    if deg == 1:
        roots.append((Fraction(1), -h[0] / h[1]))
    elif deg == 2:
        disc = h[1] * h[1] - 4 * h[2] * h[0]
        r = exact_sqrt(disc)
        for sign in (1, -1):
            roots.append((Fraction(1), (-h[1] + sign * r) / (2 * h[2])))
    elif deg > 2:
        numeric_roots = list(np.roots([complex(c) for c in reversed(_trim(h))]))
    if not roots and not numeric_roots:
        return NotFound(True, "rank-2 equations have no common root on the pencil")
    for s, t in roots:
        M = element(s, t)
        if _rank_of(M) != 2:
            continue
        w = _exact_witness(M, L, "pencil-space")
        if accept is None or accept(w):
            return w
    Xa, Ya = _to_array(X), _to_array(Y)
    for t in numeric_roots:
        M = Xa + t * Ya
        w = _numeric_witness_from_matrix(M, L, config)
        if w is not None and (accept is None or accept(w)):
            return w
    return NotFound(False, "rank-2 points exist but were rejected by the caller")


def _quadric_plane_4x4(L, config, accept):
    """Antisymmetric 4x4: restrict the Pfaffian to seeded planes and solve exactly."""
    dim = L.dim
    vecs = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    log = []
    for attempt in range(8):
        a = generic_element(vecs, seed=config.seed * 1009 + 2 * attempt)
        b = generic_element(vecs, seed=config.seed * 1009 + 2 * attempt + 1)
        if exact_rank([a, b]) < 2:
            continue
        X, Y = L.combine(a), L.combine(b)
        qa, qb = pfaffian4(X), pfaffian4(Y)
        S = [[X[i][j] + Y[i][j] for j in range(4)] for i in range(4)]
        polar = pfaffian4(S) - qa - qb
        cands = []
        if qa == 0 and qb == 0 and polar == 0:
            cands = [X]
        elif qa == 0:
            cands = [X]
        else:
            # qa s^2 + polar s + qb = 0 at t = 1
            disc = polar * polar - 4 * qa * qb
            try:
                r = exact_sqrt(disc)
            except TypeError:
                return None
            log.append(f"discriminant {disc}")
            for sign in (1, -1):
                s = (-polar + sign * r) / (2 * qa)
                cands.append([[s * X[i][j] + Y[i][j] for j in range(4)] for i in range(4)])
        for M in cands:
            if _rank_of(M) != 2:
                continue
            w = _exact_witness(M, L, "pfaffian-quadric")
            if accept is None or accept(w):
                return w
    return NotFound(False, "quadric points rejected by the caller", log)


def _exact_paths(L, config, accept):
    m, n = L.shape
    dim = L.dim
    if not L.antisymmetric and min(m, n) <= 2:
        if _identically_rank_le1(L):
            return NotFound(True, "every element has rank <= 1")
        w = _generic_exact(L, config, accept, "rectangular-thin", lambda M: _rank_of(M) == 2)
        return w if w is not None else NotFound(False, "generic elements rejected")
    if L.antisymmetric and n <= 3:
        w = _generic_exact(L, config, accept, "antisymmetric-small", lambda M: _rank_of(M) == 2)
        return w if w is not None else NotFound(False, "generic elements rejected")
    if dim == 1:
        M = L.basis[0]
        if _rank_of(M) != 2:
            return NotFound(True, "the single generator does not have rank 2")
        w = _exact_witness(M, L, "line")
        if accept is None or accept(w):
            return w
        return NotFound(False, "the only rank-2 element was rejected by the caller")
    if L.antisymmetric and n == 4:
        return _quadric_plane_4x4(L, config, accept)
    if dim == 2:
        return _pencil_space_decision(L, config, accept)
    return None


# numeric search

def _numeric_witness_from_matrix(M, L, config):
    rep = verify_rank2(M, config.tol)
    s = np.linalg.svd(M, compute_uv=False)
    if not rep.accept or s[1] <= config.rank_floor * s[0]:
        return None
    try:
        factors = factor_rank2(M, L.antisymmetric, config.tol)
    except RankMismatch:
        return None
    R = _recompose(factors, L.antisymmetric)
    recomposition = np.linalg.norm(R - M) / np.linalg.norm(M)
    memb = _membership_residual(M, L)
    residual = max(rep.residual, recomposition, memb)
    if residual > config.tol:
        return None
    return Rank2Witness(M, tuple(np.asarray(f) for f in factors), float(residual), False, "numeric")


def _complement(L):
    """Orthonormal rows annihilating the (vectorized) span of the basis."""
    B = L.numeric_basis()
    U, s, _ = np.linalg.svd(B, full_matrices=True)
    rank = int(np.sum(s > 1e-12 * s[0])) if s.size else 0
    return U[:, rank:].conj().T, rank


def _vec(M, L):
    m, n = L.shape
    if L.antisymmetric:
        iu = np.triu_indices(n, 1)
        return M[iu]
    return M.reshape(-1)


def _membership_residual(M, L):
    A, _ = _complement(L)
    v = _vec(np.asarray(M, dtype=complex), L)
    nv = np.linalg.norm(v)
    if nv == 0:
        return np.inf
    return float(np.linalg.norm(A @ v) / nv) if A.size else 0.0


def _functional_matrices(rows, L):
    """Reshape functionals on vectorized matrices into matrices K with <K, M>."""
    m, n = L.shape
    E = rows.shape[0]
    if L.antisymmetric:
        K = np.zeros((E, n, n), dtype=complex)
        iu = np.triu_indices(n, 1)
        K[:, iu[0], iu[1]] = rows
        K[:, iu[1], iu[0]] = -rows
        return K
    return rows.reshape(E, m, n)


class _Newton:
    """Square (or overdetermined) bilinear system for one restart."""

    def __init__(self, L, A, rng, dim_solutions):
        self.L = L
        m, n = L.shape
        N = A.shape[1]
        d = max(dim_solutions, 0)
        slices = (rng.standard_normal((d, N)) + 1j * rng.standard_normal((d, N))) / np.sqrt(2 * N)
        rows = np.vstack([A, slices]) if d else A
        self.K = _functional_matrices(rows, L)
        self.m, self.n = m, n
        if L.antisymmetric:
            self.r = (rng.standard_normal((2, n)) + 1j * rng.standard_normal((2, n))) / np.sqrt(2 * n)
        else:
            self.r = (rng.standard_normal((2, m)) + 1j * rng.standard_normal((2, m))) / np.sqrt(2 * m)
            self.h = (rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))) / np.sqrt(2 * m * n)

    def split(self, x):
        if self.L.antisymmetric:
            n = self.n
            return x[:n], x[n:]
        m, n = self.m, self.n
        return x[:m], x[m:m + n], x[m + n:2 * m + n], x[2 * m + n:]

    def matrix(self, x):
        if self.L.antisymmetric:
            u, v = self.split(x)
            return np.outer(u, v) - np.outer(v, u)
        xx, y, z, w = self.split(x)
        return np.outer(xx, y) - np.outer(z, w)

    def residual_and_jacobian(self, x):
        K, r = self.K, self.r
        if self.L.antisymmetric:
            u, v = self.split(x)
            Kv = K @ v
            Ku = K @ u
            F = np.concatenate([Kv @ u,
                                [r[0] @ u - 1, r[1] @ u, r[0] @ v, r[1] @ v - 1]])
            n = self.n
            J = np.zeros((F.size, 2 * n), dtype=complex)
            E = K.shape[0]
            J[:E, :n] = Kv
            J[:E, n:] = -Ku
            J[E, :n] = r[0]
            J[E + 1, :n] = r[1]
            J[E + 2, n:] = r[0]
            J[E + 3, n:] = r[1]
            return F, J
        xx, y, z, w = self.split(x)
        m, n = self.m, self.n
        Ky = K @ y
        Kw = K @ w
        KTx = np.einsum("emn,m->en", K, xx)
        KTz = np.einsum("emn,m->en", K, z)
        E = K.shape[0]
        h = self.h
        F = np.concatenate([
            np.einsum("m,em->e", xx, Ky) - np.einsum("m,em->e", z, Kw),
            [r[0] @ xx - 1, r[1] @ xx, r[0] @ z, r[1] @ z - 1,
             xx @ h @ y - z @ h @ w - 1]])
        J = np.zeros((F.size, 2 * m + 2 * n), dtype=complex)
        J[:E, :m] = Ky
        J[:E, m:m + n] = KTx
        J[:E, m + n:2 * m + n] = -Kw
        J[:E, 2 * m + n:] = -KTz
        J[E, :m] = r[0]
        J[E + 1, :m] = r[1]
        J[E + 2, m + n:2 * m + n] = r[0]
        J[E + 3, m + n:2 * m + n] = r[1]
        J[E + 4, :m] = h @ y
        J[E + 4, m:m + n] = xx @ h
        J[E + 4, m + n:2 * m + n] = -(h @ w)
        J[E + 4, 2 * m + n:] = -(z @ h)
        return F, J

    def solve(self, x, max_iter):
        F, J = self.residual_and_jacobian(x)
        fn = np.linalg.norm(F)
        for _ in range(max_iter):
            try:
                if J.shape[0] == J.shape[1]:
                    step = solve_linear(J, -F)
                else:
                    step = np.linalg.lstsq(J, -F, rcond=None)[0]
            except (SingularSystem, np.linalg.LinAlgError):
                return x, fn
            lam = 1.0
            for _ in range(12):
                xn = x + lam * step
                Fn, Jn = self.residual_and_jacobian(xn)
                fnn = np.linalg.norm(Fn)
                if fnn < fn or fnn < 1e-14:
                    break
                lam /= 2
            else:
                return x, fn
            small_step = np.linalg.norm(lam * step) <= 1e-15 * max(np.linalg.norm(x), 1.0)
            x, F, J, fn = xn, Fn, Jn, fnn
            if fn < 1e-15 * max(np.linalg.norm(x) ** 2, 1.0) or small_step:
                break
        return x, fn


def _expected_dimension(L, rank_space):
    m, n = L.shape
    if L.antisymmetric:
        codim = (n - 2) * (n - 3) // 2
    else:
        codim = max(m - 2, 0) * max(n - 2, 0)
    return rank_space - 1 - codim


def _numeric_path(L, config, accept, restarts=None):
    A, rank_space = _complement(L)
    if rank_space == 0:
        return NotFound(True, "space is zero")
    d = _expected_dimension(L, rank_space)
    m, n = L.shape
    nvars = 2 * n if L.antisymmetric else 2 * (m + n)
    restarts = config.restarts if restarts is None else restarts
    for i in range(restarts):
        rng = np.random.default_rng([config.seed & 0xFFFFFFFF, i])
        system = _Newton(L, A, rng, d)
        x0 = (rng.standard_normal(nvars) + 1j * rng.standard_normal(nvars)) / np.sqrt(2)
        x, fn = system.solve(x0, config.max_iter)
        if not np.all(np.isfinite(x)):
            continue
        M = system.matrix(x)
        if not np.all(np.isfinite(M)) or np.linalg.norm(M) == 0:
            continue
        w = _numeric_witness_from_matrix(M, L, config)
        if w is None:
            continue
        if accept is None or accept(w):
            w.path = f"numeric(restart {i})"
            return w
    return NotFound(False, f"no rank-2 element after {restarts} restarts")


def find_rank_le2(L: LinearMatrixSpace, config: SolverConfig = SolverConfig(), accept=None):
    """Search ``span(L)`` for an element of rank exactly 2.

    Returns a :class:`Rank2Witness`, or a :class:`NotFound` whose ``exact``
    flag tells whether emptiness was proven or the search budget ran out.
    ``accept`` is an optional predicate on candidate witnesses; rejected
    candidates do not count as solutions.
    """
    if L.dim == 0:
        return NotFound(True, "space is zero")
    m, n = L.shape
    if m < 2 or n < 2:
        return NotFound(True, "matrices too small to have rank 2")
    if L.exact and not config.force_numeric:
        res = _exact_paths(L, config, accept)
        if res is not None:
            return res
    return _numeric_path(L, config, accept)
