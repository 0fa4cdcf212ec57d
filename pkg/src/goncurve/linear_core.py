"""Exact and floating-point linear algebra.

Exact routines take matrices as lists of rows whose entries are ``int``,
``Fraction`` or :class:`~goncurve.qfield.QuadraticNumber`; elimination is
plain Gauss-Jordan over whichever field the entries generate. Sizes here
stay below ~100x100, so exactness wins over speed.
"""
import random
from fractions import Fraction

import numpy as np

from .errors import ExhaustedRetries, SingularSystem

__all__ = [
    "rref", "exact_nullspace", "exact_rank", "generic_element",
    "numeric_nullspace", "solve_linear", "mat_vec", "to_complex_array",
]

DEFAULT_ATTEMPTS = 64


def _height(x):
    if isinstance(x, Fraction):
        return max(abs(x.numerator), x.denominator)
    if isinstance(x, int):
        return abs(x)
    return 0


def _as_field(x):
    return Fraction(x) if isinstance(x, int) else x


def rref(A):
    """Reduced row echelon form of ``A`` and the list of pivot columns."""
    rows = [[_as_field(x) for x in row] for row in A]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        candidates = [i for i in range(r, len(rows)) if rows[i][c] != 0]
        if not candidates:
            continue
        # smallest-height pivot keeps rational entries short
        p = min(candidates, key=lambda i: _height(rows[i][c]))
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def exact_rank(A) -> int:
    return len(rref(A)[1])


def exact_nullspace(A, ncols=None):
    """Basis of ``{x : A x = 0}`` with exact entries.

    ``ncols`` is needed only when ``A`` has no rows.
    """
    if not A:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(A[0])
    R, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def mat_vec(A, x):
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in A]


def generic_element(basis, seed=0, reject=None, attempts=DEFAULT_ATTEMPTS, start_range=4):
    """Seeded integer combination of ``basis`` that the ``reject`` predicate lets through.

    The coefficient range doubles after every rejection.
    """
    if not basis:
        raise ValueError("basis must be nonempty")
    rng = random.Random(seed)
    bound = start_range
    n = len(basis[0])
    for _ in range(attempts):
        coeffs = [rng.randint(-bound, bound) for _ in basis]
        if all(c == 0 for c in coeffs):
            coeffs[0] = 1
        v = [sum((c * b[i] for c, b in zip(coeffs, basis)), Fraction(0)) for i in range(n)]
        if reject is None or not reject(v):
            return v
        bound *= 2
    raise ExhaustedRetries(f"no acceptable element after {attempts} attempts")


def to_complex_array(A):
    """Convert exact (or numeric) entries to a complex numpy array."""
    return np.array([[complex(x) for x in row] for row in A], dtype=complex) \
        if len(A) and isinstance(A[0], (list, tuple)) else \
        np.array([complex(x) for x in A], dtype=complex)


def numeric_nullspace(A, tol=1e-10):
    """Orthonormal nullspace basis (columns) from the SVD at relative ``tol``."""
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    m, n = A.shape
    if A.size == 0:
        return np.eye(n, dtype=complex)
    _, s, vh = np.linalg.svd(A)
    smax = s[0] if s.size else 0.0
    rank = int(np.sum(s > tol * smax)) if smax > 0 else 0
    return vh[rank:].conj().T


def solve_linear(A, b, rcond=1e-14):
    """Solve a square complex system, raising SingularSystem when ill-posed."""
    A = np.asarray(A, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise SingularSystem("matrix must be square")
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0 or s[-1] <= rcond * s[0]:
        raise SingularSystem("matrix is numerically singular")
    try:
        x = np.linalg.solve(A, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(str(exc)) from exc
    if not np.all(np.isfinite(x)):
        raise SingularSystem("non-finite solution")
    return x
