"""Gonality witnesses, upper bounds and lower-bound reports for both curve families.

Upper bounds come from explicit maps: one pencil ``phi`` on P^1 with
``phi(a_j) = phi(b_j)`` at every node of an irreducible curve, or a pair of
pencils ``(psi1, psi2)`` with ``psi1(n1_j) = psi2(n2_j)`` at every node of a
binary curve; the bound is the (summed) degree. Lower bounds enumerate node
subsets and add the number of nodes a map fails to identify to the least
degree of a map identifying the rest.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .curve_model import BinaryCurve, CurveDocument, IrreducibleNodalCurve, check
from .errors import (BadGenus, BasePoint, DegenerateInput, DegeneratePencil,
                     ExhaustedRetries, InvalidCurve, SolverBudgetExceeded, TooLarge)
from .linear_core import exact_nullspace, generic_element
from .lowrank_solver import (LinearMatrixSpace, NotFound, Rank2Witness, SolverConfig,
                             find_rank_le2)
from .pencil import (DEFAULT_TOL, Pencil, bracket_value, effective_degree, evaluate,
                     images_match, pencil_from_json, pencil_to_json, plucker_matrix,
                     points_match, reduce)
from .proj_line import MoebiusMap, apply_moebius, bracket, eval_vector, moebius_from_three_pairs

__all__ = [
    "GonalityCertificate", "LowerBoundReport", "LowerBoundRow", "VerificationReport",
    "interpolate_pairs", "identify_pairs", "identify_space", "joint_space",
    "hyperelliptic_binary", "binary_witness", "irreducible_upper_bound",
    "binary_upper_bound", "irreducible_lower_bound", "binary_lower_bound",
    "upper_bound", "lower_bound", "verify_certificate", "generic_gonality",
    "certificate_to_json", "certificate_from_json", "witness_residual",
]


def generic_gonality(g: int) -> int:
    """The generic gonality ``floor((g + 3) / 2)`` of either family."""
    if g < 2:
        raise BadGenus(f"genus {g} < 2")
    return (g + 3) // 2


def _curve(curve):
    return curve.curve if isinstance(curve, CurveDocument) else curve


# constraint spaces

def _plucker_row(a, b, k):
    ea, eb = eval_vector(a, k), eval_vector(b, k)
    return [ea[s] * eb[t] - ea[t] * eb[s] for s, t in combinations(range(k + 1), 2)]


def _antisym_from_coords(vec, n):
    M = [[Fraction(0)] * n for _ in range(n)]
    for (s, t), x in zip(combinations(range(n), 2), vec):
        M[s][t] = x
        M[t][s] = -x
    return M


def identify_space(pairs, k) -> LinearMatrixSpace:
    """Antisymmetric matrices P with ``e(a)^T P e(b) = 0`` for every pair."""
    n = k + 1
    rows = [_plucker_row(a, b, k) for a, b in pairs]
    basis = exact_nullspace(rows, ncols=n * (n - 1) // 2)
    return LinearMatrixSpace((n, n), True, [_antisym_from_coords(v, n) for v in basis])


def joint_space(nodes, k1, k2) -> LinearMatrixSpace:
    """Matrices M of shape (k1+1, k2+1) with ``e(n1)^T M e(n2) = 0`` at every node."""
    rows = []
    for p, q in nodes:
        e1, e2 = eval_vector(p, k1), eval_vector(q, k2)
        rows.append([x * y for x in e1 for y in e2])
    basis = exact_nullspace(rows, ncols=(k1 + 1) * (k2 + 1))
    mats = [[list(v[i * (k2 + 1):(i + 1) * (k2 + 1)]) for i in range(k1 + 1)] for v in basis]
    return LinearMatrixSpace((k1 + 1, k2 + 1), False, mats)


def _check_distinct(points, what):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if bracket(points[i], points[j]) == 0:
                raise DegenerateInput(f"{what}: points {i} and {j} coincide")


# interpolation constructors

def interpolate_pairs(sources, targets, k: int, seed=0):
    """Pencil of degree <= k with ``phi(sources[j]) == targets[j]``, or NotFound."""
    sources, targets = list(sources), list(targets)
    if len(sources) != len(targets):
        raise DegenerateInput("sources and targets differ in length")
    _check_distinct(sources, "sources")
    n = k + 1
    rows = []
    for a, b in zip(sources, targets):
        e = eval_vector(a, k)
        rows.append([b.a1 * x for x in e] + [-b.a0 * x for x in e])
    basis = exact_nullspace(rows, ncols=2 * n)
    if not basis:
        return NotFound(True, "constraint matrix has full column rank")

    found = {}

    def reject(v):
        try:
            P = Pencil.exact(v[:n], v[n:])
            R, _ = reduce(P)
            ok = all(evaluate(R, a) == b for a, b in zip(sources, targets))
        except (DegeneratePencil, BasePoint):
            return True
        if ok:
            found["pencil"] = R
        return not ok

    try:
        generic_element(basis, seed=seed, reject=reject)
    except ExhaustedRetries:
        return NotFound(False, "every sampled solution is a degenerate pencil")
    return found["pencil"]


def _pencil_from_factors(u, v):
    if isinstance(u, np.ndarray):
        return Pencil.from_numeric(u, v)
    return Pencil.exact(u, v)


def _verified_identify(P: Pencil, pairs, tol):
    """Reduced pencil if it genuinely identifies every pair, else None."""
    try:
        if P.numeric:
            if effective_degree(P) != P.k:
                return None
            R = P
        else:
            R, _ = reduce(P)
    except DegeneratePencil:
        return None
    for a, b in pairs:
        # numeric pencils: base points were excluded by the degree check and
        # images are compared through the scale-invariant bracket only
        if R.numeric:
            if not images_match(R, a, b, tol):
                return None
            continue
        try:
            if evaluate(R, a) != evaluate(R, b):
                return None
        except BasePoint:
            return None
    return R


def _split_construction(pairs, k, seed, tol, max_tries=16):
    """Exact witness with ``f`` vanishing on both branches of some nodes.

    Nodes in the zero set of ``f`` all map to infinity; the remaining node
    conditions are linear in ``g`` once ``f`` is fixed, and ``f`` itself
    solves them, so a second solution exists once the count allows it.
    """
    l = len(pairs)
    rng = random.Random(seed)
    for s in range(1, k // 2 + 1):
        if l - s > k - 1:
            continue
        subsets = list(combinations(range(l), s))
        rng.shuffle(subsets)
        for T in subsets[:max_tries]:
            f = [Fraction(1)]
            for j in T:
                for p in pairs[j]:
                    f = _mul_linear(f, p)
            for _ in range(k - 2 * s):
                f = _mul_linear(f, _random_rational_point(rng))
            rows = []
            for j in range(l):
                if j in T:
                    continue
                a, b = pairs[j]
                ea, eb = eval_vector(a, k), eval_vector(b, k)
                fa = sum(c * x for c, x in zip(f, ea))
                fb = sum(c * x for c, x in zip(f, eb))
                rows.append([fa * y - fb * x for x, y in zip(ea, eb)])
            basis = exact_nullspace(rows, ncols=k + 1) if rows else \
                [[Fraction(int(i == j)) for j in range(k + 1)] for i in range(k + 1)]
            if len(basis) < 2:
                continue
            got = {}

            def reject(gv):
                try:
                    P = Pencil.exact(f, gv)
                except DegeneratePencil:
                    return True
                R = _verified_identify(P, pairs, tol)
                if R is None:
                    return True
                got["pencil"] = R
                return False

            try:
                generic_element(basis, seed=rng.randrange(2 ** 31), reject=reject, attempts=8)
            except ExhaustedRetries:
                continue
            return got["pencil"]
    return None


def _mul_linear(form, p):
    # multiply a binary form by the linear form vanishing at p: x0*p1 - x1*p0
    l0, l1 = p.a1, -p.a0
    out = [Fraction(0)] * (len(form) + 1)
    for i, c in enumerate(form):
        out[i] += c * l0
        out[i + 1] += c * l1
    return out


def _random_rational_point(rng):
    from .proj_line import point
    return point(rng.randint(-64, 64))


@dataclass
class IdentifyOutcome:
    pencil: object = None
    not_found: object = None

    @property
    def found(self):
        return self.pencil is not None


def identify_pairs(pairs, k: int, config: SolverConfig = SolverConfig(), tol=DEFAULT_TOL,
                   numeric=True):
    """Non-constant pencil of degree <= k identifying every pair, or NotFound.

    ``numeric=False`` stops after the exact paths; an undecided case is then
    reported as ``NotFound`` with ``reason='undecided'``.
    """
    pairs = [tuple(p) for p in pairs]
    pts = [p for pair in pairs for p in pair]
    _check_distinct(pts, "branch points")
    if k < 1:
        return NotFound(True, "degree must be positive")
    L = identify_space(pairs, k)
    if L.dim == 0:
        return NotFound(True, "zero solution space")
    n = k + 1
    if n >= 4 and L.dim >= 2 and not config.force_numeric:
        R = _split_construction(pairs, k, config.seed, tol)
        if R is not None:
            return R

    verified = {}

    def accept(w: Rank2Witness):
        u, v = w.factors
        try:
            P = _pencil_from_factors(u, v)
        except DegeneratePencil:
            return False
        R = _verified_identify(P, pairs, tol)
        if R is None:
            return False
        verified["pencil"] = R
        return True

    if not numeric and not config.force_numeric:
        from .lowrank_solver import _exact_paths
        res = _exact_paths(L, config, accept)
        if res is None:
            return NotFound(False, "undecided")
    else:
        res = find_rank_le2(L, config, accept)
    if isinstance(res, NotFound):
        return res
    return verified["pencil"]


def hyperelliptic_binary(curve):
    """Exact hyperelliptic test: an automorphism sending side1 to side2 nodewise."""
    curve = _curve(curve)
    if not isinstance(curve, BinaryCurve):
        raise InvalidCurve("hyperelliptic_binary needs a binary curve")
    check(curve)
    psi = moebius_from_three_pairs(curve.side1[:3], curve.side2[:3])
    for p, q in zip(curve.side1[3:], curve.side2[3:]):
        if apply_moebius(psi, p) != q:
            return False, None
    return True, psi


def _verified_joint(P1: Pencil, P2: Pencil, nodes, tol):
    try:
        if P1.numeric:
            if effective_degree(P1) != P1.k or effective_degree(P2) != P2.k:
                return None
            R1, R2 = P1, P2
        else:
            R1, _ = reduce(P1)
            R2, _ = reduce(P2)
    except DegeneratePencil:
        return None
    for p, q in nodes:
        try:
            if not points_match(evaluate(R1, p, tol), evaluate(R2, q, tol), tol):
                return None
        except BasePoint:
            return None
    return R1, R2


def binary_witness(curve, k1: int, k2: int, config: SolverConfig = SolverConfig(),
                   tol=DEFAULT_TOL, nodes=None, numeric=True):
    """Pencils ``(psi1, psi2)`` of degrees <= (k1, k2) agreeing at every node, or NotFound."""
    if k1 < 1 or k2 < 1:
        raise DegenerateInput("component degrees must be positive")
    if nodes is None:
        curve = _curve(curve)
        nodes = curve.nodes
    nodes = [tuple(x) for x in nodes]
    _check_distinct([p for p, _ in nodes], "side1")
    _check_distinct([q for _, q in nodes], "side2")
    L = joint_space(nodes, k1, k2)
    if L.dim == 0:
        return NotFound(True, "zero solution space")
    verified = {}

    def accept(w: Rank2Witness):
        x, y, z, ww = w.factors
        try:
            P1 = _pencil_from_factors(x, z)
            P2 = _pencil_from_factors(ww, y)
        except DegeneratePencil:
            return False
        R = _verified_joint(P1, P2, nodes, tol)
        if R is None:
            return False
        verified["pencils"] = R
        return True

    if not numeric and not config.force_numeric:
        from .lowrank_solver import _exact_paths
        res = _exact_paths(L, config, accept)
        if res is None:
            return NotFound(False, "undecided")
    else:
        res = find_rank_le2(L, config, accept)
    if isinstance(res, NotFound):
        return res
    return verified["pencils"]


# certificates

@dataclass
class GonalityCertificate:
    family: str
    genus: int
    witness: list
    degrees: list
    claimed_upper: int
    exact: bool
    residual: float
    exclusions: list = field(default_factory=list)
    config: dict = field(default_factory=dict)


def witness_residual(curve, witness) -> float:
    """Largest relative node mismatch of a witness (0 for exact witnesses)."""
    curve = _curve(curve)
    if all(not P.numeric for P in witness):
        return 0.0
    worst = 0.0
    if isinstance(curve, IrreducibleNodalCurve):
        (P,) = witness
        M = np.linalg.norm(plucker_matrix(P))
        for a, b in curve.pairs:
            ea = np.array([complex(x) for x in eval_vector(a, P.k)])
            eb = np.array([complex(x) for x in eval_vector(b, P.k)])
            scale = np.linalg.norm(ea) * np.linalg.norm(eb) * M
            worst = max(worst, abs(bracket_value(P, a, b)) / scale)
    else:
        P1, P2 = witness
        for p, q in curve.nodes:
            x, y = evaluate(P1, p), evaluate(P2, q)
            xv = np.array([complex(c) for c in x])
            yv = np.array([complex(c) for c in y])
            det = xv[0] * yv[1] - xv[1] * yv[0]
            worst = max(worst, abs(det) / (np.linalg.norm(xv) * np.linalg.norm(yv)))
    return float(worst)


def _degree_of(P):
    return effective_degree(P)


def irreducible_upper_bound(curve, config: SolverConfig = SolverConfig(), max_degree=None,
                            tol=DEFAULT_TOL, numeric=True) -> GonalityCertificate:
    """Search k = 2, 3, ... for a pencil identifying all nodes."""
    curve = check(_curve(curve))
    if not isinstance(curve, IrreducibleNodalCurve):
        raise InvalidCurve("expected an irreducible nodal curve")
    g = curve.genus
    guaranteed = generic_gonality(g)
    kmax = max_degree if max_degree is not None else guaranteed
    exclusions = []
    for k in range(2, kmax + 1):
        res = identify_pairs(curve.pairs, k, config, tol, numeric)
        cfg = config
        while (numeric and isinstance(res, NotFound) and not res.exact and k >= guaranteed
               and cfg.restarts * 2 <= cfg.max_restarts):
            cfg = cfg.replace(restarts=cfg.restarts * 2, seed=cfg.seed + 1)
            res = identify_pairs(curve.pairs, k, cfg, tol, numeric)
        if isinstance(res, NotFound):
            exclusions.append({"degree": k, "kind": res.kind})
            continue
        deg = _degree_of(res)
        return GonalityCertificate("irreducible", g, [res], [deg], deg, not res.numeric,
                                   witness_residual(curve, [res]), exclusions, config.to_json())
    partial = GonalityCertificate("irreducible", g, [], [], None, False, float("nan"),
                                  exclusions, config.to_json())
    raise SolverBudgetExceeded(f"no witness up to degree {kmax}", partial)


def _splits(t):
    return [(k1, t - k1) for k1 in range(t - 1, 0, -1)]


def binary_upper_bound(curve, config: SolverConfig = SolverConfig(), max_degree=None,
                       tol=DEFAULT_TOL, numeric=True) -> GonalityCertificate:
    """Search total degree t = 2, 3, ... over splits (t-1, 1), (t-2, 2), ..., (1, t-1)."""
    curve = check(_curve(curve))
    if not isinstance(curve, BinaryCurve):
        raise InvalidCurve("expected a binary curve")
    g = curve.genus
    guaranteed = generic_gonality(g)
    tmax = max_degree if max_degree is not None else guaranteed
    exclusions = []
    for t in range(2, tmax + 1):
        kinds = []
        for k1, k2 in _splits(t):
            res = binary_witness(curve, k1, k2, config, tol, numeric=numeric)
            cfg = config
            while (numeric and isinstance(res, NotFound) and not res.exact and t >= guaranteed
                   and cfg.restarts * 2 <= cfg.max_restarts):
                cfg = cfg.replace(restarts=cfg.restarts * 2, seed=cfg.seed + 1)
                res = binary_witness(curve, k1, k2, cfg, tol, numeric=numeric)
            if isinstance(res, NotFound):
                kinds.append(res.kind)
                continue
            P1, P2 = res
            d1, d2 = _degree_of(P1), _degree_of(P2)
            return GonalityCertificate("binary", g, [P1, P2], [d1, d2], d1 + d2,
                                       not (P1.numeric or P2.numeric),
                                       witness_residual(curve, [P1, P2]), exclusions,
                                       config.to_json())
        kind = "exact" if all(k == "exact" for k in kinds) else "search-exhausted"
        exclusions.append({"degree": t, "kind": kind})
    partial = GonalityCertificate("binary", g, [], [], None, False, float("nan"),
                                  exclusions, config.to_json())
    raise SolverBudgetExceeded(f"no witness up to total degree {tmax}", partial)


def upper_bound(curve, config: SolverConfig = SolverConfig(), max_degree=None,
                tol=DEFAULT_TOL, numeric=True):
    c = _curve(curve)
    if isinstance(c, BinaryCurve):
        return binary_upper_bound(c, config, max_degree, tol, numeric)
    return irreducible_upper_bound(c, config, max_degree, tol, numeric)


@dataclass
class VerificationReport:
    ok: bool
    claimed: int
    residual: float
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_certificate(curve, cert: GonalityCertificate, tol=DEFAULT_TOL) -> VerificationReport:
    """Re-check a certificate's node conditions and degrees from scratch."""
    curve = _curve(curve)
    problems = []
    if cert.family != curve.family:
        return VerificationReport(False, None, float("nan"), ["family mismatch"])
    if cert.genus != curve.genus:
        problems.append("genus mismatch")
    expected = 1 if isinstance(curve, IrreducibleNodalCurve) else 2
    if len(cert.witness) != expected:
        return VerificationReport(False, None, float("nan"), ["wrong number of pencils"])
    degrees = []
    reduced = []
    for P in cert.witness:
        try:
            if P.numeric:
                degrees.append(effective_degree(P))
                reduced.append(P)
            else:
                R, d = reduce(P)
                degrees.append(d)
                reduced.append(R)
        except DegeneratePencil:
            return VerificationReport(False, None, float("nan"), ["constant map in witness"])
    if isinstance(curve, IrreducibleNodalCurve):
        (R,) = reduced
        if R.numeric and degrees[0] != R.k:
            problems.append("numeric witness has base points")
        for j, (a, b) in enumerate(curve.pairs):
            if R.numeric:
                ok = images_match(R, a, b, tol)
            else:
                try:
                    ok = evaluate(R, a) == evaluate(R, b)
                except BasePoint:
                    ok = False
            if not ok:
                problems.append(f"node {j} not identified")
    else:
        R1, R2 = reduced
        for j, (p, q) in enumerate(curve.nodes):
            try:
                ok = points_match(evaluate(R1, p, tol), evaluate(R2, q, tol), tol)
            except BasePoint:
                ok = False
            if not ok:
                problems.append(f"node {j}: component images differ")
    claimed = sum(degrees)
    if cert.claimed_upper != claimed:
        problems.append(f"claimed {cert.claimed_upper} but witness degree is {claimed}")
    if list(cert.degrees) != degrees:
        problems.append(f"recorded degrees {cert.degrees} differ from {degrees}")
    try:
        residual = witness_residual(curve, reduced)
    except BasePoint:
        residual = float("inf")
    if residual > tol:
        problems.append(f"residual {residual:.3e} exceeds tolerance")
    return VerificationReport(not problems, claimed, residual, problems)


def _float(x):
    return None if x is None or x != x else float(x)


def certificate_to_json(cert: GonalityCertificate) -> dict:
    return {
        "family": cert.family,
        "genus": cert.genus,
        "witness": [pencil_to_json(P) for P in cert.witness],
        "degrees": list(cert.degrees),
        "claimed_upper": cert.claimed_upper,
        "exact": cert.exact,
        "residual": _float(cert.residual),
        "exclusions": list(cert.exclusions),
        "config": dict(cert.config),
    }


def certificate_from_json(obj) -> GonalityCertificate:
    return GonalityCertificate(
        obj["family"], int(obj["genus"]), [pencil_from_json(p) for p in obj["witness"]],
        list(obj["degrees"]), obj["claimed_upper"], bool(obj["exact"]),
        float("nan") if obj.get("residual") is None else float(obj["residual"]),
        list(obj.get("exclusions", [])), dict(obj.get("config", {})))


# lower bounds

@dataclass
class LowerBoundRow:
    subset: tuple
    exact_estimate: int
    estimate: int
    kind: str
    complement: int

    @property
    def value(self):
        return self.estimate + self.complement

    @property
    def exact_value(self):
        return self.exact_estimate + self.complement


@dataclass
class LowerBoundReport:
    family: str
    genus: int
    bound: int
    level: str
    exact_bound: int
    heuristic_bound: int
    rows: list
    assumptions: list

    def to_json(self) -> dict:
        return {
            "family": self.family, "genus": self.genus, "bound": self.bound,
            "level": self.level, "exact_bound": self.exact_bound,
            "heuristic_bound": self.heuristic_bound,
            "grade": self.grade,
            "rows": [{"subset": list(r.subset) if r.subset is not None else None,
                      "estimate": r.estimate, "exact_estimate": r.exact_estimate,
                      "kind": r.kind, "complement": r.complement} for r in self.rows],
            "assumptions": list(self.assumptions),
        }

    @property
    def grade(self) -> str:
        """Weakest evidence among rows attaining the headline bound."""
        if self.level == "exact" or self.bound <= self.exact_bound:
            return "exact"
        kinds = {r.kind for r in self.rows if r.value <= self.bound}
        if "dimension-heuristic" in kinds:
            return "dimension-heuristic"
        return "search-exhausted"


def _row_scan(decide, lo, hi):
    """Scan degrees lo..hi-1; returns (exact_estimate, estimate, kind).

    ``decide(t)`` returns 'empty', 'exists', 'exhausted' or 'undecided'.
    ``hi`` is the dimension-count value used when nothing below it exists.
    """
    exact_est = None
    any_exhausted = False
    any_undecided = False
    for t in range(lo, hi):
        verdict = decide(t)
        if verdict == "empty":
            continue
        if exact_est is None:
            exact_est = t
        if verdict == "exists":
            if any_undecided:
                return exact_est, t, "dimension-heuristic"
            return exact_est, t, "search-exhausted" if any_exhausted else "exact"
        if verdict == "exhausted":
            any_exhausted = True
        else:
            any_undecided = True
    if exact_est is None:
        return hi, hi, "exact"
    return exact_est, max(hi, exact_est), "dimension-heuristic" if any_undecided else "search-exhausted"


def _verdict(res):
    if isinstance(res, NotFound):
        if res.exact:
            return "empty"
        return "undecided" if res.reason == "undecided" else "exhausted"
    return "exists"


def _enumerate_rows(n_nodes, trivial, heuristic, compute_row, max_subset, ambient, family):
    """Rows over node subsets, largest first, skipping rows that cannot lower the minimum."""
    rows = []
    best = ambient
    if n_nodes > max_subset:
        sizes = range(n_nodes, -1, -1)
        enumerate_sizes = {n_nodes, n_nodes - 1}
    else:
        sizes = range(n_nodes, -1, -1)
        enumerate_sizes = set(sizes)
    for r in sizes:
        comp = n_nodes - r
        triv = trivial(r)
        if r not in enumerate_sizes:
            rows.append(LowerBoundRow(None, triv, triv, "exact", comp))
            best = min(best, triv + comp)
            continue
        for I in combinations(range(n_nodes), r):
            if triv + comp >= best:
                rows.append(LowerBoundRow(I, triv, triv, "exact", comp))
                continue
            row = compute_row(I)
            rows.append(row)
            best = min(best, row.value)
    return rows


def _summarize(family, g, rows, level, clamp, assumptions):
    exact_bound = min([r.exact_value for r in rows] + ([clamp] if clamp else []))
    heur_bound = min([max(r.value, r.exact_value) for r in rows] + ([clamp] if clamp else []))
    bound = exact_bound if level == "exact" else max(heur_bound, exact_bound)
    return LowerBoundReport(family, g, bound, level, exact_bound, max(heur_bound, exact_bound),
                            rows, assumptions)


def irreducible_lower_bound(curve, config: SolverConfig = SolverConfig(), level="heuristic",
                            max_subset_genus=12, numeric=False, exhaustive=False):
    """Subset lower bound ``min_I (mindeg(I) + g - |I|)`` with graded rows.

    ``level`` is ``'exact'`` (only proven rows) or ``'heuristic'`` (dimension
    counts and exhausted searches allowed). ``numeric`` runs the numeric
    search on cases the exact paths cannot decide.
    """
    curve = check(_curve(curve))
    if not isinstance(curve, IrreducibleNodalCurve):
        raise InvalidCurve("expected an irreducible nodal curve")
    g = curve.genus
    if exhaustive and g > max_subset_genus:
        raise TooLarge(f"genus {g} exceeds the subset budget {max_subset_genus}")
    cache = {}

    def decide(I, k):
        key = (I, k)
        if key not in cache:
            res = identify_pairs([curve.pairs[j] for j in I], k, config, numeric=numeric)
            cache[key] = _verdict(res)
        return cache[key]

    def heuristic(r):
        return (r + 3) // 2 if r else 1     # ceil((r + 2) / 2)

    def trivial(r):
        return 2 if r else 1

    def compute_row(I):
        r = len(I)
        if r == 0:
            return LowerBoundRow(I, 1, 1, "exact", g)
        ex, est, kind = _row_scan(lambda k: decide(I, k), 2, heuristic(r))
        return LowerBoundRow(I, max(ex, 2), max(est, 2), kind, g - r)

    rows = _enumerate_rows(g, trivial, heuristic, compute_row, max_subset_genus, g + 1,
                           "irreducible")
    assumptions = ["deg >= deg(map on normalization) + #unidentified nodes",
                   "degree-1 maps are injective"]
    if level != "exact":
        assumptions.append("dimension count: r pairs need degree >= ceil((r+2)/2) generically")
    return _summarize("irreducible", g, rows, level, None, assumptions)


def binary_lower_bound(curve, config: SolverConfig = SolverConfig(), level="heuristic",
                       max_subset_genus=12, numeric=False, exhaustive=False):
    """Binary analogue: ``min(g + 1, min_I (mindeg_joint(I) + g + 1 - |I|))``."""
    curve = check(_curve(curve))
    if not isinstance(curve, BinaryCurve):
        raise InvalidCurve("expected a binary curve")
    g = curve.genus
    delta = g + 1
    if exhaustive and g > max_subset_genus:
        raise TooLarge(f"genus {g} exceeds the subset budget {max_subset_genus}")
    nodes = curve.nodes
    cache = {}

    def decide(I, t):
        key = (I, t)
        if key in cache:
            return cache[key]
        sub = [nodes[j] for j in I]
        verdicts = []
        for k1, k2 in _splits(t):
            res = binary_witness(None, k1, k2, config, nodes=sub, numeric=numeric)
            verdicts.append(_verdict(res))
            if verdicts[-1] == "exists":
                break
        if "exists" in verdicts:
            v = "exists"
        elif all(v == "empty" for v in verdicts):
            v = "empty"
        elif "undecided" in verdicts:
            v = "undecided"
        else:
            v = "exhausted"
        cache[key] = v
        return v

    def heuristic(r):
        return max(2, (r + 2) // 2)

    def trivial(r):
        return 2

    def compute_row(I):
        r = len(I)
        ex, est, kind = _row_scan(lambda t: decide(I, t), 2, heuristic(r))
        return LowerBoundRow(I, max(ex, 2), max(est, 2), kind, delta - r)

    rows = _enumerate_rows(delta, trivial, heuristic, compute_row, max_subset_genus + 1,
                           delta, "binary")
    assumptions = ["components mapping to different lines force degree >= g + 1",
                   "deg >= deg(psi1) + deg(psi2) + #unidentified nodes"]
    if level != "exact":
        assumptions.append("dimension count: r nodes need total degree >= floor((r+2)/2) "
                           "generically")
    return _summarize("binary", g, rows, level, delta, assumptions)


def lower_bound(curve, config: SolverConfig = SolverConfig(), level="heuristic", **kw):
    c = _curve(curve)
    if isinstance(c, BinaryCurve):
        return binary_lower_bound(c, config, level, **kw)
    return irreducible_lower_bound(c, config, level, **kw)
