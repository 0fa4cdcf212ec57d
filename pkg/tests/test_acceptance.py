"""Acceptance criteria 1-8, one test each, at the stated tolerances."""
import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from goncurve.curve_model import dumps, random_curve, transform
from goncurve.errors import DegeneratePencil
from goncurve.gonality_engine import (GonalityCertificate, binary_witness, certificate_to_json,
                                      generic_gonality, hyperelliptic_binary, identify_pairs,
                                      irreducible_upper_bound, joint_space, lower_bound,
                                      upper_bound, verify_certificate, witness_residual)
from goncurve.lowrank_solver import (LinearMatrixSpace, NotFound, SolverConfig, find_rank_le2,
                                     verify_rank2)
from goncurve.oracle import (EMPTY, EXISTS, exact_min_identify_degree, planted_binary_curve)
from goncurve.pencil import (Pencil, effective_degree, evaluate, images_match,
                             postcompose_moebius, precompose_moebius)
from goncurve.proj_line import MoebiusMap, apply_moebius, cross_ratio, point

FAMILIES = ("irreducible", "binary")


def canonical(obj):
    return json.dumps(obj, sort_keys=True, allow_nan=False)


def random_moebius(rng, h=9):
    nz = lambda: rng.choice([i for i in range(-h, h + 1) if i])
    l11, l22, u11, u22 = nz(), nz(), nz(), nz()
    l21, u12 = rng.randint(-h, h), rng.randint(-h, h)
    return MoebiusMap.from_matrix([[l11 * u11, l11 * u12], [l21 * u11, l21 * u12 + l22 * u22]])


def random_point(rng, h=40):
    if rng.random() < 0.05:
        return point(0, 1)
    return point(Fraction(rng.randint(-h, h), rng.randint(1, h)))


def distinct(rng, n, h=40):
    out = []
    while len(out) < n:
        p = random_point(rng, h)
        if p not in out:
            out.append(p)
    return out


def matrix_array(M):
    return np.array([[complex(c) for c in row] for row in M])


def recomposition_error(w, antisymmetric):
    M = matrix_array(w.matrix)
    if antisymmetric:
        u, v = (np.array([complex(c) for c in t]) for t in w.factors)
        R = np.outer(u, v) - np.outer(v, u)
    else:
        x, y, z, ww = (np.array([complex(c) for c in t]) for t in w.factors)
        R = np.outer(x, y) - np.outer(z, ww)
    return float(np.linalg.norm(R - M) / np.linalg.norm(M))


def test_criterion_1_genus_two(acceptance):
    start = time.perf_counter()
    bad = 0
    for family in FAMILIES:
        for seed in range(100):
            doc = random_curve(family, 2, seed)
            cert = upper_bound(doc)
            ok = cert.claimed_upper == 2 and cert.exact and verify_certificate(doc, cert).ok
            if family == "binary":
                ok = ok and hyperelliptic_binary(doc.curve)[0]
            bad += not ok
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 5
    acceptance(1, ok, f"{200 - bad}/200 exact degree-2 witnesses in {elapsed:.2f} s")
    assert ok


def test_criterion_2_upper_bound(acceptance):
    failures, worst_residual, slowest = [], 0.0, 0.0
    for family in FAMILIES:
        for g in range(2, 9):
            bound = (g + 3) // 2
            for seed in range(50):
                doc = random_curve(family, g, seed)
                t0 = time.perf_counter()
                cert = upper_bound(doc)
                slowest = max(slowest, time.perf_counter() - t0)
                ok = cert.claimed_upper <= bound and verify_certificate(doc, cert).ok
                if family == "irreducible" and cert.claimed_upper <= 3:
                    ok = ok and cert.exact
                if family == "binary":
                    w = binary_witness(doc, math.ceil(g / 2), 1)
                    ok = ok and not isinstance(w, NotFound) and not any(P.numeric for P in w)
                if not cert.exact:
                    worst_residual = max(worst_residual, cert.residual)
                    ok = ok and cert.residual <= 1e-9
                if not ok:
                    failures.append((family, g, seed))
    ok = not failures and slowest < 60
    acceptance(2, ok, f"{700 - len(failures)}/700 verified, max numeric residual "
                      f"{worst_residual:.1e}, slowest curve {slowest:.2f} s")
    assert ok, failures[:10]


def test_criterion_3_exact_equality_genus_three(acceptance):
    hits, slowest = {}, 0.0
    for family in FAMILIES:
        hits[family] = 0
        for seed in range(50):
            doc = random_curve(family, 3, seed)
            t0 = time.perf_counter()
            rep = lower_bound(doc, level="exact")
            cert = upper_bound(doc)
            slowest = max(slowest, time.perf_counter() - t0)
            if rep.bound == 3 and rep.grade == "exact" and cert.claimed_upper == 3:
                hits[family] += 1
    ok = all(h >= 48 for h in hits.values()) and slowest < 10
    acceptance(3, ok, f"exact lower bound 3 = upper: irreducible {hits['irreducible']}/50, "
                      f"binary {hits['binary']}/50, slowest {slowest:.2f} s")
    assert ok


def test_criterion_4_generic_equality_statistical(acceptance):
    counts, unlabeled = {}, []
    labels = {"exact", "search-exhausted"}
    for family in FAMILIES:
        for g in (4, 5, 6):
            meets = 0
            for seed in range(50):
                doc = random_curve(family, g, seed)
                cert = upper_bound(doc)
                meets += cert.claimed_upper == generic_gonality(g)
                kinds = {e["kind"] for e in cert.exclusions}
                rep = lower_bound(doc)
                row_kinds = {r.kind for r in rep.rows}
                if not kinds <= labels or not row_kinds <= labels | {"dimension-heuristic"}:
                    unlabeled.append((family, g, seed))
            counts[(family, g)] = meets
    ok = all(m >= 48 for m in counts.values()) and not unlabeled
    detail = ", ".join(f"{f[0]}{g}:{m}/50" for (f, g), m in counts.items())
    acceptance(4, ok, f"upper = generic gonality ({detail}); unlabeled rows {len(unlabeled)}")
    assert ok


def test_criterion_5_oracle_equivalence(acceptance):
    rng = random.Random(2024)
    disagreements, compared = [], 0
    for trial in range(200):
        ell = rng.randint(1, 4)
        pts = distinct(rng, 2 * ell, h=30)
        pairs = list(zip(pts[::2], pts[1::2]))
        table = exact_min_identify_degree(pairs, 3)
        for k in (1, 2, 3):
            if table[k] not in (EXISTS, EMPTY):
                continue
            compared += 1
            found = not isinstance(identify_pairs(pairs, k), NotFound)
            if found != (table[k] == EXISTS):
                disagreements.append((trial, k))
    ok = not disagreements
    acceptance(5, ok, f"{compared} verdicts over 200 pair-sets, "
                      f"{len(disagreements)} disagreements")
    assert ok, disagreements


def _random_pencil(rng, d):
    while True:
        f = [rng.randint(-5, 5) for _ in range(d + 1)]
        g = [rng.randint(-5, 5) for _ in range(d + 1)]
        try:
            P = Pencil.exact(f, g)
        except DegeneratePencil:
            continue
        if effective_degree(P) == d:
            return P


def test_criterion_6_plant_and_recover(acceptance):
    rng = random.Random(6)
    binary_ok, worst = 0, 0.0
    for trial in range(100):
        d = 1 + trial % 4
        phi = _random_pencil(rng, d)
        g = 2 * d + 1 + rng.randint(0, 1)
        curve = planted_binary_curve(phi, distinct(rng, g + 1, h=200), seed=trial)
        w = binary_witness(curve, d, 1)
        if isinstance(w, NotFound):
            continue
        res = witness_residual(curve, list(w))
        nodes = list(curve.nodes)
        direct = find_rank_le2(joint_space(nodes, d, 1))
        if isinstance(direct, NotFound):
            continue
        rec = recomposition_error(direct, False)
        worst = max(worst, res, rec)
        psi2 = MoebiusMap.from_matrix([w[1].f, w[1].g])
        phi_ok = postcompose_moebius(phi, psi2) == w[0]
        binary_ok += res <= 1e-9 and rec <= 1e-9 and phi_ok and effective_degree(w[0]) == d

    nprng = np.random.default_rng(6)
    space_ok = 0
    shapes = [(5, 4), (6, 7), (4, 2), (5, 3)]
    for trial in range(100):
        n, D = shapes[trial % len(shapes)]
        u, v = nprng.integers(-5, 6, n), nprng.integers(-5, 6, n)
        if np.linalg.matrix_rank(np.vstack([u, v])) < 2:
            u[0], v[1] = u[0] + 7, v[1] + 11
        wedge = [[Fraction(int(u[i] * v[j] - v[i] * u[j])) for j in range(n)] for i in range(n)]
        noise = []
        for _ in range(D - 1):
            A = nprng.integers(-5, 6, (n, n))
            noise.append([[Fraction(int(c)) for c in row] for row in A - A.T])
        L = LinearMatrixSpace((n, n), True, [wedge] + noise)
        w = find_rank_le2(L, SolverConfig(seed=trial))
        if isinstance(w, NotFound):
            continue
        M = matrix_array(w.matrix)
        B = np.array([[complex(c) for row in b for c in row] for b in L.basis]).T
        coef, *_ = np.linalg.lstsq(B, M.reshape(-1), rcond=None)
        member = float(np.linalg.norm(B @ coef - M.reshape(-1)) / np.linalg.norm(M))
        rank = verify_rank2(w.matrix)
        rec = recomposition_error(w, True)
        worst = max(worst, member, rank.residual, rec)
        space_ok += member <= 1e-9 and rank.accept and rec <= 1e-9
    ok = binary_ok == 100 and space_ok == 100
    acceptance(6, ok, f"planted binary {binary_ok}/100, planted antisymmetric {space_ok}/100, "
                      f"worst residual {worst:.1e}")
    assert ok


def test_criterion_7_invariance_suites(acceptance):
    rng = random.Random(7)
    n = 100
    cr_ok = 0
    for _ in range(n):
        pts, m = distinct(rng, 4), random_moebius(rng)
        cr_ok += cross_ratio(*pts) == cross_ratio(*(apply_moebius(m, p) for p in pts))

    cov_ok = 0
    for i in range(n):
        g = 2 + i % 7
        doc = random_curve("irreducible", g, 1000 + i)
        cert = irreducible_upper_bound(doc)
        m = random_moebius(rng)
        W = precompose_moebius(cert.witness[0], m.inverse())
        moved = GonalityCertificate("irreducible", g, [W], cert.degrees, cert.claimed_upper,
                                    cert.exact, cert.residual)
        ok = verify_certificate(transform(doc, m), moved).ok
        if cert.exact:
            ok = ok and all(evaluate(W, apply_moebius(m, a)) == evaluate(cert.witness[0], a)
                            for a, _ in doc.curve.pairs)
        cov_ok += ok

    hyp_ok = 0
    for i in range(n):
        g = 2 + i % 5
        nodes = random_curve("binary", g, 2000 + i).curve.side1
        c = (planted_binary_curve(Pencil.exact([2, 1], [1, 3]), nodes, i) if i % 2
             else random_curve("binary", g, 2000 + i).curve)
        m1, m2 = random_moebius(rng), random_moebius(rng)
        a, _ = hyperelliptic_binary(c)
        b, _ = hyperelliptic_binary(transform(c, m1, m2))
        hyp_ok += a == b and (a or g > 2)

    square = Pencil.exact([1, 0, 0], [0, 0, 1])
    neg = MoebiusMap.from_matrix([[1, 0], [0, -1]])
    post_ok = 0
    for i in range(n):
        nm, m = random_moebius(rng), random_moebius(rng)
        P = precompose_moebius(square, nm)
        p = random_point(rng)
        q = apply_moebius(nm.inverse(), apply_moebius(neg, apply_moebius(nm, p)))
        r = random_point(rng)
        Q = postcompose_moebius(P, m)
        post_ok += all(images_match(P, p, x) == images_match(Q, p, x) for x in (q, r)) \
            and images_match(Q, p, q)
    ok = min(cr_ok, cov_ok, hyp_ok, post_ok) == n
    acceptance(7, ok, f"cross-ratio {cr_ok}/{n}, covariance {cov_ok}/{n}, "
                      f"hyperelliptic {hyp_ok}/{n}, postcomposition {post_ok}/{n}")
    assert ok


def _snapshot():
    out = []
    for family in FAMILIES:
        for g in (3, 5, 7, 8):
            doc = random_curve(family, g, 40 + g)
            out.append(dumps(doc))
            out.append(canonical(certificate_to_json(upper_bound(doc))))
            out.append(canonical(lower_bound(doc).to_json()))
    return out


def test_criterion_8_determinism(acceptance, tmp_path):
    same_in_process = _snapshot() == _snapshot()
    curve = tmp_path / "c.json"
    curve.write_text(dumps(random_curve("irreducible", 7, 3)))
    cmd = [sys.executable, "-m", "goncurve", "gonality", str(curve)]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    cmd = [sys.executable, "-m", "goncurve", "random", "--family", "binary", "--genus", "6",
           "--seed", "9"]
    curves = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    ok = same_in_process and runs[0] == runs[1] and curves[0] == curves[1]
    acceptance(8, ok, f"in-process snapshot identical: {same_in_process}, "
                      f"CLI certificate bytes identical: {runs[0] == runs[1]}, "
                      f"CLI curve bytes identical: {curves[0] == curves[1]}")
    assert ok
