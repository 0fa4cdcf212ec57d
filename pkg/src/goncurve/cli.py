"""Command-line entry point.

Exit codes: 0 when a computation finished (negative answers included),
2 for bad input, 3 when the solver budget ran out. Configuration comes from
flags, then the JSON file named by ``GONCURVE_CONFIG``, then defaults.
"""
import argparse
import csv
import io
import json
import os
import sys
import time

from . import curve_model
from .curve_model import BinaryCurve, IrreducibleNodalCurve, random_curve
from .errors import GoncurveError, SolverBudgetExceeded
from .gonality_engine import (binary_witness, certificate_from_json, certificate_to_json,
                              generic_gonality, hyperelliptic_binary, identify_pairs,
                              lower_bound, upper_bound, verify_certificate, witness_residual,
                              GonalityCertificate)
from .lowrank_solver import NotFound, SolverConfig
from .oracle import EMPTY, EXISTS, exact_min_identify_degree
from .pencil import DEFAULT_TOL, effective_degree

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3

CONFIG_ENV = "GONCURVE_CONFIG"
DEFAULTS = {"tol": DEFAULT_TOL, "restarts": 200, "seed": 0, "max_degree": None,
            "exact_only": False, "max_restarts": 1600, "max_iter": 50}


class InputError(Exception):
    pass


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, allow_nan=False)


def load_settings(args) -> dict:
    settings = dict(DEFAULTS)
    path = os.environ.get(CONFIG_ENV)
    if path:
        try:
            with open(path) as fh:
                settings.update(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {CONFIG_ENV}={path}: {exc}")
    for key in ("tol", "restarts", "seed", "max_degree"):
        val = getattr(args, key, None)
        if val is not None:
            settings[key] = val
    if getattr(args, "exact_only", False):
        settings["exact_only"] = True
    return settings


def solver_config(settings) -> SolverConfig:
    return SolverConfig(tol=float(settings["tol"]), restarts=int(settings["restarts"]),
                        max_iter=int(settings["max_iter"]), seed=int(settings["seed"]),
                        max_restarts=max(int(settings["max_restarts"]), int(settings["restarts"])))


def read_curve(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise InputError(str(exc))
    doc = curve_model.loads(text)
    curve_model.check(doc)
    return doc


def emit(args, payload, text=None):
    out = canonical(payload) if args.format == "json" or text is None else text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _float(x):
    return None if x != x else x


def cmd_gonality(args, settings):
    doc = read_curve(args.curve)
    cfg = solver_config(settings)
    numeric = not settings["exact_only"]
    cert = upper_bound(doc, cfg, settings["max_degree"], settings["tol"], numeric)
    payload = certificate_to_json(cert)
    payload["generic_gonality"] = generic_gonality(doc.genus)
    text = f"{cert.family} genus {cert.genus}: gonality <= {cert.claimed_upper} " \
           f"(degrees {cert.degrees}, {'exact' if cert.exact else 'numeric'})"
    if not args.no_lower:
        level = "exact" if settings["exact_only"] else args.level
        rep = lower_bound(doc, cfg, level)
        payload["lower_bound"] = rep.to_json()
        text += f"; gonality >= {rep.bound} ({rep.grade})"
    emit(args, payload, text)
    return EXIT_OK


def cmd_hyperelliptic(args, settings):
    doc = read_curve(args.curve)
    curve = doc.curve
    if isinstance(curve, BinaryCurve):
        ok, psi = hyperelliptic_binary(curve)
        payload = {"hyperelliptic": ok, "evidence": "exact",
                   "automorphism": [[str(x) for x in row] for row in psi.m] if ok else None}
    else:
        res = identify_pairs(curve.pairs, 2, solver_config(settings), settings["tol"],
                             numeric=not settings["exact_only"])
        if isinstance(res, NotFound):
            payload = {"hyperelliptic": False if res.exact else None, "evidence": res.kind,
                       "automorphism": None}
        else:
            payload = {"hyperelliptic": True, "evidence": "exact" if not res.numeric else "numeric",
                       "automorphism": None,
                       "witness": certificate_to_json(_cert_for(doc, [res]))["witness"]}
    emit(args, payload, f"hyperelliptic: {payload['hyperelliptic']} ({payload['evidence']})")
    return EXIT_OK


def _cert_for(doc, pencils, cfg=None):
    degrees = [effective_degree(P) for P in pencils]
    return GonalityCertificate(doc.family, doc.genus, list(pencils), degrees, sum(degrees),
                               not any(P.numeric for P in pencils),
                               witness_residual(doc, pencils), [],
                               cfg.to_json() if cfg else {})


def cmd_witness(args, settings):
    doc = read_curve(args.curve)
    cfg = solver_config(settings)
    numeric = not settings["exact_only"]
    curve = doc.curve
    if isinstance(curve, IrreducibleNodalCurve):
        if args.degree is None:
            raise InputError("irreducible curves need --degree")
        res = identify_pairs(curve.pairs, args.degree, cfg, settings["tol"], numeric)
        pencils = None if isinstance(res, NotFound) else [res]
    else:
        if args.split is None:
            raise InputError("binary curves need --split k1,k2")
        try:
            k1, k2 = (int(x) for x in args.split.split(","))
        except ValueError:
            raise InputError(f"bad --split {args.split!r}")
        res = binary_witness(curve, k1, k2, cfg, settings["tol"], numeric=numeric)
        pencils = None if isinstance(res, NotFound) else list(res)
    if pencils is None:
        payload = {"found": False, "exclusion": res.kind, "reason": res.reason}
        text = f"not found ({res.kind})"
    else:
        cert = _cert_for(doc, pencils, cfg)
        payload = {"found": True, "certificate": certificate_to_json(cert)}
        text = f"found: degrees {cert.degrees}"
    emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args, settings):
    doc = read_curve(args.curve)
    try:
        with open(args.certificate) as fh:
            obj = json.load(fh)
        if "certificate" in obj:
            obj = obj["certificate"]
        cert = certificate_from_json(obj)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad certificate: {exc}")
    rep = verify_certificate(doc, cert, settings["tol"])
    payload = {"ok": rep.ok, "claimed": rep.claimed, "residual": _float(rep.residual),
               "problems": rep.problems}
    emit(args, payload, "ok" if rep.ok else "FAILED: " + "; ".join(rep.problems))
    return EXIT_OK


def cmd_random(args, settings):
    seed = args.seed if args.seed is not None else settings["seed"]
    doc = random_curve(args.family, args.genus, seed, args.height)
    out = curve_model.dumps(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return EXIT_OK


def trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def oracle_disagreements(curve, cfg) -> int:
    """Count degrees where the exact oracle and identify_pairs disagree (irreducible only)."""
    if not isinstance(curve, IrreducibleNodalCurve):
        return 0
    table = exact_min_identify_degree(curve.pairs, 3)
    bad = 0
    for k, verdict in table.items():
        res = identify_pairs(curve.pairs, k, cfg)
        if verdict == EXISTS and isinstance(res, NotFound):
            bad += 1
        elif verdict == EMPTY and not (isinstance(res, NotFound) and res.exact):
            bad += 1
    return bad


def run_survey(family, genus, trials, seed, cfg, level="heuristic", numeric=True,
               oracle_check=False, timing=True):
    """Upper and lower bounds on ``trials`` seeded random curves."""
    target = generic_gonality(genus)
    rows = []
    for i in range(trials):
        s = trial_seed(seed, i)
        doc = random_curve(family, genus, s)
        t0 = time.perf_counter()
        row = {"trial": i, "seed": s, "genus": genus}
        try:
            cert = upper_bound(doc, cfg, numeric=numeric)
            row["upper"] = cert.claimed_upper
            row["exact"] = cert.exact
            row["budget_exceeded"] = False
        except SolverBudgetExceeded:
            row["upper"] = None
            row["exact"] = False
            row["budget_exceeded"] = True
        rep = lower_bound(doc, cfg, level)
        row["lower"] = rep.bound
        row["lower_grade"] = rep.grade
        if oracle_check:
            row["oracle_disagreements"] = oracle_disagreements(doc.curve, cfg)
        row["ms"] = round((time.perf_counter() - t0) * 1000, 1) if timing else 0
        rows.append(row)
    meets = sum(1 for r in rows if r["upper"] == target and r["lower"] == target)
    below = sum(1 for r in rows if r["upper"] is not None and r["upper"] < target)
    summary = {"generic_gonality": target,
               "fraction_meets": meets / trials if trials else 0.0,
               "fraction_below": below / trials if trials else 0.0,
               "fraction_undecided": (trials - meets - below) / trials if trials else 0.0}
    return {"family": family, "genus": genus, "trials": trials, "seed": seed,
            "level": level, "rows": rows, "summary": summary, "config": cfg.to_json()}


CSV_COLUMNS = ["trial", "seed", "genus", "upper", "lower", "lower_grade", "exact", "ms"]


def survey_csv(report) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in report["rows"]:
        w.writerow(row)
    return buf.getvalue()


def cmd_survey(args, settings):
    if args.trials < 0:
        raise InputError("--trials must be nonnegative")
    cfg = solver_config(settings)
    level = "exact" if settings["exact_only"] else args.level
    report = run_survey(args.family, args.genus, args.trials, int(settings["seed"]), cfg,
                        level, not settings["exact_only"], args.oracle_check,
                        not args.no_timing)
    for row in report["rows"]:
        print(f"trial {row['trial']}: upper={row['upper']} lower={row['lower']} "
              f"({row['lower_grade']}) {row['ms']} ms", file=sys.stderr)
    emit(args, report, canonical(report["summary"]))
    csv_path = args.csv or (os.path.splitext(args.output)[0] + ".csv" if args.output else None)
    if csv_path:
        with open(csv_path, "w") as fh:
            fh.write(survey_csv(report))
    if any(r["budget_exceeded"] for r in report["rows"]):
        return EXIT_BUDGET
    return EXIT_OK


def _positive_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="numeric tolerance")
    common.add_argument("--restarts", type=_positive_int, default=None,
                        help="Newton restarts per search")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-degree", type=_positive_int, default=None, dest="max_degree")
    common.add_argument("--exact-only", action="store_true", dest="exact_only",
                        help="no numeric witnesses; lower bounds from exact rows only")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("-o", "--output", default=None)

    parser = argparse.ArgumentParser(prog="goncurve",
                                     description="Gonality bounds for rational nodal curves")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gonality", parents=[common], help="upper and lower bounds")
    p.add_argument("curve")
    p.add_argument("--no-lower", action="store_true")
    p.add_argument("--level", choices=["exact", "heuristic"], default="heuristic")
    p.set_defaults(func=cmd_gonality)

    p = sub.add_parser("hyperelliptic", parents=[common], help="degree-2 test")
    p.add_argument("curve")
    p.set_defaults(func=cmd_hyperelliptic)

    p = sub.add_parser("witness", parents=[common], help="search at a fixed degree")
    p.add_argument("curve")
    p.add_argument("--degree", type=int)
    p.add_argument("--split")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="check a certificate")
    p.add_argument("curve")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", parents=[common], help="sample a random curve")
    p.add_argument("--family", choices=["irreducible", "binary"], required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--height", type=int, default=1000)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("survey", parents=[common], help="bounds over many random curves")
    p.add_argument("--family", choices=["irreducible", "binary"], required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--level", choices=["exact", "heuristic"], default="heuristic")
    p.add_argument("--csv", default=None)
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="write ms = 0 for byte-stable output")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        settings = load_settings(args)
        return args.func(args, settings)
    except SolverBudgetExceeded as exc:
        err = {"error": "SolverBudgetExceeded", "message": str(exc)}
        if exc.partial is not None:
            err["partial"] = {"exclusions": exc.partial.exclusions}
        print(canonical(err), file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GoncurveError, ValueError) as exc:
        print(canonical({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
