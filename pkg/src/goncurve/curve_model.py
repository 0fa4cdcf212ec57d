"""The two curve families, their validation, JSON form and random sampling.

An irreducible nodal curve is P^1 with ``g`` pairs of points glued; a
binary curve is two copies of P^1 glued at ``g + 1`` points. Nodes are
kept in a fixed order, and so are the two branches within a node.
"""
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ExhaustedRetries, InvalidCurve
from .proj_line import MoebiusMap, ProjPoint, apply_moebius, bracket, format_point, parse_point, point

__all__ = [
    "IrreducibleNodalCurve", "BinaryCurve", "CurveDocument", "genus", "validate",
    "random_curve", "transform", "curve_to_json", "curve_from_json", "dumps", "loads",
    "GENERATOR_VERSION",
]

GENERATOR_VERSION = "1"


@dataclass(frozen=True)
class IrreducibleNodalCurve:
    pairs: tuple

    family = "irreducible"

    @property
    def genus(self) -> int:
        return len(self.pairs)

    @property
    def first(self):
        return [a for a, _ in self.pairs]

    @property
    def second(self):
        return [b for _, b in self.pairs]


@dataclass(frozen=True)
class BinaryCurve:
    side1: tuple
    side2: tuple

    family = "binary"

    @property
    def genus(self) -> int:
        return len(self.side1) - 1

    @property
    def nodes(self):
        return list(zip(self.side1, self.side2))


def irreducible(pairs) -> IrreducibleNodalCurve:
    """Build an irreducible curve from pairs of points or affine values."""
    conv = lambda x: x if isinstance(x, ProjPoint) else point(x)
    return IrreducibleNodalCurve(tuple((conv(a), conv(b)) for a, b in pairs))


def binary(side1, side2) -> BinaryCurve:
    conv = lambda x: x if isinstance(x, ProjPoint) else point(x)
    return BinaryCurve(tuple(conv(x) for x in side1), tuple(conv(x) for x in side2))


@dataclass
class CurveDocument:
    curve: object
    seed: object = None
    height: object = None
    generator: object = None

    @property
    def family(self):
        return self.curve.family

    @property
    def genus(self):
        return self.curve.genus


def genus(curve) -> int:
    if isinstance(curve, CurveDocument):
        curve = curve.curve
    return curve.genus


def _repeats(points, label):
    problems = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if bracket(points[i], points[j]) == 0:
                problems.append(f"{label}: repeated point {points[i]!r} at positions {i} and {j}")
    return problems


def validate(doc, require_genus=True):
    """List of invariant violations (empty when the curve is valid)."""
    curve = doc.curve if isinstance(doc, CurveDocument) else doc
    problems = []
    if isinstance(curve, IrreducibleNodalCurve):
        for j, (a, b) in enumerate(curve.pairs):
            if a == b:
                problems.append(f"node {j}: branches of a node coincide at {a!r}")
        pts = [p for pair in curve.pairs for p in pair]
        seen = {}
        for idx, p in enumerate(pts):
            if p in seen and seen[p] // 2 != idx // 2:
                problems.append(f"repeated point {p!r} in nodes {seen[p] // 2} and {idx // 2}")
            seen.setdefault(p, idx)
    elif isinstance(curve, BinaryCurve):
        if len(curve.side1) != len(curve.side2):
            problems.append("sides have different numbers of points")
        problems += _repeats(list(curve.side1), "side1")
        problems += _repeats(list(curve.side2), "side2")
    else:
        return [f"unknown curve type {type(curve).__name__}"]
    if require_genus and curve.genus < 2:
        problems.append(f"genus {curve.genus} < 2")
    return problems


def check(curve, require_genus=True):
    problems = validate(curve, require_genus)
    if problems:
        raise InvalidCurve(problems)
    return curve


def _random_point(rng, height):
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return point(Fraction(num, den))


def random_curve(family: str, g: int, seed=0, height: int = 1000, max_attempts=10000) -> CurveDocument:
    """Seeded random curve with affine coordinates ``p/q``, ``|p|, q <= height``."""
    if g < 2:
        raise InvalidCurve(f"genus {g} < 2")
    if height < 2 * g + 2:
        raise InvalidCurve(f"height {height} too small for genus {g}")
    rng = random.Random(f"{family}:{g}:{seed}:{height}")

    def distinct(count, taken):
        out = []
        for _ in range(max_attempts):
            p = _random_point(rng, height)
            if p in taken or p in out:
                continue
            out.append(p)
            if len(out) == count:
                return out
        raise ExhaustedRetries("could not draw distinct points")

    if family == "irreducible":
        pts = distinct(2 * g, set())
        curve = IrreducibleNodalCurve(tuple((pts[2 * j], pts[2 * j + 1]) for j in range(g)))
    elif family == "binary":
        curve = BinaryCurve(tuple(distinct(g + 1, set())), tuple(distinct(g + 1, set())))
    else:
        raise ValueError(f"unknown family {family!r}")
    return CurveDocument(curve, seed=seed, height=height, generator=GENERATOR_VERSION)


def transform(curve, m1: MoebiusMap, m2: MoebiusMap = None):
    """Apply ``m1`` to the first component (all branches if irreducible), ``m2`` to the second."""
    if isinstance(curve, CurveDocument):
        curve = curve.curve
    if isinstance(curve, IrreducibleNodalCurve):
        return IrreducibleNodalCurve(tuple((apply_moebius(m1, a), apply_moebius(m1, b))
                                           for a, b in curve.pairs))
    if m2 is None:
        m2 = m1
    return BinaryCurve(tuple(apply_moebius(m1, p) for p in curve.side1),
                       tuple(apply_moebius(m2, p) for p in curve.side2))


def curve_to_json(doc) -> dict:
    if not isinstance(doc, CurveDocument):
        doc = CurveDocument(doc)
    c = doc.curve
    out = {"family": c.family, "genus": c.genus}
    if isinstance(c, IrreducibleNodalCurve):
        out["pairs"] = [[format_point(a), format_point(b)] for a, b in c.pairs]
    else:
        out["side1"] = [format_point(p) for p in c.side1]
        out["side2"] = [format_point(p) for p in c.side2]
    if doc.seed is not None:
        out["seed"] = doc.seed
    if doc.height is not None:
        out["height"] = doc.height
    if doc.generator is not None:
        out["generator"] = doc.generator
    return out


def curve_from_json(obj) -> CurveDocument:
    """Decode a curve document; raises InvalidCurve on malformed data."""
    try:
        family = obj["family"]
        if family == "irreducible":
            curve = IrreducibleNodalCurve(tuple((parse_point(a), parse_point(b))
                                                for a, b in obj["pairs"]))
        elif family == "binary":
            curve = BinaryCurve(tuple(parse_point(p) for p in obj["side1"]),
                                tuple(parse_point(p) for p in obj["side2"]))
        else:
            raise InvalidCurve(f"unknown family {family!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidCurve(f"malformed curve document: {exc}") from exc
    if "genus" in obj and obj["genus"] != curve.genus:
        raise InvalidCurve(f"declared genus {obj['genus']} does not match data ({curve.genus})")
    return CurveDocument(curve, obj.get("seed"), obj.get("height"), obj.get("generator"))


def dumps(doc) -> str:
    return json.dumps(curve_to_json(doc), sort_keys=True)


def loads(text: str) -> CurveDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidCurve(f"not valid JSON: {exc}") from exc
    return curve_from_json(obj)
