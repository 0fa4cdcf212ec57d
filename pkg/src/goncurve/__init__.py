"""Gonality bounds for rational nodal curves: irreducible (P^1 with glued pairs) and binary."""
from .curve_model import (BinaryCurve, CurveDocument, IrreducibleNodalCurve, binary,
                          irreducible, random_curve)
from .gonality_engine import (GonalityCertificate, LowerBoundReport, binary_lower_bound,
                              binary_upper_bound, binary_witness, generic_gonality,
                              hyperelliptic_binary, identify_pairs, interpolate_pairs,
                              irreducible_lower_bound, irreducible_upper_bound, lower_bound,
                              upper_bound, verify_certificate)
from .lowrank_solver import NotFound, SolverConfig, find_rank_le2
from .pencil import Pencil, evaluate, reduce
from .proj_line import INF, ONE, ZERO, MoebiusMap, ProjPoint, cross_ratio, point

__version__ = "0.1.0"
