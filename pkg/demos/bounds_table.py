"""Upper and lower bounds for one random curve per family and genus."""
import time

from goncurve import generic_gonality, lower_bound, random_curve, upper_bound

print(f"{'family':12} {'g':>2} {'generic':>7} {'upper':>5} {'lower':>5} {'grade':20} {'exact':5} {'s':>5}")
for family in ("irreducible", "binary"):
    for g in range(2, 9):
        doc = random_curve(family, g, seed=0)
        t0 = time.perf_counter()
        cert = upper_bound(doc)
        rep = lower_bound(doc)
        dt = time.perf_counter() - t0
        print(f"{family:12} {g:>2} {generic_gonality(g):>7} {cert.claimed_upper:>5} "
              f"{rep.bound:>5} {rep.grade:20} {str(cert.exact):5} {dt:5.2f}")
