"""Every genus-2 curve in either family carries an exact degree-2 map to the line."""
from goncurve import random_curve, upper_bound, verify_certificate
from goncurve.pencil import pencil_to_json

for family in ("irreducible", "binary"):
    doc = random_curve(family, 2, seed=1)
    cert = upper_bound(doc)
    print(f"{family} genus 2: gonality <= {cert.claimed_upper}, exact={cert.exact}, "
          f"verified={verify_certificate(doc, cert).ok}")
    for P in cert.witness:
        print("   ", pencil_to_json(P))
