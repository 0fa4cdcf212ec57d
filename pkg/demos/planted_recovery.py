"""Glue two lines along the graph of a cubic map and recover that map from the nodes alone."""
from goncurve import Pencil, binary_upper_bound, random_curve
from goncurve.oracle import planted_binary_curve
from goncurve.pencil import pencil_to_json

phi = Pencil.exact([1, 0, 2, 0], [0, 1, 0, 1])
nodes = random_curve("binary", 7, seed=3).curve.side1
curve = planted_binary_curve(phi, nodes, seed=3)
print(f"binary curve of genus {curve.genus} planted on a degree-3 map")

cert = binary_upper_bound(curve)
print(f"gonality <= {cert.claimed_upper} (generic value for genus 7 is 5)")
print("psi1:", pencil_to_json(cert.witness[0]))
print("psi2:", pencil_to_json(cert.witness[1]))
