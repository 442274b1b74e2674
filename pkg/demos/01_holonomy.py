"""Build the holonomy of a one-holed torus and read off curve lengths.

At the square punctured torus the traces are (2*sqrt2, 2*sqrt2, 4), and
the (1,0) and (0,1) curves have the same length.
"""
import math

from arcmetric import FNTorus, Slope, build_rep, curve_length, metrics
from arcmetric.torus import markov_residual, trace_triple

sq = FNTorus(2 * math.acosh(math.sqrt(2)), 0.0, 0.0)
rep = build_rep(sq)
print("square point", sq)
print("traces      ", ["%.12f" % t for t in trace_triple(rep)])
print("markov resid", markov_residual(rep))

print("\nshortest curves at the square point")
for s in metrics.farey_family(3).curves:
    print(f"  {str(s):>5}  {curve_length(sq, s):.9f}")

# opening the cusp into a boundary of length L barely moves short curves
print("\n(0,1) length as the boundary opens")
for L in (0.0, 0.01, 0.1, 1.0, 3.0):
    print(f"  L={L:<5} {curve_length(FNTorus(sq.ell, 0.0, L), Slope(0, 1)):.9f}")
