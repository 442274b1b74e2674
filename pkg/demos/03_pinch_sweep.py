"""Compare the arc metric on bordered tori with the Thurston metric on the
cusped torus as the boundary shrinks.

Going from (1.3, 0.4) to (1, 0) the estimates differ at L = 1 and the gap
closes roughly like L^2. In the opposite direction both are carried by the
(1,0) curve and agree exactly.
"""
import sys

from arcmetric import FNTorus, pinch

X, Y = FNTorus(1.3, 0.4, 0.0), FNTorus(1.0, 0.0, 0.0)
rows = pinch.pinch_sweep(X, Y)
sys.stdout.write(pinch.sweep_csv(rows, signed=True))

print("\nreverse direction")
sys.stdout.write(pinch.sweep_csv(pinch.pinch_sweep(Y, X)))

print("\nresidual of the two-cuff arc against its small-L limit (lgamma = 1)")
for L in (1, 0.5, 0.1, 0.01):
    print(f"  L={L:<5} {pinch.arc_residual(1.0, L): .3e}")
