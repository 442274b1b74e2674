"""Length growth under the cat map [[2,1],[1,1]] recovers its dilatation."""
import math

from arcmetric import FNTorus, MappingClass, Slope, dilatation, dilatation_by_iteration

f = MappingClass(2, 1, 1, 1)
lam = dilatation(f)
ratios = dilatation_by_iteration(f, Slope(1, 0), FNTorus(1.0, 0.0, 0.0), 12)
print(f"lambda = {lam:.12f}")
for k, r in enumerate(ratios):
    print(f"  r_{k:<2} = {r:.12f}   error {abs(r - lam):.2e}")

# the first few ratios overshoot, which is why (1/n) d(X, f^n X) converges slowly
excess = [sum(math.log(r / lam) for r in ratios[:n]) / n for n in (1, 4, 12)]
print("\naveraged overshoot (1/n) sum log(r_k/lambda):", ["%.4f" % e for e in excess])
