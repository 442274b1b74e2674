"""Minimize the displacement of the cat map over the cusped torus.

The minimum sits at the square point and equals log(lambda) for every
power; tau_estimate from a fixed start point only approaches it slowly.
"""
import math
import time

from arcmetric import FNTorus, MappingClass, SearchConfig, tau_estimate, translation_estimate

f = MappingClass(2, 1, 1, 1)
for n in (1, 2):
    t = time.perf_counter()
    est = translation_estimate(f, n, SearchConfig())
    print(f"n={n}: min/n = {est.per_power:.9f}  log(lambda) = {est.log_dilatation / n:.9f}"
          f"  argmin {est.argmin}  ({est.n_evals} evals, {time.perf_counter() - t:.1f}s)")

print("\ntau estimates from X0 = (1, 0, 0) and from the square point")
sq = FNTorus(2 * math.acosh(math.sqrt(2)), 0, 0)
for n in (1, 4, 12, 50):
    print(f"  n={n:<3} {tau_estimate(f, FNTorus(1, 0, 0), n):.6f}   {tau_estimate(f, sq, n):.6f}")
