"""Randomized invariant sweeps behind the ``--random`` / ``--check`` CLI modes.

Each function draws from ``numpy.random.default_rng(seed)`` in a fixed order
and returns plain numbers, so the same seed gives the same report.
"""

import math

import numpy as np

from . import hyptrig, metrics, pantsnet, torus
from .mcg import MappingClass, TWIST, displacement
from .torus import FNTorus

BOUNDARIES = (0.0, 0.1, 1.0)


def random_torus(rng, ell=(0.3, 4.0), twist=(-3.0, 3.0), boundaries=BOUNDARIES):
    return FNTorus(float(rng.uniform(*ell)), float(rng.uniform(*twist)),
                   float(rng.choice(boundaries)))


def holonomy_residuals(n=100, seed=0):
    """Worst trace / commutator / Markov residual over n random points, and the
    error of the square point's trace triple."""
    rng = np.random.default_rng(seed)
    worst = {"trace_A": 0.0, "commutator": 0.0, "markov": 0.0}
    for _ in range(n):
        X = random_torus(rng)
        rep = torus.build_rep(X)
        worst["trace_A"] = max(worst["trace_A"],
                               abs(abs(np.trace(rep.genA)) - 2 * math.cosh(X.ell / 2)))
        worst["commutator"] = max(worst["commutator"],
                                  abs(abs(np.trace(torus.commutator(rep))) - 2 * math.cosh(X.boundary / 2)))
        worst["markov"] = max(worst["markov"], abs(torus.markov_residual(rep)))
    sq = torus.trace_triple(torus.build_rep(FNTorus(2 * math.acosh(math.sqrt(2)), 0.0, 0.0)))
    target = (2 * math.sqrt(2), 2 * math.sqrt(2), 4.0)
    worst["square_point"] = max(abs(u - v) for u, v in zip(sq, target))
    return worst


def twist_naturality(N=6, n=20, seed=0):
    """max |len((ell, tau+ell, L), s) - len((ell, tau, L), T s)| over farey(N)."""
    rng = np.random.default_rng(seed)
    fam = metrics.farey_family(N)
    worst = 0.0
    for _ in range(n):
        X = random_torus(rng)
        shifted = FNTorus(X.ell, X.twist + X.ell, X.boundary)
        r0, r1 = torus.build_rep(X), torus.build_rep(shifted)
        for s in fam.curves:
            worst = max(worst, abs(torus.rep_curve_length(r1, s)
                                   - torus.rep_curve_length(r0, TWIST.act(s))))
    return worst


def arc_agreement(n=50, seed=0, lo=0.3, hi=3.0):
    """max |pants_arc_two_cuffs(l1,l2,l3) - distance between the X2 and X3 axes|."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        l1, l2, l3 = (float(v) for v in rng.uniform(lo, hi, 3))
        axes = pantsnet.cuff_axes(pantsnet.build_pants_rep(l1, l2, l3))
        worst = max(worst, abs(hyptrig.pants_arc_two_cuffs(l1, l2, l3)
                               - hyptrig.geodesic_distance(axes[1], axes[2])))
    return worst


def curve_pinch_ratios(X0, family, levels):
    """Rows (slope, L, |len(X_L)/len(X_0) - 1|)."""
    r0 = torus.build_rep(X0)
    rows = []
    for s in family.curves:
        base = torus.rep_curve_length(r0, s)
        for L in levels:
            rL = torus.build_rep(FNTorus(X0.ell, X0.twist, L))
            rows.append((str(s), L, abs(torus.rep_curve_length(rL, s) / base - 1.0)))
    return rows


def quad_random(n=100, seed=0, factor=1.05, ab=(0.0, 3.0), ell=(10.0, 30.0)):
    """Draw (a, b, ell) and a perturbation (a', b', ell') with |a-a'|, |b-b'| <= 1
    and ell, ell' >= 10; return the configs that break the ratio bound."""
    rng = np.random.default_rng(seed)
    failures, worst = [], 0.0
    for i in range(n):
        a, b = (float(v) for v in rng.uniform(*ab, 2))
        l, l2 = (float(v) for v in rng.uniform(*ell, 2))
        a2, b2 = (float(v) for v in np.clip(np.array([a, b]) + rng.uniform(-1, 1, 2), 0, None))
        ratio = hyptrig.quad_side(a2, b2, l2) / hyptrig.quad_side(a, b, l)
        bound = factor * max(1.0, l2 / l)
        worst = max(worst, ratio / bound)
        if ratio > bound:
            failures.append({"index": i, "config": [a, b, l, a2, b2, l2],
                             "ratio": ratio, "bound": bound})
    return {"n": n, "worst_ratio_over_bound": worst, "failures": failures}


def estimator_axioms(n=100, seed=0, N=4):
    """Triangle inequality, dhat(X, X) = 0, family monotonicity and the
    rotation-fixed square point."""
    rng = np.random.default_rng(seed)
    small, big = metrics.farey_family(N), metrics.farey_family(N + 2)
    tri = self_d = mono = 0.0
    for _ in range(n):
        X, Y, Z = (random_torus(rng, boundaries=(0.0,)) for _ in range(3))
        xz = metrics.dhat(X, Z, small).value
        xy = metrics.dhat(X, Y, small).value
        yz = metrics.dhat(Y, Z, small).value
        tri = max(tri, xz - xy - yz)
        self_d = max(self_d, abs(metrics.dhat(X, X, small).value))
        mono = max(mono, xy - metrics.dhat(X, Y, big).value)
    Xsq = FNTorus(2 * math.acosh(math.sqrt(2)), 0.0, 0.0)
    rot = displacement(Xsq, MappingClass(0, -1, 1, 0), metrics.farey_family(N)).value
    return {"triangle_violation": tri, "self_distance": self_d,
            "monotonicity_violation": mono, "square_point_rotation": rot}
