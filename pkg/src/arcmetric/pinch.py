"""Pinching the boundary of the one-holed torus to a cusp.

``psi`` forgets the boundary length (keeps ell and twist); ``psi_inv``
puts it back. :func:`pinch_sweep` compares the arc-metric estimate on T_L
with the Thurston-metric estimate on T_0 as L shrinks.
"""

import csv
import io
import math
from dataclasses import dataclass, replace

from . import hyptrig, metrics
from .errors import DomainError
from .torus import FNTorus

DEFAULT_LEVELS = (1.0, 0.5, 0.25, 0.1, 0.05, 0.01)
DEFAULT_FAREY = 8
CSV_HEADER = ("L", "d_arc", "d_th", "gap", "witness_arc", "witness_th")


@dataclass(frozen=True)
class SweepRow:
    L: float
    d_arc: float
    d_th: float
    gap: float
    witness_arc: str
    witness_th: str

    @property
    def signed(self):
        return self.d_arc - self.d_th


def psi(X):
    return replace(X, boundary=0.0)


def psi_inv(X0, L):
    if X0.boundary != 0:
        raise DomainError("psi_inv expects a cusped point")
    if not L > 0:
        raise DomainError("boundary length must be positive")
    return replace(X0, boundary=float(L))


def pinch_sweep(X0, Y0, levels=DEFAULT_LEVELS, N=DEFAULT_FAREY):
    """One row per boundary length L, in input order."""
    if X0.boundary != 0 or Y0.boundary != 0:
        raise DomainError("sweep endpoints must be cusped")
    if any(not L > 0 for L in levels):
        raise DomainError("levels must be positive")
    curves = metrics.farey_family(N)
    with_arcs = curves.with_dual_arcs()
    th = metrics.dhat(X0, Y0, curves)
    rows = []
    for L in levels:
        arc = metrics.dhat(psi_inv(X0, L), psi_inv(Y0, L), with_arcs)
        rows.append(SweepRow(float(L), arc.value, th.value, abs(arc.value - th.value),
                             str(arc.witness), str(th.witness)))
    return rows


def fmt(x):
    """12 significant digits, '.' decimal separator."""
    return format(x, ".12g")


def sweep_csv(rows, signed=False):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER + (("signed",) if signed else ()))
    for r in rows:
        line = [fmt(r.L), fmt(r.d_arc), fmt(r.d_th), fmt(r.gap), r.witness_arc, r.witness_th]
        if signed:
            line.append(fmt(r.signed))
        w.writerow(line)
    return buf.getvalue()


def arc_limit_constant(lgamma):
    """log 2 + log(cosh(lgamma/2) + 1): the L -> 0 offset of the two-cuff arc."""
    return math.log(2.0) + math.log(math.cosh(lgamma / 2) + 1.0)


def arc_residual(lgamma, L):
    """Two-cuff arc length minus its small-L expansion
    |log sinh^2(L/2)| + log 2 + log(cosh(lgamma/2) + 1)."""
    if not (lgamma > 0 and L > 0):
        raise DomainError("lgamma and L must be positive")
    exact = hyptrig.pants_arc_two_cuffs(lgamma, L, L)
    return exact - abs(2.0 * math.log(math.sinh(L / 2))) - arc_limit_constant(lgamma)


def quad_ratio_check(a, b, ell, a2, b2, ell2, factor=1.05):
    """Compare side ratios of two quadrilaterals with the bound
    factor * max(1, ell2/ell). Returns (ratio, bound, passed)."""
    ratio = hyptrig.quad_side(a2, b2, ell2) / hyptrig.quad_side(a, b, ell)
    bound = factor * max(1.0, ell2 / ell)
    return ratio, bound, ratio <= bound


def collar_widths(levels):
    return [(L, hyptrig.collar_width(L)) for L in levels]
