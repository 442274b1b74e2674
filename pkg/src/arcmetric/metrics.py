"""Finite-family lower bounds for the arc metric and the Thurston metric.

Both metrics are a supremum of ``log(len_Y(c) / len_X(c))`` over curves
(and, with boundary, arcs). A :class:`Family` is a finite stand-in for
that index set; :func:`dhat` returns the maximum over it with a witness.
"""

from dataclasses import dataclass
import math
import warnings

from . import torus
from .hyptrig import pants_arc_one_cuff
from .errors import CuspArcError, DomainError, EmptyFamilyError
from .torus import DualArc, Slope


@dataclass(frozen=True)
class Family:
    curves: tuple
    arcs: tuple = ()
    label: str = ""

    def __post_init__(self):
        curves = _dedup(self.curves)
        arcs = _dedup(DualArc(a.slope) for a in self.arcs)
        if not curves and not arcs:
            raise EmptyFamilyError("a family needs at least one class")
        object.__setattr__(self, "curves", curves)
        object.__setattr__(self, "arcs", arcs)

    def __iter__(self):
        yield from self.curves
        yield from self.arcs

    def __len__(self):
        return len(self.curves) + len(self.arcs)

    def __or__(self, other):
        label = "+".join(x for x in (self.label, other.label) if x)
        return Family(self.curves + other.curves, self.arcs + other.arcs, label)

    def with_dual_arcs(self):
        """Add the dual arc of every curve in the family."""
        label = f"{self.label}+arcs" if self.label else "arcs"
        return Family(self.curves, self.arcs + tuple(DualArc(s) for s in self.curves), label)

    def without_arcs(self):
        return Family(self.curves, (), self.label)

    def __repr__(self):
        return f"Family({self.label!r}, curves={len(self.curves)}, arcs={len(self.arcs)})"


def _dedup(items):
    seen, out = set(), []
    for x in items:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class MetricEstimate:
    value: float
    witness: object
    family_label: str = ""

    @property
    def nonfilling(self):
        """True when the family could not certify a non-negative distance."""
        return self.value < 0


def length(c, X):
    """Geodesic length of a slope curve or a dual arc on the torus point X."""
    if isinstance(c, DualArc):
        return torus.dual_arc_length(X, c)
    return torus.curve_length(X, c)


def ratio(c, X, Y):
    """log(len_Y(c)) - log(len_X(c))."""
    if isinstance(c, DualArc) and (X.boundary == 0 or Y.boundary == 0):
        raise CuspArcError("arcs need positive boundary on both surfaces")
    return math.log(length(c, Y)) - math.log(length(c, X))


def dhat(X, Y, family):
    """Max over ``family`` of the log length ratio from X to Y."""
    if len(family) == 0:
        raise EmptyFamilyError("empty family")
    if family.arcs:
        if X.boundary == 0 or Y.boundary == 0:
            raise CuspArcError("arcs only enter families on surfaces with boundary")
        if X.boundary != Y.boundary:
            raise DomainError("arc metric compares points with equal boundary length")
    rx, ry = torus.build_rep(X), torus.build_rep(Y)
    best, witness = -math.inf, None
    for c in family.curves:
        v = math.log(torus.rep_curve_length(ry, c)) - math.log(torus.rep_curve_length(rx, c))
        if v > best:
            best, witness = v, c
    for arc in family.arcs:
        v = math.log(_arc_length(ry, Y, arc)) - math.log(_arc_length(rx, X, arc))
        if v > best:
            best, witness = v, arc
    est = MetricEstimate(best, witness, family.label)
    if est.nonfilling:
        warnings.warn(f"negative estimate {best:.6g} from family {family.label!r}",
                      RuntimeWarning, stacklevel=2)
    return est


def _arc_length(rep, X, arc):
    c = torus.rep_curve_length(rep, arc.slope)
    return pants_arc_one_cuff(X.boundary, c, c)


def farey_family(N):
    """All slopes with max(|p|, q) <= N, ordered by level then (q, |p|, -p)."""
    if N < 1:
        raise DomainError("Farey level must be >= 1")
    slopes = {Slope(p, q) for q in range(0, N + 1) for p in range(-N, N + 1)
              if (p, q) != (0, 0) and math.gcd(p, q) == 1 and (q > 0 or p == 1)}
    key = lambda s: (max(abs(s.p), s.q), s.q, abs(s.p), -s.p)
    return Family(tuple(sorted(slopes, key=key)), (), f"farey:{N}")


def iterate_family(f, base, K):
    """Slopes f^k(base) for -K <= k <= K, in order of k."""
    if K < 1:
        raise DomainError("K must be >= 1")
    from .mcg import as_mapping_class  # mcg imports this module
    f = as_mapping_class(f)
    finv = f.inverse()
    back, s = [], base
    for _ in range(K):
        s = finv.act(s)
        back.append(s)
    fwd, s = [], base
    for _ in range(K):
        s = f.act(s)
        fwd.append(s)
    return Family(tuple(reversed(back)) + (base,) + tuple(fwd), (), f"iter:{base}:{K}")
