"""Mapping classes of the punctured / one-holed torus as SL(2,Z) matrices.

``f`` acts on a marked surface by changing the marking, so
``len_{f X}(c) = len_X(f(c))`` and the displacement of ``X`` is the max over
a family of ``log(len_X(f(c)) / len_X(c))``. The Dehn twist along (1, 0) is
``[[1, 1], [0, 1]]``; on Fenchel-Nielsen coordinates it is the shift
``twist -> twist + ell``.
"""

from dataclasses import dataclass, field
import enum
import math

import numpy as np
from scipy.optimize import minimize

from . import metrics, torus
from .errors import DomainError, PeriodicOrReducibleError, SearchDomainError
from .metrics import Family, MetricEstimate
from .torus import FNTorus, Slope


class Kind(enum.Enum):
    PERIODIC = "periodic"
    REDUCIBLE = "reducible"
    PSEUDO_ANOSOV = "pseudo-Anosov"


@dataclass(frozen=True)
class MappingClass:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if int(v) != v:
                raise DomainError("mapping class entries must be integers")
            object.__setattr__(self, name, int(v))
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant of {self.rows} is not 1")

    @classmethod
    def parse(cls, text):
        """``"a,b,c,d"`` (row major) or a named class: ``cat``, ``twist``, ``rot``."""
        named = {"cat": (2, 1, 1, 1), "twist": (1, 1, 0, 1), "rot": (0, -1, 1, 0),
                 "identity": (1, 0, 0, 1)}
        if text in named:
            return cls(*named[text])
        parts = text.replace(" ", "").split(",")
        if len(parts) != 4:
            raise DomainError(f"cannot parse mapping class {text!r}")
        return cls(*(int(x) for x in parts))

    @property
    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    @property
    def trace(self):
        return self.a + self.d

    def act(self, s):
        return Slope(self.a * s.p + self.b * s.q, self.c * s.p + self.d * s.q)

    def inverse(self):
        return MappingClass(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other):
        return MappingClass(self.a * other.a + self.b * other.c,
                            self.a * other.b + self.b * other.d,
                            self.c * other.a + self.d * other.c,
                            self.c * other.b + self.d * other.d)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = IDENTITY, self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def conjugate_by(self, g):
        """g f g^{-1}."""
        return g @ self @ g.inverse()

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = MappingClass(1, 0, 0, 1)
TWIST = MappingClass(1, 1, 0, 1)


def as_mapping_class(f):
    if isinstance(f, MappingClass):
        return f
    if isinstance(f, str):
        return MappingClass.parse(f)
    arr = np.asarray(f, dtype=int).reshape(-1)
    return MappingClass(*arr)


def dilatation(f):
    """Spectral radius for |tr| > 2, else 1."""
    tr = abs(as_mapping_class(f).trace)
    if tr <= 2:
        return 1.0
    return (tr + math.sqrt(tr * tr - 4)) / 2.0


def classify(f):
    """(Kind, dilatation) by the trace of the matrix."""
    f = as_mapping_class(f)
    tr = abs(f.trace)
    if tr < 2 or f in (IDENTITY, MappingClass(-1, 0, 0, -1)):
        return Kind.PERIODIC, 1.0
    if tr == 2:
        return Kind.REDUCIBLE, 1.0
    return Kind.PSEUDO_ANOSOV, dilatation(f)


def act_slope(f, s):
    return as_mapping_class(f).act(s)


def basis_for(s):
    """A matrix in SL(2,Z) whose first column is the slope ``s``."""
    p, q = s.p, s.q
    # extended Euclid: p*x + q*y = 1
    old_r, r, old_x, x, old_y, y = p, q, 1, 0, 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_x, x = x, old_x - k * x
        old_y, y = y, old_y - k * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    # [[p, -y], [q, x]] has determinant p x + q y = 1
    return MappingClass(p, -old_y, q, old_x)


def twist_along(s, power=1):
    """Dehn twist (to the given power) along the curve of slope ``s``."""
    g = basis_for(s)
    return (TWIST ** power).conjugate_by(g)


# -- displacement ---------------------------------------------------------------

def _pairs(f, family):
    if family.arcs:
        raise DomainError("displacement uses curves only")
    return [(c, f.act(c)) for c in family.curves]


def _max_log_ratio(rep, pairs, cache=None):
    cache = {} if cache is None else cache

    def ell(s):
        v = cache.get(s)
        if v is None:
            v = cache[s] = torus.rep_curve_length(rep, s)
        return v

    best, witness = -math.inf, None
    for c, fc in pairs:
        v = math.log(ell(fc)) - math.log(ell(c))
        if v > best:
            best, witness = v, c
    return best, witness


def displacement(X, f, family):
    """Estimate of d_Th(X, f X) as a max over ``family``."""
    f = as_mapping_class(f)
    if f == IDENTITY:
        return MetricEstimate(0.0, family.curves[0] if family.curves else None, family.label)
    value, witness = _max_log_ratio(torus.build_rep(X), _pairs(f, family))
    return MetricEstimate(value, witness, family.label)


def dilatation_by_iteration(f, base, X, K):
    """Ratios r_k = len(f^{k+1} base) / len(f^k base) for k = 0..K."""
    f = as_mapping_class(f)
    kind, _ = classify(f)
    if kind is not Kind.PSEUDO_ANOSOV:
        raise PeriodicOrReducibleError(f"{f} is {kind.value}")
    if K < 1:
        raise DomainError("K must be >= 1")
    rep = torus.build_rep(X)
    lengths, s = [], base
    for _ in range(K + 2):
        lengths.append(torus.rep_curve_length(rep, s))
        s = f.act(s)
    return [lengths[k + 1] / lengths[k] for k in range(K + 1)]


# -- translation distance search -------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    """Coarse log-grid over ell and linear grid over twist, then Nelder-Mead
    from the best grid points."""

    ell_bounds: tuple = (0.2, 6.0)
    twist_bounds: tuple = (-3.0, 3.0)
    grid: tuple = (12, 13)
    starts: int = 5
    maxiter: int = 200
    farey: int = 8
    iterates: int = 10
    seed: int = 0


@dataclass
class TranslationEstimate:
    power: int
    min_value: float
    argmin: FNTorus
    log_dilatation: float
    boundary_hit: bool
    witness: object = None
    n_evals: int = 0
    optimizer_trace: list = field(default_factory=list, repr=False)

    @property
    def per_power(self):
        return self.min_value / self.power

    def report(self):
        return {
            "map": None,
            "power": self.power,
            "min_value": self.min_value,
            "argmin": list(self.argmin.as_tuple()),
            "log_dilatation": self.log_dilatation,
            "boundary_hit": self.boundary_hit,
            "n_evals": self.n_evals,
        }


def translation_family(f, N=8, K=10):
    """farey(N) together with the f-orbit of (1, 0) for |k| <= K."""
    return metrics.farey_family(N) | metrics.iterate_family(f, Slope(1, 0), K)


def translation_estimate(f, n=1, search=None):
    """Minimize the displacement of f^n over cusped tori (ell, twist)."""
    f = as_mapping_class(f)
    search = search or SearchConfig()
    kind, lam = classify(f)
    if kind is not Kind.PSEUDO_ANOSOV:
        raise PeriodicOrReducibleError(f"{f} is {kind.value}")
    if n < 1:
        raise DomainError("power must be >= 1")
    (e0, e1), (t0, t1) = search.ell_bounds, search.twist_bounds
    if not (0 < e0 < e1) or not (t0 < t1) or min(search.grid) < 1 or search.starts < 1:
        raise SearchDomainError("empty search domain")

    fn = f ** n
    pairs = _pairs(fn, translation_family(f, search.farey, search.iterates))
    lo = np.array([math.log(e0), t0])
    hi = np.array([math.log(e1), t1])
    trace = []

    def objective(u):
        u = np.clip(u, lo, hi)
        X = FNTorus(math.exp(u[0]), u[1], 0.0)
        value, _ = _max_log_ratio(torus.build_rep(X), pairs)
        trace.append(((X.ell, X.twist), value))
        return value

    grid = [np.array([a, b])
            for a in np.linspace(lo[0], hi[0], search.grid[0])
            for b in np.linspace(lo[1], hi[1], search.grid[1])]
    values = [objective(u) for u in grid]
    order = sorted(range(len(grid)), key=lambda i: (values[i], i))[:search.starts]

    rng = np.random.default_rng(search.seed)
    cell = (hi - lo) / np.maximum(np.array(search.grid) - 1, 1)
    best_u, best_v = grid[order[0]], values[order[0]]
    for i in order:
        start = np.clip(grid[i] + rng.uniform(-0.25, 0.25, 2) * cell, lo, hi)
        res = minimize(objective, start, method="Nelder-Mead",
                       bounds=list(zip(lo, hi)),
                       options={"maxiter": search.maxiter, "xatol": 1e-6, "fatol": 1e-10,
                                "initial_simplex": [start, start + [0.5 * cell[0], 0],
                                                    start + [0, 0.5 * cell[1]]]})
        if res.fun < best_v:
            best_u, best_v = np.clip(res.x, lo, hi), float(res.fun)

    X = FNTorus(math.exp(best_u[0]), float(best_u[1]), 0.0)
    value, witness = _max_log_ratio(torus.build_rep(X), pairs)
    span = hi - lo
    hit = bool(np.any(np.abs(best_u - lo) <= 1e-6 * span) or np.any(np.abs(best_u - hi) <= 1e-6 * span))
    return TranslationEstimate(n, value, X, n * math.log(lam), hit, witness,
                               len(trace), trace)


def tau_estimate(f, X0, n, N=8, K=10):
    """(1/n) times the displacement of X0 under f^n."""
    f = as_mapping_class(f)
    if n < 1:
        raise DomainError("n must be >= 1")
    family = metrics.farey_family(N)
    if classify(f)[0] is Kind.PSEUDO_ANOSOV:
        family = family | metrics.iterate_family(f, Slope(1, 0), K)
    return displacement(X0, f ** n, family).value / n


def tau_sequence(f, X0, ns, N=8, K=10):
    return [(n, tau_estimate(f, X0, n, N, K)) for n in ns]


def twist_pinch_experiment(slope, levels, N=6, power=1):
    """Displacement of the twist along ``slope`` as that curve is pinched.

    Coordinates are changed so that ``slope`` is the pants curve (1, 0);
    the Farey family is transported along. Returns ``[(eps, value), ...]``.
    """
    g = basis_for(slope)
    ginv = g.inverse()
    family = metrics.farey_family(N)
    moved = Family(tuple(ginv.act(c) for c in family.curves), (), f"{family.label}@{slope}")
    f = TWIST ** power
    return [(eps, displacement(FNTorus(eps, 0.0, 0.0), f, moved).value) for eps in levels]
