"""Fenchel-Nielsen holonomy of the one-holed torus (boundary length L > 0)
and the once-punctured torus (L = 0).

The pants curve is the slope (1, 0) with holonomy ``A = diag(a, 1/a)``; the
transverse generator is ``B = diag(e^{t/2}, e^{-t/2}) @ [[p, w], [w, p]]``.
Shifting the twist by the pants length replaces ``B`` by ``A @ B`` exactly,
which is the Dehn twist (p, q) -> (p + q, q) on slopes.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from . import hyptrig
from .errors import CuspArcError, DomainError, EllipticError

RENORMALIZE_EVERY = 32
_RESCALE_AT = 1e150


@dataclass(frozen=True)
class FNTorus:
    """Point of T_L (boundary = L > 0) or T_0 (boundary = 0)."""

    ell: float
    twist: float = 0.0
    boundary: float = 0.0

    def __post_init__(self):
        for name in ("ell", "twist", "boundary"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)
        if not self.ell > 0:
            raise DomainError(f"ell must be positive, got {self.ell!r}")
        if self.boundary < 0:
            raise DomainError(f"boundary must be >= 0, got {self.boundary!r}")

    @property
    def cusped(self):
        return self.boundary == 0.0

    def as_tuple(self):
        return (self.ell, self.twist, self.boundary)

    def __str__(self):
        return f"({self.ell:.12g},{self.twist:.12g},{self.boundary:.12g})"


@dataclass(frozen=True, order=True)
class Slope:
    """Unoriented simple closed curve (p, q) on the torus."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p != self.p or q != self.q:
            raise DomainError("slope entries must be integers")
        if p == 0 and q == 0:
            raise DomainError("slope (0, 0) is not a curve")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text):
        """Read ``"p/q"`` or ``"p,q"``."""
        for sep in ("/", ","):
            if sep in text:
                a, b = text.split(sep)
                return cls(int(a), int(b))
        raise DomainError(f"cannot parse slope {text!r}")

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class DualArc:
    """Boundary-to-boundary arc disjoint from the curve ``slope``."""

    slope: Slope

    def __str__(self):
        return f"arc:{self.slope}"


@dataclass(frozen=True)
class Rep:
    genA: np.ndarray = field(repr=False)
    genB: np.ndarray = field(repr=False)
    point: FNTorus = None

    def generator(self, letter):
        if letter == "A":
            return self.genA
        if letter == "B":
            return self.genB
        if letter == "a":
            return hyptrig.inverse(self.genA)
        if letter == "b":
            return hyptrig.inverse(self.genB)
        raise DomainError(f"unknown letter {letter!r}")

    def conjugate(self, n):
        """The representation n ρ n^{-1}."""
        n = hyptrig.normalize(n)
        ni = hyptrig.inverse(n)
        return Rep(n @ self.genA @ ni, n @ self.genB @ ni, self.point)


def build_rep(X):
    ell, tau, L = X.ell, X.twist, X.boundary
    a = math.exp(ell / 2)
    x2m4 = 4.0 * math.sinh(ell / 2) ** 2  # x^2 - 4 without cancellation
    cL = math.cosh(L / 2)
    p = math.sqrt((x2m4 + 2.0 + 2.0 * cL) / x2m4)
    w = math.sqrt((2.0 + 2.0 * cL) / x2m4)
    genA = np.diag([a, 1.0 / a])
    genB = hyptrig.translation_matrix(tau) @ np.array([[p, w], [w, p]])
    return Rep(genA, genB, X)


def evaluate(rep, word):
    """Product of the letters of ``word`` (over ``A B a b``), left to right."""
    if not word:
        raise DomainError("empty word")
    m = np.eye(2)
    for i, letter in enumerate(word, 1):
        m = m @ rep.generator(letter)
        if i % RENORMALIZE_EVERY == 0:
            m = m / math.sqrt(hyptrig.det(m))
    return m


def trace_triple(rep):
    """(tr A, tr B, tr AB)."""
    A, B = rep.genA, rep.genB
    return (float(np.trace(A)), float(np.trace(B)), float(np.trace(A @ B)))


def commutator(rep):
    A, B = rep.genA, rep.genB
    return A @ B @ hyptrig.inverse(A) @ hyptrig.inverse(B)


def markov_residual(rep):
    """x^2 + y^2 + z^2 - xyz - (2 - 2 cosh(L/2)); zero for a valid rep."""
    x, y, z = trace_triple(rep)
    L = rep.point.boundary if rep.point is not None else 0.0
    return x * x + y * y + z * z - x * y * z - (2.0 - 2.0 * math.cosh(L / 2))


def slope_word(s):
    """Christoffel word of the slope: ``(1,0) -> "A"``, ``(2,1) -> "AAB"``.

    Letter i (1-based) of the lower Christoffel word with |p| A's and q B's
    is B exactly when floor(i q / n) steps up, n = |p| + q. Negative p uses
    ``a`` (A^{-1}) in place of ``A``.
    """
    p, q = abs(s.p), s.q
    n = p + q
    x = "A" if s.p >= 0 else "a"
    return "".join("B" if (i * q) // n > ((i - 1) * q) // n else x
                   for i in range(1, n + 1))


# -- fast slope evaluation ----------------------------------------------------
# Matrices are 4-tuples with a separate log scale so that curves with
# lengths in the thousands (iterates of pseudo-Anosov maps) stay finite.

def _mul(m, n):
    a, b, c, d = m[0]
    e, f, g, h = n[0]
    r = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    s = m[1] + n[1]
    big = max(abs(r[0]), abs(r[1]), abs(r[2]), abs(r[3]))
    if big > _RESCALE_AT:
        r = (r[0] / big, r[1] / big, r[2] / big, r[3] / big)
        s += math.log(big)
    return (r, s)


def _tup(m):
    return ((float(m[0, 0]), float(m[0, 1]), float(m[1, 0]), float(m[1, 1])), 0.0)


def slope_matrix(rep, s):
    """Scaled holonomy of the Christoffel word of ``s``.

    Returns ``(entries, log_scale)``; equal to ``evaluate(rep, slope_word(s))``
    times ``exp(-log_scale)``. Uses Stern-Brocot descent, where the word of a
    mediant is the word of its smaller-slope parent followed by the word of
    the larger-slope parent.
    """
    A = _tup(rep.genA if s.p >= 0 else hyptrig.inverse(rep.genA))
    B = _tup(rep.genB)
    p, q = abs(s.p), s.q
    if q == 0:
        return A
    if p == 0:
        return B
    lo, lo_m = (1, 0), A
    hi, hi_m = (0, 1), B
    while True:
        mid = (lo[0] + hi[0], lo[1] + hi[1])
        mid_m = _mul(lo_m, hi_m)
        if mid == (p, q):
            return mid_m
        if q * mid[0] < mid[1] * p:
            hi, hi_m = mid, mid_m
        else:
            lo, lo_m = mid, mid_m


def length_from_scaled(m):
    """Translation length of a scaled matrix ``(entries, log_scale)``."""
    (a, b, c, d), scale = m
    tr = abs(a + d)
    if scale == 0.0:
        if tr < 2.0 - hyptrig.PARABOLIC_TOL:
            raise EllipticError(f"|trace| = {tr!r} < 2")
        if tr <= 2.0 + hyptrig.PARABOLIC_TOL:
            return 0.0
        return 2.0 * hyptrig.arccosh(tr / 2.0)
    if tr == 0.0:
        raise EllipticError("trace vanished after rescaling")
    u = scale + math.log(tr) - math.log(2.0)
    # arccosh(e^u) = u + log(1 + sqrt(1 - e^{-2u})), u is large here
    return 2.0 * (u + math.log1p(math.sqrt(-math.expm1(-2.0 * u))))


def rep_curve_length(rep, s):
    return length_from_scaled(slope_matrix(rep, s))


def curve_length(X, s):
    """Geodesic length of the simple closed curve of slope ``s`` on ``X``."""
    return rep_curve_length(build_rep(X), s)


def dual_arc_length(X, arc):
    """Orthogeodesic length of the boundary arc disjoint from ``arc.slope``."""
    if X.boundary == 0:
        raise CuspArcError("arcs degenerate on a cusped torus")
    c = curve_length(X, arc.slope)
    return hyptrig.pants_arc_one_cuff(X.boundary, c, c)
