"""Hyperbolic-plane kernel: SL(2,R) matrices, axes, distances between
geodesics, and the closed hyperbolic-trigonometry formulas used for
pants, collars and quadrilaterals.

Matrices are plain 2x2 float ``numpy`` arrays of determinant 1 and stand
for projective classes; every consumer looks at ``abs(trace)``.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DegenerateError, DomainError, EllipticError, ParabolicError

DET_TOL = 1e-9
PARABOLIC_TOL = 1e-12


class _Infinity:
    """The point at infinity of the upper half-plane boundary."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _boundary_point(z):
    if z is INF:
        return INF
    z = float(z) + 0.0  # folds -0.0 into 0.0
    if math.isinf(z):
        return INF
    if math.isnan(z):
        raise DomainError("boundary point is NaN")
    return z


# -- matrices ---------------------------------------------------------------

def mat2(a11, a12, a21, a22):
    """Build a unit-determinant matrix, rescaling small determinant drift.

    Raises DomainError if the determinant is not positive or differs from
    1 by more than ``DET_TOL``.
    """
    m = np.array([[a11, a12], [a21, a22]], dtype=float)
    return normalize(m)


def normalize(m):
    m = np.asarray(m, dtype=float)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if not abs(det - 1.0) <= DET_TOL:
        raise DomainError(f"determinant {det!r} is not 1")
    return m / math.sqrt(det)


def det(m):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def inverse(m):
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])


def translation_matrix(t):
    """diag(e^{t/2}, e^{-t/2}): translation by t along the imaginary axis."""
    return np.diag([math.exp(t / 2), math.exp(-t / 2)])


def mobius(m, z):
    """Apply ``m`` to a point of the closed upper half-plane or its boundary."""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    if z is INF:
        return INF if c == 0 else a / c
    den = c * z + d
    if den == 0:
        return INF
    w = (a * z + b) / den
    return w


def arccosh(y):
    """arccosh, accurate near 1 and for very large arguments."""
    if y < 1.0:
        raise DomainError(f"arccosh argument {y!r} < 1")
    if y > 1e8:
        return math.log(y) + math.log1p(math.sqrt(1.0 - 1.0 / (y * y)))
    t = y - 1.0
    return math.log1p(t + math.sqrt(t * (t + 2.0)))


def translation_length(m):
    """Translation length 2 arccosh(|tr|/2) of the isometry ``m``."""
    tr = abs(m[0, 0] + m[1, 1])
    if tr < 2.0 - PARABOLIC_TOL:
        raise EllipticError(f"|trace| = {tr!r} < 2")
    if tr <= 2.0 + PARABOLIC_TOL:
        return 0.0
    return 2.0 * arccosh(tr / 2.0)


# -- geodesics ----------------------------------------------------------------

@dataclass(frozen=True)
class Geodesic:
    """Unoriented geodesic given by its two ideal endpoints."""

    p: object
    q: object

    def __post_init__(self):
        p, q = _boundary_point(self.p), _boundary_point(self.q)
        if p == q:
            raise DegenerateError("geodesic endpoints coincide")
        # canonical order: finite endpoints ascending, INF last
        if p is INF or (q is not INF and q < p):
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def endpoints(self):
        return (self.p, self.q)

    def image(self, m):
        return Geodesic(mobius(m, self.p), mobius(m, self.q))


def axis_endpoints(m):
    """Fixed points of a hyperbolic matrix on the boundary line."""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    tr = abs(a + d)
    if tr <= 2.0 + PARABOLIC_TOL:
        if tr < 2.0 - PARABOLIC_TOL:
            raise EllipticError(f"|trace| = {tr!r} < 2 has no axis")
        raise ParabolicError("parabolic matrix has no axis")
    disc = math.sqrt((a + d) ** 2 - 4.0)
    if c == 0:
        return Geodesic(b / (d - a), INF)
    # c z^2 + (d - a) z - b = 0, written to avoid cancellation
    s = -(d - a) - math.copysign(disc, d - a)
    z1 = s / (2.0 * c)
    z2 = -2.0 * b / s if s != 0 else (a - d) / (2.0 * c)
    return Geodesic(z1, z2)


def attracting_fixed_point(m):
    """Attracting endpoint of the axis of a hyperbolic ``m``."""
    axis_endpoints(m)  # validates hyperbolicity
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    tr = a + d
    lam = (tr + math.copysign(math.sqrt(tr * tr - 4.0), tr)) / 2.0
    # fixed point z has c z + d = lam; |lam| > 1 makes it attracting
    u, v = b, lam - a
    x, y = lam - d, c
    if abs(u) + abs(v) >= abs(x) + abs(y):
        return INF if v == 0 else u / v
    return INF if y == 0 else x / y


def cross_ratio(g1, g2):
    """R = (p1-p2)(q1-q2) / ((p1-q2)(q1-p2)) with infinities moved away."""
    pts = [g1.p, g1.q, g2.p, g2.q]
    finite = [z for z in pts if z is not INF]
    if len(finite) < len(pts):
        c = min(finite) - 1.0
        shift = np.array([[0.0, -1.0], [1.0, -c]])
        pts = [mobius(shift, z) for z in pts]
    p1, q1, p2, q2 = pts
    num = (p1 - p2) * (q1 - q2)
    den = (p1 - q2) * (q1 - p2)
    if den == 0:
        return math.inf
    return num / den


def geodesic_distance(g1, g2):
    """Length of the common perpendicular; 0 if the geodesics meet."""
    if g1 == g2:
        raise DegenerateError("distance between a geodesic and itself")
    r = cross_ratio(g1, g2)
    if r <= 0 or math.isinf(r):
        return 0.0
    if r == 1.0:
        raise DegenerateError("geodesics coincide")
    return arccosh(abs((1.0 + r) / (1.0 - r)))


# -- closed formulas ----------------------------------------------------------

def _positive(**kwargs):
    for name, v in kwargs.items():
        if not v > 0:
            raise DomainError(f"{name} must be positive, got {v!r}")


def collar_width(ell):
    """Width w of the standard collar: sinh(ell/2) sinh(w) = 1."""
    _positive(ell=ell)
    return math.asinh(1.0 / math.sinh(ell / 2.0))


def pants_arc_two_cuffs(lgamma, lbeta1, lbeta2):
    """Orthogeodesic between cuffs beta1 and beta2 of the pants with third
    cuff gamma."""
    _positive(lgamma=lgamma, lbeta1=lbeta1, lbeta2=lbeta2)
    s1, s2 = math.sinh(lbeta1 / 2), math.sinh(lbeta2 / 2)
    c1, c2 = math.cosh(lbeta1 / 2), math.cosh(lbeta2 / 2)
    return arccosh((math.cosh(lgamma / 2) + c1 * c2) / (s1 * s2))


def pants_arc_one_cuff(lbeta, lgamma1, lgamma2):
    """Orthogeodesic from cuff beta back to itself, separating the cuffs
    gamma1 and gamma2."""
    _positive(lbeta=lbeta, lgamma1=lgamma1, lgamma2=lgamma2)
    cb = math.cosh(lbeta / 2)
    g1, g2 = math.cosh(lgamma1 / 2), math.cosh(lgamma2 / 2)
    sb = math.sinh(lbeta / 2)
    # -1 + cb^2 = sb^2 keeps precision for small lbeta
    num = sb * sb + g1 * g1 + g2 * g2 + 2.0 * cb * g1 * g2
    return 2.0 * arccosh(math.sqrt(num) / sb)


def quad_side(a, b, ell):
    """Side opposite ``ell`` in the quadrilateral with sides a, b at right
    angles to the side ell."""
    if a < 0 or b < 0:
        raise DomainError("a and b must be non-negative")
    _positive(ell=ell)
    y = -math.sinh(a) * math.sinh(b) + math.cosh(a) * math.cosh(b) * math.cosh(ell)
    if y < 1.0:
        raise DomainError(f"degenerate quadrilateral (cosh L = {y!r})")
    return arccosh(y)
