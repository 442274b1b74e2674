"""Holonomy of surfaces glued from pairs of pants.

A :class:`PantsDecomp` lists pants (three cuff slots each), gluings of
slot pairs along interior curves, and boundary slots. :func:`build_glued_rep`
turns Fenchel-Nielsen coordinates into matrices: pants joined along a
spanning tree are conjugated into place (amalgamation), and every other
gluing adds a stable letter ``t<curve>`` (HNN extension).

Conventions. In a pants block the cuff loops satisfy ``G0 G1 G2 = I``. The
frame of a glued slot maps the imaginary axis onto the cuff axis
(attracting end at infinity) and ``i`` onto the foot of the seam toward the
lowest-indexed other slot of the same pants, skipping a slot glued to this
one. Gluing slot ``a`` to slot ``b`` with twist ``tau`` uses the conjugator
``F_a J T(tau) F_b^{-1}`` with ``J: z -> -1/z``; the stable letter of a
non-tree gluing is ``t = F_b J T(tau) F_a^{-1}``, so ``t G_a t^{-1} = G_b^{-1}``.
On the one-holed torus graph these choices reproduce :mod:`arcmetric.torus`
with ``A = c0.0`` and ``B = t0``.
"""

from collections import deque
from dataclasses import dataclass, field
import json
import math
import re

import numpy as np

from . import hyptrig
from .errors import AssemblyError, DegenerateError, DomainError
from .hyptrig import INF

TRACE_TOL = 1e-9
_NEAR_PARABOLIC = 1e-10
_ROUNDING = 1e-13
_J = np.array([[0.0, -1.0], [1.0, 0.0]])


# -- combinatorics ------------------------------------------------------------

@dataclass(frozen=True)
class PantsDecomp:
    """Gluing graph. Slots are ``(pants_index, cuff_index)`` pairs.

    ``gluings`` holds ``(slot_a, slot_b, curve_index)`` and ``boundary``
    holds ``(slot, boundary_index)``.
    """

    n_pants: int
    gluings: tuple
    boundary: tuple = ()

    def __post_init__(self):
        gl = tuple((tuple(a), tuple(b), int(c)) for a, b, c in self.gluings)
        bd = tuple((tuple(s), int(j)) for s, j in self.boundary)
        object.__setattr__(self, "gluings", gl)
        object.__setattr__(self, "boundary", bd)
        self._validate()

    def _validate(self):
        if self.n_pants < 1:
            raise DomainError("need at least one pair of pants")
        seen = {}
        for a, b, c in self.gluings:
            for s in (a, b):
                seen[s] = seen.get(s, 0) + 1
        for s, _ in self.boundary:
            seen[s] = seen.get(s, 0) + 1
        expected = {(k, j) for k in range(self.n_pants) for j in range(3)}
        if set(seen) != expected:
            bad = sorted(set(seen) ^ expected)
            raise DomainError(f"slots not covered exactly: {bad}")
        twice = [s for s, n in seen.items() if n != 1]
        if twice:
            raise DomainError(f"slots used more than once: {sorted(twice)}")
        curves = sorted(c for _, _, c in self.gluings)
        if curves != list(range(len(curves))):
            raise DomainError("curve indices must be 0..n-1, each once")
        bidx = sorted(j for _, j in self.boundary)
        if bidx != list(range(len(bidx))):
            raise DomainError("boundary indices must be 0..m-1, each once")
        reached = {0}
        todo = [0]
        while todo:
            k = todo.pop()
            for a, b, _ in self.gluings:
                for x, y in ((a, b), (b, a)):
                    if x[0] == k and y[0] not in reached:
                        reached.add(y[0])
                        todo.append(y[0])
        if len(reached) != self.n_pants:
            raise DomainError("gluing graph is not connected")

    @property
    def n_curves(self):
        return len(self.gluings)

    @property
    def n_boundary(self):
        return len(self.boundary)

    def partner(self, slot):
        for a, b, c in self.gluings:
            if a == slot:
                return b
            if b == slot:
                return a
        return None

    def to_json(self):
        return {
            "pants": self.n_pants,
            "gluings": [{"a": list(a), "b": list(b), "curve": c}
                        for a, b, c in self.gluings],
            "boundary": [{"slot": list(s), "index": j} for s, j in self.boundary],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(
                int(obj["pants"]),
                [(g["a"], g["b"], g["curve"]) for g in obj["gluings"]],
                [(b["slot"], b["index"]) for b in obj.get("boundary", [])],
            )
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed pants decomposition: {exc}") from exc


@dataclass(frozen=True)
class FNPoint:
    lengths: tuple
    twists: tuple
    boundary: tuple = ()

    def __post_init__(self):
        for name in ("lengths", "twists", "boundary"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        if len(self.lengths) != len(self.twists):
            raise DomainError("lengths and twists differ in size")
        if any(not v > 0 for v in self.lengths):
            raise DomainError("interior lengths must be positive")
        if any(v < 0 for v in self.boundary):
            raise DomainError("boundary lengths must be >= 0")
        if not all(math.isfinite(v) for v in self.lengths + self.twists + self.boundary):
            raise DomainError("coordinates must be finite")

    def matches(self, decomp):
        return (len(self.lengths) == decomp.n_curves
                and len(self.boundary) == decomp.n_boundary)

    def to_json(self):
        return {"lengths": list(self.lengths), "twists": list(self.twists),
                "boundary": list(self.boundary)}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(obj["lengths"], obj["twists"], obj.get("boundary", []))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed FN point: {exc}") from exc


def one_holed_torus():
    """Single pants with cuffs 0 and 1 glued; cuff 2 is the boundary."""
    return PantsDecomp(1, [((0, 0), (0, 1), 0)], [((0, 2), 0)])


def genus_two():
    """Closed genus-2 surface from two pants glued cuff-to-cuff."""
    return PantsDecomp(2, [((0, j), (1, j), j) for j in range(3)], [])


def torus_point(X):
    """FNPoint on :func:`one_holed_torus` matching an ``FNTorus``."""
    return FNPoint([X.ell], [X.twist], [X.boundary])


# -- representations -------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z_][\w.]*?)(\^-1|\^\{-1\}|')?$")


@dataclass(frozen=True)
class GluedRep:
    """Generator images plus the world matrices of every cuff slot."""

    generators: dict = field(repr=False)
    cuffs: dict = field(default_factory=dict, repr=False)
    aliases: dict = field(default_factory=dict)

    def parse(self, word):
        """Split a word into ``(name, exponent)`` pairs.

        Tokens are whitespace separated; ``x^-1`` or ``x'`` is an inverse.
        Aliases (e.g. ``A``, ``B`` on the torus graph) may be written as
        single letters without spaces, lowercase meaning inverse.
        """
        if isinstance(word, (list, tuple)):
            return [(n, e) for n, e in word]
        out = []
        for tok in word.split():
            if tok in self.generators or tok in self.aliases:
                out.append((tok, 1))
                continue
            m = _TOKEN.match(tok)
            if m and (m.group(1) in self.generators or m.group(1) in self.aliases):
                out.append((m.group(1), -1 if m.group(2) else 1))
                continue
            letters = self._alias_letters(tok)
            if letters is None:
                raise DomainError(f"unknown generator in {tok!r}")
            out.extend(letters)
        return out

    def _alias_letters(self, tok):
        out = []
        for ch in tok:
            if ch in self.aliases:
                out.append((ch, 1))
            elif ch.upper() in self.aliases and ch.islower():
                out.append((ch.upper(), -1))
            else:
                return None
        return out

    def matrix(self, name):
        name = self.aliases.get(name, name)
        try:
            return self.generators[name]
        except KeyError:
            raise DomainError(f"unknown generator {name!r}") from None

    def evaluate(self, word):
        letters = self.parse(word)
        if not letters:
            raise DomainError("empty word")
        m = np.eye(2)
        for i, (name, e) in enumerate(letters, 1):
            g = self.matrix(name)
            m = m @ (g if e > 0 else hyptrig.inverse(g))
            if i % 32 == 0:
                m = m / math.sqrt(hyptrig.det(m))
        return m

    def conjugate(self, n):
        n = hyptrig.normalize(n)
        ni = hyptrig.inverse(n)
        return GluedRep({k: n @ g @ ni for k, g in self.generators.items()},
                        {k: n @ g @ ni for k, g in self.cuffs.items()},
                        dict(self.aliases))


def word_length(rep, word):
    """Translation length of the holonomy of ``word``."""
    return hyptrig.translation_length(rep.evaluate(word))


def _block(l1, l2, l3):
    """Cuff matrices (G0, G1, G2) with G0 G1 G2 = I and |tr Gi| = 2cosh(li/2).

    G0 is diagonal; G1 has antisymmetric off-diagonal entries, which puts the
    common perpendicular of the first two axes on the unit circle.
    """
    lam = math.exp(l1 / 2)
    t2 = 2.0 * math.cosh(l2 / 2)
    t3 = 2.0 * math.cosh(l3 / 2)
    p = (-t3 - t2 / lam) / (lam - 1.0 / lam)
    s = t2 - p
    if 1.0 - p * s < 0:
        raise DegenerateError(f"no hyperbolic pants with cuffs {(l1, l2, l3)}")
    q = math.sqrt(1.0 - p * s)
    g0 = np.diag([lam, 1.0 / lam])
    g1 = np.array([[p, q], [-q, s]])
    return [g0, g1, hyptrig.inverse(g0 @ g1)]


def _pants_cuffs(lengths):
    """Like :func:`_block` but allowing cusps (length 0) on any cuff."""
    if all(v == 0 for v in lengths):
        g0 = np.array([[1.0, 2.0], [0.0, 1.0]])
        g1 = np.array([[1.0, 0.0], [-2.0, 1.0]])
        return [g0, g1, hyptrig.inverse(g0 @ g1)]
    r = next(i for i in range(3) if lengths[i] > 0)
    rot = [lengths[(r + i) % 3] for i in range(3)]
    g = _block(*rot)
    out = [None] * 3
    for i in range(3):
        out[(r + i) % 3] = g[i]
    return out


def build_pants_rep(l1, l2, l3):
    """Standalone pants: free group on X1, X2 with X3 = (X1 X2)^{-1}."""
    for v in (l1, l2, l3):
        if not v > 0:
            raise DomainError("pants cuff lengths must be positive")
    g = _block(l1, l2, l3)
    gens = {"X1": g[0], "X2": g[1], "X3": g[2]}
    return GluedRep(gens, {(0, 0): g[0], (0, 1): g[1], (0, 2): g[2]})


def cuff_axes(rep):
    """Axes of X1, X2, X3 of a standalone pants rep."""
    return [hyptrig.axis_endpoints(rep.generators[k]) for k in ("X1", "X2", "X3")]


# -- frames ------------------------------------------------------------------

def _fixed_points(m):
    """Axis endpoints of a hyperbolic matrix, or the fixed point of a
    parabolic one."""
    tr = abs(m[0, 0] + m[1, 1])
    # near-parabolic axes are too short to resolve; use the limit point
    if tr > 2.0 + _NEAR_PARABOLIC:
        return hyptrig.axis_endpoints(m).endpoints
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    if abs(c) < 1e-300:
        return (INF,)
    return ((a - d) / (2.0 * c),)


def _to_axis(u, v):
    """Unit-determinant matrix sending 0 -> v and infinity -> u."""
    if u is INF:
        m = np.array([[1.0, v], [0.0, 1.0]])
    elif v is INF:
        m = np.array([[u, -1.0], [1.0, 0.0]])
    elif u > v:
        m = np.array([[u, v], [1.0, 1.0]])
    else:
        m = np.array([[-u, v], [-1.0, 1.0]])
    return m / math.sqrt(hyptrig.det(m))


def _other_end(axis, u):
    p, q = axis.endpoints
    if u is INF:
        return p
    if q is INF:
        return q if p == u or abs(p - u) < abs(u) * 1e-12 + 1e-300 else p
    return p if abs(p - u) > abs(q - u) else q


def _frame(g, target):
    """Frame of the cuff ``g`` with foot on the seam toward ``target``.

    Returns (F, side): F(i) is the foot, F^{-1} g F translates toward
    infinity, and side is the sign of the real axis where ``target`` sits.
    """
    u = hyptrig.attracting_fixed_point(g)
    v = _other_end(hyptrig.axis_endpoints(g), u)
    m = _to_axis(u, v)
    mi = hyptrig.inverse(m)
    pts = [hyptrig.mobius(mi, z) for z in _fixed_points(target)]
    if any(z is INF or z == 0 for z in pts) or len({math.copysign(1, z) for z in pts}) != 1:
        raise AssemblyError("seam target meets the cuff axis")
    # seam foot height: sqrt(|s r|) for a target axis (s, r), |c| for a cusp c
    h = abs(pts[0]) if len(pts) == 1 else math.sqrt(abs(pts[0] * pts[1]))
    return m @ np.diag([math.sqrt(h), 1.0 / math.sqrt(h)]), math.copysign(1.0, pts[0])


def _sides(frame, others):
    fi = hyptrig.inverse(frame)
    signs = set()
    for g in others:
        for z in _fixed_points(g):
            w = hyptrig.mobius(fi, z)
            if w is INF or w == 0:
                return None
            signs.add(math.copysign(1.0, w))
    return signs


def _size(*ms):
    return math.prod(max(1.0, float(np.abs(m).max())) for m in ms)


def _is_identity(m, scale):
    """m == +-I up to rounding in a product whose factors have size ``scale``."""
    err = min(np.abs(m - np.eye(2)).max(), np.abs(m + np.eye(2)).max())
    return err <= max(1e-10, _ROUNDING * scale)


def _trace_ok(m, want):
    tol = max(TRACE_TOL * max(1.0, want), _ROUNDING * _size(m) ** 2)
    return abs(abs(np.trace(m)) - want) <= tol


def build_glued_rep(decomp, X):
    """Assemble the holonomy of ``decomp`` at Fenchel-Nielsen point ``X``.

    Generators: ``c<k>.<j>`` for the cuff loop of slot ``(k, j)`` and
    ``t<i>`` for each non-tree gluing along curve ``i``.
    """
    if not X.matches(decomp):
        raise DomainError("FN point does not match the decomposition")
    slot_len = {}
    for a, b, c in decomp.gluings:
        slot_len[a] = slot_len[b] = X.lengths[c]
    for s, j in decomp.boundary:
        slot_len[s] = X.boundary[j]
    local = [_pants_cuffs([slot_len[(k, j)] for j in range(3)])
             for k in range(decomp.n_pants)]

    frames = {}
    for a, b, _ in decomp.gluings:
        for s in (a, b):
            k, j = s
            partner = decomp.partner(s)
            ref = next(i for i in range(3)
                       if i != j and not (partner[0] == k and partner[1] == i))
            f, side = _frame(local[k][j], local[k][ref])
            if side < 0:
                raise AssemblyError("pants lies on the negative side of its cuff", s)
            frames[s] = f

    place = {0: np.eye(2)}
    stable = []
    queue = deque([0])
    tree = set()
    while queue:
        k = queue.popleft()
        for a, b, c in decomp.gluings:
            for x, y in ((a, b), (b, a)):
                if x[0] == k and y[0] not in place:
                    conj = frames[x] @ _J @ hyptrig.translation_matrix(X.twists[c]) \
                        @ hyptrig.inverse(frames[y])
                    place[y[0]] = place[k] @ conj
                    tree.add(c)
                    queue.append(y[0])
    for a, b, c in decomp.gluings:
        if c not in tree:
            stable.append((a, b, c))

    world = {}
    for k in range(decomp.n_pants):
        m, mi = place[k], hyptrig.inverse(place[k])
        for j in range(3):
            world[(k, j)] = m @ local[k][j] @ mi

    gens = {f"c{k}.{j}": world[(k, j)] for k in range(decomp.n_pants) for j in range(3)}
    for a, b, c in stable:
        t = place[b[0]] @ frames[b] @ _J @ hyptrig.translation_matrix(X.twists[c]) \
            @ hyptrig.inverse(frames[a]) @ hyptrig.inverse(place[a[0]])
        gens[f"t{c}"] = t

    aliases = {"A": "c0.0", "B": "t0"} if decomp == one_holed_torus() else {}
    rep = GluedRep(gens, world, aliases)
    _check(decomp, X, rep, place, frames, local, stable)
    return rep


def _check(decomp, X, rep, place, frames, local, stable):
    world = rep.cuffs
    for k in range(decomp.n_pants):
        prod = world[(k, 0)] @ world[(k, 1)] @ world[(k, 2)]
        if not _is_identity(prod, _size(*(world[(k, j)] for j in range(3)))):
            raise AssemblyError("cuff product is not the identity", (k, 0))
    for a, b, c in decomp.gluings:
        want = 2.0 * math.cosh(X.lengths[c] / 2)
        for s in (a, b):
            if not _trace_ok(world[s], want):
                tr = abs(np.trace(world[s]))
                raise AssemblyError(f"curve {c} trace {tr!r} != {want!r}", s)
    for s, j in decomp.boundary:
        want = 2.0 * math.cosh(X.boundary[j] / 2)
        if not _trace_ok(world[s], want):
            tr = abs(np.trace(world[s]))
            raise AssemblyError(f"boundary {j} trace {tr!r} != {want!r}", s)
    stable_of = {c: (a, b) for a, b, c in stable}
    for a, b, c in decomp.gluings:
        ga, gb = world[a], world[b]
        if c in stable_of:
            t = rep.generators[f"t{c}"]
            lhs = t @ ga @ hyptrig.inverse(t)
            if not _is_identity(lhs @ gb, _size(t, t, ga, gb)):
                raise AssemblyError(f"stable letter t{c} breaks the gluing relation", a)
            # t carries pants a[0] across the axis of cuff b
            ti = hyptrig.inverse(t)
            moved = [t @ world[(a[0], i)] @ ti for i in range(3) if i != a[1]]
        else:
            if not _is_identity(ga @ gb, _size(ga, gb)):
                raise AssemblyError(f"curve {c} gluing relation fails", a)
            moved = [world[(a[0], i)] for i in range(3) if i != a[1]]
        own = [world[(b[0], i)] for i in range(3) if i != b[1]]
        fb = place[b[0]] @ frames[b]
        s_own, s_moved = _sides(fb, own), _sides(fb, moved)
        if s_own is None or s_moved is None or len(s_own) != 1 or s_own == s_moved \
                or len(s_moved) != 1:
            raise AssemblyError(f"pants glued along curve {c} overlap", b)
