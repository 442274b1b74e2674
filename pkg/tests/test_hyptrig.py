import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arcmetric import hyptrig as h
from arcmetric import pantsnet
from arcmetric.errors import DegenerateError, DomainError, EllipticError, ParabolicError

lengths = st.floats(0.05, 8.0)


def random_sl2(rng):
    while True:
        a, b, c = rng.normal(size=3)
        if abs(a) > 0.2:
            return h.mat2(a, b, c, (1 + b * c) / a)


def hyperbolic(rng):
    while True:
        m = random_sl2(rng)
        if abs(np.trace(m)) > 2.2:
            return m


# -- matrices and lengths ---------------------------------------------------------

def test_mat2_rejects_bad_determinant():
    with pytest.raises(DomainError):
        h.mat2(2, 0, 0, 1)
    m = h.mat2(2, 0, 0, 0.5 + 1e-12)
    assert abs(h.det(m) - 1) < 1e-15


def test_translation_length_diagonal():
    assert h.translation_length(np.diag([math.e, 1 / math.e])) == pytest.approx(2.0, abs=1e-15)


def test_translation_length_trace_three():
    m = h.mat2(2, 1, 1, 1)
    assert h.translation_length(m) == pytest.approx(1.924847300238, abs=1e-11)


def test_translation_length_sign_blind():
    m = h.mat2(2, 1, 1, 1)
    assert h.translation_length(-m) == h.translation_length(m)


def test_rotation_is_elliptic():
    with pytest.raises(EllipticError):
        h.translation_length(h.mat2(0, -1, 1, 0))


def test_parabolic_has_length_zero():
    assert h.translation_length(h.mat2(1, 5, 0, 1)) == 0.0
    with pytest.raises(ParabolicError):
        h.axis_endpoints(h.mat2(1, 5, 0, 1))


@pytest.mark.parametrize("y", [1.0, 1 + 1e-14, 1 + 1e-6, 1.5, 1e4, 1e9, 1e200])
def test_arccosh_against_mpmath(y):
    mp.mp.dps = 40
    want = float(mp.acosh(mp.mpf(y)))
    assert h.arccosh(y) == pytest.approx(want, rel=1e-14, abs=1e-300)


def test_arccosh_below_one():
    with pytest.raises(DomainError):
        h.arccosh(0.999)


def test_conjugation_invariance_of_length():
    rng = np.random.default_rng(3)
    for _ in range(50):
        m, n = hyperbolic(rng), random_sl2(rng)
        assert h.translation_length(n @ m @ h.inverse(n)) == pytest.approx(
            h.translation_length(m), abs=1e-9)


# -- geodesics ------------------------------------------------------------------------

def test_axis_of_diagonal():
    assert h.axis_endpoints(np.diag([2.0, 0.5])).endpoints == (0.0, h.INF)


def test_axis_of_cat_map():
    g = h.axis_endpoints(h.mat2(2, 1, 1, 1))
    assert g.p == pytest.approx((1 - math.sqrt(5)) / 2, abs=1e-14)
    assert g.q == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-14)


def test_axis_equivariance():
    rng = np.random.default_rng(5)
    for _ in range(30):
        m, n = hyperbolic(rng), random_sl2(rng)
        moved = h.axis_endpoints(n @ m @ h.inverse(n))
        image = h.axis_endpoints(m).image(n)
        for u, v in zip(moved.endpoints, image.endpoints):
            assert u is v or u == pytest.approx(v, rel=1e-8, abs=1e-8)


def test_attracting_fixed_point():
    assert h.attracting_fixed_point(np.diag([2.0, 0.5])) is h.INF
    assert h.attracting_fixed_point(np.diag([0.5, 2.0])) == 0.0
    m = h.mat2(2, 1, 1, 1)
    z = h.attracting_fixed_point(m)
    assert z == pytest.approx((1 + math.sqrt(5)) / 2)


def test_geodesic_canonical_order_and_negative_zero():
    g = h.Geodesic(h.INF, -0.0)
    assert g.endpoints == (0.0, h.INF)
    assert math.copysign(1, g.p) == 1
    assert h.Geodesic(3, 1) == h.Geodesic(1, 3)
    with pytest.raises(DegenerateError):
        h.Geodesic(2, 2)


def test_distance_vertical_axis_oracle():
    d = h.geodesic_distance(h.Geodesic(0, h.INF), h.Geodesic(1, 3))
    assert d == pytest.approx(1.316957896925, abs=1e-11)
    assert d == pytest.approx(math.acosh(2))


def test_distance_meeting_geodesics():
    assert h.geodesic_distance(h.Geodesic(0, h.INF), h.Geodesic(-1, 1)) == 0.0
    assert h.geodesic_distance(h.Geodesic(0, h.INF), h.Geodesic(0, 1)) == 0.0


def test_distance_to_self_is_degenerate():
    with pytest.raises(DegenerateError):
        h.geodesic_distance(h.Geodesic(1, 2), h.Geodesic(2, 1))


@given(r=st.floats(0.01, 50), s=st.floats(0.01, 50))
def test_distance_formula_for_nested_pair(r, s):
    if abs(r - s) < 1e-3:
        return
    r, s = min(r, s), max(r, s)
    d = h.geodesic_distance(h.Geodesic(0, h.INF), h.Geodesic(r, s))
    assert math.cosh(d) == pytest.approx((s + r) / (s - r), rel=1e-9)


def test_distance_conjugation_invariance():
    rng = np.random.default_rng(11)
    g1, g2 = h.Geodesic(0, h.INF), h.Geodesic(1, 4)
    d = h.geodesic_distance(g1, g2)
    for _ in range(30):
        n = random_sl2(rng)
        assert h.geodesic_distance(g1.image(n), g2.image(n)) == pytest.approx(d, abs=1e-9)


# -- closed formulas ------------------------------------------------------------------

def test_collar_width_values():
    assert h.collar_width(0.1) == pytest.approx(3.689087757, abs=1e-9)
    assert h.collar_width(2.0) == pytest.approx(0.771936833, abs=1e-9)


@given(a=lengths, b=lengths)
def test_collar_width_decreasing(a, b):
    if a < b:
        assert h.collar_width(a) > h.collar_width(b)


def test_collar_width_rejects_zero():
    with pytest.raises(DomainError):
        h.collar_width(0.0)


def _two_cuff_oracle(g, b1, b2):
    mp.mp.dps = 50
    g, b1, b2 = (mp.mpf(v) / 2 for v in (g, b1, b2))
    return float(mp.acosh((mp.cosh(g) + mp.cosh(b1) * mp.cosh(b2)) / (mp.sinh(b1) * mp.sinh(b2))))


def test_two_cuffs_value():
    assert h.pants_arc_two_cuffs(1, 1, 1) == pytest.approx(2.868695141620, abs=1e-11)


@settings(max_examples=50)
@given(g=lengths, b1=lengths, b2=lengths)
def test_two_cuffs_against_mpmath_and_symmetric(g, b1, b2):
    v = h.pants_arc_two_cuffs(g, b1, b2)
    assert v == pytest.approx(_two_cuff_oracle(g, b1, b2), rel=1e-12)
    assert h.pants_arc_two_cuffs(g, b2, b1) == v


def test_two_cuffs_small_limit():
    want = abs(math.log(math.sinh(0.005) ** 2)) + math.log(2) + math.log(math.cosh(0.5) + 1)
    assert abs(h.pants_arc_two_cuffs(1, 0.01, 0.01) - want) < 1e-3


def test_one_cuff_value_and_limit():
    v = h.pants_arc_one_cuff(0.2, 1, 1)
    assert v == pytest.approx(7.618137812179, abs=1e-10)
    limit = (2 * abs(math.log(math.sinh(0.1))) + 2 * math.log(2 * math.cosh(0.5))
             + 2 * math.log(2))
    assert limit == pytest.approx(7.614655699, abs=1e-9)
    assert abs(v - limit) < 0.01


@settings(max_examples=25, deadline=None)
@given(b=st.floats(0.1, 3), g1=st.floats(0.3, 3), g2=st.floats(0.3, 3))
def test_one_cuff_matches_conjugate_axes(b, g1, g2):
    # the self-arc of cuff 1 is the perpendicular between X1's axis and its X2-translate
    rep = pantsnet.build_pants_rep(b, g1, g2)
    x1, x2 = rep.generators["X1"], rep.generators["X2"]
    other = h.axis_endpoints(x2 @ x1 @ h.inverse(x2))
    d = h.geodesic_distance(h.axis_endpoints(x1), other)
    assert h.pants_arc_one_cuff(b, g1, g2) == pytest.approx(d, rel=1e-9)


def test_one_cuff_symmetric():
    assert h.pants_arc_one_cuff(0.3, 1.2, 2.5) == h.pants_arc_one_cuff(0.3, 2.5, 1.2)


def test_quad_side_values():
    assert h.quad_side(0, 0, 2.5) == pytest.approx(2.5, abs=1e-12)
    assert h.quad_side(1, 1, 3) == pytest.approx(3.810208137, abs=1e-9)
    assert abs(h.quad_side(3, 3, 10) - (16 - math.log(4))) < 0.01


def test_quad_side_rejects_negative():
    with pytest.raises(DomainError):
        h.quad_side(-1, 0, 1)


@given(a1=st.floats(1e-3, 1e3), a2=st.floats(1e-3, 1e3),
       b1=st.floats(1e-3, 1e3), b2=st.floats(1e-3, 1e3))
def test_mediant_guard(a1, a2, b1, b2):
    # the estimator's max-of-ratios logic leans on this
    assert (a1 + a2) / (b1 + b2) <= max(a1 / b1, a2 / b2) * (1 + 1e-15)
