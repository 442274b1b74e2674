import math
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from arcmetric import metrics as M
from arcmetric.errors import CuspArcError, DomainError, EmptyFamilyError
from arcmetric.mcg import MappingClass, displacement
from arcmetric.torus import DualArc, FNTorus, Slope

import oracles

X1, X2 = FNTorus(1, 0, 0), FNTorus(2, 0, 0)
FIX_X, FIX_Y = FNTorus(1, 0, 0.5), FNTorus(1.3, 0.4, 0.5)

cusped = st.builds(FNTorus, st.floats(0.3, 4.0), st.floats(-3.0, 3.0), st.just(0.0))


# -- families ---------------------------------------------------------------------

def test_farey_small_levels():
    assert M.farey_family(1).curves == (Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(-1, 1))
    assert len(M.farey_family(2)) == 8
    assert len(M.farey_family(8)) == 88


def _farey_oracle(N):
    out = set()
    for p in range(-N, N + 1):
        for q in range(-N, N + 1):
            if (p, q) != (0, 0) and math.gcd(p, q) == 1:
                out.add(Slope(p, q))
    return out


@pytest.mark.parametrize("N", [1, 3, 6, 8])
def test_farey_matches_enumeration(N):
    fam = M.farey_family(N)
    assert set(fam.curves) == _farey_oracle(N)
    assert len(set(fam.curves)) == len(fam.curves)


def test_farey_rejects_zero():
    with pytest.raises(DomainError):
        M.farey_family(0)


def test_iterate_family():
    fam = M.iterate_family(MappingClass(2, 1, 1, 1), Slope(1, 0), 2)
    assert fam.curves == (Slope(-2, 3), Slope(-1, 1), Slope(1, 0), Slope(2, 1), Slope(5, 3))
    assert fam.label == "iter:1/0:2"
    assert M.iterate_family(MappingClass(1, 0, 0, 1), Slope(3, 2), 4).curves == (Slope(3, 2),)
    assert set(fam.curves) <= set(M.iterate_family("2,1,1,1", Slope(1, 0), 5).curves)


def test_family_union_and_arcs():
    fam = M.farey_family(1) | M.Family((Slope(1, 0), Slope(2, 1)), (), "x")
    assert len(fam.curves) == 5 and fam.label == "farey:1+x"
    arcs = fam.with_dual_arcs()
    assert len(arcs.arcs) == 5 and arcs.label == "farey:1+x+arcs"
    assert arcs.without_arcs().arcs == ()
    assert list(arcs)[-1] == DualArc(Slope(2, 1))


def test_empty_family():
    with pytest.raises(EmptyFamilyError):
        M.Family((), ())


# -- single ratios ---------------------------------------------------------------

def test_ratio_examples():
    assert M.ratio(Slope(1, 0), X1, X2) == pytest.approx(math.log(2), abs=1e-15)
    assert M.ratio(Slope(1, 0), X2, X1) == pytest.approx(-math.log(2), abs=1e-15)
    assert M.ratio(Slope(3, 2), X1, X1) == 0.0
    with pytest.raises(CuspArcError):
        M.ratio(DualArc(Slope(1, 0)), X1, X2)


def test_length_dispatch():
    X = FNTorus(1, 0.3, 0.2)
    assert M.length(DualArc(Slope(1, 0)), X) == pytest.approx(7.618137812179, abs=1e-10)
    assert M.length(Slope(1, 0), X) == pytest.approx(1.0)


# -- dhat ---------------------------------------------------------------------------

def test_dhat_singleton_and_self():
    est = M.dhat(X1, X2, M.Family((Slope(1, 0),)))
    assert est.value == pytest.approx(0.693147180560, abs=1e-12)
    assert est.witness == Slope(1, 0)
    assert M.dhat(X1, X1, M.farey_family(5)).value == 0.0


def test_dhat_regression_fixture():
    fam = M.farey_family(8).with_dual_arcs()
    est = M.dhat(FIX_X, FIX_Y, fam)
    assert est.value == pytest.approx(0.262364264467, abs=1e-11)
    assert est.witness == Slope(1, 0)
    want = oracles.dhat(FIX_X, FIX_Y, fam.curves, [a.slope for a in fam.arcs])
    assert est.value == pytest.approx(want, abs=1e-12)


def test_dhat_is_asymmetric_on_fixture():
    fam = M.farey_family(8).with_dual_arcs()
    there = M.dhat(FIX_X, FIX_Y, fam)
    back = M.dhat(FIX_Y, FIX_X, fam)
    assert back.value == pytest.approx(0.192190554873, abs=1e-11)
    assert abs(there.value - back.value) > 0.05


def test_dhat_arc_preconditions():
    fam = M.farey_family(2).with_dual_arcs()
    with pytest.raises(CuspArcError):
        M.dhat(X1, X2, fam)
    with pytest.raises(DomainError):
        M.dhat(FNTorus(1, 0, 0.5), FNTorus(1, 0, 0.6), fam)


def test_witness_is_first_maximizer():
    X = FNTorus(1.5, 0, 0)
    fam = M.Family((Slope(1, 0), Slope(0, 1), Slope(1, 1)))
    # at tau = 0 the (1,1) and (-1,1) curves are symmetric; pick the first listed
    fam2 = M.Family((Slope(-1, 1), Slope(1, 1)))
    assert M.dhat(X, X, fam).witness == Slope(1, 0)
    assert M.dhat(X, FNTorus(1.5, 0, 0), fam2).witness == Slope(-1, 1)


def test_negative_estimate_warns_not_clamped():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        est = M.dhat(X2, X1, M.Family((Slope(1, 0),)))
    assert est.value == pytest.approx(-math.log(2))
    assert est.nonfilling
    assert any(issubclass(w.category, RuntimeWarning) for w in caught)


@settings(max_examples=100, deadline=None)
@given(X=cusped, Y=cusped, Z=cusped)
def test_triangle_inequality(X, Y, Z):
    fam = M.farey_family(4)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        xz = M.dhat(X, Z, fam).value
        xy = M.dhat(X, Y, fam).value
        yz = M.dhat(Y, Z, fam).value
    assert xz <= xy + yz + 1e-12


@settings(max_examples=50, deadline=None)
@given(X=cusped, Y=cusped)
def test_monotone_in_family(X, Y):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        small = M.dhat(X, Y, M.farey_family(3)).value
        big = M.dhat(X, Y, M.farey_family(6)).value
    assert small <= big


def test_periodic_fixed_point():
    Xsq = FNTorus(2 * math.acosh(math.sqrt(2)), 0, 0)
    assert displacement(Xsq, MappingClass(0, -1, 1, 0), M.farey_family(4)).value < 1e-9
