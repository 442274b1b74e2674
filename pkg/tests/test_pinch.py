import csv
import io
import math

import mpmath as mp
import pytest

from arcmetric import hyptrig, pinch
from arcmetric.errors import DomainError
from arcmetric.torus import FNTorus

X0, Y0 = FNTorus(1, 0, 0), FNTorus(1.3, 0.4, 0)


def test_psi_round_trip():
    assert pinch.psi(FNTorus(1, 0.3, 0.7)) == FNTorus(1, 0.3, 0)
    assert pinch.psi_inv(FNTorus(1, 0.3, 0), 0.7) == FNTorus(1, 0.3, 0.7)
    with pytest.raises(DomainError):
        pinch.psi_inv(FNTorus(1, 0.3, 0.2), 0.7)
    with pytest.raises(DomainError):
        pinch.psi_inv(FNTorus(1, 0.3, 0), 0.0)


def test_sweep_on_fixture_pair():
    rows = pinch.pinch_sweep(X0, Y0)
    assert [r.L for r in rows] == list(pinch.DEFAULT_LEVELS)
    # the (1,0) curve carries both estimates, and its length is ell for every L
    for r in rows:
        assert r.d_th == pytest.approx(math.log(1.3), abs=1e-12)
        assert r.d_arc == pytest.approx(r.d_th, abs=1e-12)
        assert r.gap == abs(r.d_arc - r.d_th)
        assert r.witness_arc == r.witness_th == "1/0"


def test_sweep_reversed_pair_gap_decays():
    levels = (1, 0.5, 0.1, 0.01)
    rows = pinch.pinch_sweep(Y0, X0, levels)
    gaps = [r.gap for r in rows]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < gaps[0]
    assert gaps[0] == pytest.approx(0.00256607483223, rel=1e-9)
    assert gaps[-1] == pytest.approx(2.60533873364e-07, rel=1e-6)
    assert len({r.d_th for r in rows}) == 1
    assert rows[0].d_th == pytest.approx(0.192839412999, abs=1e-11)


def test_sweep_identical_points():
    assert all(r.gap == 0 for r in pinch.pinch_sweep(X0, X0, (1, 0.1)))


def test_sweep_rejects_bad_input():
    with pytest.raises(DomainError):
        pinch.pinch_sweep(FNTorus(1, 0, 0.1), Y0)
    with pytest.raises(DomainError):
        pinch.pinch_sweep(X0, Y0, (1, 0))


def test_sweep_csv():
    text = pinch.sweep_csv(pinch.pinch_sweep(Y0, X0, (1, 0.01)), signed=True)
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == pinch.CSV_HEADER + ("signed",)
    assert rows[1][0] == "1" and rows[2][0] == "0.01"
    assert len(rows[1][1].replace(".", "").lstrip("0")) <= 12
    assert text.endswith("\n") and "\r" not in text


def _residual_oracle(lg, L):
    mp.mp.dps = 50
    lg, L = mp.mpf(lg), mp.mpf(L)
    exact = mp.acosh((mp.cosh(lg / 2) + mp.cosh(L / 2) ** 2) / mp.sinh(L / 2) ** 2)
    return float(exact - abs(mp.log(mp.sinh(L / 2) ** 2)) - mp.log(2) - mp.log(mp.cosh(lg / 2) + 1))


@pytest.mark.parametrize("L", [1.0, 0.5, 0.1, 0.01, 1e-4])
def test_arc_residual_against_mpmath(L):
    assert pinch.arc_residual(1.0, L) == pytest.approx(_residual_oracle(1.0, L), abs=1e-9)


def test_arc_residual_values():
    assert pinch.arc_residual(1, 0.01) == pytest.approx(1.17502e-5, rel=1e-4)
    assert pinch.arc_residual(1, 0.5) == pytest.approx(0.0293395, rel=1e-5)
    r = [abs(pinch.arc_residual(2.0, L)) for L in (1, 0.5, 0.1, 0.01)]
    assert all(a > b for a, b in zip(r, r[1:]))
    with pytest.raises(DomainError):
        pinch.arc_residual(1, 0)


def test_quad_ratio_check_examples():
    ratio, bound, ok = pinch.quad_ratio_check(3, 3, 10, 3.5, 2.5, 12)
    assert ok and bound == pytest.approx(1.26)
    assert pinch.quad_ratio_check(2, 1, 11, 2, 1, 11)[:1] == (1.0,)
    ratio, bound, ok = pinch.quad_ratio_check(0, 0, 20, 0, 0, 40)
    assert ratio == pytest.approx(2.0) and bound == pytest.approx(2.1) and ok


def test_quad_ratio_counterexample_near_ell_ten():
    # the bound needs ell + a + b large; at the edge of ell >= 10 it breaks
    ratio, bound, ok = pinch.quad_ratio_check(0, 0, 10, 1, 1, 10)
    assert ratio == pytest.approx(1.0867509, rel=1e-6) and not ok


def test_collar_widths_in_sweep_range():
    for L, w in pinch.collar_widths(pinch.DEFAULT_LEVELS):
        assert w == hyptrig.collar_width(L)
        if L <= 0.5:
            assert w > 2
