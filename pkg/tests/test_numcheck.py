import cmath
import math

import pytest
from hypothesis import given, strategies as st

from hauptmodul.errors import AmbiguousSign, ExactSquareMismatch, TailBoundExceeded, UnknownId
from hauptmodul.exactnum import QuadSqrt13, const
from hauptmodul.numcheck import (
    NUMERIC_IDS, SamplePoint, eval_series_point, resolve_sign, series_value, theta_radical,
    verify_numeric, verify_transformation,
)
from hauptmodul.qexpand import a_series, eta_series


def euler_product_value(z, terms=400):
    # independent oracle: truncated product, no pentagonal shortcut
    q = cmath.exp(2j * math.pi * z)
    out = cmath.exp(2j * math.pi * z / 24)
    for n in range(1, terms):
        out *= 1 - q ** n
    return out


def test_eta_at_i():
    want = math.gamma(0.25) / (2 * math.pi ** 0.75)
    got = eval_series_point("eta(1)", 1j)
    assert abs(got - want) < 1e-9
    assert abs(got - 0.768225422326) < 1e-11


@given(st.floats(-1, 1), st.floats(0.2, 2))
def test_eta_matches_product(x, y):
    z = complex(x, y)
    assert abs(eval_series_point(("eta", 1), z) - euler_product_value(z)) < 1e-10


def test_a4_is_negative_on_the_imaginary_axis():
    v = eval_series_point("a4", 2j)
    assert abs(v.imag) < 1e-14 and v.real < 0


def test_qexpand_series_agree_with_direct_sum():
    z = 3j
    for i in range(1, 7):
        direct = eval_series_point(("a", i), z)
        assert abs(series_value(a_series(i, 30), z) - direct) < 1e-10
    assert abs(series_value(eta_series(13, 30), z) - eval_series_point("eta(13)", z)) < 1e-10


def test_eta_quotient():
    z = 0.5 + 1j
    v = eval_series_point(("eta_quotient", {1: 2, 13: -2}), z)
    assert abs(v - (euler_product_value(z) / euler_product_value(13 * z)) ** 2) < 1e-8


def test_sample_point_bound():
    with pytest.raises(ValueError):
        SamplePoint(0.1j)
    SamplePoint(0.2j)


def test_tail_bound_exceeded_near_the_real_axis():
    from hauptmodul.numcheck import eta_value

    with pytest.raises(TailBoundExceeded):
        eta_value(1e-9j)


@pytest.mark.parametrize("tid", ["N1_Tshift", "N2_Sflip", "N5_rademacher5", "N5_rademacher13", "N6_sine_unit"])
def test_transformations(tid):
    rep = verify_transformation(tid, [1j, 1 + 2j, -0.3 + 0.7j])
    assert rep.holds, rep.detail
    assert rep.data["max_residual"] < rep.data["tol"]


def test_s_flip_at_fixed_point():
    rep = verify_transformation("N2_Sflip", [1j, 1j, 1j])
    assert rep.data["max_residual"] < 1e-10


def test_transformation_preconditions():
    with pytest.raises(ValueError):
        verify_transformation("N1_Tshift", [1j, 2j])
    with pytest.raises(ValueError):
        verify_transformation("N1_Tshift", tol=1e-12)
    with pytest.raises(UnknownId):
        verify_transformation("N9")


def test_sine_unit_value():
    rep = verify_transformation("N6_sine_unit")
    assert rep.holds and "3.302775" in rep.detail


def test_resolve_sign():
    t = [None] + [const(f"theta{j}") for j in range(1, 5)]
    r1 = t[1] - t[3] + t[2] - t[4]
    target = QuadSqrt13(-13, -2)
    assert resolve_sign(r1, target, "Im>0") == 1
    assert resolve_sign(-r1, target, "Im>0") == -1
    assert resolve_sign(t[1] + t[3] - t[2] - t[4], QuadSqrt13(13), "Re>0") == 1
    with pytest.raises(ExactSquareMismatch):
        resolve_sign(r1, QuadSqrt13(13), "Im>0")
    with pytest.raises(AmbiguousSign):
        resolve_sign(t[1] + t[3] - t[2] - t[4], QuadSqrt13(13), "Im>0")


@pytest.mark.parametrize("j", range(1, 5))
def test_theta_radicals(j):
    assert abs(const(f"theta{j}").to_complex() - theta_radical(j)) < 1e-12


@pytest.mark.parametrize("nid", NUMERIC_IDS)
def test_numeric_catalog(nid):
    rep = verify_numeric(nid)
    assert rep.holds, rep.detail
