import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hauptmodul.errors import DivisionByZero, UnknownConstant
from hauptmodul.exactnum import (
    CONSTANT_NAMES, Cyclotomic13, EXACT_IDS, QuadSqrt13, R_TARGETS, SQRT13, const, cyc_arith,
    verify_exact, zeta,
)

ZETA = cmath.exp(2j * math.pi / 13)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
cyc = st.lists(st.integers(-3, 3), min_size=12, max_size=12).map(Cyclotomic13)
quad = st.tuples(small, small).map(lambda ab: QuadSqrt13(*ab))


def embed(coeffs):
    # independent oracle: sum c_k zeta^k in floating point
    return sum(float(c) * ZETA ** k for k, c in enumerate(coeffs))


def test_zeta_times_zeta11_wraps_to_minus_sum():
    assert (zeta(1) * zeta(11)).coeffs == tuple(Fraction(-1) for _ in range(12))


def test_sqrt13_squares_to_13():
    assert SQRT13 * SQRT13 == 13
    assert abs(SQRT13.to_complex() - math.sqrt(13)) < 1e-12


def test_theta_sum_and_product():
    t = [const(f"theta{j}") for j in range(1, 5)]
    assert sum(t, Cyclotomic13.zero()) == -1
    assert t[0] * t[1] * t[2] * t[3] == 3


def test_p1_and_r1_square():
    assert const("p1") == SQRT13 * (zeta(2) + zeta(11))
    assert const("r1") ** 2 == QuadSqrt13(-13, -2).to_cyclotomic()


@pytest.mark.parametrize("name", sorted(R_TARGETS))
def test_r_constants_square_to_targets(name):
    v = const(name)
    assert v * v == R_TARGETS[name].to_cyclotomic()
    assert v.to_complex().imag > 0


def test_r4_square_independent_float():
    val = (-13 - 3 * math.sqrt(13)) / 2
    assert abs(const("r4").to_complex() ** 2 - val) < 1e-9


def test_every_named_constant_builds():
    for name in CONSTANT_NAMES:
        assert isinstance(const(name), Cyclotomic13)
    with pytest.raises(UnknownConstant):
        const("nope")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        cyc_arith(zeta(1), Cyclotomic13.zero(), "div")


@given(cyc, cyc, cyc)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert cyc_arith(b, a, "div") * a == b


@given(cyc, cyc)
def test_multiplication_matches_embedding(a, b):
    assert abs((a * b).to_complex() - embed(a.coeffs) * embed(b.coeffs)) < 1e-6


@given(quad, quad)
def test_quadratic_embedding_is_a_ring_map(x, y):
    assert (x * y).to_cyclotomic() == x.to_cyclotomic() * y.to_cyclotomic()
    assert (x + y).to_cyclotomic() == x.to_cyclotomic() + y.to_cyclotomic()
    assert abs((x * y).to_float() - x.to_float() * y.to_float()) < 1e-9


@pytest.mark.parametrize("eid", sorted(EXACT_IDS))
def test_exact_catalog(eid):
    rep = verify_exact(eid)
    assert rep.holds, rep.detail
