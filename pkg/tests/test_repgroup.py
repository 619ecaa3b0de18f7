import time

import pytest
from hypothesis import given, strategies as st

from hauptmodul.errors import SizeMismatch, UnknownId, UnknownMatrix
from hauptmodul.exactnum import Cyclotomic13, SQRT13, zeta
from hauptmodul.repgroup import (
    MATRIX_NAMES, RELATIONS, CycMatrix, build_matrix, displayed, enumerate_group, projective_eq,
    sl2_to_st_word, sl2_word_eval, verify_group_relation,
)

I6 = CycMatrix.identity(6)

# exact scalars lambda with lhs = lambda * rhs, frozen from the relation run
FROZEN_SCALARS = {
    ("G1", "S^2=I"): "lambda=-1",
    ("G1", "(ST)^3=I"): "lambda=-1",
    ("G1", "T^13=I"): "exact",
    ("G2", "(Q^3P^4)^3=-I"): "lambda=-1",
    ("G2", "(displayed Q^3P^4)^3=-I"): "exact",
    ("G4", "H^6=-I"): "exact",
    ("G5", "H^-1 T H = -T^4"): "lambda=-1",
    ("G12", "rho(h)=H"): "lambda=-1",
}


def test_t6_diagonal():
    t = build_matrix("T6")
    assert t == CycMatrix.diag([zeta(k) for k in (7, 11, 8, 6, 2, 5)])


def test_s6_squares_to_minus_identity():
    s = build_matrix("S6")
    assert s * s == -I6
    ok, lam = projective_eq(s * s, I6)
    assert ok and lam == -1


def test_mn():
    m, n = build_matrix("M3"), build_matrix("N3")
    assert m * n == CycMatrix.identity(3).scale(-SQRT13)


def test_projective_eq_examples():
    ok, lam = projective_eq(-I6, I6)
    assert ok and lam == -1
    t = build_matrix("T6")
    assert projective_eq(t, t * t) == (False, None)
    with pytest.raises(SizeMismatch):
        projective_eq(I6, CycMatrix.identity(7))


@given(st.lists(st.integers(-2, 2), min_size=12, max_size=12), st.integers(0, 12))
def test_projective_eq_recovers_scalar(coeffs, k):
    lam = Cyclotomic13(coeffs)
    if lam.is_zero():
        return
    m = build_matrix("ST") * build_matrix("T6") ** k
    ok, got = projective_eq(m.scale(lam), m)
    assert ok and got == lam


def test_every_matrix_builds():
    for name in MATRIX_NAMES:
        assert build_matrix(name).size in (2, 3, 6, 7, 14)
    with pytest.raises(UnknownMatrix):
        build_matrix("S99")


@pytest.mark.parametrize("rid", sorted(RELATIONS, key=lambda r: int(r[1:])))
def test_relations(rid):
    rep = verify_group_relation(rid)
    assert rep.holds, rep.detail


def test_frozen_relation_scalars():
    for (rid, label), note in FROZEN_SCALARS.items():
        assert verify_group_relation(rid).data["scalars"][label] == note


def test_unknown_relation():
    with pytest.raises(UnknownId):
        verify_group_relation("G13")


def test_group_orders_and_time():
    t0 = time.perf_counter()
    g = enumerate_group([build_matrix("S6"), build_matrix("T6")])
    b = enumerate_group([displayed("H"), build_matrix("T6")])
    assert (len(g), len(b)) == (1092, 78)
    assert time.perf_counter() - t0 < 30


def test_closure_is_closed_under_generators():
    g = enumerate_group([displayed("H"), build_matrix("T6")])
    for m in list(g.elements):
        for gen in g.generators:
            assert (m * gen) in g


@given(st.lists(st.tuples(st.sampled_from("st"), st.integers(-4, 4)), max_size=8))
def test_sl2_word_roundtrip(word):
    m = sl2_word_eval(word)
    sign, w = sl2_to_st_word(m)
    back = sl2_word_eval(w)
    assert tuple(tuple(sign * x for x in r) for r in back) == m
