import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hauptmodul.errors import SizeMismatch, UnknownForm, UnknownId
from hauptmodul.exactnum import SQRT13
from hauptmodul.invariants import (
    FORM_NAMES, SYMBOLIC_IDS, Basis, MultiPoly, NotInSpan, NotProportional, build_form,
    express_in_basis, induced_matrix, invariance_scalar, named_basis, s14_mismatches, substitute,
    verify_symbolic_identity,
)
from hauptmodul.repgroup import build_matrix

S6, T6 = build_matrix("S6"), build_matrix("T6")

small_int = st.integers(-3, 3)
exps = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.lists(st.tuples(small_int, exps), max_size=5).map(lambda t: MultiPoly.from_terms(3, t))
points = st.tuples(*[st.integers(-4, 4)] * 3)


def test_forms_build_and_are_homogeneous():
    for name in FORM_NAMES:
        f = build_form(name)
        assert isinstance(f, MultiPoly)
    with pytest.raises(UnknownForm):
        build_form("Z9")


def test_a0_expansion():
    z = [MultiPoly.var(i, 6) for i in range(6)]
    assert build_form("A0") == z[0] * z[3] + z[1] * z[4] + z[2] * z[5]


@given(polys, polys, points)
def test_evaluation_is_a_ring_map(f, g, p):
    assert (f * g).evaluate(list(p)) == f.evaluate(list(p)) * g.evaluate(list(p))
    assert (f + g).evaluate(list(p)) == f.evaluate(list(p)) + g.evaluate(list(p))


def test_substitute_composes():
    f = build_form("A1")
    assert substitute(S6 * T6, f) == substitute(T6, substitute(S6, f))


def test_substitute_matches_numeric_action():
    # independent check: f(M z) numerically at a random complex point
    rng = np.random.default_rng(7)
    z = rng.normal(size=6) + 1j * rng.normal(size=6)
    m = S6 * T6
    mz = m.to_complex() @ z
    for name in ("A1", "D3", "Phi4"):
        f = build_form(name)
        lhs = substitute(m, f).evaluate(list(z))
        rhs = f.evaluate(list(mz))
        assert abs(lhs - rhs) < 1e-8 * max(1, abs(rhs))


def test_induced_matrix_is_a_homomorphism():
    a = induced_matrix(S6, "A")
    b = induced_matrix(T6, "A")
    assert induced_matrix(S6 * T6, "A") == a * b
    assert a == build_matrix("S7") and b == build_matrix("T7")


def test_invariance_scalars():
    for f in ("Phi4", "Phi12"):
        assert invariance_scalar(build_form(f), S6) == 1
        assert invariance_scalar(build_form(f), T6) == 1
    for f in ("f6", "g6", "h6"):
        assert invariance_scalar(build_form(f), S6) is NotProportional


def test_sentinels_are_falsy():
    assert not NotProportional and not NotInSpan


def test_express_in_basis():
    basis = named_basis("A")
    c = express_in_basis(build_form("A3").scale(2) - build_form("A0"), basis)
    assert list(c) == [-1, 0, 0, 2, 0, 0, 0]
    z = MultiPoly.var(0, 6)
    assert express_in_basis(z * z * z, basis) is NotInSpan


def test_psi2_twice_phi4():
    assert build_form("Psi2").expanded() == build_form("Phi4").scale(2)


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        build_form("A0").evaluate([1, 2])


def test_errata_report_lists_entries():
    mism = s14_mismatches()
    eq = sorted((r, c) for src, r, c, _ in mism if src == "equation")
    assert [m for m in mism if m[0] == "block"] == []
    assert eq == [("D9", "D7"), ("D9", "D9")]


@pytest.mark.parametrize("pid", sorted(SYMBOLIC_IDS, key=lambda p: int(p[1:])))
def test_symbolic_catalog(pid):
    rep = verify_symbolic_identity(pid)
    assert rep.holds, rep.detail


def test_unknown_symbolic_id():
    with pytest.raises(UnknownId):
        verify_symbolic_identity("P0")
