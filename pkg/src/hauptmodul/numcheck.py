"""Floating-point spot checks in the upper half-plane.

Nothing computed here is fed back into an exact result, apart from the
one-bit sign choices made by :func:`resolve_sign`, each of which is guarded
by an exact squaring test first.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AmbiguousSign, ExactSquareMismatch, TailBoundExceeded, UnknownId
from .exactnum import Cyclotomic13, QuadSqrt13, R_PRODUCTS, R_TARGETS, const, r_candidate
from .reports import CheckResult, FAIL, PASS, from_checks

TAIL_BOUND = 1e-12
MIN_IM = 0.2
_MAX_TERMS = 20_000


@dataclass(frozen=True)
class SamplePoint:
    """A point z of the upper half-plane with Im z >= 0.2."""

    z: complex

    def __post_init__(self):
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        if z.imag < MIN_IM:
            raise ValueError(f"sample point {z} has Im < {MIN_IM}")


DEFAULT_SAMPLES = (SamplePoint(1j), SamplePoint(0.5 + 1j), SamplePoint(-1 / 3 + 1.5j))


def _point(z):
    return z.z if isinstance(z, SamplePoint) else complex(z)


def _qpow(w, e):
    """exp(2 pi i w e), the principal value of q^e at q = e^(2 pi i w)."""
    return cmath.exp(2j * math.pi * w * e)


def _theta_sum(k, l, w):
    """sum_n (-1)^n q^((k n^2 + l n)/2) at q = e^(2 pi i w), with tail control."""
    if w.imag <= 0:
        raise TailBoundExceeded(f"{w} is not in the upper half-plane")
    r = math.exp(-2 * math.pi * w.imag)
    # exponents past E contribute at most 2 r^E / (1 - r) in total
    need = math.log(TAIL_BOUND * (1 - r) / 4) / math.log(r)
    nmax = int(math.isqrt(int(2 * need / k) + 1)) + 2 + abs(l) // k
    if 2 * nmax + 1 > _MAX_TERMS:
        raise TailBoundExceeded(f"Im {w.imag:.3g} would need {2 * nmax + 1} terms")
    total = 0j
    for n in range(-nmax, nmax + 1):
        e = (k * n * n + l * n) / 2
        total += (-1) ** (n % 2) * _qpow(w, e)
    return total


def eta_value(w, m=1):
    """eta(m w) from the pentagonal expansion of the Euler product."""
    w = complex(w) * m
    return _qpow(w, 1 / 24) * _theta_sum(3, -1, w)


def theta_value(k, l, w):
    """theta[l/k; 1](0, k w) including its phase e^(pi i l / 2k)."""
    w = complex(w)
    return cmath.exp(1j * math.pi * l / (2 * k)) * _qpow(w, l * l / (8 * k)) * _theta_sum(k, l, w)


_A_L = {1: 11, 2: 7, 3: 5, 4: 3, 5: 9, 6: 1}


def a_value(i, w):
    """a_i(w); the phase in front of the theta constant cancels its own."""
    l = _A_L[i]
    v = _qpow(complex(w), l * l / 104) * _theta_sum(13, l, complex(w))
    return -v if i == 4 else v


def a_vector_value(w):
    return np.array([a_value(i, w) for i in range(1, 7)], dtype=complex)


def eval_series_point(kind, z):
    """Evaluate ("eta", m), ("theta", k, l), ("a", i) or ("eta_quotient", {m: e}) at z.

    String spellings "eta(13)", "theta(13,1)" and "a4" are accepted too.
    """
    w = _point(z)
    if not isinstance(z, SamplePoint):
        SamplePoint(w)
    if isinstance(kind, str):
        kind = _parse_kind(kind)
    tag = kind[0]
    if tag == "eta":
        return eta_value(w, kind[1])
    if tag == "theta":
        return theta_value(kind[1], kind[2], w)
    if tag == "a":
        return a_value(kind[1], w)
    if tag == "eta_quotient":
        out = 1 + 0j
        for m, e in kind[1].items():
            out *= eta_value(w, m) ** e
        return out
    raise ValueError(f"unknown series kind {kind!r}")


def _parse_kind(s):
    s = s.replace(" ", "")
    if s.startswith("eta(") and s.endswith(")"):
        return ("eta", int(s[4:-1]))
    if s.startswith("theta(") and s.endswith(")"):
        k, l = s[6:-1].split(",")
        return ("theta", int(k), int(l))
    if len(s) == 2 and s[0] == "a" and s[1] in "123456":
        return ("a", int(s[1]))
    raise ValueError(f"unknown series kind {s!r}")


def series_value(series, z):
    """Numerically sum a finite PuiseuxSeries at q = e^(2 pi i z)."""
    w = _point(z)
    return sum(float(c) * _qpow(w, float(e)) for e, c in series.items())


# transformation laws


def sqrt_branch(z):
    """sqrt z with 0 < arg <= pi/2 on the upper half-plane."""
    return cmath.sqrt(z)


def _n1(samples, tol):
    from .repgroup import build_matrix

    t = build_matrix("T6").to_complex()
    ph = cmath.exp(-3j * math.pi / 4)
    worst = 0.0
    for p in samples:
        z = _point(p)
        lhs = a_vector_value(z + 1)
        rhs = ph * t @ a_vector_value(z)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return [("A(z+1) = e^(-3pi i/4) T A(z)", worst < tol, f"max residual {worst:.3e}")], worst


def _mobius(m, z):
    (a, b), (c, d) = m
    return (a * z + b) / (c * z + d)


def _n2(samples, tol):
    from . import _tables as tb
    from .repgroup import build_matrix, sl2_to_st_word

    s = build_matrix("S6").to_complex()
    ph = cmath.exp(1j * math.pi / 4)
    worst = 0.0
    for p in samples:
        z = _point(p)
        lhs = a_vector_value(-1 / z)
        rhs = ph * sqrt_branch(z) * (s @ a_vector_value(z))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    checks = [("A(-1/z) = e^(pi i/4) sqrt(z) S A(z)", worst < tol, f"max residual {worst:.3e}")]
    # Moebius action of h rebuilt letter by letter from its s, t word
    _, word = sl2_to_st_word(tb.H_SL2)
    hworst = 0.0
    for p in samples:
        z = _point(p)
        w = z
        for letter, e in reversed(word):
            for _ in range(abs(e)):
                if letter == "t":
                    w = w + (1 if e > 0 else -1)
                else:
                    w = -1 / w
        direct = _mobius(tb.H_SL2, z)
        hworst = max(hworst, abs(w - direct) / max(1.0, abs(direct)))
    checks.append(("h word reproduces the Moebius map of h", hworst < 1e-6,
                   f"max relative residual {hworst:.3e}"))
    return checks, worst


def _rademacher(p, samples, tol):
    worst = 0.0
    for smp in samples:
        z = _point(smp)
        ep = eta_value(z, p)
        lhs = sum(ep / eta_value((z + 24 * lam) / p) for lam in range(p))
        x = ep / eta_value(z)
        if p == 5:
            rhs = 25 * x ** 6
        elif p == 7:
            rhs = 49 * x ** 4 + 343 * x ** 8
        else:
            coeffs = (11 * 13, 36 * 13 ** 2, 38 * 13 ** 3, 20 * 13 ** 4, 6 * 13 ** 5, 13 ** 6, 13 ** 6)
            rhs = sum(c * x ** (2 * (j + 1)) for j, c in enumerate(coeffs))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return worst


def _n5_5(samples, tol):
    r5 = _rademacher(5, samples, tol)
    r7 = _rademacher(7, samples, tol)
    return [
        ("p = 5 eta sum", r5 < tol, f"max relative residual {r5:.3e}"),
        ("p = 7 eta sum", r7 < tol, f"max relative residual {r7:.3e}"),
    ], max(r5, r7)


def _n5_13(samples, tol):
    r = _rademacher(13, samples, tol)
    return [("p = 13 eta sum", r < tol, f"max relative residual {r:.3e}")], r


def _n6(samples, tol):
    sin = math.sin
    pi = math.pi
    ratio = sin(2 * pi / 13) * sin(5 * pi / 13) * sin(6 * pi / 13) / (
        sin(pi / 13) * sin(3 * pi / 13) * sin(4 * pi / 13))
    unit = (3 + math.sqrt(13)) / 2
    err = abs(ratio - unit)
    exact = const("r4") == const("r2") * QuadSqrt13(Fraction(3, 2), Fraction(1, 2)).to_cyclotomic()
    norm = QuadSqrt13(3, 1) * QuadSqrt13(3, -1)
    return [
        ("sine ratio = (3+sqrt13)/2", err < tol, f"{ratio:.12f}, residual {err:.2e}"),
        ("r4 = r2 (3+sqrt13)/2 exactly", exact, ""),
        ("unit norm -1", norm == QuadSqrt13(-4, 0), "(3+sqrt13)(3-sqrt13)/4 = -1"),
    ], err


_TRANSFORMS = {
    "N1_Tshift": (_n1, 1e-9),
    "N2_Sflip": (_n2, 1e-9),
    "N5_rademacher5": (_n5_5, 1e-8),
    "N5_rademacher13": (_n5_13, 1e-8),
    "N6_sine_unit": (_n6, 1e-12),
}


def verify_transformation(tid, samples=None, tol=None):
    """One numeric law checked over the sample points; passes iff residual < tol."""
    if tid not in _TRANSFORMS:
        raise UnknownId(tid)
    fn, default_tol = _TRANSFORMS[tid]
    samples = list(DEFAULT_SAMPLES if samples is None else samples)
    if len(samples) < 3:
        raise ValueError("need at least three sample points")
    samples = [p if isinstance(p, SamplePoint) else SamplePoint(p) for p in samples]
    tol = default_tol if tol is None else float(tol)
    if tol < 1e-9 and tid != "N6_sine_unit":
        raise ValueError("tolerance below 1e-9 is not supported")
    t0 = time.perf_counter()
    checks, worst = fn(samples, tol)
    ms = int(round((time.perf_counter() - t0) * 1000))
    rep = from_checks(tid, "numeric", checks, elapsed_ms=ms)
    rep.data["max_residual"] = worst
    rep.data["tol"] = tol
    return rep


# signs of radicals


def _quadrant_ok(v, want):
    for part in want.replace(" ", "").split(","):
        comp = v.real if part.startswith("Re") else v.imag
        if part[2] == ">" and comp <= 0:
            return False
        if part[2] == "<" and comp >= 0:
            return False
    return True


def resolve_sign(candidate, target_square, expected_quadrant):
    """Return +1 or -1 so that sign * candidate lands where ``expected_quadrant`` says.

    ``expected_quadrant`` is a comma list such as "Im>0" or "Re>0,Im<0".
    """
    candidate = Cyclotomic13.coerce(candidate)
    target = QuadSqrt13.coerce(target_square).to_cyclotomic()
    if candidate * candidate != target:
        raise ExactSquareMismatch("candidate squared differs from the target")
    v = candidate.to_complex()
    first = expected_quadrant.replace(" ", "").split(",")[0]
    comp = v.real if first.startswith("Re") else v.imag
    if abs(comp) < 1e-9:
        raise AmbiguousSign(f"embedding {v} too close to the decision line")
    for sign in (1, -1):
        if _quadrant_ok(sign * v, expected_quadrant):
            return sign
    raise AmbiguousSign(f"neither sign satisfies {expected_quadrant}")


THETA_RADICALS = {
    1: (1, 1, "Re>0,Im>0"),
    2: (-1, 1, "Re<0,Im>0"),
    3: (1, -1, "Re>0,Im<0"),
    4: (-1, -1, "Re<0,Im<0"),
}


def theta_radical(j):
    """(1/4)(-1 + e sqrt13 + f sqrt(-26 + 6 e sqrt13)) with the tabulated signs e, f."""
    e, f, _ = THETA_RADICALS[j]
    s13 = math.sqrt(13)
    inner = -26 + 6 * e * s13
    return (-1 + e * s13 + f * 1j * math.sqrt(-inner)) / 4


def _n3(tol):
    checks = []
    worst = 0.0
    for j, (_, _, quad) in THETA_RADICALS.items():
        v = const(f"theta{j}").to_complex()
        err = abs(v - theta_radical(j))
        worst = max(worst, err)
        checks.append((f"theta{j} radical", err < tol, f"residual {err:.1e}"))
        checks.append((f"theta{j} in {quad}", _quadrant_ok(v, quad), ""))
    t = {j: const(f"theta{j}") for j in range(1, 5)}
    checks.append(("theta1+theta3-theta2-theta4 = +sqrt13",
                   resolve_sign(t[1] + t[3] - t[2] - t[4], QuadSqrt13(13), "Re>0") == 1, ""))
    return checks, worst


def _n4(tol):
    checks = []
    cases = [("r1", const("theta1") - const("theta3") + const("theta2") - const("theta4"), 1)]
    cases.append(("r3", const("theta1") - const("theta3") - const("theta2") + const("theta4"), -1))
    for name in ("r2", "r4"):
        cases.append((name, r_candidate(name), R_PRODUCTS[name][1]))
    for name, cand, frozen in cases:
        got = resolve_sign(cand, R_TARGETS[name], "Im>0")
        checks.append((f"{name} sign", got == frozen, f"resolved {got:+d}, frozen {frozen:+d}"))
        checks.append((f"{name} constant", const(name) == cand * got, ""))
    return checks, 0.0


NUMERIC_IDS = ("N1", "N2", "N3", "N4", "N5", "N6")
_N_MAP = {"N1": ("N1_Tshift",), "N2": ("N2_Sflip",), "N5": ("N5_rademacher5", "N5_rademacher13"),
          "N6": ("N6_sine_unit",)}


def verify_numeric(nid, tol=None, samples=None):
    """Catalog entry point for N1-N6; N5 bundles both eta-sum laws."""
    if nid in _TRANSFORMS:
        return verify_transformation(nid, samples, tol)
    if nid not in NUMERIC_IDS:
        raise UnknownId(nid)
    if nid in _N_MAP:
        reps = [verify_transformation(t, samples, tol) for t in _N_MAP[nid]]
        if len(reps) == 1:
            rep = reps[0]
            rep.id = nid
            return rep
        ok = all(r.holds for r in reps)
        detail = "; ".join(f"{r.id}: {r.detail}" for r in reps)
        return CheckResult(nid, "numeric", PASS if ok else FAIL, detail, None,
                           sum(r.elapsed_ms for r in reps),
                           {"max_residual": max(r.data["max_residual"] for r in reps)})
    t0 = time.perf_counter()
    checks, worst = (_n3 if nid == "N3" else _n4)(1e-12 if tol is None else float(tol))
    ms = int(round((time.perf_counter() - t0) * 1000))
    rep = from_checks(nid, "numeric", checks, elapsed_ms=ms)
    rep.data["max_residual"] = worst
    return rep
