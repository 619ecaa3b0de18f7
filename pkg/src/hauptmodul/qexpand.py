"""Truncated Puiseux series in q with exact rational exponents and coefficients.

A series is known exactly for every exponent below its truncation bound
``trunc``.  Internally each series keeps its exponents on the lattice
(1/d)Z for the smallest d that fits, so products run on integer keys.
"""

from __future__ import annotations

import math
import os
import time
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByLeadingZero, EmptyTruncationWindow, OrderTooSmall, UnknownId
from .reports import CheckResult, FAIL, PASS

INF = math.inf


def _frac(x):
    if x == INF:
        return INF
    return x if isinstance(x, Fraction) else Fraction(x)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class PuiseuxSeries:
    """Finite piece of a Puiseux series: sum of c_e q^e for e < trunc."""

    __slots__ = ("_d", "_c", "trunc")

    def __init__(self, terms=None, trunc=INF):
        trunc = _frac(trunc)
        d = 1
        items = []
        for e, c in (terms or {}).items():
            e = Fraction(e)
            d = _lcm(d, e.denominator)
            items.append((e, c))
        keys = {}
        for e, c in items:
            k = e.numerator * (d // e.denominator)
            keys[k] = keys.get(k, 0) + c
        self._set(d, keys, trunc)

    @classmethod
    def _make(cls, d, keys, trunc):
        s = cls.__new__(cls)
        s._set(d, keys, trunc)
        return s

    def _set(self, d, keys, trunc):
        if trunc != INF:
            lim = trunc * d
            keys = {k: c for k, c in keys.items() if c and k < lim}
        else:
            keys = {k: c for k, c in keys.items() if c}
        g = d
        for k in keys:
            g = math.gcd(g, k)
            if g == 1:
                break
        if g > 1:
            keys = {k // g: c for k, c in keys.items()}
            d //= g
        self._d = d
        self._c = keys
        self.trunc = trunc

    # constructors
    @classmethod
    def monomial(cls, exponent, coeff=1, trunc=INF):
        return cls({_frac(exponent): coeff}, trunc)

    @classmethod
    def constant(cls, c, trunc=INF):
        return cls({0: c} if c else {}, trunc)

    # views
    @property
    def terms(self):
        d = self._d
        return {Fraction(k, d): c for k, c in self._c.items()}

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        d = self._d
        return [(Fraction(k, d), self._c[k]) for k in sorted(self._c)]

    def is_zero(self):
        return not self._c

    def valuation(self):
        """Smallest stored exponent, or trunc when nothing is stored."""
        if not self._c:
            return self.trunc
        return Fraction(min(self._c), self._d)

    def leading_term(self):
        if not self._c:
            raise EmptyTruncationWindow(f"no nonzero coefficient below q^{self.trunc}")
        k = min(self._c)
        return Fraction(k, self._d), self._c[k]

    def coefficient(self, e):
        e = Fraction(e)
        if e >= self.trunc:
            raise EmptyTruncationWindow(f"q^{e} lies at or beyond the truncation q^{self.trunc}")
        if (e * self._d).denominator != 1:
            return 0
        return self._c.get(int(e * self._d), 0)

    def truncate(self, trunc):
        return PuiseuxSeries._make(self._d, self._c, min(self.trunc, _frac(trunc)))

    def _on(self, d):
        f = d // self._d
        return {k * f: c for k, c in self._c.items()}

    # arithmetic
    @staticmethod
    def _lift(x):
        if isinstance(x, PuiseuxSeries):
            return x
        return PuiseuxSeries.constant(x)

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if isinstance(other, (int, Fraction)):
                other = PuiseuxSeries.constant(other)
            else:
                return NotImplemented
        d = _lcm(self._d, other._d)
        acc = self._on(d)
        for k, c in other._on(d).items():
            acc[k] = acc.get(k, 0) + c
        return PuiseuxSeries._make(d, acc, min(self.trunc, other.trunc))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries._make(self._d, {k: -c for k, c in self._c.items()}, self.trunc)

    def __sub__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if isinstance(other, (int, Fraction)):
                other = PuiseuxSeries.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return PuiseuxSeries._make(1, {}, self.trunc)
        return PuiseuxSeries._make(self._d, {k: v * c for k, v in self._c.items()}, self.trunc)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        trunc = min(self.trunc + other.valuation(), other.trunc + self.valuation())
        d = _lcm(self._d, other._d)
        a = sorted(self._on(d).items())
        b = sorted(other._on(d).items())
        lim = trunc * d if trunc != INF else INF
        acc = {}
        get = acc.get
        for ka, ca in a:
            for kb, cb in b:
                k = ka + kb
                if k >= lim:
                    break
                acc[k] = get(k, 0) + ca * cb
        return PuiseuxSeries._make(d, acc, trunc)

    __rmul__ = __mul__

    def shift(self, e):
        """Multiply by q^e exactly."""
        e = Fraction(e)
        d = _lcm(self._d, e.denominator)
        off = e.numerator * (d // e.denominator)
        return PuiseuxSeries._make(d, {k + off: c for k, c in self._on(d).items()}, self.trunc + e)

    def inverse(self):
        if not self._c:
            raise DivisionByLeadingZero(f"series vanishes below q^{self.trunc}")
        k0 = min(self._c)
        c0 = self._c[k0]
        e0 = Fraction(k0, self._d)
        if len(self._c) == 1 and self.trunc == INF:
            return PuiseuxSeries.monomial(-e0, Fraction(1) / c0)
        if self.trunc == INF:
            raise EmptyTruncationWindow("inverse of an exact multi-term series needs a finite truncation")
        # normalized tail u: s = c0 q^e0 (1 + u)
        u = PuiseuxSeries._make(self._d, {k - k0: c for k, c in self._c.items() if k != k0}, INF)
        rel = self.trunc - e0
        d = u._d
        n = math.ceil(rel * d)
        inv_c0 = Fraction(1) / c0
        supp = sorted((k, c * inv_c0) for k, c in u._c.items() if k < n)
        w = [0] * n
        w[0] = 1
        for i in range(1, n):
            acc = 0
            for k, c in supp:
                if k > i:
                    break
                wk = w[i - k]
                if wk:
                    acc -= c * wk
            w[i] = acc
        keys = {i: v for i, v in enumerate(w) if v}
        body = PuiseuxSeries._make(d, keys, rel)
        return body.scale(inv_c0).shift(-e0)

    def __truediv__(self, other):
        if not isinstance(other, PuiseuxSeries):
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise DivisionByLeadingZero("division by the zero scalar")
                return self.scale(Fraction(1) / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = PuiseuxSeries.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def dilate(self, m):
        """z -> m z, i.e. q -> q^m."""
        if not isinstance(m, int) or m <= 0:
            raise ValueError("dilation factor must be a positive integer")
        return PuiseuxSeries._make(self._d, {k * m: c for k, c in self._c.items()}, self.trunc * m)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.trunc, frozenset(self.terms.items())))

    def __repr__(self):
        return f"PuiseuxSeries({format_terms(self.items()[:6])}{', ...' if len(self._c) > 6 else ''}; O(q^{self.trunc}))"


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_terms(items):
    return ", ".join(f"{format_rational(e)}: {format_rational(c)}" for e, c in items)


def series_arith(lhs, rhs, kind):
    """Dispatch for add, sub, mul, div, pow (integer rhs) and dilate (positive integer rhs)."""
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        return lhs / rhs
    if kind == "pow":
        return lhs ** rhs
    if kind == "dilate":
        return lhs.dilate(rhs)
    raise ValueError(f"unknown operation {kind!r}")


# basic series


@lru_cache(maxsize=None)
def euler_product(order):
    """(q; q)_inf via the pentagonal number theorem, exact below q^order."""
    order = _frac(order)
    terms = {}
    k = 0
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 >= order and e2 >= order:
            break
        sign = -1 if k % 2 else 1
        terms[e1] = terms.get(e1, 0) + sign
        if k:
            terms[e2] = terms.get(e2, 0) + sign
        k += 1
    return PuiseuxSeries(terms, order)


@lru_cache(maxsize=None)
def eta_series(m, order):
    """eta(m z) = q^(m/24) prod (1 - q^(mn)), exact below q^order."""
    order = _frac(order)
    if order <= Fraction(m, 24):
        raise OrderTooSmall(f"order must exceed {Fraction(m, 24)}")
    base = euler_product((order - Fraction(m, 24)) / m)
    return base.dilate(m).shift(Fraction(m, 24))


@lru_cache(maxsize=None)
def theta_constant_series(k, l, order):
    """q^(l^2/8k) sum_n (-1)^n q^((k n^2 + l n)/2), exact below q^order."""
    if k < 5 or k % 2 == 0 or l % 2 == 0 or not 1 <= l <= k - 2:
        raise ValueError("need odd k >= 5 and odd l with 1 <= l <= k-2")
    order = _frac(order)
    lead = Fraction(l * l, 8 * k)
    if order <= lead:
        raise OrderTooSmall(f"order must exceed {lead}")
    span = order - lead
    bound = math.isqrt(math.ceil(2 * span / k)) + 3
    terms = {}
    for n in range(-bound, bound + 1):
        e = Fraction(k * n * n + l * n, 2)
        if e < span:
            terms[e] = terms.get(e, 0) + (-1) ** (n % 2)
    # terms just outside the range must already lie beyond the window
    assert min(Fraction(k * n * n + l * n, 2) for n in (bound + 1, -bound - 1)) >= span
    return PuiseuxSeries(terms, span).shift(lead)


# l values and signs of the six Gamma(13) theta constants
A_PARAMS = {1: (11, 1), 2: (7, 1), 3: (5, 1), 4: (3, -1), 5: (9, 1), 6: (1, 1)}


def a_series(i, order):
    """a_i(z) of level 13, phase stripped, with the extra sign on a_4."""
    l, sign = A_PARAMS[i]
    s = theta_constant_series(13, l, order)
    return s if sign == 1 else -s


def a_vector(order):
    return [a_series(i, order) for i in range(1, 7)]


@lru_cache(maxsize=None)
def ramanujan_theta_f(alpha, beta, order):
    """f(-q^alpha, -q^beta) = sum_n (-1)^n q^(alpha n(n+1)/2 + beta n(n-1)/2)."""
    alpha, beta, order = Fraction(alpha), Fraction(beta), _frac(order)
    if alpha + beta <= 0:
        raise ValueError("alpha + beta must be positive")

    def ex(n):
        return alpha * n * (n + 1) / 2 + beta * n * (n - 1) / 2

    terms = {}
    for step in (1, -1):
        n = 0 if step == 1 else -1
        while True:
            e = ex(n)
            if e >= order and ex(n + step) >= e:
                break
            if e < order:
                terms[e] = terms.get(e, 0) + (-1) ** (n % 2)
            n += step
    return PuiseuxSeries(terms, order)


def qpochhammer(a, step, order):
    """(q^a; q^step)_inf = prod_{m >= 0} (1 - q^(a + m step)), exact below q^order."""
    a, step, order = Fraction(a), Fraction(step), _frac(order)
    if a <= 0 or step <= 0:
        raise ValueError("exponents must be positive")
    out = PuiseuxSeries.constant(1, order)
    e = a
    while e < order:
        out = out * PuiseuxSeries({0: 1, e: -1}, order)
        e += step
    return out


@lru_cache(maxsize=None)
def partition_series(order):
    """sum p(n) q^n, exact below q^order."""
    if order < 1:
        raise OrderTooSmall("order must be at least 1")
    p = [0] * order
    p[0] = 1
    pent = []
    k = 1
    while True:
        g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        if g1 >= order:
            break
        sign = 1 if k % 2 else -1
        pent.append((g1, sign))
        if g2 < order:
            pent.append((g2, sign))
        k += 1
    pent.sort()
    for n in range(1, order):
        s = 0
        for g, sign in pent:
            if g > n:
                break
            s += sign * p[n - g]
        p[n] = s
    return PuiseuxSeries(dict(enumerate(p)), order)


def extract_progression(s, modulus, residue):
    """sum_n c(modulus n + residue) q^n for an integer-exponent series s."""
    if not 0 <= residue < modulus:
        raise ValueError("need 0 <= residue < modulus")
    if s._d != 1:
        raise ValueError("extract_progression needs integer exponents")
    terms = {}
    for k, c in s._c.items():
        if k >= residue and (k - residue) % modulus == 0:
            terms[(k - residue) // modulus] = c
    trunc = INF if s.trunc == INF else Fraction(math.ceil((s.trunc - residue) / modulus))
    return PuiseuxSeries(terms, trunc)


def _sigma3(n):
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def eisenstein_e4(order):
    return PuiseuxSeries({0: 1, **{n: 240 * _sigma3(n) for n in range(1, order)}}, order)


@lru_cache(maxsize=None)
def delta_series(order):
    """Delta = q prod (1 - q^n)^24, exact below q^order."""
    return (euler_product(max(order - 1, 1)) ** 24).shift(1).truncate(order)


@lru_cache(maxsize=None)
def j_series(order):
    """j = E4^3 / Delta, exact below q^order."""
    if order < 0:
        raise OrderTooSmall("order must be non-negative")
    return ((eisenstein_e4(order + 1) ** 3) / delta_series(order + 2)).truncate(order)


def tau_series(order):
    """The Hauptmodul (eta(z)/eta(13z))^2, exact below q^order."""
    w = _frac(order) + 2
    return ((eta_series(1, w) / eta_series(13, w + 13)) ** 2).truncate(order)


def horner(coeffs, x):
    """Evaluate a polynomial (coefficients highest degree first) at a series."""
    acc = None
    for c in coeffs:
        acc = PuiseuxSeries.constant(c) if acc is None else acc * x + c
    return acc


# identity catalog

_DEFAULT_ORDERS = {"Q1": 10, "Q2": 10, "Q3": 8, "Q7": 30, "Q8": 12, "Q9": 12}
_MIN_ORDER = {"Q23": 3}  # every other identity needs order >= 1


def default_order(qid):
    env = os.environ.get("HAUPTMODUL_DEFAULT_ORDER")
    if env:
        return Fraction(env)
    return Fraction(_DEFAULT_ORDERS.get(qid, 20))


def _form(name):
    from .invariants import build_form

    return build_form(name)


def _ev(name, vals):
    return _form(name).evaluate(vals, coerce=lambda c: c)


def _eta_quot(w, num_m, num_pow, den_m, den_pow):
    """eta(num_m z)^num_pow / eta(den_m z)^den_pow, inputs exact below q^w."""
    return eta_series(num_m, w * num_m) ** num_pow / eta_series(den_m, w + 1) ** den_pow


def _q1(w):
    n = int(w) + 2
    lhs = extract_progression(partition_series(5 * n + 5), 5, 4).shift(Fraction(19, 24))
    rhs = (eta_series(5, 5 * w) ** 5 / eta_series(1, w + 1) ** 6).scale(5)
    return [("5n+4", lhs, rhs)]


def _q2(w):
    n = int(w) + 2
    lhs = extract_progression(partition_series(7 * n + 6), 7, 5).shift(Fraction(17, 24))
    e7, e1 = eta_series(7, 7 * w), eta_series(1, w + 1)
    rhs = (e7 ** 3 / e1 ** 4).scale(7) + (e7 ** 7 / e1 ** 8).scale(49)
    return [("7n+5", lhs, rhs)]


ZUCKERMAN = ((11, 1), (36 * 13, 3), (38 * 13 ** 2, 5), (20 * 13 ** 3, 7),
             (6 * 13 ** 4, 9), (13 ** 5, 11), (13 ** 5, 13))


def _q3(w):
    n = int(w) + 2
    lhs = extract_progression(partition_series(13 * n + 7), 13, 6).shift(Fraction(11, 24))
    e13, e1 = eta_series(13, 13 * w + 13), eta_series(1, w + 2)
    inv = e1.inverse()
    inv2 = inv * inv
    rhs = PuiseuxSeries.constant(0)
    num = e13
    den = inv2
    for c, k in ZUCKERMAN:
        rhs = rhs + (num * den).scale(c)
        num = num * e13 * e13
        den = den * inv2
    return [("13n+6", lhs, rhs)]


def _klein5(w):
    return theta_constant_series(5, 3, w), theta_constant_series(5, 1, w)


def _q4(w):
    a, b = _klein5(w + 1)
    r5 = (a / b) ** 5
    lhs = r5.inverse() - 11 - r5
    rhs = (eta_series(1, w + 1) / eta_series(5, w + 5)) ** 6
    return [("1/R^5 - 11 - R^5", lhs, rhs)]


def _q5(w):
    a, b = _klein5(w + 3)
    rhs = -(_ev("f_icosa", [a, b]) / ((a * b) ** 6))
    lhs = (eta_series(1, w + 1) / eta_series(5, w + 5)) ** 6
    return [("icosahedral decomposition", lhs, rhs)]


def _q6(w):
    a = -theta_constant_series(7, 5, w + 3)
    b = theta_constant_series(7, 3, w + 3)
    c = theta_constant_series(7, 1, w + 3)
    rhs = _ev("Phi6_klein", [a, b, c]) / ((a * b * c) ** 2)
    lhs = (eta_series(1, w + 1) / eta_series(7, w + 7)) ** 4
    return [("Klein quartic decomposition", lhs, rhs)]


def _prod(xs):
    out = xs[0]
    for x in xs[1:]:
        out = out * x
    return out


def _q7(w):
    a = a_vector(w + 1)
    phi = _ev("Phi12", a)
    pa2 = _prod(a) ** 2
    e1, e13 = eta_series(1, w + 1), eta_series(13, w + 13)
    tau5 = (e1 / e13) ** 10
    return [
        ("Phi12(a) = eta^12", phi, e1 ** 12),
        ("(prod a)^2 = eta^2 eta(13z)^10", pa2, e1 ** 2 * e13 ** 10),
        ("tau^5 = Phi12(a)/(prod a)^2", tau5, phi / pa2),
    ]


def _q8(w):
    t = tau_series(w + 2)
    lhs = j_series(int(w) + 2)
    rhs = horner((1, 5, 13), t) * horner((1, 247, 3380, 15379, 28561), t) ** 3 / t ** 13
    return [("j(z)", lhs, rhs)]


def _q9(w):
    t = tau_series(w + 2)
    lhs = j_series(int(w) + 2).dilate(13)
    rhs = horner((1, 5, 13), t) * horner((1, 7, 20, 19, 1), t) ** 3 / t
    return [("j(13z)", lhs, rhs)]


def _q10(w):
    return [("Phi4(a) = 0", _ev("Phi4", a_vector(w + 1)), PuiseuxSeries.constant(0))]


def _eta_pair(w):
    e1, e13 = eta_series(1, w + 2), eta_series(13, w + 14)
    return e1, e13, e1 * e13 ** 5, (e1 / e13) ** 2


def _q11(w):
    a1, a2, a3, a4, a5, a6 = a_vector(w + 1)
    lhs = a1 ** 2 * a4 ** 2 * a2 * a5 + a2 ** 2 * a5 ** 2 * a3 * a6 + a3 ** 2 * a6 ** 2 * a1 * a4
    _, _, base, tau = _eta_pair(w)
    return [("a1^2a4^2a2a5 cycle", lhs, (-1 - tau) * base)]


def _q12(w):
    a1, a2, a3, a4, a5, a6 = a_vector(w + 1)
    lhs = a1 ** 2 * a4 ** 2 * a3 * a6 + a2 ** 2 * a5 ** 2 * a1 * a4 + a3 ** 2 * a6 ** 2 * a2 * a5
    _, _, base, tau = _eta_pair(w)
    return [("a1^2a4^2a3a6 cycle", lhs, (4 + tau) * base)]


def _q13(w):
    a1, a2, a3, a4, a5, a6 = a_vector(w + 1)
    lhs = (a4 * a5 * a6) ** 2 - (a1 * a2 * a3) ** 2
    _, _, base, tau = _eta_pair(w)
    return [("(a4a5a6)^2 - (a1a2a3)^2", lhs, (3 + tau) * base)]


def _q14(w):
    a1, a2, a3, a4, a5, a6 = a_vector(w + 6)
    lhs = (a1 * a4).inverse() + (a2 * a5).inverse() + (a3 * a6).inverse()
    return [("sum of reciprocals", lhs, PuiseuxSeries.constant(0))]


def _q15(w):
    e1, e13 = eta_series(1, w + 1), eta_series(13, w + 13)
    return [("prod a = -eta eta(13z)^5", _prod(a_vector(w + 1)), -(e1 * e13 ** 5))]


def _q16_18(name, sign):
    def run(w):
        e1, e13 = eta_series(1, w + 1), eta_series(13, w + 13)
        val = _ev(name, a_vector(w + 1))
        rhs = (e1 * e13) ** 3
        out = [(f"{name}(a)", val, rhs if sign > 0 else -rhs)]
        if name == "f6":
            out.append(("f6(a) eta^6 = -eta^9 eta(13z)^3", val * e1 ** 6, -(e1 ** 9 * e13 ** 3)))
        return out

    return run


def _mu(w):
    f = ramanujan_theta_f
    third = Fraction(1, 13)
    p = {ab: f(ab[0], ab[1], w + 4) for ab in ((1, 12), (2, 11), (3, 10), (4, 9), (5, 8), (6, 7))}
    mu = [
        (p[(4, 9)] / p[(2, 11)]).shift(-7 * third),
        (p[(6, 7)] / p[(3, 10)]).shift(-6 * third),
        (p[(2, 11)] / p[(1, 12)]).shift(-5 * third),
        (p[(5, 8)] / p[(4, 9)]).shift(-2 * third),
        (p[(3, 10)] / p[(5, 8)]).shift(5 * third),
        (p[(1, 12)] / p[(6, 7)]).shift(15 * third),
    ]
    return mu


def _q19(w):
    m1, m2, m3, m4, m5, m6 = _mu(w)
    fq = euler_product(w + 3)
    x = ((fq / fq.dilate(13)) ** 2).shift(-1)
    return [
        ("mu1mu2 - mu3mu5 - mu4mu6", 1 + x, m1 * m2 - m3 * m5 - m4 * m6),
        ("reciprocal mu pairs", -4 - x, (m1 * m2).inverse() - (m3 * m5).inverse() - (m4 * m6).inverse()),
        ("mu2mu3mu4 - mu1mu5mu6", 3 + x, m2 * m3 * m4 - m1 * m5 * m6),
        ("mu product = 1", m1 * m2 * m3 * m4 * m5 * m6, PuiseuxSeries.constant(1)),
    ]


def _q20(w):
    # series in t = q^(1/13); (t^k)_inf = (t^k; t^13)_inf
    n = 13 * w + 13

    def poch(*ks):
        out = PuiseuxSeries.constant(1)
        for k in ks:
            out = out * qpochhammer(k, 13, n)
        return out

    lhs = poch(2, 3, 10, 11).inverse() + poch(4, 6, 7, 9).inverse().shift(1)
    rhs = poch(1, 5, 8, 12).inverse()
    return [("quintuple quotient in t", lhs, rhs)]


_PRODUCT_FORM = {1: (1, 12), 2: (3, 10), 3: (9, 4), 4: (5, 8), 5: (2, 11), 6: (6, 7)}


def _q21(w):
    out = []
    for i in range(1, 7):
        l, sign = A_PARAMS[i]
        x, y = _PRODUCT_FORM[i]
        lead = Fraction(l * l, 104)
        span = w + 1 - lead
        prod = qpochhammer(x, 13, span) * qpochhammer(y, 13, span) * qpochhammer(13, 13, span)
        prod = prod.shift(lead).scale(sign)
        out.append((f"a{i}", a_series(i, w + 1), prod))
    return out


def _q22(w):
    e1 = eta_series(1, w + 2)
    x = [e1 * a for a in a_vector(w + 2)]
    e13 = eta_series(13, w + 14)
    return [
        ("Phi12(eta a) = Delta", _ev("Phi12", x), delta_series(int(w) + 2)),
        ("prod x = -eta^7 eta(13z)^5", _prod(x), -(e1 ** 7 * e13 ** 5)),
    ]


F = Fraction
LEADING_A = [(F(1, 4), 1), (F(34, 104), 2), (F(58, 104), 2), (F(98, 104), 1),
             (F(50, 104), -1), (F(18, 104), -1), (F(2, 104), -1)]
LEADING_D = [(F(15, 8), 1), (F(99, 104), 2), (F(3, 104), -1), (F(11, 104), 1),
             (F(19, 104), -2), (F(27, 104), -1), (F(35, 104), -1), (F(43, 104), 1),
             (F(51, 104), 3), (F(59, 104), -2), (F(67, 104), 1), (F(75, 104), -4),
             (F(83, 104), -1), (F(7, 8), -1)]
LEADING_G = [(F(7, 4), 1), (F(86, 104), 13), (F(94, 104), -22), (F(102, 104), -21),
             (F(6, 104), -1), (F(14, 104), 2), (F(22, 104), 2), (F(30, 104), -2),
             (F(38, 104), -8), (F(46, 104), 6), (F(54, 104), 1), (F(62, 104), -8),
             (F(70, 104), 17)]


def leading_term_table(order=3):
    """(label, expected (exp, coef), computed (exp, coef)) for the tabulated forms at a."""
    from .invariants import build_form

    a = a_vector(_frac(order))
    rows = []
    avals = [build_form(f"A{j}").evaluate(a, coerce=lambda c: c) for j in range(7)]
    for j, exp in enumerate(LEADING_A):
        rows.append((f"A{j}", exp, avals[j].leading_term()))
    rows.append(("prod A1..A6", (F(5, 2), -4), _prod(avals[1:]).leading_term()))
    rows.append(("-A0^6", (F(3, 2), -1), (-(avals[0] ** 6)).leading_term()))
    names = [f"D{j}" for j in range(13)] + ["Dinf"]
    dvals = [build_form(n).evaluate(a, coerce=lambda c: c) for n in names]
    for n, exp, v in zip(names, LEADING_D, dvals):
        rows.append((n, exp, v.leading_term()))
    gform = [build_form(f"G{j}") for j in range(13)]
    gvals = [g.recipe[0].evaluate(dvals, coerce=lambda c: c) for g in gform]
    for j, exp in enumerate(LEADING_G):
        rows.append((f"G{j}", exp, gvals[j].leading_term()))
    s = gvals[0] ** 2 * (7 * 169)
    for k in range(1, 7):
        s = s + gvals[k] * gvals[13 - k]
    rows.append(("7 13^2 G0^2 + sum G_k G_13-k", (F(1, 2), -26), s.leading_term()))
    phi = s.scale(F(-1, 26)) * eta_series(1, _frac(order)) ** 12
    rows.append(("Phi12(x)", (F(1), 1), phi.leading_term()))
    return rows


IDENTITIES = {
    "Q1": _q1, "Q2": _q2, "Q3": _q3, "Q4": _q4, "Q5": _q5, "Q6": _q6, "Q7": _q7,
    "Q8": _q8, "Q9": _q9, "Q10": _q10, "Q11": _q11, "Q12": _q12, "Q13": _q13,
    "Q14": _q14, "Q15": _q15, "Q16": _q16_18("f6", -1), "Q17": _q16_18("g6", 1),
    "Q18": _q16_18("h6", 1), "Q19": _q19, "Q20": _q20, "Q21": _q21, "Q22": _q22,
}
Q_IDS = tuple(IDENTITIES) + ("Q23",)


def _residual_summary(res, order):
    bad = [(e, c) for e, c in res.items() if e <= order]
    if not bad:
        return None
    return bad[0]


def verify_q_identity(qid, order=None):
    """Check one q-series identity through q^order (inclusive)."""
    if qid not in Q_IDS:
        raise UnknownId(qid)
    order = default_order(qid) if order is None else _frac(order)
    t0 = time.perf_counter()
    need = _MIN_ORDER.get(qid, 1)
    if order < need:
        raise OrderTooSmall(f"{qid} needs order >= {need}")
    if qid == "Q23":
        rows = leading_term_table(order)
        bad = [(lab, exp, got) for lab, exp, got in rows if (Fraction(got[0]), got[1]) != exp]
        detail = "all leading terms match" if not bad else "; ".join(
            f"{lab}: expected {format_terms([exp])} got {format_terms([got])}" for lab, exp, got in bad
        )
        ms = (time.perf_counter() - t0) * 1000
        return CheckResult(qid, "qseries", FAIL if bad else PASS, detail, order, ms,
                           {"rows": rows})
    w = order + 1
    for _attempt in range(8):
        pieces = IDENTITIES[qid](w)
        residuals = [(lab, lhs - rhs) for lab, lhs, rhs in pieces]
        short = min(r.trunc for _, r in residuals)
        if short > order:
            break
        w += order + 1 - short + 1
    else:
        ms = (time.perf_counter() - t0) * 1000
        return CheckResult(qid, "qseries", FAIL, f"could not reach order {order} (stuck at {short})",
                           order, ms)
    notes, failed = [], False
    data = {}
    for lab, r in residuals:
        lead = _residual_summary(r, order)
        data[lab] = "ZERO" if lead is None else format_terms([lead])
        if lead is None:
            notes.append(f"{lab}: ZERO")
        else:
            failed = True
            notes.append(f"{lab}: residual leading {format_terms([lead])}")
    ms = (time.perf_counter() - t0) * 1000
    return CheckResult(qid, "qseries", FAIL if failed else PASS, "; ".join(notes), order, ms,
                       {"residuals": data, "working_order": w})
