"""Exact scalars: rationals, the cyclotomic field Q(zeta_13) and Q(sqrt 13).

``BigRational`` is :class:`fractions.Fraction`.  ``ComplexApprox`` is the
builtin :class:`complex`; it only shows up in embeddings used for sign and
sanity checks, never in exact results.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DivisionByZero, SignUnresolved, UnknownConstant

BigRational = Fraction
ComplexApprox = complex

P = 13
DIM = P - 1

_ZPOW = tuple(cmath.exp(2j * math.pi * k / P) for k in range(P))


def _reduce13(v):
    """Fold a length-13 vector (basis 1..zeta^12) into the canonical 12 slots."""
    top = v[DIM]
    if top:
        return [v[k] - top for k in range(DIM)]
    return list(v[:DIM])


class Cyclotomic13:
    """Element sum_k c_k zeta^k (k = 0..11) of Q(zeta), zeta = exp(2 pi i/13).

    Stored as an integer numerator tuple plus a positive common denominator
    in lowest terms, so equality and hashing are plain tuple comparisons.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = (0,) * DIM
        elif isinstance(coeffs, (int, Rational)):
            coeffs = (coeffs,) + (0,) * (DIM - 1)
        coeffs = list(coeffs)
        if len(coeffs) == P:
            coeffs = _reduce13(coeffs)
        if len(coeffs) != DIM:
            raise ValueError("expected 12 or 13 coefficients")
        fr = [Fraction(c) for c in coeffs]
        d = 1
        for c in fr:
            d = d * c.denominator // math.gcd(d, c.denominator)
        n = [c.numerator * (d // c.denominator) for c in fr]
        self._set(n, d)

    def _set(self, n, d):
        g = math.gcd(d, *n)
        if g > 1:
            n = [x // g for x in n]
            d //= g
        self._n = tuple(n)
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, n, d=1):
        obj = cls.__new__(cls)
        if d < 0:
            n = [-x for x in n]
            d = -d
        obj._set(n, d)
        return obj

    # construction helpers
    @classmethod
    def zero(cls):
        return cls._raw([0] * DIM)

    @classmethod
    def one(cls):
        return cls._raw([1] + [0] * (DIM - 1))

    @classmethod
    def rational(cls, r):
        r = Fraction(r)
        return cls._raw([r.numerator] + [0] * (DIM - 1), r.denominator)

    @classmethod
    def zeta(cls, k=1):
        v = [0] * P
        v[k % P] = 1
        return cls._raw(_reduce13(v))

    @classmethod
    def from_powers(cls, terms):
        """Build from ``{power: coeff}`` or an iterable of ``(power, coeff)``."""
        if isinstance(terms, dict):
            terms = terms.items()
        v = [Fraction(0)] * P
        for k, c in terms:
            v[k % P] += Fraction(c)
        return cls(v)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Cyclotomic13):
            return x
        if isinstance(x, QuadSqrt13):
            return x.to_cyclotomic()
        if isinstance(x, (int, Rational)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic13")

    # views
    @property
    def coeffs(self):
        return tuple(Fraction(x, self._d) for x in self._n)

    @property
    def numerators(self):
        return self._n

    @property
    def denominator(self):
        return self._d

    def is_zero(self):
        return not any(self._n)

    def is_rational(self):
        return not any(self._n[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self._n[0], self._d)

    def to_complex(self):
        s = 0j
        for k, c in enumerate(self._n):
            if c:
                s += c * _ZPOW[k]
        return s / self._d

    # arithmetic
    def __add__(self, other):
        try:
            o = Cyclotomic13.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return Cyclotomic13._raw([a + b for a, b in zip(self._n, o._n)], self._d)
        return Cyclotomic13._raw(
            [a * o._d + b * self._d for a, b in zip(self._n, o._n)], self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic13._raw([-a for a in self._n], self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Cyclotomic13.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, r):
        """Multiply by a rational scalar."""
        r = Fraction(r)
        return Cyclotomic13._raw([a * r.numerator for a in self._n], self._d * r.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        try:
            o = Cyclotomic13.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_rational():
            return Cyclotomic13._raw([a * o._n[0] for a in self._n], self._d * o._d)
        if self.is_rational():
            return Cyclotomic13._raw([self._n[0] * b for b in o._n], self._d * o._d)
        return Cyclotomic13._raw(_cyc_mul(self._n, o._n), self._d * o._d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(zeta_13)")
        return _inverse(self._n, self._d)

    def __truediv__(self, other):
        try:
            o = Cyclotomic13.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic13.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic13.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, k):
        """Apply the automorphism zeta -> zeta^k (k prime to 13)."""
        if k % P == 0:
            raise ValueError("k must be prime to 13")
        v = [0] * P
        for j, c in enumerate(self._n):
            v[(j * k) % P] += c
        return Cyclotomic13._raw(_reduce13(v), self._d)

    def conj(self):
        return self.galois(P - 1)

    def norm(self):
        """Field norm down to Q, as a Fraction."""
        acc = self
        for k in range(2, P):
            acc = acc * self.galois(k)
        return acc.rational_value()

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Cyclotomic13):
            return self._n == other._n and self._d == other._d
        try:
            o = Cyclotomic13.coerce(other)
        except TypeError:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._d))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic13({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                z = "z" if k == 1 else f"z^{k}"
                body = z if mag == 1 else f"{mag}*{z}"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _cyc_mul(a, b):
    v = [0] * P
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                v[(i + j) % P] += x * y
    return _reduce13(v)


@lru_cache(maxsize=4096)
def _inverse(n, d):
    x = Cyclotomic13._raw(list(n), d)
    # x^{-1} = (product of the other conjugates) / N(x)
    others = Cyclotomic13.one()
    for k in range(2, P):
        others = others * x.galois(k)
    norm = (x * others).rational_value()
    return others.scale(1 / norm)


ZERO = Cyclotomic13.zero()
ONE = Cyclotomic13.one()


def zeta(k=1):
    return Cyclotomic13.zeta(k)


def zdiff(a, b):
    """zeta^a - zeta^b; the exponent 0 stands for 1."""
    return Cyclotomic13.zeta(a) - Cyclotomic13.zeta(b)


# sqrt(13) as a Gauss sum: sum of (k|13) zeta^k
_QR = (1, 3, 4, 9, 10, 12)
SQRT13 = Cyclotomic13.from_powers([(k, 1) for k in _QR] + [(k, -1) for k in (2, 5, 6, 7, 8, 11)])


class QuadSqrt13:
    """a + b*sqrt(13) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QuadSqrt13):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadSqrt13")

    def __add__(self, other):
        try:
            o = QuadSqrt13.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadSqrt13(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadSqrt13(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = QuadSqrt13.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadSqrt13(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return QuadSqrt13.coerce(other) - self

    def __mul__(self, other):
        try:
            o = QuadSqrt13.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadSqrt13(self.a * o.a + 13 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self):
        return QuadSqrt13(self.a, -self.b)

    def norm(self):
        return self.a * self.a - 13 * self.b * self.b

    def __truediv__(self, other):
        o = QuadSqrt13.coerce(other)
        n = o.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(sqrt 13)")
        num = self * o.conj()
        return QuadSqrt13(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return QuadSqrt13.coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return QuadSqrt13(1) / (self ** (-k))
        out = QuadSqrt13(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = QuadSqrt13.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def to_cyclotomic(self):
        return SQRT13.scale(self.b) + self.a

    def to_float(self):
        return float(self.a) + float(self.b) * math.sqrt(13)

    def __repr__(self):
        return f"QuadSqrt13({self.a}, {self.b})"


# ---------------------------------------------------------------------------
# constant catalog

def _theta(j):
    base = {1: (1, 3, 9), 2: (2, 6, 5), 3: (4, 12, 10), 4: (8, 11, 7)}[j]
    return Cyclotomic13.from_powers([(k, 1) for k in base])


def _sdiff(k):
    return zdiff(k, P - k)


def _q_const(row):
    # coefficients on d1, d5, d3, d2, d9, d6 with dk = zeta^k - zeta^{-k}
    ds = (_sdiff(1), _sdiff(5), _sdiff(3), _sdiff(2), zdiff(9, 4), _sdiff(6))
    out = ZERO
    for c, d in zip(row, ds):
        if c:
            out = out + d * c
    return out


_Q_ROWS = {
    1: (-2, -2, 6, -1, 4, 2),
    2: (-4, 3, 3, -1, -2, 0),
    3: (6, -1, 4, 2, -2, -2),
    4: (-2, 4, 2, -2, 1, 6),
    5: (-2, 0, -4, 3, 3, -1),
    6: (3, -1, -2, 0, -4, 3),
    7: (1, 3, 0, -2, -3, -4),
    8: (0, -2, -3, -4, 1, 3),
    9: (4, 2, -2, -2, 6, -1),
    10: (1, 6, -2, 4, 2, -2),
    11: (-3, -4, 1, 3, 0, -2),
    12: (2, -2, 1, 6, -2, 4),
}

# r2 and r4 as signed products of (zeta^a - zeta^-a); the sign picks the
# root with positive imaginary part. Frozen here, re-derived in numcheck.
R_PRODUCTS = {
    "r2": ((6, 5, 2), -1),
    "r4": ((1, 4, 3), -1),
}

R_TARGETS = {
    "r1": QuadSqrt13(-13, -2),
    "r2": QuadSqrt13(Fraction(-13, 2), Fraction(3, 2)),
    "r3": QuadSqrt13(-13, 2),
    "r4": QuadSqrt13(Fraction(-13, 2), Fraction(-3, 2)),
}


def r_candidate(name):
    """Unsigned cyclotomic product whose square is the r2/r4 radicand."""
    exps, _ = R_PRODUCTS[name]
    out = ONE
    for a in exps:
        out = out * _sdiff(a)
    return out


def _builders():
    th = {j: _theta(j) for j in range(1, 5)}
    t1, t2, t3, t4 = th[1], th[2], th[3], th[4]
    b = {
        "zeta": lambda: zeta(1),
        "sqrt13": lambda: SQRT13,
        "alpha": lambda: Cyclotomic13.from_powers({1: 1, 12: 1, 5: -1, 8: -1}),
        "beta": lambda: Cyclotomic13.from_powers({3: 1, 10: 1, 2: -1, 11: -1}),
        "gamma": lambda: Cyclotomic13.from_powers({9: 1, 4: 1, 6: -1, 7: -1}),
        "r0": lambda: (t1 - t3) * 2 - (t2 - t4) * 3,
        "rinf": lambda: (t4 - t2) * 2 - (t1 - t3) * 3,
        "r1": lambda: t1 - t3 + t2 - t4,
        "r3": lambda: -(t1 - t3 - t2 + t4),
    }
    for j in range(1, 5):
        b[f"theta{j}"] = (lambda v: (lambda: v))(th[j])
    # p_j = sqrt13 * (zeta^k + zeta^-k)
    for j, k in enumerate((2, 9, 6, 5, 3, 1), start=1):
        b[f"p{j}"] = (lambda k: (lambda: SQRT13 * (zeta(k) + zeta(-k))))(k)
    for j, row in _Q_ROWS.items():
        b[f"q{j}"] = (lambda row: (lambda: _q_const(row)))(row)
    for name in ("r2", "r4"):
        b[name] = (lambda name: (lambda: _signed_r(name)))(name)
    return b


def _signed_r(name):
    cand = r_candidate(name)
    sign = R_PRODUCTS[name][1]
    val = cand * sign
    im = val.to_complex().imag
    if abs(im) < 1e-9:
        raise SignUnresolved(f"{name}: embedding too close to the real axis")
    if im < 0:
        raise SignUnresolved(f"{name}: frozen sign gives Im < 0")
    return val


_BUILDERS = _builders()
_CACHE: dict = {}

CONSTANT_NAMES = tuple(_BUILDERS)


def const(name):
    """Look up a named constant of Q(zeta_13)."""
    if name not in _BUILDERS:
        raise UnknownConstant(name)
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


const_catalog = const


def cyc_arith(lhs, rhs, kind):
    lhs = Cyclotomic13.coerce(lhs)
    rhs = Cyclotomic13.coerce(rhs)
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        return lhs / rhs
    raise ValueError(f"unknown operation {kind!r}")


# ---------------------------------------------------------------------------
# exact catalog E1-E5 (the "exact" suite)

def _poly_mul(a, b):
    out = [QuadSqrt13(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _e1():
    t = [const(f"theta{j}") for j in range(1, 5)]
    z12 = Cyclotomic13.from_powers({k: -1 for k in range(12)})
    return [
        ("zeta zeta^11 = -(1+...+zeta^11)", zeta(1) * zeta(11) == z12, ""),
        ("sqrt13^2 = 13", SQRT13 * SQRT13 == 13, ""),
        ("theta1+theta2+theta3+theta4 = -1", t[0] + t[1] + t[2] + t[3] == -1, ""),
        ("theta1 theta2 theta3 theta4 = 3", t[0] * t[1] * t[2] * t[3] == 3, ""),
    ]


def _e2():
    t1, t2, t3, t4 = (const(f"theta{j}") for j in range(1, 5))
    return [
        ("theta1+theta3-theta2-theta4 = sqrt13", t1 + t3 - t2 - t4 == SQRT13, ""),
        ("(theta1-theta3-theta2+theta4)^2 = -13+2sqrt13",
         (t1 - t3 - t2 + t4) ** 2 == QuadSqrt13(-13, 2).to_cyclotomic(), ""),
        ("(theta1-theta3+theta2-theta4)^2 = -13-2sqrt13",
         (t1 - t3 + t2 - t4) ** 2 == QuadSqrt13(-13, -2).to_cyclotomic(), ""),
    ]


def _e3():
    out = []
    for j in range(1, 5):
        t = const(f"theta{j}")
        val = t ** 4 + t ** 3 + t * t * 2 - t * 4 + 3
        out.append((f"theta{j} is a root of z^4+z^3+2z^2-4z+3", val.is_zero(), ""))
    return out


def _e4():
    h = Fraction(1, 2)
    f1 = [QuadSqrt13(1), QuadSqrt13(h, h), QuadSqrt13(5 * h, h)]
    f2 = [QuadSqrt13(1), QuadSqrt13(h, -h), QuadSqrt13(5 * h, -h)]
    target = [QuadSqrt13(c) for c in (1, 1, 2, -4, 3)]
    pairs = [(QuadSqrt13(2, 3), QuadSqrt13(-1, 1)), (QuadSqrt13(h, 5), QuadSqrt13(7, -h))]
    hom = all(
        (x * y).to_cyclotomic() == x.to_cyclotomic() * y.to_cyclotomic()
        and (x + y).to_cyclotomic() == x.to_cyclotomic() + y.to_cyclotomic()
        for x, y in pairs
    )
    return [
        ("quartic splits over Q(sqrt13)", _poly_mul(f1, f2) == target, ""),
        ("Q(sqrt13) embeds as a ring map", hom, ""),
    ]


def _e5():
    out = []
    for name, target in R_TARGETS.items():
        v = const(name)
        out.append((f"{name}^2 = {target.a} + {target.b} sqrt13", v * v == target.to_cyclotomic(), ""))
    out.append(("p1 = sqrt13 (zeta^2 + zeta^11)", const("p1") == SQRT13 * (zeta(2) + zeta(11)), ""))
    return out


EXACT_IDS = {"E1": _e1, "E2": _e2, "E3": _e3, "E4": _e4, "E5": _e5}


def verify_exact(eid):
    """Run one exact field check; returns a CheckResult in the "exact" suite."""
    import time

    from .errors import UnknownId
    from .reports import from_checks

    if eid not in EXACT_IDS:
        raise UnknownId(eid)
    t0 = time.perf_counter()
    checks = EXACT_IDS[eid]()
    return from_checks(eid, "exact", checks, elapsed_ms=int(round((time.perf_counter() - t0) * 1000)))
