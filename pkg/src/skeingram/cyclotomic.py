"""Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored as a polynomial in ``z = zeta_N`` of degree below
``phi(N)``, reduced modulo the N-th cyclotomic polynomial.  Coefficients are
kept as a tuple of integer numerators over one positive common denominator,
which makes the canonical form (and hence ``==``) exact and cheap.

    >>> z = embed_root(RootOfUnity(1, 4))
    >>> z * z == -1
    True
"""

from __future__ import annotations

import cmath
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "CycNumber",
    "RootOfUnity",
    "cyclotomic_polynomial",
    "embed_root",
    "invert",
    "conjugate",
    "to_complex",
    "lift",
    "euler_phi",
    "dumps",
]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    result = n
    for q in _prime_factors(n):
        result -= result // q
    return result


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (low degree first) when ``den`` is monic and divides ``num``."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for i, b in enumerate(den):
                if b:
                    num[k - dn + i] -= c * b
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Return the coefficients of Phi_n, lowest degree first.

    For squarefree ``n`` this divides ``x**n - 1`` by the product of
    ``Phi_d`` over the proper divisors ``d``.  Otherwise
    ``Phi_n(x) = Phi_r(x**(n // r))`` with ``r`` the radical of ``n``.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    rad = math.prod(_prime_factors(n))
    if rad != n:
        base = cyclotomic_polynomial(rad)
        step = n // rad
        out = [0] * ((len(base) - 1) * step + 1)
        for i, c in enumerate(base):
            out[i * step] = c
        return tuple(out)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _Modulus:
    """Reduction data for one N; built once per order and shared."""

    __slots__ = ("n_order", "degree", "tail")

    def __init__(self, n_order: int):
        phi = cyclotomic_polynomial(n_order)
        self.n_order = n_order
        self.degree = len(phi) - 1
        # x**degree == -sum(c * x**i): only the nonzero lower terms matter
        self.tail = tuple((i, -c) for i, c in enumerate(phi[:-1]) if c)

    def reduce(self, v: list[int]) -> list[int]:
        deg = self.degree
        tail = self.tail
        for k in range(len(v) - 1, deg - 1, -1):
            c = v[k]
            if c:
                base = k - deg
                for i, b in tail:
                    v[base + i] += c * b
        if len(v) < deg:
            v.extend([0] * (deg - len(v)))
        return v[:deg]


@lru_cache(maxsize=None)
def _modulus(n_order: int) -> _Modulus:
    if n_order < 1:
        raise ValueError(f"n_order must be positive, got {n_order}")
    return _Modulus(n_order)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = den
    for a in num:
        if a:
            g = math.gcd(g, a)
            if g == 1:
                break
    if g == den and not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [a // g for a in num]
        den //= g
    return tuple(num), den


class CycNumber:
    """Element of Q(zeta_N) in canonical reduced form.

    ``CycNumber(N, coeffs)`` accepts any finite sequence of ints or
    Fractions (lowest power first) and reduces it modulo Phi_N.
    Instances are immutable and hashable.
    """

    __slots__ = ("n_order", "_num", "_den", "_hash")

    def __init__(self, n_order: int, coeffs=()):
        mod = _modulus(n_order)
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in coeffs]
        self.n_order = n_order
        self._num, self._den = _normalize(mod.reduce(ints), den)
        self._hash = None

    @classmethod
    def _raw(cls, n_order: int, num: tuple[int, ...], den: int) -> CycNumber:
        obj = object.__new__(cls)
        obj.n_order = n_order
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def _from_ints(cls, n_order: int, ints: list[int], den: int = 1) -> CycNumber:
        num, den = _normalize(_modulus(n_order).reduce(ints), den)
        return cls._raw(n_order, num, den)

    @classmethod
    def from_int(cls, n_order: int, value) -> CycNumber:
        value = Fraction(value)
        deg = _modulus(n_order).degree
        num = [0] * deg
        num[0] = value.numerator
        return cls._raw(n_order, tuple(num), value.denominator)

    @classmethod
    def zero(cls, n_order: int) -> CycNumber:
        return cls.from_int(n_order, 0)

    @classmethod
    def one(cls, n_order: int) -> CycNumber:
        return cls.from_int(n_order, 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    # -- coercion ------------------------------------------------------

    def _coerce(self, other) -> CycNumber:
        if isinstance(other, CycNumber):
            if other.n_order != self.n_order:
                raise ValueError(
                    f"mismatched cyclotomic orders {self.n_order} and {other.n_order}"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycNumber.from_int(self.n_order, other)
        return NotImplemented

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [a + b for a, b in zip(self._num, other._num)]
            return CycNumber._raw(self.n_order, *_normalize(num, d1))
        g = math.gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        num = [a * m1 + b * m2 for a, b in zip(self._num, other._num)]
        return CycNumber._raw(self.n_order, *_normalize(num, d1 * m1))

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        return CycNumber._raw(self.n_order, tuple(-a for a in self._num), self._den)

    def __pos__(self) -> CycNumber:
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational():
            c = other._num[0]
            return CycNumber._raw(
                self.n_order, *_normalize([a * c for a in self._num], self._den * other._den)
            )
        if self.is_rational():
            return other * self
        xs = [(i, a) for i, a in enumerate(self._num) if a]
        ys = [(j, b) for j, b in enumerate(other._num) if b]
        prod = [0] * (2 * len(self._num))
        for i, a in xs:
            for j, b in ys:
                prod[i + j] += a * b
        return CycNumber._from_ints(self.n_order, prod, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * invert(self)

    def __pow__(self, k: int) -> CycNumber:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else invert(self)
        k = abs(k)
        result = CycNumber.one(self.n_order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNumber):
            return (
                self.n_order == other.n_order
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            return (
                self.is_rational()
                and self._num[0] == other.numerator
                and self._den == other.denominator
            )
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.n_order, self._num, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- display / serialization ---------------------------------------

    def __repr__(self) -> str:
        return f"CycNumber({self.n_order}, {self})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "n_order": self.n_order,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> CycNumber:
        return cls(data["n_order"], [Fraction(a, b) for a, b in data["coeffs"]])

    def __complex__(self) -> complex:
        return to_complex(self)


_PAIR = re.compile(r"\[\s*(-?\d+),\s*(\d+)\s*\]")


def dumps(obj, indent: int | None = 2) -> str:
    """``json.dumps`` that keeps ``[num, den]`` coefficient pairs on one line."""
    text = json.dumps(obj, indent=indent)
    return text if indent is None else _PAIR.sub(r"[\1, \2]", text)


@dataclass(frozen=True)
class RootOfUnity:
    """``zeta_N ** exponent`` with the exponent kept in ``[0, N)``."""

    exponent: int
    n_order: int

    def __post_init__(self):
        if self.n_order < 1:
            raise ValueError(f"n_order must be positive, got {self.n_order}")
        object.__setattr__(self, "exponent", self.exponent % self.n_order)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        if other.n_order != self.n_order:
            raise ValueError("mismatched root-of-unity orders")
        return RootOfUnity(self.exponent + other.exponent, self.n_order)

    def __pow__(self, k: int) -> RootOfUnity:
        return RootOfUnity(self.exponent * k, self.n_order)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(-self.exponent, self.n_order)

    def __neg__(self) -> RootOfUnity:
        if self.n_order % 2:
            raise ValueError("-1 is not a power of zeta_N for odd N")
        return RootOfUnity(self.exponent + self.n_order // 2, self.n_order)

    @property
    def order(self) -> int:
        return self.n_order // math.gcd(self.exponent, self.n_order)

    def is_one(self) -> bool:
        return self.exponent == 0


@lru_cache(maxsize=65536)
def _embed(exponent: int, n_order: int) -> CycNumber:
    deg = _modulus(n_order).degree
    if exponent < deg:
        num = [0] * deg
        num[exponent] = 1
        return CycNumber._raw(n_order, tuple(num), 1)
    v = [0] * (exponent + 1)
    v[exponent] = 1
    return CycNumber._from_ints(n_order, v)


def embed_root(r: RootOfUnity) -> CycNumber:
    """The field element ``zeta_N ** r.exponent``."""
    return _embed(r.exponent, r.n_order)


def _poly_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        if c:
            q[k] = c
            for i, bi in enumerate(b):
                if bi:
                    a[k + i] -= c * bi
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_sub_mul(s0: list[Fraction], q: list[Fraction], s1: list[Fraction]) -> list[Fraction]:
    out = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, qi in enumerate(q):
        if qi:
            for j, sj in enumerate(s1):
                if sj:
                    out[i + j] -= qi * sj
    return _poly_trim(out)


def invert(x: CycNumber) -> CycNumber:
    """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    n = x.n_order
    if x.is_rational():
        return CycNumber.from_int(n, Fraction(x._den, x._num[0]))
    # track only the cofactor of x: s * x == r (mod Phi_N)
    r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
    r1 = _poly_trim([Fraction(a) for a in x._num])
    s0: list[Fraction] = []
    s1 = [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
        # monic remainders keep the rationals small
        lead = r1[-1]
        r1 = [c / lead for c in r1]
        s1 = [c / lead for c in s1]
    # r1 is the constant 1 since Phi_N is irreducible
    c = r1[0]
    return CycNumber(n, [si * x._den / c for si in s1])


def conjugate(x: CycNumber) -> CycNumber:
    """Complex conjugation, i.e. the Galois automorphism zeta_N -> zeta_N**-1."""
    n = x.n_order
    v = [0] * n
    for i, a in enumerate(x._num):
        if a:
            v[(-i) % n] += a
    return CycNumber._from_ints(n, v, x._den)


def lift(x: CycNumber, n_order: int) -> CycNumber:
    """Embed Q(zeta_M) into Q(zeta_N) for M | N, sending zeta_M to zeta_N**(N/M)."""
    m = x.n_order
    if n_order % m:
        raise ValueError(f"Q(zeta_{m}) does not embed in Q(zeta_{n_order})")
    step = n_order // m
    v = [0] * ((len(x._num) - 1) * step + 1)
    for i, a in enumerate(x._num):
        v[i * step] = a
    return CycNumber._from_ints(n_order, v, x._den)


def to_complex(x: CycNumber, root_choice: int = 1) -> complex:
    """Approximate value under zeta_N -> exp(2*pi*i*root_choice/N).

    Floating point only; never use the result for equality decisions.
    Small values with large power-basis coefficients cancel badly in
    double precision, so those are re-evaluated with enough extra bits
    that the returned complex is accurate to double precision.
    """
    n = x.n_order
    if math.gcd(root_choice, n) != 1:
        raise ValueError(f"root_choice {root_choice} is not coprime to {n}")
    if x.is_zero():
        return 0j
    terms = [(i, a) for i, a in enumerate(x._num) if a]
    total = 0j
    mass = 0.0
    for i, a in terms:
        c = float(Fraction(a, x._den))
        total += c * cmath.exp(2j * math.pi * ((root_choice * i) % n) / n)
        mass += abs(c)
    if abs(total) > mass * 1e-6:
        return total
    return _to_complex_extended(terms, x._den, root_choice, n)


def _to_complex_extended(terms, den: int, root_choice: int, n: int) -> complex:
    import mpmath

    bits = 64 + max(abs(a) for _, a in terms).bit_length()
    while True:
        with mpmath.workprec(bits):
            mass = mpmath.fsum(abs(a) for _, a in terms) / den
            total = mpmath.fsum(
                a * mpmath.expjpi(mpmath.mpf(2 * ((root_choice * i) % n)) / n) for i, a in terms
            ) / den
            # rounding error is about mass * 2**-bits; keep 60 clean bits
            if abs(total) > mass * mpmath.ldexp(1, 60 - bits):
                return complex(total)
        bits *= 2
