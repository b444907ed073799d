# Copyright the halftwist authors
# Licensed under the MIT license

"""
Exact arithmetic in cyclotomic fields ℚ(ζ_N).

Elements are stored in the power basis 1, ζ, ..., ζ^(φ(N)-1) modulo the N-th
cyclotomic polynomial, as integer numerators over one positive common
denominator, reduced so that the representation is canonical.

The sign of a real element is decided with rigorous interval arithmetic at
increasing precision; a zero value is detected exactly from the coefficients,
so refinement only ever runs on nonzero algebraic numbers and terminates.
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

import sympy
from mpmath import iv

from .errors import DomainError, PrecisionExhausted
from .laurent import LaurentPolynomial, pm_polynomial
from .types import RootOfUnityChoice

LOG = logging.getLogger(__name__)

MAX_PRECISION_BITS = 1 << 16
START_PRECISION_BITS = 64

# mpmath's interval context keeps its precision globally
_IV_LOCK = threading.Lock()


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of Φ_n, constant term first."""
    x = sympy.Symbol("x")
    poly = sympy.cyclotomic_poly(n, x, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Φ_n for 0 <= k < max(n, 2φ(n) - 1)."""
    phi = totient(n)
    cyclo = cyclotomic_coeffs(n)
    rows: list[tuple[int, ...]] = []
    current = [1] + [0] * (phi - 1)
    for _ in range(max(n, 2 * phi - 1)):
        rows.append(tuple(current))
        overflow = current[-1]
        current = [0] + current[:-1]
        if overflow:
            current = [c - overflow * cyclo[i] for i, c in enumerate(current)]
    return tuple(rows)


@lru_cache(maxsize=None)
def _basis_traces(n: int) -> tuple[int, ...]:
    """Tr(ζ_n^i) for the power basis: Ramanujan sums c_n(i)."""
    traces = []
    for i in range(totient(n)):
        g = gcd(n, i)
        traces.append(sum(int(sympy.mobius(n // d)) * d for d in sympy.divisors(g)))
    return tuple(traces)


def _units(n: int) -> list[int]:
    return [k for k in range(1, n) if gcd(k, n) == 1] or [1]


class CyclotomicScalar:
    """
    An element of ℚ(ζ_N) in canonical power-basis form.
    """

    __slots__ = ("conductor", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Fraction | int]) -> None:
        phi = totient(conductor)
        if len(coeffs) != phi:
            raise DomainError(f"ℚ(ζ_{conductor}) needs {phi} coefficients, got {len(coeffs)}")
        fractions = [Fraction(c) for c in coeffs]
        den = 1
        for f in fractions:
            den = den * f.denominator // gcd(den, f.denominator)
        self._set(conductor, [f.numerator * (den // f.denominator) for f in fractions], den)

    def _set(self, conductor: int, num: list[int], den: int) -> None:
        g = gcd(den, *num)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        self.conductor = conductor
        self._num = tuple(num)
        self._den = den
        self._hash: int | None = None

    @classmethod
    def _make(cls, conductor: int, num: list[int], den: int) -> CyclotomicScalar:
        obj = cls.__new__(cls)
        obj._set(conductor, num, den)
        return obj

    @classmethod
    def rational(cls, conductor: int, value: Fraction | int) -> CyclotomicScalar:
        value = Fraction(value)
        num = [0] * totient(conductor)
        num[0] = value.numerator
        return cls._make(conductor, num, value.denominator)

    @classmethod
    def zeta_power(cls, conductor: int, exponent: int) -> CyclotomicScalar:
        return cls._make(conductor, list(_power_table(conductor)[exponent % conductor]), 1)

    @classmethod
    def parse(cls, text: str) -> CyclotomicScalar:
        """
        Parse ``N=12:[1,0,-1/2,0]``.
        """
        head, sep, body = text.strip().partition(":")
        if not sep or not head.startswith("N=") or not body.startswith("["):
            raise DomainError(f"cannot parse cyclotomic scalar {text!r}")
        try:
            conductor = int(head[2:])
            items = body.strip("[]").split(",")
            return cls(conductor, [Fraction(item.strip()) for item in items])
        except ValueError as exc:
            raise DomainError(f"cannot parse cyclotomic scalar {text!r}") from exc

    @property
    def phi(self) -> int:
        return len(self._num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_one(self) -> bool:
        return self._den == 1 and self._num[0] == 1 and not any(self._num[1:])

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def _coerce(self, other: object) -> CyclotomicScalar | None:
        if isinstance(other, CyclotomicScalar):
            if other.conductor != self.conductor:
                raise DomainError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar.rational(self.conductor, other)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicScalar) and other.conductor != self.conductor:
            return False
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._num == rhs._num and self._den == rhs._den

    def __hash__(self) -> int:
        if self._hash is None:
            # agrees with hash() of the equal int or Fraction
            if self.is_rational():
                self._hash = hash(self.rational_value())
            else:
                self._hash = hash((self.conductor, self._num, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> CyclotomicScalar:
        return CyclotomicScalar._make(self.conductor, [-c for c in self._num], self._den)

    def __add__(self, other: CyclotomicScalar | int | Fraction) -> CyclotomicScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self._den == rhs._den:
            num = [a + b for a, b in zip(self._num, rhs._num)]
            return CyclotomicScalar._make(self.conductor, num, self._den)
        num = [a * rhs._den + b * self._den for a, b in zip(self._num, rhs._num)]
        return CyclotomicScalar._make(self.conductor, num, self._den * rhs._den)

    __radd__ = __add__

    def __sub__(self, other: CyclotomicScalar | int | Fraction) -> CyclotomicScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int | Fraction) -> CyclotomicScalar:
        return (-self) + other

    def __mul__(self, other: CyclotomicScalar | int | Fraction) -> CyclotomicScalar:
        if isinstance(other, int):
            return CyclotomicScalar._make(self.conductor, [c * other for c in self._num], self._den)
        if isinstance(other, Fraction):
            num = [c * other.numerator for c in self._num]
            return CyclotomicScalar._make(self.conductor, num, self._den * other.denominator)
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        phi = self.phi
        conv = [0] * (2 * phi - 1)
        for i, a in enumerate(self._num):
            if a:
                for j, b in enumerate(rhs._num):
                    if b:
                        conv[i + j] += a * b
        num = conv[:phi]
        table = _power_table(self.conductor)
        for k in range(phi, len(conv)):
            c = conv[k]
            if c:
                for i, t in enumerate(table[k]):
                    if t:
                        num[i] += c * t
        return CyclotomicScalar._make(self.conductor, num, self._den * rhs._den)

    __rmul__ = __mul__

    def __truediv__(self, other: CyclotomicScalar | int | Fraction) -> CyclotomicScalar:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return self * (1 / Fraction(other))
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __pow__(self, exponent: int) -> CyclotomicScalar:
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = CyclotomicScalar.rational(self.conductor, 1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> CyclotomicScalar:
        """
        1/x = Π_{σ≠1} σ(x) / N(x), with the norm N(x) = x Π_{σ≠1} σ(x) rational.
        """
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        if self.is_rational():
            return CyclotomicScalar.rational(self.conductor, 1 / self.rational_value())
        others = CyclotomicScalar.rational(self.conductor, 1)
        for k in _units(self.conductor)[1:]:
            others = others * galois_conjugate(self, k)
        norm = self * others
        assert norm.is_rational(), f"norm of {self} is not rational"
        return others * (1 / norm.rational_value())

    def conjugate(self) -> CyclotomicScalar:
        """Complex conjugation, ζ ↦ ζ^-1."""
        return galois_conjugate(self, -1)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def trace(self) -> Fraction:
        """Field trace Tr_{ℚ(ζ_N)/ℚ}."""
        traces = _basis_traces(self.conductor)
        return Fraction(sum(c * t for c, t in zip(self._num, traces)), self._den)

    def __str__(self) -> str:
        return f"N={self.conductor}:[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"CyclotomicScalar({str(self)!r})"


def galois_conjugate(s: CyclotomicScalar, k: int) -> CyclotomicScalar:
    """Apply the automorphism ζ_N ↦ ζ_N^k."""
    n = s.conductor
    if gcd(k, n) != 1:
        raise DomainError(f"gcd({k}, {n}) != 1, ζ ↦ ζ^{k} is not an automorphism")
    table = _power_table(n)
    num = [0] * s.phi
    for i, c in enumerate(s.numerators):
        if c:
            for idx, t in enumerate(table[(i * k) % n]):
                if t:
                    num[idx] += c * t
    return CyclotomicScalar._make(n, num, s.denominator)


def galois_units(conductor: int) -> list[int]:
    """The k in 1..N-1 with gcd(k, N) = 1, in increasing order."""
    return _units(conductor)


def _real_interval(s: CyclotomicScalar) -> iv.mpf:
    angle = 2 * iv.pi / s.conductor
    total = iv.mpf(0)
    for i, c in enumerate(s.numerators):
        if c:
            total += iv.mpf(c) * iv.cos(angle * i)
    return total / s.denominator


def decide_sign(
    s: CyclotomicScalar, max_precision: int = MAX_PRECISION_BITS
) -> tuple[int, int]:
    """
    Exact sign of a real cyclotomic number and the precision (bits) that decided it.
    """
    if s.is_zero():
        return 0, 0
    if not s.is_real():
        raise DomainError(f"{s} is not real")
    if s.is_rational():
        return (1 if s.rational_value() > 0 else -1), 0
    precision = START_PRECISION_BITS
    while precision <= max_precision:
        with _IV_LOCK:
            saved = iv.prec
            iv.prec = precision
            try:
                value = _real_interval(s)
                positive = (value > 0) is True
                negative = (value < 0) is True
            finally:
                iv.prec = saved
        if positive:
            return 1, precision
        if negative:
            return -1, precision
        LOG.debug("sign of %s undecided at %d bits", s, precision)
        precision *= 2
    raise PrecisionExhausted(f"sign of {s} undecided at {max_precision} bits")


def evaluate_laurent(p: LaurentPolynomial, choice: RootOfUnityChoice) -> CyclotomicScalar:
    """The image of p under A ↦ ζ_N^j."""
    n = choice.conductor
    table = _power_table(n)
    num = [0] * totient(n)
    for e, c in p.items():
        for idx, t in enumerate(table[(e * choice.exponent) % n]):
            if t:
                num[idx] += c * t
    return CyclotomicScalar._make(n, num, 1)


def pm_root_criterion(m: int, choice: RootOfUnityChoice) -> bool:
    """
    (-A^4)^m = 1 and -A^4 != 1, by exponent arithmetic.

    Summing the geometric series, P_m(A) = A^(2-m) (1 - u^m) / (1 - u) with
    u = -A^4 whenever u != 1. Writing -1 = ζ_2N^N and A^4 = ζ_2N^(8j) gives
    u = ζ_2N^(8j + N).
    """
    two_n = 2 * choice.conductor
    u = (8 * choice.exponent + choice.conductor) % two_n
    return (m * u) % two_n == 0 and u != 0


def is_pm_root(m: int, choice: RootOfUnityChoice) -> bool:
    if m < 1:
        raise DomainError(f"P_m is defined for m >= 1, got m={m}")
    vanishes = evaluate_laurent(pm_polynomial(m), choice).is_zero()
    assert vanishes == pm_root_criterion(m, choice), (m, choice)
    return vanishes


def q_order(choice: RootOfUnityChoice) -> int:
    """The multiplicative order r of q = A^4."""
    return choice.conductor // gcd(choice.conductor, 4)


def canonical_root_for_m(m: int) -> RootOfUnityChoice:
    """
    The root of unity A used for the power m: N = 12 for m = 6, 20 for m = 10,
    8m for odd m, 4m for the other even m; always j = 1.

    Every certificate built on this choice searches all Galois conjugates, so
    the specific primitive root is immaterial.
    """
    if m < 6:
        raise DomainError(f"the root table starts at m = 6, got m={m}")
    if m == 6:
        conductor = 12
    elif m == 10:
        conductor = 20
    elif m % 2:
        conductor = 8 * m
    else:
        conductor = 4 * m
    choice = RootOfUnityChoice(conductor, 1)
    r = q_order(choice)
    assert is_pm_root(m, choice), choice
    assert r >= 3 and r not in (4, 6, 10), (choice, r)
    return choice


def find_pm_root(m: int, max_conductor: int = 1000) -> RootOfUnityChoice:
    """Smallest conductor, then smallest exponent, with P_m(ζ_N^j) = 0."""
    for conductor in range(2, max_conductor + 1):
        for exponent in _units(conductor):
            choice = RootOfUnityChoice(conductor, exponent)
            if pm_root_criterion(m, choice) and is_pm_root(m, choice):
                return choice
    raise DomainError(f"no root of P_{m} with conductor <= {max_conductor}")
