# Copyright the halftwist authors
# Licensed under the MIT license

"""
Integer polynomials and removal of their cyclotomic factors.

An integer polynomial whose roots are all roots of unity is a product of
cyclotomic polynomials, so after stripping every Φ_k the residual has no root
of unity among its roots.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Sequence

import sympy
from sympy import Poly

from .errors import DomainError

LOG = logging.getLogger(__name__)

X = sympy.Symbol("x")

# trial divisions are skipped when a residue mod a prime of this size proves Φ_k ∤ p
FILTER_PRIME_BITS = 31


@dataclass(frozen=True)
class IntegerPolynomial:
    """
    Coefficients leading term first; the zero polynomial is ``()``.

    >>> str(IntegerPolynomial((1, -3, 1)))
    'x^2 - 3*x + 1'
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        object.__setattr__(self, "coeffs", coeffs[start:])

    @classmethod
    def from_sympy(cls, poly: Poly) -> IntegerPolynomial:
        return cls(tuple(int(c) for c in poly.all_coeffs()))

    @classmethod
    def cyclotomic(cls, k: int) -> IntegerPolynomial:
        return cls.from_sympy(_cyclotomic(k))

    def to_sympy(self) -> Poly:
        return Poly(list(self.coeffs) or [0], X, domain=sympy.ZZ)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        return IntegerPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    def __pow__(self, exponent: int) -> IntegerPolynomial:
        return IntegerPolynomial.from_sympy(self.to_sympy() ** exponent)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        degree = self.degree()
        for i, c in enumerate(self.coeffs):
            e = degree - i
            if c == 0:
                continue
            if parts:
                parts.append(" - " if c < 0 else " + ")
            elif c < 0:
                parts.append("-")
            magnitude = abs(c)
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                parts.append(str(magnitude))
            else:
                parts.append(mono if magnitude == 1 else f"{magnitude}*{mono}")
        return "".join(parts)


@lru_cache(maxsize=None)
def _cyclotomic(k: int) -> Poly:
    return sympy.cyclotomic_poly(k, X, polys=True)


@lru_cache(maxsize=None)
def _filter_root(k: int) -> tuple[int, int]:
    """A prime p ≡ 1 (mod k) and a primitive k-th root of unity w modulo p."""
    t = (1 << FILTER_PRIME_BITS) // k + 1
    while not sympy.isprime(k * t + 1):
        t += 1
    p = k * t + 1
    w = pow(int(sympy.primitive_root(p)), (p - 1) // k, p)
    return p, w


def _may_divide(coeffs: Sequence[int], k: int) -> bool:
    # Φ_k | f in ℤ[x] forces f(w) ≡ 0 (mod p) at a primitive k-th root w mod p
    p, w = _filter_root(k)
    acc = 0
    for c in coeffs:
        acc = (acc * w + c) % p
    return acc == 0


def strip_cyclotomic_factors(
    p: IntegerPolynomial,
) -> tuple[IntegerPolynomial, list[tuple[int, int]]]:
    """
    Divide out every Φ_k with φ(k) <= deg, for 1 <= k <= 2 deg^2.

    φ(k) >= sqrt(k/2) bounds the search. Returns the residual and the removed
    (k, multiplicity) pairs in increasing k.
    """
    if p.is_zero():
        raise DomainError("cannot strip cyclotomic factors of the zero polynomial")
    residual = p.to_sympy()
    coeffs = list(p.coeffs)
    degree = residual.degree()
    bound = 2 * degree * degree
    phis = [0, *sympy.sieve.totientrange(1, bound + 1)] if bound else [0]
    factors: list[tuple[int, int]] = []
    k = 1
    while k <= 2 * degree * degree:
        if phis[k] <= degree:
            multiplicity = 0
            while degree >= phis[k] and _may_divide(coeffs, k):
                quotient, remainder = residual.div(_cyclotomic(k), auto=False)
                if not remainder.is_zero:
                    break
                residual = quotient
                coeffs = [int(c) for c in residual.all_coeffs()]
                degree = residual.degree()
                multiplicity += 1
            if multiplicity:
                LOG.debug("stripped Φ_%d^%d, residual degree %d", k, multiplicity, degree)
                factors.append((k, multiplicity))
        k += 1
    return IntegerPolynomial.from_sympy(residual), factors


def reconstruct(residual: IntegerPolynomial, factors: Sequence[tuple[int, int]]) -> IntegerPolynomial:
    """residual × Π Φ_k^mult."""
    result = residual.to_sympy()
    for k, multiplicity in factors:
        result = result * _cyclotomic(k) ** multiplicity
    return IntegerPolynomial.from_sympy(result)


def polynomial_from_power_sums(sums: Sequence[Fraction]) -> IntegerPolynomial:
    """
    The primitive integer polynomial whose roots have the given power sums
    p_1, ..., p_D (Newton's identities), leading coefficient positive.
    """
    elementary = [Fraction(1)]
    for k in range(1, len(sums) + 1):
        total = Fraction(0)
        for i in range(1, k + 1):
            term = elementary[k - i] * sums[i - 1]
            total += term if i % 2 else -term
        elementary.append(total / k)
    monic = [e if k % 2 == 0 else -e for k, e in enumerate(elementary)]
    scale = reduce(lcm, (c.denominator for c in monic), 1)
    integral = [int(c * scale) for c in monic]
    content = reduce(gcd, integral, 0) or 1
    return IntegerPolynomial(tuple(c // content for c in integral))
