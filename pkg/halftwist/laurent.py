# Copyright the halftwist authors
# Licensed under the MIT license

"""
Sparse Laurent polynomials in the skein variable A, with integer coefficients.
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping

from .errors import DomainError

TERM_RE = re.compile(r"([+-])?(\d+)?(\*)?(A(?:\^(-?\d+))?)?")
SPLIT_TOKEN_RE = re.compile(r"[\w^*]\s+[\w^*]|\^-?\s")


class LaurentPolynomial:
    """
    An element of ℤ[A, A⁻¹], stored as a map from exponent to nonzero coefficient.

    Instances are immutable; all arithmetic returns new values.

    >>> str(LaurentPolynomial({3: -1, -1: 1}))
    '-A^3 + A^-1'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        self._terms: dict[int, int] = {
            int(e): int(c) for e, c in (terms or {}).items() if c != 0
        }
        self._hash: int | None = None

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> LaurentPolynomial:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> LaurentPolynomial:
        return cls({0: value})

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """
        Parse the canonical rendering produced by ``str()``.

        >>> LaurentPolynomial.parse("-A^3 + A^-1") == LaurentPolynomial({3: -1, -1: 1})
        True
        """
        if SPLIT_TOKEN_RE.search(text):
            raise DomainError(f"whitespace inside a term of {text!r}")
        source = "".join(text.split())
        if source == "0":
            return cls()
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(source):
            match = TERM_RE.match(source, pos)
            assert match is not None
            sign, digits, star, mono, exponent = match.groups()
            if match.end() == pos or not (digits or mono) or (star and not mono):
                raise DomainError(f"cannot parse Laurent polynomial {text!r}")
            if pos > 0 and not sign:
                raise DomainError(f"missing sign between terms in {text!r}")
            coeff = int(digits) if digits else 1
            if sign == "-":
                coeff = -coeff
            if mono is None:
                e = 0
            elif exponent is None:
                e = 1
            else:
                e = int(exponent)
            terms[e] = terms.get(e, 0) + coeff
            pos = match.end()
        return cls(terms)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no valuation")
        return min(self._terms)

    def bar(self) -> LaurentPolynomial:
        """The involution A ↦ A⁻¹."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def shift(self, exponent: int) -> LaurentPolynomial:
        """Multiply by A^exponent."""
        return LaurentPolynomial({e + exponent: c for e, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self._terms.keys() <= {0}:
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __sub__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPolynomial:
        return LaurentPolynomial.constant(other) - self

    def __mul__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            # only units of ℤ[A, A⁻¹] are invertible
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise DomainError(f"{self} is not a unit of Z[A, A^-1]")
            ((e, c),) = self._terms.items()
            return LaurentPolynomial({-e: c}) ** -exponent
        result = LaurentPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            if parts:
                parts.append(" - " if c < 0 else " + ")
            elif c < 0:
                parts.append("-")
            magnitude = abs(c)
            if e == 0:
                parts.append(str(magnitude))
                continue
            mono = "A" if e == 1 else f"A^{e}"
            parts.append(mono if magnitude == 1 else f"{magnitude}*{mono}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


A = LaurentPolynomial.monomial(1, 1)
A_INV = LaurentPolynomial.monomial(1, -1)
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()

# unknot value −A² − A⁻²
DELTA = LaurentPolynomial({2: -1, -2: -1})


def pm_polynomial(m: int) -> LaurentPolynomial:
    """
    P_m(A) = A^(2-m) (1 - A^4 + A^8 - ... + (-1)^(m-1) A^(4m-4)), the coefficient
    of E_i in ρ(σ_i^m) = P_m(A) E_i + A^(-m) Id.
    """
    if m < 1:
        raise DomainError(f"P_m is defined for m >= 1, got m={m}")
    return LaurentPolynomial({2 - m + 4 * k: (-1) ** k for k in range(m)})
