# Copyright the halftwist authors
# Licensed under the MIT license

"""
Ring selectors: the symbolic ring ℤ[A, A⁻¹], or ℚ(ζ_N) with A = ζ_N^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import laurent
from .cyclotomic import CyclotomicScalar, evaluate_laurent
from .errors import DomainError
from .laurent import LaurentPolynomial
from .types import RootOfUnityChoice

Scalar = Union[LaurentPolynomial, CyclotomicScalar]


class LaurentRing:
    name = "symbolic"
    is_field = False

    def zero(self) -> LaurentPolynomial:
        return laurent.ZERO

    def one(self) -> LaurentPolynomial:
        return laurent.ONE

    def from_int(self, value: int) -> LaurentPolynomial:
        return LaurentPolynomial.constant(value)

    def a_power(self, exponent: int) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(1, exponent)

    def embed(self, p: LaurentPolynomial) -> LaurentPolynomial:
        return p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentRing)

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return "LaurentRing()"


@dataclass(frozen=True)
class CyclotomicRing:
    """
    ℚ(ζ_N). With a root choice, the skein variable A is ζ_N^j; without one the
    ring only carries field arithmetic.
    """

    conductor: int
    choice: RootOfUnityChoice | None = None

    is_field = True

    def __post_init__(self) -> None:
        if self.choice is not None and self.choice.conductor != self.conductor:
            raise DomainError(f"root {self.choice} does not live in ℚ(ζ_{self.conductor})")

    @classmethod
    def for_choice(cls, choice: RootOfUnityChoice) -> CyclotomicRing:
        return cls(choice.conductor, choice)

    @property
    def name(self) -> str:
        return str(self.choice) if self.choice else f"Q(zeta_{self.conductor})"

    def zero(self) -> CyclotomicScalar:
        return CyclotomicScalar.rational(self.conductor, 0)

    def one(self) -> CyclotomicScalar:
        return CyclotomicScalar.rational(self.conductor, 1)

    def from_int(self, value: int) -> CyclotomicScalar:
        return CyclotomicScalar.rational(self.conductor, value)

    def _require_choice(self) -> RootOfUnityChoice:
        if self.choice is None:
            raise DomainError(f"{self.name} has no skein variable; pick a root N:j")
        return self.choice

    def a_power(self, exponent: int) -> CyclotomicScalar:
        choice = self._require_choice()
        return CyclotomicScalar.zeta_power(self.conductor, exponent * choice.exponent)

    def embed(self, p: LaurentPolynomial) -> CyclotomicScalar:
        return evaluate_laurent(p, self._require_choice())


Ring = Union[LaurentRing, CyclotomicRing]

SYMBOLIC = LaurentRing()


def ring_for(choice: RootOfUnityChoice | None) -> Ring:
    return SYMBOLIC if choice is None else CyclotomicRing.for_choice(choice)
