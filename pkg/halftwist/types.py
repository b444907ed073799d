# Copyright the halftwist authors
# Licensed under the MIT license

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from pathlib import Path
from typing import Any, NamedTuple, TYPE_CHECKING, Union

from .errors import DomainError
from .schema import record, witness_record

if TYPE_CHECKING:
    from .cyclotomic import CyclotomicScalar
    from .intpoly import IntegerPolynomial
    from .laurent import LaurentPolynomial

    Scalar = Union[LaurentPolynomial, CyclotomicScalar]


@dataclass(frozen=True)
class Options:
    out: Path | None = None
    long_symbolic: bool = False


@dataclass(frozen=True)
class RunConfig:
    points: int
    word: str = ""
    root: RootOfUnityChoice | None = None
    symbolic: bool = False
    m: int | None = None
    cap: int | None = None
    max_len: int | None = None
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.points < 2 or self.points % 2:
            raise DomainError(f"point count must be even and >= 2, got {self.points}")
        if self.symbolic and self.root is not None:
            raise DomainError("select either --symbolic or --root, not both")

    @property
    def n(self) -> int:
        return self.points // 2


@dataclass(frozen=True)
class RootOfUnityChoice:
    """A = ζ_N^j, a primitive N-th root of unity."""

    conductor: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.conductor < 2:
            raise DomainError(f"conductor must be >= 2, got {self.conductor}")
        if not 1 <= self.exponent < self.conductor:
            raise DomainError(f"exponent must satisfy 1 <= j < N, got {self}")
        if gcd(self.exponent, self.conductor) != 1:
            raise DomainError(f"ζ_{self.conductor}^{self.exponent} is not primitive")

    @classmethod
    def parse(cls, text: str) -> RootOfUnityChoice:
        try:
            conductor, _, exponent = text.partition(":")
            return cls(int(conductor), int(exponent or 1))
        except ValueError as exc:
            raise DomainError(f"expected N:j, got {text!r}") from exc

    def __str__(self) -> str:
        return f"{self.conductor}:{self.exponent}"


@dataclass(frozen=True)
class NoncrossingMatching:
    """
    A crossingless perfect matching of 2n boundary points.

    ``partner[i]`` is the point paired with ``i``, 0-based; user-facing output
    is 1-based.
    """

    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        size = len(self.partner)
        if size % 2:
            raise DomainError(f"odd number of points in {self.partner}")
        for i, p in enumerate(self.partner):
            if not 0 <= p < size or p == i or self.partner[p] != i:
                raise DomainError(f"{self.partner} is not a fixed-point-free involution")
        for a, pa in enumerate(self.partner):
            for b in range(a + 1, pa):
                if self.partner[b] > pa or self.partner[b] < a:
                    raise DomainError(f"{self.partner} has crossing chords")

    @classmethod
    def from_pairs(cls, pairs: list[tuple[int, int]]) -> NoncrossingMatching:
        """Build from 1-based pairs, e.g. [(1, 4), (2, 3)]."""
        partner = [-1] * (2 * len(pairs))
        for a, b in pairs:
            if not (1 <= a <= len(partner) and 1 <= b <= len(partner)):
                raise DomainError(f"pair {(a, b)} out of range")
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        return cls(tuple(partner))

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [(i + 1, p + 1) for i, p in enumerate(self.partner) if i < p]

    def disjoint_union(self, other: NoncrossingMatching) -> NoncrossingMatching:
        """Place ``other`` to the right of this matching."""
        offset = len(self.partner)
        return NoncrossingMatching(self.partner + tuple(p + offset for p in other.partner))

    def as_record(self) -> dict[str, Any]:
        return record("matching", n=self.n, pairs=[list(p) for p in self.pairs()])

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.pairs()) + "}"


@dataclass(frozen=True)
class BraidWord:
    """Letter ±i is σ_i^{±1}, 1 <= i <= 2n-1."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"braid words need n >= 1, got {self.n}")
        top = 2 * self.n - 1
        for letter in self.letters:
            if letter == 0 or abs(letter) > top:
                raise DomainError(f"letter {letter} outside ±1..±{top} for 2n={2 * self.n}")

    @classmethod
    def parse(cls, n: int, text: str) -> BraidWord:
        try:
            letters = tuple(int(token) for token in text.split())
        except ValueError as exc:
            raise DomainError(f"braid words are signed integers, got {text!r}") from exc
        return cls(n, letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise DomainError("cannot concatenate words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def as_record(self) -> dict[str, Any]:
        return record("word", n=self.n, letters=list(self.letters))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class RelatorReport:
    relator: str
    n: int
    ring: str
    is_scalar: bool
    scalar: Scalar | None
    expected_scalar: Scalar

    def __post_init__(self) -> None:
        assert self.is_scalar or self.scalar is None

    @property
    def passed(self) -> bool:
        return self.is_scalar and self.scalar == self.expected_scalar

    def as_record(self) -> dict[str, Any]:
        return record(
            "relator",
            relator=self.relator,
            n=self.n,
            ring=self.ring,
            is_scalar=self.is_scalar,
            scalar=None if self.scalar is None else str(self.scalar),
            expected_scalar=str(self.expected_scalar),
            **{"pass": self.passed},
        )


class PowerCheck(NamedTuple):
    passed: bool
    scalar: CyclotomicScalar


class Verdict(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TraceConjugate:
    """Under ζ ↦ ζ^k the trace t' is real with t'^2 - 4 > 0."""

    k: int
    trace: CyclotomicScalar
    discriminant: CyclotomicScalar
    precision: int

    def as_record(self) -> dict[str, Any]:
        return witness_record(
            "trace-conjugate",
            k=self.k,
            trace_coeffs=[str(c) for c in self.trace.coeffs],
            discriminant_coeffs=[str(c) for c in self.discriminant.coeffs],
            precision=self.precision,
        )


@dataclass(frozen=True)
class ParabolicTrace:
    """g^power is not scalar although all its eigenvalue ratios are 1."""

    trace: CyclotomicScalar
    power: int = 1

    def as_record(self) -> dict[str, Any]:
        return witness_record(
            "parabolic-trace",
            trace_coeffs=[str(c) for c in self.trace.coeffs],
            power=self.power,
        )


@dataclass(frozen=True)
class NonCyclotomicRatio:
    residual: IntegerPolynomial
    factors: tuple[tuple[int, int], ...]

    def as_record(self) -> dict[str, Any]:
        return witness_record(
            "non-cyclotomic-ratio",
            residual_poly=list(self.residual.coeffs),
            factors=[list(f) for f in self.factors],
        )


Witness = Union[TraceConjugate, ParabolicTrace, NonCyclotomicRatio]


@dataclass(frozen=True)
class OrderCertificate:
    verdict: Verdict
    order: int | None = None
    scalar: CyclotomicScalar | None = None
    witness: Witness | None = None
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.FINITE:
            assert self.order is not None and self.order >= 1 and self.scalar is not None
        elif self.verdict is Verdict.INFINITE:
            assert self.witness is not None
        else:
            assert self.reason

    @classmethod
    def finite(cls, order: int, scalar: CyclotomicScalar) -> OrderCertificate:
        return cls(Verdict.FINITE, order=order, scalar=scalar)

    @classmethod
    def infinite(cls, witness: Witness) -> OrderCertificate:
        return cls(Verdict.INFINITE, witness=witness)

    @classmethod
    def inconclusive(cls, reason: str) -> OrderCertificate:
        return cls(Verdict.INCONCLUSIVE, reason=reason)

    def as_record(self, ring: str, word: BraidWord | None, dimension: int) -> dict[str, Any]:
        return record(
            "certificate",
            ring=ring,
            word=None if word is None else list(word.letters),
            dimension=dimension,
            verdict=self.verdict.value,
            order=self.order,
            scalar=None if self.scalar is None else str(self.scalar),
            witness=None if self.witness is None else self.witness.as_record(),
            reason=self.reason,
        )


@dataclass(frozen=True)
class FiniteGroup:
    order: int


@dataclass(frozen=True)
class CapExceeded:
    cap: int
    explored: int


ClosureResult = Union[FiniteGroup, CapExceeded]


@dataclass(frozen=True)
class ReproduceRow:
    m: int
    n: int
    root: RootOfUnityChoice
    q_order: int
    pm_root: bool
    birman: bool
    power: bool
    power_scalar: CyclotomicScalar | None
    verdict: Verdict | None

    @property
    def passed(self) -> bool:
        return (
            self.pm_root
            and self.birman
            and self.power
            and self.verdict is Verdict.INFINITE
        )

    def as_record(self) -> dict[str, Any]:
        return record(
            "reproduce",
            m=self.m,
            n=self.n,
            ring=str(self.root),
            q_order=self.q_order,
            pm_root=self.pm_root,
            birman=self.birman,
            power=self.power,
            power_scalar=None if self.power_scalar is None else str(self.power_scalar),
            verdict=None if self.verdict is None else self.verdict.value,
            **{"pass": self.passed},
        )
