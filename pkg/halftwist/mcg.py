# Copyright the halftwist authors
# Licensed under the MIT license

"""
Checks that ρ descends to the mapping class group M(0,2n) and that the m-th
power of a half-twist is trivial projectively at roots of P_m.
"""

from __future__ import annotations

import logging
from math import gcd

from .cyclotomic import CyclotomicScalar, is_pm_root
from .errors import DomainError, PreconditionError
from .laurent import LaurentPolynomial
from .rings import CyclotomicRing, Ring, SYMBOLIC
from .skein import braid_word_matrix
from .types import BraidWord, PowerCheck, RelatorReport, RootOfUnityChoice

LOG = logging.getLogger(__name__)

# symbolic R2 at n = 4 is a 56-letter word on a 14-dimensional module
SYMBOLIC_HALF_POINTS = 3


def birman_relator_words(n: int) -> tuple[BraidWord, BraidWord]:
    """
    R1 = σ1 σ2 ... σ(2n-1) σ(2n-1) ... σ2 σ1 and R2 = (σ1 σ2 ... σ(2n-1))^(2n).
    """
    if n < 2:
        raise DomainError(f"Birman's presentation needs 2n >= 4, got 2n={2 * n}")
    up = tuple(range(1, 2 * n))
    return BraidWord(n, up + up[::-1]), BraidWord(n, up * (2 * n))


def _relator_report(name: str, word: BraidWord, ring: Ring, power: int) -> RelatorReport:
    matrix = braid_word_matrix(word, ring)
    expected = ring.embed(LaurentPolynomial.monomial(-1, 3) ** power)
    scalar = matrix.scalar_value()
    report = RelatorReport(
        relator=name,
        n=word.n,
        ring=ring.name,
        is_scalar=scalar is not None,
        scalar=scalar,
        expected_scalar=expected,
    )
    if not report.passed:
        LOG.error("ρ(%s) failed at n=%d over %s: %s", name, word.n, ring.name, scalar)
    return report


def verify_birman(
    n: int, ring: Ring = SYMBOLIC, long_symbolic: bool = False
) -> tuple[RelatorReport, RelatorReport]:
    """
    ρ(R1) = (-A³)² Id and ρ(R2) = (-A³)^(2n) Id, checked exactly.
    """
    if ring == SYMBOLIC and n > SYMBOLIC_HALF_POINTS and not long_symbolic:
        raise DomainError(
            f"symbolic relators beyond 2n={2 * SYMBOLIC_HALF_POINTS} need long_symbolic"
        )
    r1, r2 = birman_relator_words(n)
    return _relator_report("R1", r1, ring, 2), _relator_report("R2", r2, ring, 2 * n)


def verify_power_scalar(n: int, m: int, choice: RootOfUnityChoice) -> PowerCheck:
    """
    Whether ρ(σ_i)^m = A^(-m) Id for every generator, at a root of P_m.
    """
    if not is_pm_root(m, choice):
        raise PreconditionError(f"is_pm_root({m}, {choice}) is false")
    ring = CyclotomicRing.for_choice(choice)
    expected = ring.a_power(-m)
    passed = True
    for i in range(1, 2 * n):
        scalar = braid_word_matrix(BraidWord(n, (i,) * m), ring).scalar_value()
        if scalar != expected:
            LOG.error("ρ(σ_%d)^%d is not A^-%d Id at %s", i, m, m, choice)
            passed = False
        # the h_i are conjugate, so the scalar cannot depend on i
        assert scalar is None or scalar == expected, (i, scalar)
    return PowerCheck(passed, expected)


def rescaled_scalar(n: int, m: int, choice: RootOfUnityChoice) -> CyclotomicScalar:
    """
    ((θA)^(-m))^(4n-2) for the rescaling θ^(4n-2) = (-A³)² = A⁶.

    Only exponents of A are combined, θ itself is never constructed:
    θ^(-m(4n-2)) A^(-m(4n-2)) = A^(-6m) A^(-m(4n-2)) = A^(-4m(n+1)).
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    theta_part = -6 * m
    a_part = -m * (4 * n - 2)
    exponent = (theta_part + a_part) * choice.exponent
    return CyclotomicScalar.zeta_power(choice.conductor, exponent)


def rescaled_scalar_check(n: int, m: int, choice: RootOfUnityChoice) -> int:
    """
    For odd m, P_m(A) = 0 forces A^(4m) = -1 and ((θA)^(-m))^(4n-2) = (-1)^(n+1).
    """
    if m % 2 == 0:
        raise DomainError(f"the rescaling identity is stated for odd m, got m={m}")
    if not is_pm_root(m, choice):
        raise PreconditionError(f"is_pm_root({m}, {choice}) is false")
    conductor = choice.conductor
    exponent = (-4 * m * (n + 1) * choice.exponent) % conductor
    assert (4 * m * choice.exponent) % conductor == conductor // 2, "A^(4m) != -1"
    assert gcd(exponent, conductor) in (conductor, conductor // 2)
    value = 1 if exponent == 0 else -1
    assert rescaled_scalar(n, m, choice) == value
    assert value == (-1) ** (n + 1)
    return value
