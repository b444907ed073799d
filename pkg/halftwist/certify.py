# Copyright the halftwist authors
# Licensed under the MIT license

"""
Certificates for the order of a matrix over ℚ(ζ_N) in PGL_d.

g has finite projective order iff it is diagonalizable and every eigenvalue
ratio λ_i/λ_j is a root of unity. The ratios are the eigenvalues of X ↦ gXg⁻¹,
whose power sums are tr(g^k) tr(g^-k). Taking field traces of those power sums
gives the power sums of an integer polynomial, the norm of the conjugation
action's characteristic polynomial, so both conditions are decided with integer
polynomials and exact powers of g, without ever forming the d²×d² action.
"""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

import sympy

from .cyclotomic import (
    CyclotomicScalar,
    decide_sign,
    evaluate_laurent,
    galois_conjugate,
    galois_units,
    totient,
)
from .errors import DomainError, PrecisionExhausted
from .intpoly import IntegerPolynomial, polynomial_from_power_sums, strip_cyclotomic_factors
from .laurent import LaurentPolynomial
from .matrix import Matrix
from .rings import CyclotomicRing
from .skein import braid_word_matrix, two_strand_subrep
from .types import (
    BraidWord,
    CapExceeded,
    ClosureResult,
    FiniteGroup,
    NonCyclotomicRatio,
    OrderCertificate,
    ParabolicTrace,
    RootOfUnityChoice,
    TraceConjugate,
    Verdict,
)

LOG = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 250_000
MAX_NORM_DEGREE = 1024

# orders of q = A^4 for which M carries no infinite-order guarantee
EXCEPTIONAL_R = frozenset({1, 2, 4, 6, 10})

M_LETTERS = (1, 1, -2, -2)


class Certification(NamedTuple):
    """The matrix a certificate speaks about, with the certificate."""

    matrix: Matrix
    certificate: OrderCertificate


def trace_of_M_symbolic() -> LaurentPolynomial:
    """tr ρ(σ₁²σ₂⁻²) = 2 - q - q⁻¹ + q² + q⁻² with q = A⁴."""
    return LaurentPolynomial({0: 2, 4: -1, -4: -1, 8: 1, -8: 1})


def m_matrix(choice: RootOfUnityChoice) -> Matrix:
    """M = ρ(σ₁²σ₂⁻²) on the 2-dimensional module of 4 points."""
    return braid_word_matrix(BraidWord(2, M_LETTERS), CyclotomicRing.for_choice(choice))


def _conductor(g: Matrix) -> int:
    if not isinstance(g.ring, CyclotomicRing):
        raise DomainError("order certificates need a matrix over a cyclotomic field")
    return g.ring.conductor


def _trace_witness(t: CyclotomicScalar) -> TraceConjugate | None:
    """First Galois conjugate t' of t that is real with t'² - 4 > 0."""
    seen = set()
    for k in galois_units(t.conductor):
        conjugate = galois_conjugate(t, k)
        if conjugate in seen:
            continue
        seen.add(conjugate)
        if not conjugate.is_real():
            continue
        discriminant = conjugate * conjugate - 4
        sign, precision = decide_sign(discriminant)
        LOG.debug("σ_%d: t'² - 4 has sign %d (%d bits)", k, sign, precision)
        if sign > 0:
            return TraceConjugate(k, conjugate, discriminant, precision)
    return None


def _norm_polynomial(sums: Sequence[CyclotomicScalar]) -> IntegerPolynomial:
    """Integer polynomial whose roots are all Galois conjugates of the given roots."""
    return polynomial_from_power_sums([s.trace() for s in sums])


def _decide_from_norm(g: Matrix, norm: IntegerPolynomial) -> OrderCertificate:
    residual, factors = strip_cyclotomic_factors(norm)
    if not residual.is_constant():
        LOG.debug("eigenvalue ratio outside the roots of unity: %s", residual)
        return OrderCertificate.infinite(NonCyclotomicRatio(residual, tuple(factors)))
    period = lcm(*(k for k, _ in factors))
    if not (g**period).is_scalar():
        return OrderCertificate.infinite(ParabolicTrace(g.trace(), period))
    # diagonalizable with all ratios of order dividing the period
    for k in sympy.divisors(period):
        scalar = (g**k).scalar_value()
        if scalar is not None:
            return OrderCertificate.finite(int(k), scalar)
    raise AssertionError(f"g^{period} is scalar but no divisor power is")


def projective_order_2x2(g: Matrix, r: int | None = None) -> OrderCertificate:
    """
    Order of a determinant-1 2×2 matrix in PGL₂.

    Infinite order is witnessed by a Galois conjugate of the trace that is real
    and exceeds 2 in absolute value, or by a trace of ±2 on a non-scalar
    matrix. Otherwise the eigenvalue ratio λ² decides, through the norm of
    x² - (t² - 2)x + 1.
    """
    conductor = _conductor(g)
    if g.dim != 2:
        raise DomainError(f"expected a 2×2 matrix, got {g.dim}×{g.dim}")
    if g.determinant() != 1:
        raise DomainError("projective_order_2x2 needs det = 1, normalize first")
    if r is not None and r in EXCEPTIONAL_R:
        LOG.warning("r=%d carries no infinite-order guarantee for M", r)
    scalar = g.scalar_value()
    if scalar is not None:
        return OrderCertificate.finite(1, scalar)

    t = g.trace()
    try:
        witness = _trace_witness(t)
    except PrecisionExhausted as exc:
        return OrderCertificate.inconclusive(str(exc))
    if witness is not None:
        return OrderCertificate.infinite(witness)
    if t == 2 or t == -2:
        return OrderCertificate.infinite(ParabolicTrace(t, 1))

    s1 = t * t - 2
    sums = [CyclotomicScalar.rational(conductor, 2), s1]
    for _ in range(2, 2 * s1.phi + 1):
        sums.append(s1 * sums[-1] - sums[-2])
    return _decide_from_norm(g, _norm_polynomial(sums[1:]))


def _elementary_from_power_sums(sums: Sequence[CyclotomicScalar]) -> list[CyclotomicScalar]:
    """e_0 .. e_d from p_1 .. p_d."""
    one = CyclotomicScalar.rational(sums[0].conductor, 1)
    elementary = [one]
    for k in range(1, len(sums) + 1):
        total = one - one
        for i in range(1, k + 1):
            term = elementary[k - i] * sums[i - 1]
            total = total + term if i % 2 else total - term
        elementary.append(total * Fraction(1, k))
    return elementary


def _power_sums(elementary: Sequence[CyclotomicScalar], count: int) -> list[CyclotomicScalar]:
    """p_1 .. p_count from e_0 .. e_d by Newton's identities."""
    d = len(elementary) - 1
    zero = elementary[0] - elementary[0]
    sums: list[CyclotomicScalar] = []
    for k in range(1, count + 1):
        total = zero
        for i in range(1, min(k - 1, d) + 1):
            term = elementary[i] * sums[k - i - 1]
            total = total + term if i % 2 else total - term
        if k <= d:
            term = elementary[k] * k
            total = total + term if k % 2 else total - term
        sums.append(total)
    return sums


def _charpoly_elementary(g: Matrix) -> list[CyclotomicScalar]:
    """Elementary symmetric functions of the eigenvalues of an invertible g."""
    traces = []
    power = g
    for k in range(1, g.dim + 1):
        if k > 1:
            power = power @ g
        traces.append(power.trace())
    elementary = _elementary_from_power_sums(traces)  # type: ignore[arg-type]
    if elementary[-1].is_zero():
        raise DomainError("g is singular")
    return elementary


def _conjugation_norm(elementary: Sequence[CyclotomicScalar], degree: int) -> IntegerPolynomial:
    """
    Norm of the characteristic polynomial of X ↦ gXg⁻¹, from g's.

    The eigenvalues of g⁻¹ have elementary functions e_(d-i)/e_d, and the k-th
    power sum of the ratios is p_k(g) p_k(g⁻¹).
    """
    d = len(elementary) - 1
    det = elementary[d]
    inverse = [elementary[d - i] / det for i in range(d + 1)]
    forward = _power_sums(elementary, degree)
    backward = _power_sums(inverse, degree)
    return _norm_polynomial([a * b for a, b in zip(forward, backward)])


def projective_order_general(
    g: Matrix, max_norm_degree: int = MAX_NORM_DEGREE
) -> OrderCertificate:
    """
    Order of an invertible d×d matrix in PGL_d.

    The norm polynomial has degree φ(N) d²; past ``max_norm_degree`` the answer
    is Inconclusive.
    """
    conductor = _conductor(g)
    scalar = g.scalar_value()
    if scalar is not None:
        if scalar.is_zero():
            raise DomainError("g is singular")
        return OrderCertificate.finite(1, scalar)
    elementary = _charpoly_elementary(g)
    degree = totient(conductor) * g.dim * g.dim
    if degree > max_norm_degree:
        return OrderCertificate.inconclusive(
            f"norm polynomial of degree {degree} exceeds {max_norm_degree}"
        )
    LOG.debug("norm polynomial of degree %d for a %d×%d matrix", degree, g.dim, g.dim)
    return _decide_from_norm(g, _conjugation_norm(elementary, degree))


def excluded_r_set(r_max: int) -> set[int]:
    """
    The orders r of q for which M has no infinite-order witness at any
    primitive r-th root q.
    """
    if r_max < 3:
        raise DomainError(f"r_max must be >= 3, got {r_max}")
    symbolic = trace_of_M_symbolic()
    excluded = set()
    for r in range(3, r_max + 1):
        # A = ζ_4r makes q = A^4 = ζ_r; Galois conjugates reach every primitive q
        choice = RootOfUnityChoice(4 * r, 1)
        g = m_matrix(choice)
        t = evaluate_laurent(symbolic, choice)
        assert t == g.trace(), (r, t)
        if _trace_witness(t) is not None:
            continue
        if (t == 2 or t == -2) and not g.is_scalar():
            continue
        excluded.add(r)
    LOG.info("excluded r up to %d: %s", r_max, sorted(excluded))
    return excluded


def certify(g: Matrix, word: BraidWord | None = None, r: int | None = None) -> Certification:
    """
    Certify the projective order of g = ρ(word).

    Words in σ₁^±1, σ₂^±1 are first certified on the invariant span{D′₁, D′₂};
    infinite order there is infinite order for g. Everything else goes to the
    general certifier.
    """
    if (
        word is not None
        and word.letters
        and word.n >= 2
        and all(abs(letter) <= 2 for letter in word.letters)
    ):
        block = two_strand_subrep(word.n, word, ring=g.ring)
        if block.determinant() == 1:
            certificate = projective_order_2x2(block, r)
        else:
            certificate = projective_order_general(block)
        if certificate.verdict is Verdict.INFINITE or g.dim == 2:
            return Certification(block, certificate)
        LOG.debug("two-strand block of %s is %s, certifying in full", word, certificate.verdict)
    if g.dim == 2 and g.determinant() == 1:
        return Certification(g, projective_order_2x2(g, r))
    return Certification(g, projective_order_general(g))


def verify_certificate(g: Matrix, certificate: OrderCertificate) -> bool:
    """
    Re-check a Finite or Infinite certificate against g from its data alone.
    """
    if certificate.verdict is Verdict.FINITE:
        assert certificate.order is not None
        if certificate.scalar is None or certificate.scalar.is_zero():
            return False
        if (g**certificate.order).scalar_value() != certificate.scalar:
            return False
        return all(
            not (g**int(k)).is_scalar() for k in sympy.divisors(certificate.order)[:-1]
        )
    if certificate.verdict is Verdict.INCONCLUSIVE:
        return False

    witness = certificate.witness
    if isinstance(witness, TraceConjugate):
        if g.dim != 2 or g.determinant() != 1:
            return False
        if galois_conjugate(g.trace(), witness.k) != witness.trace:
            return False
        if not witness.trace.is_real():
            return False
        if witness.discriminant != witness.trace * witness.trace - 4:
            return False
        return decide_sign(witness.discriminant)[0] > 0
    if isinstance(witness, ParabolicTrace):
        if witness.trace != g.trace() or (g**witness.power).is_scalar():
            return False
        if g.dim == 2 and witness.power == 1 and g.determinant() == 1:
            return witness.trace == 2 or witness.trace == -2
        residual, factors = strip_cyclotomic_factors(_ratio_norm(g))
        return residual.is_constant() and all(witness.power % k == 0 for k, _ in factors)
    if isinstance(witness, NonCyclotomicRatio):
        if witness.residual.is_constant():
            return False
        if strip_cyclotomic_factors(witness.residual)[1]:
            return False
        # a non-cyclotomic factor of the ratio norm has a root off the roots of unity
        return _ratio_norm(g).to_sympy().rem(witness.residual.to_sympy()).is_zero
    return False


def _ratio_norm(g: Matrix) -> IntegerPolynomial:
    elementary = _charpoly_elementary(g)
    return _conjugation_norm(elementary, totient(_conductor(g)) * g.dim * g.dim)


def _canonical(g: Matrix) -> Matrix:
    """Scale g so its first nonzero entry in row-major order is 1."""
    for row in g.rows:
        for a in row:
            if a:
                return g if a.is_one() else g.scale(a.inverse())  # type: ignore[union-attr]
    raise DomainError("the zero matrix has no projective class")


def group_closure(generators: Sequence[Matrix], cap: int = DEFAULT_CLOSURE_CAP) -> ClosureResult:
    """
    Breadth-first closure of the subgroup of PGL_d generated by the given
    invertible matrices, up to ``cap`` projective classes.
    """
    if cap < 1:
        raise DomainError(f"cap must be positive, got {cap}")
    if not generators:
        return FiniteGroup(1)
    for g in generators:
        _conductor(g)
        if g.determinant().is_zero():  # type: ignore[union-attr]
            raise DomainError("group closure needs invertible generators")
    canonical_generators = [_canonical(g) for g in generators]
    start = _canonical(Matrix.identity(generators[0].ring, generators[0].dim))
    seen = {start}
    frontier = deque([start])
    while frontier:
        element = frontier.popleft()
        for g in canonical_generators:
            product = _canonical(element @ g)
            if product not in seen:
                seen.add(product)
                if len(seen) > cap:
                    LOG.info("closure passed %d classes, giving up", cap)
                    return CapExceeded(cap, len(seen))
                frontier.append(product)
        if len(seen) % 1000 == 0:
            LOG.debug("closure at %d classes, frontier %d", len(seen), len(frontier))
    return FiniteGroup(len(seen))
