# Copyright the halftwist authors
# Licensed under the MIT license

from random import Random
from unittest import TestCase

from ..certify import (
    certify,
    excluded_r_set,
    group_closure,
    m_matrix,
    projective_order_2x2,
    projective_order_general,
    trace_of_M_symbolic,
    verify_certificate,
)
from ..cyclotomic import (
    canonical_root_for_m,
    CyclotomicScalar,
    evaluate_laurent,
    q_order,
)
from ..errors import DomainError
from ..intpoly import IntegerPolynomial
from ..matrix import Matrix
from ..rings import CyclotomicRing
from ..skein import braid_generator_matrix, braid_word_matrix
from ..types import (
    BraidWord,
    CapExceeded,
    FiniteGroup,
    NonCyclotomicRatio,
    OrderCertificate,
    ParabolicTrace,
    RootOfUnityChoice,
    TraceConjugate,
    Verdict,
)
from .cyclotomic import random_scalar, zeta


def field(conductor: int) -> CyclotomicRing:
    return CyclotomicRing(conductor)


def diagonal(conductor: int, *values) -> Matrix:
    ring = field(conductor)
    return Matrix.from_rows(
        ring,
        [
            [ring.from_int(0) + value if i == j else ring.zero() for j in range(len(values))]
            for i, value in enumerate(values)
        ],
    )


class CertifyTest(TestCase):
    def test_trace_of_M(self):
        g = braid_word_matrix(BraidWord(2, (1, 1, -2, -2)))
        self.assertEqual(trace_of_M_symbolic(), g.trace())
        for text in ("12:1", "20:3", "40:1", "56:1"):
            choice = RootOfUnityChoice.parse(text)
            with self.subTest(text):
                self.assertEqual(
                    evaluate_laurent(trace_of_M_symbolic(), choice), m_matrix(choice).trace()
                )
                self.assertEqual(1, m_matrix(choice).determinant())

    def test_parabolic_M(self):
        # q = ζ_3 makes tr M = 2 although M is not scalar
        g = m_matrix(RootOfUnityChoice(12, 1))
        certificate = projective_order_2x2(g)
        self.assertIs(Verdict.INFINITE, certificate.verdict)
        self.assertIsInstance(certificate.witness, ParabolicTrace)
        self.assertEqual(2, certificate.witness.trace)
        self.assertTrue(verify_certificate(g, certificate))

    def test_trace_conjugate_M(self):
        g = m_matrix(RootOfUnityChoice(20, 1))
        certificate = projective_order_2x2(g, 5)
        self.assertIs(Verdict.INFINITE, certificate.verdict)
        witness = certificate.witness
        self.assertIsInstance(witness, TraceConjugate)
        self.assertEqual(3, witness.k)
        self.assertEqual(5, (witness.trace - 2) * (witness.trace - 2))
        self.assertTrue(verify_certificate(g, certificate))
        record = certificate.as_record("20:1", BraidWord(2, (1, 1, -2, -2)), 2)
        self.assertEqual("infinite", record["verdict"])
        self.assertEqual("trace-conjugate", record["witness"]["type"])
        self.assertEqual(3, record["witness"]["k"])

    def test_M_at_canonical_roots(self):
        for m in range(6, 17):
            choice = canonical_root_for_m(m)
            r = q_order(choice)
            g = m_matrix(choice)
            with self.subTest((m, str(choice))):
                certificate = projective_order_2x2(g, r)
                self.assertIs(Verdict.INFINITE, certificate.verdict)
                expected = ParabolicTrace if r == 3 else TraceConjugate
                self.assertIsInstance(certificate.witness, expected)
                self.assertTrue(verify_certificate(g, certificate))

    def test_forged_certificates(self):
        g = m_matrix(RootOfUnityChoice(20, 1))
        t = g.trace()
        self.assertFalse(
            verify_certificate(g, OrderCertificate.infinite(TraceConjugate(1, t, t * t - 4, 53)))
        )
        self.assertFalse(verify_certificate(g, OrderCertificate.infinite(ParabolicTrace(t, 1))))
        self.assertFalse(verify_certificate(g, OrderCertificate.finite(2, t)))
        self.assertFalse(verify_certificate(g, OrderCertificate.inconclusive("no")))

    def test_finite_diagonal(self):
        g = diagonal(8, zeta(8), zeta(8, -1))
        certificate = projective_order_2x2(g)
        self.assertIs(Verdict.FINITE, certificate.verdict)
        self.assertEqual(4, certificate.order)
        self.assertEqual(-1, certificate.scalar)
        self.assertTrue(verify_certificate(g, certificate))
        self.assertFalse(verify_certificate(g, OrderCertificate.finite(8, certificate.scalar)))

    def test_scalar_2x2(self):
        g = diagonal(5, zeta(5), zeta(5)) @ diagonal(5, zeta(5, 2), zeta(5, 2))
        certificate = projective_order_general(g)
        self.assertEqual((Verdict.FINITE, 1), (certificate.verdict, certificate.order))
        minus_one = diagonal(5, -1, -1)
        self.assertEqual(1, projective_order_2x2(minus_one).order)

    def test_2x2_domain(self):
        with self.assertRaises(DomainError):
            projective_order_2x2(diagonal(5, 2, 1))
        with self.assertRaises(DomainError):
            projective_order_2x2(diagonal(5, 1, 1, 1))
        with self.assertRaises(DomainError):
            projective_order_2x2(braid_word_matrix(BraidWord(2, (1,))))

    def test_excluded_r_set(self):
        self.assertEqual({4, 6, 10}, excluded_r_set(12))
        self.assertEqual({4, 6, 10}, excluded_r_set(50))
        with self.assertRaises(DomainError):
            excluded_r_set(2)

    def test_general_scalar(self):
        certificate = projective_order_general(diagonal(3, zeta(3), zeta(3)))
        self.assertIs(Verdict.FINITE, certificate.verdict)
        self.assertEqual(1, certificate.order)
        self.assertEqual(zeta(3), certificate.scalar)

    def test_general_singular(self):
        ring = field(5)
        for g in (
            Matrix.scalar(ring, 3, ring.zero()),
            Matrix.scalar(ring, 2, ring.zero()),
            diagonal(5, 1, 0, 2),
        ):
            with self.subTest(g.dim):
                with self.assertRaises(DomainError):
                    projective_order_general(g)
                with self.assertRaises(DomainError):
                    certify(g)
        zero = Matrix.scalar(ring, 3, ring.zero())
        self.assertFalse(verify_certificate(zero, OrderCertificate.finite(1, ring.zero())))

    def test_general_finite(self):
        g = diagonal(12, zeta(12), zeta(12, 4), zeta(12, 7))
        certificate = projective_order_general(g)
        # ratios ζ_12^3, ζ_12^6, ζ_12^3 and their inverses
        self.assertEqual((Verdict.FINITE, 4), (certificate.verdict, certificate.order))
        self.assertTrue(verify_certificate(g, certificate))

    def test_general_non_cyclotomic(self):
        g = diagonal(5, 2, CyclotomicScalar.rational(5, 1) / 2)
        certificate = projective_order_general(g)
        self.assertIs(Verdict.INFINITE, certificate.verdict)
        witness = certificate.witness
        self.assertIsInstance(witness, NonCyclotomicRatio)
        quadratic = IntegerPolynomial((4, -17, 4)).to_sympy()
        self.assertTrue(witness.residual.to_sympy().rem(quadratic).is_zero)
        self.assertTrue(verify_certificate(g, certificate))
        forged = NonCyclotomicRatio(IntegerPolynomial((1, -3, 1)), ())
        self.assertFalse(verify_certificate(g, OrderCertificate.infinite(forged)))

    def test_general_parabolic(self):
        ring = field(5)
        g = Matrix.from_rows(ring, [[ring.one(), ring.one()], [ring.zero(), ring.one()]])
        certificate = projective_order_general(g)
        self.assertIsInstance(certificate.witness, ParabolicTrace)
        self.assertTrue(verify_certificate(g, certificate))

    def test_general_limit(self):
        ring = CyclotomicRing.for_choice(RootOfUnityChoice(56, 1))
        g = braid_word_matrix(BraidWord(3, (1, 3)), ring)
        certificate = projective_order_general(g, max_norm_degree=100)
        self.assertIs(Verdict.INCONCLUSIVE, certificate.verdict)
        self.assertFalse(verify_certificate(g, certificate))

    def test_general_agrees_with_2x2_on_M(self):
        for text in ("12:1", "20:1", "40:1", "24:1"):
            g = m_matrix(RootOfUnityChoice.parse(text))
            with self.subTest(text):
                expected = projective_order_2x2(g)
                actual = projective_order_general(g)
                self.assertEqual(expected.verdict, actual.verdict)
                self.assertEqual(expected.order, actual.order)
                self.assertTrue(verify_certificate(g, actual))

    def test_general_agrees_with_2x2(self):
        rng = Random(70)
        ring = field(5)
        for idx in range(100):
            g = Matrix.identity(ring, 2)
            for _ in range(rng.randint(1, 3)):
                x = random_scalar(rng, 5, height=1)
                upper = rng.random() < 0.5
                e = Matrix.from_rows(
                    ring,
                    [
                        [ring.one(), x if upper else ring.zero()],
                        [ring.zero() if upper else x, ring.one()],
                    ],
                )
                g = g @ e
            with self.subTest(idx):
                self.assertEqual(1, g.determinant())
                expected = projective_order_2x2(g)
                actual = projective_order_general(g)
                self.assertEqual(expected.verdict, actual.verdict)
                self.assertEqual(expected.order, actual.order)
                self.assertTrue(verify_certificate(g, expected))
                self.assertTrue(verify_certificate(g, actual))

    def test_certify_fast_path(self):
        choice = RootOfUnityChoice(56, 1)
        ring = CyclotomicRing.for_choice(choice)
        word = BraidWord(3, (1, 1, -2, -2))
        g = braid_word_matrix(word, ring)
        result = certify(g, word, q_order(choice))
        self.assertEqual(2, result.matrix.dim)
        self.assertIs(Verdict.INFINITE, result.certificate.verdict)
        self.assertEqual(m_matrix(choice), result.matrix)
        self.assertTrue(verify_certificate(result.matrix, result.certificate))

    def test_certify_agrees_with_full_matrix(self):
        choice = RootOfUnityChoice(20, 1)
        ring = CyclotomicRing.for_choice(choice)
        word = BraidWord(3, (1, 1, -2, -2))
        g = braid_word_matrix(word, ring)
        fast = certify(g, word).certificate
        full = projective_order_general(g)
        self.assertIs(Verdict.INFINITE, fast.verdict)
        self.assertIs(Verdict.INFINITE, full.verdict)
        self.assertTrue(verify_certificate(g, full))

    def test_certify_falls_back(self):
        # σ_3 lies outside the two-strand block; eigenvalue ratio -A^4 has order 6
        choice = RootOfUnityChoice(12, 1)
        ring = CyclotomicRing.for_choice(choice)
        word = BraidWord(3, (1, 3))
        g = braid_word_matrix(word, ring)
        result = certify(g, word)
        self.assertEqual(5, result.matrix.dim)
        self.assertEqual(g, result.matrix)
        self.assertEqual((Verdict.FINITE, 6), (result.certificate.verdict, result.certificate.order))
        self.assertTrue(verify_certificate(g, result.certificate))

        # on 4 points E_3 = E_1, so σ_1 σ_3 = σ_1^2
        word = BraidWord(2, (1, 3))
        g = braid_word_matrix(word, ring)
        result = certify(g, word)
        self.assertEqual(g, result.matrix)
        self.assertEqual(braid_word_matrix(BraidWord(2, (1, 1)), ring), g)

    def test_certify_single_generator(self):
        choice = RootOfUnityChoice(40, 1)
        ring = CyclotomicRing.for_choice(choice)
        word = BraidWord(2, (1,))
        result = certify(braid_word_matrix(word, ring), word)
        self.assertEqual((Verdict.FINITE, 5), (result.certificate.verdict, result.certificate.order))

    def test_closure(self):
        ring = CyclotomicRing.for_choice(RootOfUnityChoice(40, 1))
        self.assertEqual(FiniteGroup(1), group_closure([]))
        self.assertEqual(FiniteGroup(1), group_closure([Matrix.identity(ring, 2)]))
        s1, s2, s3 = (braid_generator_matrix(2, i, ring=ring) for i in (1, 2, 3))
        self.assertEqual(FiniteGroup(5), group_closure([s1]))
        self.assertEqual(FiniteGroup(60), group_closure([s1, s2, s3]))
        self.assertEqual(FiniteGroup(60), group_closure([s3, s2, s1]))
        self.assertEqual(FiniteGroup(60), group_closure([s2, s1]))

    def test_closure_cap(self):
        ring = CyclotomicRing.for_choice(RootOfUnityChoice(12, 1))
        generators = [braid_generator_matrix(2, i, ring=ring) for i in (1, 2)]
        result = group_closure(generators, cap=10000)
        self.assertIsInstance(result, CapExceeded)
        self.assertEqual(10000, result.cap)
        self.assertGreater(result.explored, 10000)
        with self.assertRaises(DomainError):
            group_closure(generators, cap=0)

    def test_closure_domain(self):
        with self.assertRaises(DomainError):
            group_closure([braid_generator_matrix(2, 1)])
        with self.assertRaises(DomainError):
            group_closure([diagonal(5, 1, 0)])
