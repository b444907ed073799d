# Copyright the halftwist authors
# Licensed under the MIT license

from fractions import Fraction
from random import Random
from unittest import TestCase

from ..errors import DomainError
from ..intpoly import (
    IntegerPolynomial,
    polynomial_from_power_sums,
    reconstruct,
    strip_cyclotomic_factors,
)


class IntegerPolynomialTest(TestCase):
    def test_canonical(self):
        self.assertEqual((1, -3, 1), IntegerPolynomial((0, 0, 1, -3, 1)).coeffs)
        self.assertTrue(IntegerPolynomial((0,)).is_zero())
        self.assertEqual(2, IntegerPolynomial((1, -3, 1)).degree())
        self.assertTrue(IntegerPolynomial((5,)).is_constant())

    def test_render(self):
        for coeffs, expected in (
            ((1, -3, 1), "x^2 - 3*x + 1"),
            ((-1, 0, 0, 2), "-x^3 + 2"),
            ((4, 1), "4*x + 1"),
            ((), "0"),
        ):
            with self.subTest(expected):
                self.assertEqual(expected, str(IntegerPolynomial(coeffs)))

    def test_cyclotomic(self):
        for k, coeffs in (
            (1, (1, -1)),
            (2, (1, 1)),
            (4, (1, 0, 1)),
            (5, (1, 1, 1, 1, 1)),
            (6, (1, -1, 1)),
            (12, (1, 0, -1, 0, 1)),
        ):
            with self.subTest(k):
                self.assertEqual(coeffs, IntegerPolynomial.cyclotomic(k).coeffs)

    def test_strip(self):
        for coeffs, residual, factors in (
            ((1, 0, -1), (1,), [(1, 1), (2, 1)]),
            ((1, -3, 1), (1, -3, 1), []),
            ((1, 1, 1, 1, 1), (1,), [(5, 1)]),
            ((2, -4, 2), (2,), [(1, 2)]),
            ((1, 0, 0, 0, 0, 0, -1), (1,), [(1, 1), (2, 1), (3, 1), (6, 1)]),
        ):
            with self.subTest(coeffs):
                result, found = strip_cyclotomic_factors(IntegerPolynomial(coeffs))
                self.assertEqual(residual, result.coeffs)
                self.assertEqual(factors, found)

    def test_strip_zero(self):
        with self.assertRaises(DomainError):
            strip_cyclotomic_factors(IntegerPolynomial(()))

    def test_strip_reconstructs(self):
        rng = Random(40)
        for idx in range(15):
            p = IntegerPolynomial((rng.randint(1, 3), rng.randint(-5, 5), rng.choice((-7, 5, 7))))
            for _ in range(rng.randint(0, 3)):
                p = p * IntegerPolynomial.cyclotomic(rng.choice((1, 2, 3, 4, 5, 8, 12)))
            with self.subTest(idx):
                residual, factors = strip_cyclotomic_factors(p)
                self.assertEqual(p, reconstruct(residual, factors))
                self.assertEqual([], strip_cyclotomic_factors(residual)[1])

    def test_power_sums(self):
        # roots 2 and 1/2
        sums = [Fraction(2**k) + Fraction(1, 2**k) for k in range(1, 3)]
        self.assertEqual((2, -5, 2), polynomial_from_power_sums(sums).coeffs)
        # roots of x^2 - 3x + 1
        self.assertEqual((1, -3, 1), polynomial_from_power_sums([Fraction(3), Fraction(7)]).coeffs)
        # four primitive fifth roots
        self.assertEqual((1, 1, 1, 1, 1), polynomial_from_power_sums([Fraction(-1)] * 4).coeffs)
