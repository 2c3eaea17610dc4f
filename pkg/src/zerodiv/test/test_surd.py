# Copyright (c) 2024. See LICENSE for details.

"""
Tests for L{zerodiv._surd}.
"""

import math
from fractions import Fraction

from .._surd import (
    QuadraticSurd,
    isPerfectSquare,
    parseSurd,
    squarefreeDecomposition,
    surd,
)
from ._trial import TestCase


__all__ = ()


class DecompositionTests(TestCase):
    """
    Tests for L{squarefreeDecomposition} and L{isPerfectSquare}.
    """

    def test_examples(self) -> None:
        """
        M{72 = 6^2 * 2}; squarefree numbers are their own part.
        """
        self.assertEqual(squarefreeDecomposition(72), (6, 2))
        self.assertEqual(squarefreeDecomposition(329), (1, 329))
        self.assertEqual(squarefreeDecomposition(49), (7, 1))
        self.assertEqual(squarefreeDecomposition(0), (0, 1))
        self.assertRaises(ValueError, squarefreeDecomposition, -1)

    def test_perfectSquares(self) -> None:
        """
        The adjacency discriminant M{(p-2)^2 + 4p(p-1)^2} is a perfect
        square at p = 3 and at no other prime up to 13.
        """
        squares = [
            p
            for p in (3, 5, 7, 11, 13)
            if isPerfectSquare((p - 2) ** 2 + 4 * p * (p - 1) ** 2)
        ]
        self.assertEqual(squares, [3])
        self.assertFalse(isPerfectSquare(-4))


class NormalizationTests(TestCase):
    """
    Equal numbers have equal representations.
    """

    def test_perfectSquareCollapses(self) -> None:
        """
        A perfect-square radicand becomes a rational.
        """
        value = surd(1, 1, 49)
        self.assertTrue(value.isRational())
        self.assertEqual(value, 8)
        self.assertEqual(hash(value), hash(8))

    def test_squareFactorsExtracted(self) -> None:
        """
        M{sqrt(8) = 2 sqrt(2)}.
        """
        self.assertEqual(surd(0, 1, 8), surd(0, 2, 2))
        self.assertEqual(surd(0, 1, 8).radicand, 2)

    def test_commonDenominator(self) -> None:
        """
        L{QuadraticSurd.a}, C{b}, C{c} and C{D} present the number as
        M{(a + b sqrt(D)) / c}.
        """
        value = surd(3, -1, 329, 2)
        self.assertEqual((value.a, value.b, value.c, value.D), (3, -1, 2, 329))

    def test_zeroDenominator(self) -> None:
        """
        A zero denominator is a L{ZeroDivisionError}.
        """
        self.assertRaises(ZeroDivisionError, surd, 1, 1, 2, 0)


class ArithmeticTests(TestCase):
    """
    Field operations, sign and ordering.
    """

    def test_arithmetic(self) -> None:
        """
        Sums, products and quotients stay exact.
        """
        root = surd(0, 1, 5)
        self.assertEqual(root * root, 5)
        self.assertEqual((1 + root) * (1 - root), -4)
        self.assertEqual((2 + 2 * root) / 2, 1 + root)
        self.assertEqual(root - root, 0)
        self.assertEqual(
            surd(3, 1, 329, 2) + surd(3, -1, 329, 2),
            QuadraticSurd.rationalValue(3),
        )

    def test_incompatibleRadicands(self) -> None:
        """
        Two different irrational radicands cannot be combined.
        """
        self.assertRaises(ValueError, lambda: surd(0, 1, 2) + surd(0, 1, 3))

    def test_sign(self) -> None:
        """
        The sign is decided exactly, even when the parts nearly cancel.
        """
        self.assertEqual(surd(3, -1, 329, 2).sign(), -1)
        self.assertEqual(surd(3, 1, 329, 2).sign(), 1)
        self.assertEqual(surd(-18, 1, 329).sign(), 1)
        self.assertEqual(surd(-19, 1, 329).sign(), -1)
        self.assertEqual(surd(0).sign(), 0)

    def test_ordering(self) -> None:
        """
        Surds order like the reals they stand for and mix with rationals.
        """
        values = [surd(3, 1, 329, 2), surd(-1), surd(3, -1, 329, 2), surd(0)]
        self.assertEqual(
            sorted(values),
            [surd(3, -1, 329, 2), surd(-1), surd(0), surd(3, 1, 329, 2)],
        )
        self.assertLess(surd(10), surd(3, 1, 329, 2))
        self.assertEqual(abs(surd(3, -1, 329, 2)), surd(-3, 1, 329, 2))

    def test_orderingAcrossRadicands(self) -> None:
        """
        Surds with different radicands still compare exactly.
        """
        self.assertLess(surd(0, 1, 2), surd(0, 1, 3))
        self.assertGreater(surd(0, -1, 2), surd(0, -1, 3))
        self.assertLess(surd(0, -1, 2), surd(0, 1, 3))
        # 1 + sqrt(2) = 2.41421... and sqrt(6) = 2.44948...
        self.assertLess(surd(1, 1, 2), surd(0, 1, 6))
        # 3 - sqrt(2) = 1.58578... and sqrt(3) - 1/7 = 1.58919...
        self.assertLess(surd(3, -1, 2), surd(Fraction(-1, 7), 1, 3))
        self.assertEqual(surd(0, 1, 2).compare(surd(0, 1, 3)), -1)
        self.assertEqual(surd(1, 1, 5).compare(surd(1, 1, 5)), 0)
        self.assertEqual(
            sorted([surd(0, 1, 7), surd(0, 1, 2), surd(1), surd(0, 1, 3)]),
            [surd(1), surd(0, 1, 2), surd(0, 1, 3), surd(0, 1, 7)],
        )

    def test_float(self) -> None:
        """
        Conversion to float.
        """
        self.assertAlmostEqual(float(surd(3, 1, 329)), 3 + math.sqrt(329))
        self.assertEqual(float(surd(Fraction(1, 4))), 0.25)


class TextTests(TestCase):
    """
    Tests for C{str} and L{parseSurd}.
    """

    def test_render(self) -> None:
        """
        Rationals render as fractions; irrationals as C{(a+b*sqrt(D))/c}.
        """
        self.assertEqual(str(surd(404, 0, 1, 3)), "404/3")
        self.assertEqual(str(surd(-7)), "-7")
        self.assertEqual(str(surd(3, 1, 329)), "3+sqrt(329)")
        self.assertEqual(str(surd(3, -1, 329, 2)), "(3-sqrt(329))/2")
        self.assertEqual(str(surd(0, 2, 5)), "2*sqrt(5)")
        self.assertEqual(str(surd(0, -1, 5)), "-sqrt(5)")
        self.assertEqual(repr(surd(1)), "QuadraticSurd(1)")

    def test_parse(self) -> None:
        """
        L{parseSurd} reads back every rendering.
        """
        for value in [
            surd(404, 0, 1, 3),
            surd(-7),
            surd(3, 1, 329),
            surd(3, -1, 329, 2),
            surd(0, 2, 5),
            surd(0, -1, 5),
            surd(-5, 3, 7, 4),
        ]:
            self.assertEqual(parseSurd(str(value)), value)
