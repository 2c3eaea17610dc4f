# -*- test-case-name: zerodiv.test.test_surd -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Exact numbers of the form M{(a + b sqrt(D)) / c}.
"""

import math
from fractions import Fraction
from functools import total_ordering
from typing import Tuple, Union

import attr


__all__ = ()


Rational = Union[int, Fraction]


def squarefreeDecomposition(n: int) -> Tuple[int, int]:
    """
    Write C{n >= 0} as C{k * k * m} with C{m} squarefree.

    @return: C{(k, m)}.
    """
    if n < 0:
        raise ValueError(f"cannot take the square root of {n}")
    if n == 0:
        return 0, 1
    outside, inside = 1, n
    factor = 2
    while factor * factor <= inside:
        while inside % (factor * factor) == 0:
            inside //= factor * factor
            outside *= factor
        factor += 1
    return outside, inside


def isPerfectSquare(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@total_ordering
@attr.s(frozen=True, eq=False, repr=False)
class QuadraticSurd:
    """
    The real number M{rational + coefficient * sqrt(radicand)}.

    Instances are always normalized: the radicand is squarefree, and it is 1
    exactly when the coefficient is 0, so two equal numbers have equal
    fields.  Build them with L{surd} or L{QuadraticSurd.rationalValue}.
    """

    rational: Fraction = attr.ib()
    coefficient: Fraction = attr.ib()
    radicand: int = attr.ib()

    @classmethod
    def normalized(
        cls, rational: Rational, coefficient: Rational, radicand: int
    ) -> "QuadraticSurd":
        outside, inside = squarefreeDecomposition(radicand)
        rational = Fraction(rational)
        coefficient = Fraction(coefficient) * outside
        if inside == 1:
            rational += coefficient
            coefficient = Fraction(0)
        if coefficient == 0:
            inside = 1
        return cls(rational, coefficient, inside)

    @classmethod
    def rationalValue(cls, value: Rational) -> "QuadraticSurd":
        return cls(Fraction(value), Fraction(0), 1)

    def isRational(self) -> bool:
        return self.coefficient == 0

    @property
    def c(self) -> int:
        """
        The positive common denominator.
        """
        return math.lcm(self.rational.denominator, self.coefficient.denominator)

    @property
    def a(self) -> int:
        return int(self.rational * self.c)

    @property
    def b(self) -> int:
        return int(self.coefficient * self.c)

    @property
    def D(self) -> int:
        return self.radicand

    def _coerce(self, other: object) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadraticSurd.rationalValue(other)
        return NotImplemented

    def _commonRadicand(self, other: "QuadraticSurd") -> int:
        if self.isRational():
            return other.radicand
        if other.isRational() or other.radicand == self.radicand:
            return self.radicand
        raise ValueError(
            f"cannot combine sqrt({self.radicand}) and sqrt({other.radicand})"
        )

    def __add__(self, other: object) -> "QuadraticSurd":
        that = self._coerce(other)
        if that is NotImplemented:
            return NotImplemented
        radicand = self._commonRadicand(that)
        return QuadraticSurd.normalized(
            self.rational + that.rational,
            self.coefficient + that.coefficient,
            radicand,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.rational, -self.coefficient, self.radicand)

    def __sub__(self, other: object) -> "QuadraticSurd":
        that = self._coerce(other)
        if that is NotImplemented:
            return NotImplemented
        return self + (-that)

    def __rsub__(self, other: object) -> "QuadraticSurd":
        return (-self) + other

    def __mul__(self, other: object) -> "QuadraticSurd":
        that = self._coerce(other)
        if that is NotImplemented:
            return NotImplemented
        radicand = self._commonRadicand(that)
        return QuadraticSurd.normalized(
            self.rational * that.rational
            + self.coefficient * that.coefficient * radicand,
            self.rational * that.coefficient + self.coefficient * that.rational,
            radicand,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "QuadraticSurd":
        if other == 0:
            raise ZeroDivisionError("division of a surd by zero")
        return QuadraticSurd.normalized(
            self.rational / other, self.coefficient / other, self.radicand
        )

    def sign(self) -> int:
        """
        The exact sign, -1, 0 or 1, decided without floating point.
        """
        r, s = self.rational, self.coefficient
        if s == 0:
            return (r > 0) - (r < 0)
        if r == 0 or (r > 0) == (s > 0):
            return 1 if s > 0 else -1
        # r and s have opposite signs; compare r^2 with s^2 * D
        surdDominates = s * s * self.radicand > r * r
        if s > 0:
            return 1 if surdDominates else -1
        return -1 if surdDominates else 1

    def __abs__(self) -> "QuadraticSurd":
        return -self if self.sign() < 0 else self

    def compare(self, other: "QuadraticSurd") -> int:
        """
        -1, 0 or 1 as C{self} is less than, equal to or greater than
        C{other}, exactly, even when their radicands differ.
        """
        if self.isRational() or other.isRational():
            return (self - other).sign()
        if self.radicand == other.radicand:
            return (self - other).sign()
        # r + s*sqrt(D) against t*sqrt(E): compare signs, then squares
        left = QuadraticSurd.normalized(
            self.rational - other.rational, self.coefficient, self.radicand
        )
        right = QuadraticSurd(Fraction(0), other.coefficient, other.radicand)
        leftSign, rightSign = left.sign(), right.sign()
        if leftSign != rightSign:
            return 1 if leftSign > rightSign else -1
        return (left * left - right * right).sign() * leftSign

    def __lt__(self, other: object) -> bool:
        that = self._coerce(other)
        if that is NotImplemented:
            return NotImplemented
        return self.compare(that) < 0

    def __eq__(self, other: object) -> bool:
        that = self._coerce(other)
        if that is NotImplemented:
            return NotImplemented
        return (
            self.rational == that.rational
            and self.coefficient == that.coefficient
            and self.radicand == that.radicand
        )

    def __hash__(self) -> int:
        if self.isRational():
            return hash(self.rational)
        return hash((self.rational, self.coefficient, self.radicand))

    def __float__(self) -> float:
        return float(self.rational) + float(self.coefficient) * math.sqrt(
            self.radicand
        )

    def __repr__(self) -> str:
        return f"QuadraticSurd({self})"

    def __str__(self) -> str:
        """
        Render as C{"404/3"}, C{"-7"}, C{"3+sqrt(329)"} or
        C{"(3-sqrt(329))/2"}.
        """
        if self.isRational():
            return str(self.rational)
        a, b, c = self.a, self.b, self.c
        root = f"sqrt({self.radicand})"
        magnitude = root if abs(b) == 1 else f"{abs(b)}*{root}"
        if a:
            numerator = f"{a}{'+' if b > 0 else '-'}{magnitude}"
        else:
            numerator = magnitude if b > 0 else f"-{magnitude}"
        if c == 1:
            return numerator
        return f"({numerator})/{c}"


def surd(a: Rational, b: Rational = 0, D: int = 1, c: int = 1) -> QuadraticSurd:
    """
    The number M{(a + b sqrt(D)) / c}, normalized.
    """
    if c == 0:
        raise ZeroDivisionError("zero denominator")
    return QuadraticSurd.normalized(Fraction(a, 1) / c, Fraction(b, 1) / c, D)


def parseSurd(text: str) -> QuadraticSurd:
    """
    Parse the output of L{QuadraticSurd.__str__}.
    """
    compact = "".join(text.split())
    denominator = 1
    if compact.startswith("(") and ")/" in compact:
        inner, _, rest = compact[1:].rpartition(")/")
        compact, denominator = inner, int(rest)
    if "sqrt(" not in compact:
        return QuadraticSurd.rationalValue(Fraction(compact) / denominator)
    head, _, tail = compact.partition("sqrt(")
    radicand = int(tail.rstrip(")"))
    if head.endswith("*"):
        head = head[:-1]
    split = max(head.rfind("+"), head.rfind("-"))
    if split > 0:
        rationalPart, coefficientPart = head[:split], head[split:]
    else:
        rationalPart, coefficientPart = "0", head
    if coefficientPart in ("", "+"):
        coefficient = 1
    elif coefficientPart == "-":
        coefficient = -1
    else:
        coefficient = int(coefficientPart)
    return surd(int(rationalPart), coefficient, radicand, denominator)
