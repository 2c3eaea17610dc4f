# -*- test-case-name: zerodiv.test.test_ring -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Arithmetic in the chain ring M{R = F_p[u]/(u^3)}, whose elements are written
C{a + u*b + u^2*c} with residues C{a, b, c} modulo an odd prime C{p}.
"""

import re
from typing import List, Tuple

import attr
from constantly import NamedConstant, Names

from ._interfaces import InvalidPrime, NotAZeroDivisor


__all__ = ()


MAXIMUM_PRIME = 2**15


class VertexClass(Names):
    """
    The three classes the non-zero zero-divisors of C{R} fall into.

    @cvar Au: Non-zero multiples of C{u}, C{b*u} with C{b != 0}.
    @cvar Au2: Non-zero multiples of C{u^2}, C{c*u^2} with C{c != 0}.
    @cvar AuPlusU2: Mixed elements C{b*u + c*u^2} with C{b, c != 0}.
    """

    Au = NamedConstant()
    Au2 = NamedConstant()
    AuPlusU2 = NamedConstant()


def validatePrime(p: int, allowTwo: bool = True) -> int:
    """
    Check that C{p} is a prime below L{MAXIMUM_PRIME}.

    @param allowTwo: Whether the even prime is acceptable.

    @return: C{p}, unchanged.

    @raise InvalidPrime: if it isn't.
    """
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidPrime(f"characteristic must be an int, not {p!r}")
    if p < 2 or p >= MAXIMUM_PRIME:
        raise InvalidPrime(f"{p} is outside [2, {MAXIMUM_PRIME})")
    divisor = 2
    while divisor * divisor <= p:
        if p % divisor == 0:
            raise InvalidPrime(f"{p} is not prime (divisible by {divisor})")
        divisor += 1
    if p == 2 and not allowTwo:
        raise InvalidPrime("the chain ring needs an odd prime here, not 2")
    return p


@attr.s(auto_attribs=True, frozen=True, order=True)
class RingElem:
    """
    The element C{a + u*b + u^2*c} of C{R}.

    Residues are stored reduced; which prime they are reduced by is carried
    by the caller.
    """

    a: int
    b: int
    c: int

    def reducedBy(self, p: int) -> bool:
        """
        Are all residues in C{[0, p)}?
        """
        return all(0 <= r < p for r in (self.a, self.b, self.c))

    def isZero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def __str__(self) -> str:
        return formatElement(self)


ZERO = RingElem(0, 0, 0)
ONE = RingElem(1, 0, 0)


def _checked(x: RingElem, p: int) -> RingElem:
    if not x.reducedBy(p):
        raise ValueError(f"{x!r} is not reduced modulo {p}")
    return x


def ringAdd(x: RingElem, y: RingElem, p: int) -> RingElem:
    """
    Componentwise sum modulo C{p}.
    """
    _checked(x, p)
    _checked(y, p)
    return RingElem((x.a + y.a) % p, (x.b + y.b) % p, (x.c + y.c) % p)


def ringNeg(x: RingElem, p: int) -> RingElem:
    """
    Additive inverse.
    """
    _checked(x, p)
    return RingElem(-x.a % p, -x.b % p, -x.c % p)


def ringSub(x: RingElem, y: RingElem, p: int) -> RingElem:
    return ringAdd(x, ringNeg(y, p), p)


def ringMul(x: RingElem, y: RingElem, p: int) -> RingElem:
    """
    Multiply two elements as polynomials in C{u}, dropping every term of
    degree 3 or more.
    """
    _checked(x, p)
    _checked(y, p)
    return RingElem(
        (x.a * y.a) % p,
        (x.a * y.b + x.b * y.a) % p,
        (x.a * y.c + x.c * y.a + x.b * y.b) % p,
    )


def isUnit(x: RingElem) -> bool:
    """
    An element is invertible exactly when its constant term is non-zero.
    """
    return x.a != 0


def classify(x: RingElem) -> VertexClass:
    """
    Determine which of the three vertex classes a non-zero zero-divisor
    belongs to.

    @raise NotAZeroDivisor: if C{x} is zero or a unit.
    """
    if x.a != 0:
        raise NotAZeroDivisor(f"{formatElement(x)} is a unit")
    if x.b == 0 and x.c == 0:
        raise NotAZeroDivisor("zero is not a vertex")
    if x.c == 0:
        return VertexClass.Au
    if x.b == 0:
        return VertexClass.Au2
    return VertexClass.AuPlusU2


def nonzeroZeroDivisors(p: int) -> List[RingElem]:
    """
    All non-zero zero-divisors of C{R} in canonical order: C{A_u} by C{b},
    then C{A_{u^2}} by C{c}, then C{A_{u+u^2}} by C{(b, c)}.

    @raise InvalidPrime: if C{p} is not a supported prime.
    """
    validatePrime(p)
    nonzero = range(1, p)
    return (
        [RingElem(0, b, 0) for b in nonzero]
        + [RingElem(0, 0, c) for c in nonzero]
        + [RingElem(0, b, c) for b in nonzero for c in nonzero]
    )


def allElements(p: int) -> List[RingElem]:
    """
    Every element of C{R}, ordered by C{(a, b, c)}.
    """
    validatePrime(p)
    return [
        RingElem(a, b, c)
        for a in range(p)
        for b in range(p)
        for c in range(p)
    ]


def units(p: int) -> List[RingElem]:
    return [x for x in allElements(p) if isUnit(x)]


def annihilator(x: RingElem, p: int) -> List[RingElem]:
    """
    The elements C{y} with C{x * y = 0}, ordered by C{(a, b, c)}.
    """
    return [y for y in allElements(p) if ringMul(x, y, p).isZero()]


def _term(coefficient: int, variable: str) -> str:
    if coefficient == 1 and variable:
        return variable
    return f"{coefficient}{variable}"


def formatElement(x: RingElem) -> str:
    """
    Render an element the way the ring is usually written, for example
    C{"2u+u^2"}, C{"1+u"} or C{"0"}.
    """
    terms = [
        _term(coefficient, variable)
        for coefficient, variable in ((x.a, ""), (x.b, "u"), (x.c, "u^2"))
        if coefficient
    ]
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(\d*)(u(?:\^([12]))?)?$")


def parseElement(text: str, p: int) -> RingElem:
    """
    Parse the output of L{formatElement} (whitespace and repeated powers are
    tolerated; coefficients are reduced modulo C{p}).

    @raise ValueError: if C{text} is not a sum of such terms.
    """
    validatePrime(p)
    coefficients = [0, 0, 0]
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty ring element")
    for term in compact.split("+"):
        match = _TERM.match(term)
        if match is None or not term:
            raise ValueError(f"cannot parse term {term!r} of {text!r}")
        digits, variable, power = match.groups()
        if not digits and not variable:
            raise ValueError(f"cannot parse term {term!r} of {text!r}")
        coefficient = int(digits) if digits else 1
        degree = 0 if variable is None else int(power or 1)
        coefficients[degree] += coefficient
    a, b, c = (r % p for r in coefficients)
    return RingElem(a, b, c)


def classSizes(p: int) -> Tuple[int, int, int]:
    """
    The sizes of C{A_u}, C{A_{u^2}} and C{A_{u+u^2}}, counted by enumeration.
    """
    sizes = {
        VertexClass.Au: 0,
        VertexClass.Au2: 0,
        VertexClass.AuPlusU2: 0,
    }
    for x in nonzeroZeroDivisors(p):
        sizes[classify(x)] += 1
    return (
        sizes[VertexClass.Au],
        sizes[VertexClass.Au2],
        sizes[VertexClass.AuPlusU2],
    )
