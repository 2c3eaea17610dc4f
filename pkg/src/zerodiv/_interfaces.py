# Copyright (c) 2024. See LICENSE for details.

"""
Internal interface and exception definitions.

All Zope Interface classes should be imported from here so that type checking
works, since mypy doesn't otherwise get along with Zope Interface.
"""

from typing import Optional, Sequence, Tuple

from zope.interface import Attribute, Interface


Edge = Tuple[int, int]


class InvalidPrime(ValueError):
    """
    The given characteristic is not a prime this package can work with.
    """


class UnsupportedPrime(InvalidPrime):
    """
    The given prime is valid for construction, but not for verifying the
    closed forms (they assume an odd prime, bounded by the configured
    maximum).
    """


class NotAZeroDivisor(ValueError):
    """
    A ring element was expected to be a non-zero zero-divisor but was zero or
    a unit.
    """


class VertexOutOfRange(IndexError):
    """
    A vertex index does not name a vertex of the graph.
    """


class DisconnectedGraph(ValueError):
    """
    A distance-based quantity was requested for a disconnected graph.
    """


class AsymmetricMatrix(ValueError):
    """
    A symmetric eigensolver was handed a matrix which is not symmetric.
    """


class EnumerationCapacityExceeded(ValueError):
    """
    Exhaustive codeword enumeration was requested for a code whose dimension
    is above the enumeration cutoff; use the min-cut oracle instead.
    """


class ConsistencyGateFailure(Exception):
    """
    An internal consistency check failed.  This indicates a bug in this
    package, not a discrepancy in the closed forms being verified.

    @ivar gate: The name of the failed gate.
    @ivar p: The prime being verified, or L{None} for a check on an
        arbitrary graph.
    @ivar expected: The value the gate required.
    @ivar actual: The value that was computed.
    """

    def __init__(
        self, gate: str, p: Optional[int], expected: object, actual: object
    ):
        where = "" if p is None else f" at p={p}"
        super().__init__(
            f"consistency gate {gate!r} failed{where}: "
            f"expected {expected!r}, got {actual!r}"
        )
        self.gate = gate
        self.p = p
        self.expected = expected
        self.actual = actual

    def __reduce__(self) -> Tuple[type, Tuple[object, ...]]:
        return (type(self), (self.gate, self.p, self.expected, self.actual))


class IGraph(Interface):
    """
    A finite simple undirected graph on the vertices C{0 .. order - 1}.
    """

    order = Attribute("L{int} number of vertices.")

    edges = Attribute(
        """
        L{tuple} of C{(i, j)} vertex index pairs, each edge listed once.
        """
    )

    def neighbors(vertex: int) -> Sequence[int]:
        """
        The sorted neighbours of a vertex.

        @param vertex: A vertex index.

        @raise VertexOutOfRange: if C{vertex} is not a vertex index.
        """

    def adjacent(i: int, j: int) -> bool:
        """
        Are C{i} and C{j} joined by an edge?
        """


class IMinimumDistanceOracle(Interface):
    """
    A way of determining the minimum distance of the binary code spanned by
    the rows of a graph's incidence matrix.
    """

    name = Attribute("L{str} short name recorded as result provenance.")

    def minimumDistance(matrix: object, graph: IGraph) -> int:
        """
        Compute the minimum Hamming weight of a non-zero codeword.

        @param matrix: The L{zerodiv.BinaryMatrix} whose rows span the code.
        @param graph: The graph the matrix is the incidence matrix of.

        @return: the minimum distance.
        """


__all__ = ()
