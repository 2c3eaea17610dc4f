# -*- test-case-name: zerodiv.test.test_codes -*-
# Copyright (c) 2024. See LICENSE for details.

"""
The binary code spanned by the rows of a graph's vertex-edge incidence
matrix.

Over GF(2) that row space is the cut space of the graph: a codeword is the
set of edges leaving some vertex subset.  Its dimension is M{|V|} minus the
number of components, and for a connected graph its minimum weight is the
edge connectivity.
"""

from typing import Iterable, List, Optional, Sequence

import attr
import numpy as np
from constantly import NamedConstant, Names
from zope.interface import implementer

from twisted.logger import Logger

from ._graph import ZdGraph, buildBruteforce, isConnected
from ._interfaces import (
    DisconnectedGraph,
    EnumerationCapacityExceeded,
    IGraph,
    IMinimumDistanceOracle,
    UnsupportedPrime,
)
from ._invariants import edgeConnectivity
from ._ring import validatePrime


__all__ = ()

_log = Logger()

DEFAULT_ENUMERATION_CUTOFF = 24

_WORD = 64
_POPCOUNT = np.array([bin(byte).count("1") for byte in range(256)], np.uint8)


def weight(word: int) -> int:
    """
    The Hamming weight of a codeword packed into an integer.
    """
    return bin(word).count("1")


@attr.s(auto_attribs=True, frozen=True)
class BinaryMatrix:
    """
    A matrix over GF(2), one Python integer per row; bit C{j} of a row is
    its entry in column C{j}.
    """

    rows: int
    cols: int
    bits: Sequence[int] = attr.ib(converter=tuple)

    def __attrs_post_init__(self) -> None:
        if len(self.bits) != self.rows:
            raise ValueError(f"{len(self.bits)} row words for {self.rows} rows")
        limit = 1 << self.cols
        for word in self.bits:
            if not 0 <= word < limit:
                raise ValueError(
                    f"row word {word:#x} exceeds {self.cols} columns"
                )

    @classmethod
    def fromRows(
        cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> "BinaryMatrix":
        """
        Build a matrix from rows of 0/1 entries.
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        words = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            words.append(
                sum(1 << j for j, entry in enumerate(row) if entry & 1)
            )
        return cls(len(rows), cols, words)

    def entry(self, row: int, col: int) -> int:
        return (self.bits[row] >> col) & 1

    def row(self, index: int) -> List[int]:
        return [self.entry(index, col) for col in range(self.cols)]

    def rowWeights(self) -> List[int]:
        return [weight(word) for word in self.bits]

    def columnWeights(self) -> List[int]:
        return [
            sum(self.entry(row, col) for row in range(self.rows))
            for col in range(self.cols)
        ]

    def toText(self) -> str:
        """
        One line per row of C{'0'} and C{'1'} characters.
        """
        return "".join(
            "".join(str(bit) for bit in self.row(index)) + "\n"
            for index in range(self.rows)
        )


def incidenceMatrix(graph: IGraph) -> BinaryMatrix:
    """
    The vertex-edge incidence matrix: rows in vertex order, columns in edge
    order.  For a L{ZdGraph} the canonical edge order lays the columns out in
    the C{[A_u, A_{u^2}]}, C{[A_{u^2}, A_{u^2}]}, C{[A_{u^2}, A_{u+u^2}]}
    blocks.
    """
    words = [0] * graph.order
    for column, (i, j) in enumerate(graph.edges):
        words[i] |= 1 << column
        words[j] |= 1 << column
    return BinaryMatrix(graph.order, len(graph.edges), words)


def rowSpaceBasis(matrix: BinaryMatrix) -> List[int]:
    """
    A basis of the row space with distinct leading bits, by Gaussian
    elimination on whole row words.
    """
    pivots: dict = {}
    for word in matrix.bits:
        while word:
            lead = word.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = word
                break
            word ^= pivots[lead]
    return [pivots[lead] for lead in sorted(pivots, reverse=True)]


def gf2Rank(matrix: BinaryMatrix) -> int:
    return len(rowSpaceBasis(matrix))


def _packedWords(vectors: Iterable[int], cols: int) -> np.ndarray:
    count = max(1, -(-cols // _WORD))
    mask = (1 << _WORD) - 1
    return np.array(
        [[(v >> (_WORD * w)) & mask for w in range(count)] for v in vectors],
        dtype=np.uint64,
    ).reshape(-1, count)


def _span(vectors: np.ndarray, width: int) -> np.ndarray:
    """
    Every combination of the given packed vectors, the empty one first.
    """
    table = np.zeros((1, width), dtype=np.uint64)
    for vector in vectors:
        table = np.concatenate([table, table ^ vector])
    return table


class MinimumDistanceMethod(Names):
    """
    How to determine the minimum distance of an incidence code.

    @cvar enumerate: Weigh every non-zero codeword.
    @cvar mincut: Take the edge connectivity of the generating graph.
    @cvar auto: L{enumerate} up to the enumeration cutoff, else L{mincut}.
    """

    auto = NamedConstant()
    enumerate = NamedConstant()
    mincut = NamedConstant()


@implementer(IMinimumDistanceOracle)
@attr.s(auto_attribs=True, frozen=True)
class EnumerationOracle:
    """
    Exhaustive minimum weight over all M{2^k - 1} non-zero codewords.

    The basis is split in two halves; the span of each half is tabulated as
    packed 64-bit words, and each word of the larger half is combined with
    the whole table of the smaller half at once.
    """

    cutoff: int = DEFAULT_ENUMERATION_CUTOFF
    name = "enumerate"

    def minimumDistance(
        self, matrix: BinaryMatrix, graph: Optional[IGraph] = None
    ) -> int:
        basis = rowSpaceBasis(matrix)
        k = len(basis)
        if k > self.cutoff:
            raise EnumerationCapacityExceeded(
                f"code dimension {k} exceeds the enumeration cutoff "
                f"{self.cutoff}; use the mincut method"
            )
        if k == 0:
            raise ValueError("the zero code has no minimum distance")
        packed = _packedWords(basis, matrix.cols)
        width = packed.shape[1]
        half = (k + 1) // 2
        inner = _span(packed[:half], width)
        outer = _span(packed[half:], width)
        best = matrix.cols + 1
        for index, prefix in enumerate(outer):
            combined = inner ^ prefix
            weights = _POPCOUNT[combined.view(np.uint8)].sum(
                axis=1, dtype=np.int64
            )
            if index == 0:
                # the all-zero combination is not a codeword of interest
                weights[0] = best
            best = min(best, int(weights.min()))
        _log.debug(
            "enumerated {count} codewords, minimum weight {d}",
            count=2**k - 1,
            d=best,
        )
        return best


@implementer(IMinimumDistanceOracle)
@attr.s(auto_attribs=True, frozen=True)
class MinCutOracle:
    """
    Minimum distance as the edge connectivity of the connected generating
    graph: the minimum-weight codewords of the cut space are minimum edge
    cuts.
    """

    name = "mincut"

    def minimumDistance(
        self, matrix: BinaryMatrix, graph: Optional[IGraph] = None
    ) -> int:
        if graph is None:
            raise ValueError("the mincut method needs the generating graph")
        if graph.order < 2 or not isConnected(graph):
            raise DisconnectedGraph("the mincut method needs a connected graph")
        if incidenceMatrix(graph) != matrix:
            raise ValueError("matrix is not the incidence matrix of the graph")
        return edgeConnectivity(graph)


def oracleFor(
    method: NamedConstant,
    dimension: int,
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
) -> IMinimumDistanceOracle:
    """
    Resolve a L{MinimumDistanceMethod} to an oracle.
    """
    if method is MinimumDistanceMethod.enumerate:
        return EnumerationOracle(cutoff)
    if method is MinimumDistanceMethod.mincut:
        return MinCutOracle()
    if method is MinimumDistanceMethod.auto:
        if dimension <= cutoff:
            return EnumerationOracle(cutoff)
        return MinCutOracle()
    raise ValueError(f"unknown minimum distance method {method!r}")


def minimumDistance(
    matrix: BinaryMatrix,
    method: NamedConstant = MinimumDistanceMethod.auto,
    graph: Optional[IGraph] = None,
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
) -> int:
    """
    The minimum distance of the code spanned by the rows of C{matrix}.

    @raise EnumerationCapacityExceeded: for C{enumerate} above the cutoff.
    """
    oracle = oracleFor(method, gf2Rank(matrix), cutoff)
    return oracle.minimumDistance(matrix, graph)


@attr.s(auto_attribs=True, frozen=True)
class CodeParams:
    """
    The parameters C{[n, k, d]} of a binary linear code, and which oracle
    determined C{d}.
    """

    n: int
    k: int
    d: int
    method: str = attr.ib(default="", eq=False)
    field: str = "GF(2)"

    def __attrs_post_init__(self) -> None:
        if not 0 < self.k <= self.n:
            raise ValueError(f"dimension {self.k} not in (0, {self.n}]")
        if not 1 <= self.d <= self.n:
            raise ValueError(f"distance {self.d} not in [1, {self.n}]")

    def __str__(self) -> str:
        return f"[{self.n}, {self.k}, {self.d}]_2"


def codeParametersForGraph(
    graph: IGraph,
    method: NamedConstant = MinimumDistanceMethod.auto,
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
) -> CodeParams:
    matrix = incidenceMatrix(graph)
    k = gf2Rank(matrix)
    oracle = oracleFor(method, k, cutoff)
    return CodeParams(
        n=matrix.cols,
        k=k,
        d=oracle.minimumDistance(matrix, graph),
        method=oracle.name,
    )


def codeParameters(
    p: int,
    method: NamedConstant = MinimumDistanceMethod.auto,
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
    graph: Optional[ZdGraph] = None,
) -> CodeParams:
    """
    The parameters of the incidence code of M{Gamma(R)}: length by edge
    count, dimension by elimination, distance by the chosen oracle.
    """
    validatePrime(p)
    if p < 3:
        raise UnsupportedPrime("code parameters are verified for p >= 3")
    if graph is None:
        graph = buildBruteforce(p)
    return codeParametersForGraph(graph, method, cutoff)
