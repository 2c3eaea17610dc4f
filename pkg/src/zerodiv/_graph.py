# -*- test-case-name: zerodiv.test.test_graph -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Construction of the zero-divisor graph M{Gamma(R)}, by brute force from the
ring multiplication and structurally from its block description, plus the
generic simple graph the invariant algorithms also run on.
"""

import csv
from collections import deque
from io import StringIO
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import attr
from constantly import ValueConstant, Values
from zope.interface import implementer

from twisted.logger import Logger

from ._interfaces import Edge, IGraph, NotAZeroDivisor, VertexOutOfRange
from ._ring import (
    RingElem,
    VertexClass,
    classify,
    formatElement,
    nonzeroZeroDivisors,
    ringMul,
    validatePrime,
)


__all__ = ()

_log = Logger()

Adjacency = Tuple[Tuple[int, ...], ...]


class EdgeBlock(Values):
    """
    The three kinds of edge of M{Gamma(R)}, in incidence column order.
    """

    UnitSquare = ValueConstant("Au-Au2")
    SquareSquare = ValueConstant("Au2-Au2")
    SquareMixed = ValueConstant("Au2-AuPlusU2")


_BLOCK_RANK = {
    EdgeBlock.UnitSquare: 0,
    EdgeBlock.SquareSquare: 1,
    EdgeBlock.SquareMixed: 2,
}


def _adjacencyFromEdges(order: int, edges: Iterable[Edge]) -> Adjacency:
    neighbors: List[List[int]] = [[] for _ in range(order)]
    for i, j in edges:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not (0 <= i < order and 0 <= j < order):
            raise VertexOutOfRange(f"edge {(i, j)} leaves 0..{order - 1}")
        neighbors[i].append(j)
        neighbors[j].append(i)
    return tuple(tuple(sorted(each)) for each in neighbors)


def _normalizedEdges(edges: Iterable[Edge]) -> Tuple[Edge, ...]:
    return tuple((min(i, j), max(i, j)) for i, j in edges)


class _Neighborhoods:
    """
    Shared L{IGraph} behaviour for graphs keeping sorted neighbour tuples.
    """

    order: int
    adjacency: Adjacency

    def neighbors(self, vertex: int) -> Sequence[int]:
        if not 0 <= vertex < self.order:
            raise VertexOutOfRange(
                f"vertex {vertex} not in 0..{self.order - 1}"
            )
        return self.adjacency[vertex]

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._neighborSets()[i]

    def _neighborSets(self) -> Tuple[frozenset, ...]:
        cached: Optional[Tuple[frozenset, ...]] = self.__dict__.get(
            "_sets"
        )
        if cached is None:
            cached = tuple(frozenset(each) for each in self.adjacency)
            object.__setattr__(self, "_sets", cached)
        return cached


@implementer(IGraph)
@attr.s(auto_attribs=True, frozen=True)
class SimpleGraph(_Neighborhoods):
    """
    A simple undirected graph on C{0 .. order - 1}.

    Use L{SimpleGraph.fromEdges} rather than the constructor.
    """

    order: int
    edges: Tuple[Edge, ...]
    adjacency: Adjacency = attr.ib(repr=False)

    @classmethod
    def fromEdges(cls, order: int, edges: Iterable[Edge]) -> "SimpleGraph":
        """
        Build a graph from a vertex count and an edge list.  Duplicate edges
        are dropped; the first occurrence fixes the edge order.
        """
        seen: Dict[Edge, None] = {}
        for edge in _normalizedEdges(edges):
            seen.setdefault(edge)
        unique = tuple(seen)
        return cls(order, unique, _adjacencyFromEdges(order, unique))

    def relabelled(self, permutation: Sequence[int]) -> "SimpleGraph":
        """
        The isomorphic copy in which vertex C{v} is called
        C{permutation[v]}.
        """
        if sorted(permutation) != list(range(self.order)):
            raise ValueError("not a permutation of the vertices")
        return SimpleGraph.fromEdges(
            self.order,
            ((permutation[i], permutation[j]) for i, j in self.edges),
        )


@implementer(IGraph)
@attr.s(auto_attribs=True, frozen=True)
class ZdGraph(_Neighborhoods):
    """
    The zero-divisor graph of C{F_p[u]/(u^3)} with canonical vertex and edge
    order.

    @ivar vertices: C{(element, class)} pairs: C{A_u} by C{b}, then
        C{A_{u^2}} by C{c}, then C{A_{u+u^2}} by C{(b, c)}.
    @ivar edges: C{(i, j)} pairs with C{i < j}: the C{[A_u, A_{u^2}]} edges
        grouped by C{A_u} vertex, then the C{[A_{u^2}, A_{u^2}]} edges in
        lexicographic order, then the C{[A_{u^2}, A_{u+u^2}]} edges grouped
        by C{A_{u+u^2}} vertex.
    @ivar blocks: the L{EdgeBlock} of each edge.
    """

    p: int
    vertices: Tuple[Tuple[RingElem, VertexClass], ...]
    edges: Tuple[Edge, ...]
    adjacency: Adjacency = attr.ib(repr=False)
    blocks: Tuple[EdgeBlock, ...] = attr.ib(repr=False)

    @property
    def order(self) -> int:  # type: ignore[override]
        return len(self.vertices)

    def element(self, vertex: int) -> RingElem:
        return self.vertices[vertex][0]

    def vertexClass(self, vertex: int) -> VertexClass:
        return self.vertices[vertex][1]

    def label(self, vertex: int) -> str:
        return formatElement(self.element(vertex))

    def classMembers(self, vertexClass: VertexClass) -> Tuple[int, ...]:
        return tuple(
            index
            for index, (_, each) in enumerate(self.vertices)
            if each is vertexClass
        )

    def blockSlices(self) -> Dict[EdgeBlock, slice]:
        """
        The ranges of edge (incidence column) indices taken by each block.
        """
        slices = {}
        start = 0
        for block in EdgeBlock.iterconstants():
            width = sum(1 for each in self.blocks if each is block)
            slices[block] = slice(start, start + width)
            start += width
        return slices

    def asSimpleGraph(self) -> SimpleGraph:
        return SimpleGraph(self.order, self.edges, self.adjacency)


def edgeBlock(first: VertexClass, second: VertexClass) -> EdgeBlock:
    """
    Which block an edge between vertices of the given classes lies in.

    @raise ValueError: for class pairs which are never adjacent.
    """
    pair = {first, second}
    if pair == {VertexClass.Au, VertexClass.Au2}:
        return EdgeBlock.UnitSquare
    if pair == {VertexClass.Au2}:
        return EdgeBlock.SquareSquare
    if pair == {VertexClass.Au2, VertexClass.AuPlusU2}:
        return EdgeBlock.SquareMixed
    raise ValueError(
        f"no edges between classes {first.name} and {second.name}"
    )


def _canonicalEdgeKey(
    edge: Edge, classes: Sequence[VertexClass]
) -> Tuple[int, int, int]:
    i, j = edge
    block = edgeBlock(classes[i], classes[j])
    if block is EdgeBlock.SquareMixed:
        # grouped by the mixed vertex, which always has the larger index
        return (_BLOCK_RANK[block], j, i)
    return (_BLOCK_RANK[block], i, j)


def _assemble(
    p: int, elements: Sequence[RingElem], edges: Sequence[Edge]
) -> ZdGraph:
    classes = [classify(x) for x in elements]
    return ZdGraph(
        p=p,
        vertices=tuple(zip(elements, classes)),
        edges=tuple(edges),
        adjacency=_adjacencyFromEdges(len(elements), edges),
        blocks=tuple(edgeBlock(classes[i], classes[j]) for i, j in edges),
    )


def buildBruteforce(p: int) -> ZdGraph:
    """
    Build M{Gamma(R)} by multiplying every pair of non-zero zero-divisors.

    @raise InvalidPrime: if C{p} is not a supported prime.
    """
    elements = nonzeroZeroDivisors(p)
    classes = [classify(x) for x in elements]
    edges = [
        (i, j)
        for i in range(len(elements))
        for j in range(i + 1, len(elements))
        if ringMul(elements[i], elements[j], p).isZero()
    ]
    edges.sort(key=lambda edge: _canonicalEdgeKey(edge, classes))
    _log.debug(
        "brute-force Gamma(R) for p={p}: {vertices} vertices, {edges} edges",
        p=p,
        vertices=len(elements),
        edges=len(edges),
    )
    return _assemble(p, elements, edges)


def buildStructured(p: int) -> ZdGraph:
    """
    Build M{Gamma(R)} directly as the complete split graph: C{A_{u^2}} is a
    clique, C{A_u} and C{A_{u+u^2}} are independent, and C{A_{u^2}} is
    joined to everything else.  No ring multiplication takes place.

    @raise InvalidPrime: if C{p} is not a supported prime.
    """
    validatePrime(p)
    elements = nonzeroZeroDivisors(p)
    side = p - 1
    units = range(0, side)
    squares = range(side, 2 * side)
    mixed = range(2 * side, len(elements))
    edges: List[Edge] = []
    edges.extend((i, j) for i in units for j in squares)
    edges.extend((i, j) for i in squares for j in squares if i < j)
    edges.extend((i, j) for j in mixed for i in squares)
    return _assemble(p, elements, edges)


def degreeOf(graph: IGraph, vertex: int) -> int:
    """
    The number of neighbours of C{vertex}.

    @raise VertexOutOfRange: if C{vertex} is not a vertex index.
    """
    return len(graph.neighbors(vertex))


def degreeSequence(graph: IGraph) -> Tuple[int, ...]:
    return tuple(len(graph.neighbors(v)) for v in range(graph.order))


def minimumDegree(graph: IGraph) -> int:
    return min(degreeSequence(graph), default=0)


def bfsDistances(graph: IGraph, source: int) -> List[Optional[int]]:
    """
    Breadth-first distances from C{source}; unreachable vertices get
    C{None}.
    """
    distances: List[Optional[int]] = [None] * graph.order
    distances[source] = 0
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        reached = distances[vertex]
        assert reached is not None
        for neighbor in graph.neighbors(vertex):
            if distances[neighbor] is None:
                distances[neighbor] = reached + 1
                queue.append(neighbor)
    return distances


def componentCount(graph: IGraph) -> int:
    """
    The number of connected components.
    """
    seen = [False] * graph.order
    count = 0
    for start in range(graph.order):
        if seen[start]:
            continue
        count += 1
        for vertex, distance in enumerate(bfsDistances(graph, start)):
            if distance is not None:
                seen[vertex] = True
    return count


def isConnected(graph: IGraph) -> bool:
    if graph.order == 0:
        return True
    return all(d is not None for d in bfsDistances(graph, 0))


def _dotQuote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dotLabel(x: RingElem) -> str:
    """
    The fixed-shape label C{"b*u+c*u^2"} of a zero divisor C{bu + cu^2},
    both coefficients written even when 0 or 1.
    """
    if x.a or not (x.b or x.c):
        raise NotAZeroDivisor(
            f"{formatElement(x)} is not a non-zero zero divisor"
        )
    return f"{x.b}*u+{x.c}*u^2"


def toDOT(graph: ZdGraph) -> str:
    """
    Render the graph in Graphviz DOT, nodes and edges in canonical order.
    Each node carries its ring element as C{label}, always written out as
    C{"b*u+c*u^2"} (see L{dotLabel}), and its vertex class as C{class}; each
    edge carries its block as C{block}.
    """
    lines = [f"graph {_dotQuote(f'Gamma(R) p={graph.p}')} {{"]
    for index in range(graph.order):
        lines.append(
            f"  n{index} [label={_dotQuote(dotLabel(graph.element(index)))}, "
            f"class={_dotQuote(graph.vertexClass(index).name)}];"
        )
    for (i, j), block in zip(graph.edges, graph.blocks):
        lines.append(f"  n{i} -- n{j} [block={_dotQuote(block.value)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edgesToCSV(graph: ZdGraph) -> str:
    """
    Render the canonical edge list as CSV with columns C{index}, C{source},
    C{target} (ring element labels) and C{block}.
    """
    stream = StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["index", "source", "target", "block"])
    for index, ((i, j), block) in enumerate(zip(graph.edges, graph.blocks)):
        writer.writerow([index, graph.label(i), graph.label(j), block.value])
    return stream.getvalue()
