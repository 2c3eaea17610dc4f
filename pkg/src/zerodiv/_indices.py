# -*- test-case-name: zerodiv.test.test_indices -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Distance- and degree-based topological indices, computed from the graph.
"""

import math
from typing import Tuple, Union

import attr
from constantly import NamedConstant, Names

from ._graph import bfsDistances, degreeSequence
from ._interfaces import DisconnectedGraph, IGraph


__all__ = ()


class TopologicalIndex(Names):
    Wiener = NamedConstant()
    Randic = NamedConstant()
    Zagreb1 = NamedConstant()
    Zagreb2 = NamedConstant()


@attr.s(auto_attribs=True, frozen=True)
class IndexValue:
    """
    The value of one topological index.  Only the Randić index is a float;
    the others are exact integers.
    """

    name: TopologicalIndex
    value: Union[int, float]


def wiener(graph: IGraph) -> int:
    """
    Sum of distances over unordered pairs of distinct vertices.

    @raise DisconnectedGraph: if some pair is not joined by a path.
    """
    total = 0
    for source in range(graph.order):
        distances = bfsDistances(graph, source)
        for target in range(source + 1, graph.order):
            distance = distances[target]
            if distance is None:
                raise DisconnectedGraph(
                    f"no path between {source} and {target}"
                )
            total += distance
    return total


def randic(graph: IGraph) -> float:
    """
    Sum over edges of M{1 / sqrt(d_a d_b)}, accumulated with
    L{math.fsum}.
    """
    degrees = degreeSequence(graph)
    return math.fsum(
        1.0 / math.sqrt(degrees[i] * degrees[j]) for i, j in graph.edges
    )


def zagrebFirst(graph: IGraph) -> int:
    """
    Sum over vertices of the squared degree.
    """
    return sum(d * d for d in degreeSequence(graph))


def zagrebFirstByEdges(graph: IGraph) -> int:
    """
    The first Zagreb index accumulated over edges as M{d_a + d_b}; each
    vertex contributes its degree once per incident edge.
    """
    degrees = degreeSequence(graph)
    return sum(degrees[i] + degrees[j] for i, j in graph.edges)


def zagrebSecond(graph: IGraph) -> int:
    """
    Sum over edges of the product of the end degrees.
    """
    degrees = degreeSequence(graph)
    return sum(degrees[i] * degrees[j] for i, j in graph.edges)


def indexValues(graph: IGraph) -> Tuple[IndexValue, ...]:
    return (
        IndexValue(TopologicalIndex.Wiener, wiener(graph)),
        IndexValue(TopologicalIndex.Randic, randic(graph)),
        IndexValue(TopologicalIndex.Zagreb1, zagrebFirst(graph)),
        IndexValue(TopologicalIndex.Zagreb2, zagrebSecond(graph)),
    )
