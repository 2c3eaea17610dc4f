# -*- test-case-name: zerodiv.test.test_invariants -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Exact general-purpose graph invariant algorithms.

Nothing in here knows what M{Gamma(R)} looks like; the closed forms for it are
the claims these algorithms are used to check.
"""

import math
from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

import attr
import numpy as np

from twisted.logger import Logger

from ._graph import bfsDistances, isConnected, minimumDegree
from ._interfaces import ConsistencyGateFailure, DisconnectedGraph, IGraph


__all__ = ()

_log = Logger()

INFINITY = math.inf

Distance = Union[int, float]


def distanceMatrix(graph: IGraph) -> List[List[Optional[int]]]:
    """
    All-pairs shortest path lengths, one breadth-first search per source.
    Unreachable pairs are C{None}.
    """
    return [bfsDistances(graph, source) for source in range(graph.order)]


def eccentricities(graph: IGraph) -> List[Distance]:
    """
    The greatest distance from each vertex to any other; L{INFINITY} when
    some vertex is unreachable.
    """
    result: List[Distance] = []
    for row in distanceMatrix(graph):
        if any(d is None for d in row):
            result.append(INFINITY)
        else:
            result.append(max(d for d in row if d is not None))
    return result


def diameter(graph: IGraph) -> Distance:
    """
    The greatest distance between two vertices, or L{INFINITY} if the graph
    is disconnected.
    """
    return max(eccentricities(graph), default=0)


def radius(graph: IGraph) -> Distance:
    return min(eccentricities(graph), default=0)


def girth(graph: IGraph) -> Distance:
    """
    The length of a shortest cycle, or L{INFINITY} for a forest.

    Every vertex is used as a breadth-first root; a non-tree edge met at
    depths C{d1, d2} closes a closed walk of length C{d1 + d2 + 1}, and the
    minimum over all roots is attained by a shortest cycle.
    """
    best: Distance = INFINITY
    for root in range(graph.order):
        depth: Dict[int, int] = {root: 0}
        parent: Dict[int, int] = {root: -1}
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            if 2 * depth[vertex] + 1 >= best:
                break
            for neighbor in graph.neighbors(vertex):
                if neighbor not in depth:
                    depth[neighbor] = depth[vertex] + 1
                    parent[neighbor] = vertex
                    queue.append(neighbor)
                elif parent[vertex] != neighbor:
                    best = min(best, depth[vertex] + depth[neighbor] + 1)
    return best


def _neighborSets(graph: IGraph) -> List[FrozenSet[int]]:
    return [frozenset(graph.neighbors(v)) for v in range(graph.order)]


def maximumClique(graph: IGraph) -> Tuple[int, ...]:
    """
    A largest clique, found by Bron-Kerbosch with pivoting, pruned against
    the best clique found so far.
    """
    neighbors = _neighborSets(graph)
    best: List[int] = []

    def expand(
        clique: List[int], candidates: Set[int], excluded: Set[int]
    ) -> None:
        nonlocal best
        if not candidates and not excluded:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + len(candidates) <= len(best):
            return
        pivot = max(
            sorted(candidates | excluded),
            key=lambda u: len(candidates & neighbors[u]),
        )
        for vertex in sorted(candidates - neighbors[pivot]):
            expand(
                clique + [vertex],
                candidates & neighbors[vertex],
                excluded & neighbors[vertex],
            )
            candidates = candidates - {vertex}
            excluded = excluded | {vertex}

    expand([], set(range(graph.order)), set())
    return tuple(sorted(best))


def cliqueNumber(graph: IGraph) -> int:
    return len(maximumClique(graph))


def degeneracyOrder(graph: IGraph) -> List[int]:
    """
    Smallest-last vertex order: repeatedly remove a vertex of least
    remaining degree (lowest index on ties), then reverse.
    """
    neighbors = _neighborSets(graph)
    remaining = set(range(graph.order))
    degree = {v: len(neighbors[v]) for v in remaining}
    removed: List[int] = []
    while remaining:
        vertex = min(remaining, key=lambda v: (degree[v], v))
        remaining.remove(vertex)
        removed.append(vertex)
        for neighbor in neighbors[vertex] & remaining:
            degree[neighbor] -= 1
    removed.reverse()
    return removed


def greedyColouring(graph: IGraph, order: Sequence[int]) -> List[int]:
    """
    Give each vertex, in the given order, the least colour unused by its
    already coloured neighbours.
    """
    colours: List[int] = [-1] * graph.order
    for vertex in order:
        used = {colours[n] for n in graph.neighbors(vertex)}
        colour = 0
        while colour in used:
            colour += 1
        colours[vertex] = colour
    return colours


def _dsaturColouring(
    graph: IGraph, neighbors: Sequence[FrozenSet[int]], colourCount: int
) -> Optional[List[int]]:
    """
    Backtracking search for a proper colouring with C{colourCount} colours,
    branching on the uncoloured vertex of highest saturation, then highest
    degree, then lowest index.
    """
    colours: List[int] = [-1] * graph.order

    def saturation(vertex: int) -> int:
        return len({colours[n] for n in neighbors[vertex] if colours[n] >= 0})

    def search(coloured: int, highest: int) -> bool:
        if coloured == graph.order:
            return True
        vertex = min(
            (v for v in range(graph.order) if colours[v] < 0),
            key=lambda v: (-saturation(v), -len(neighbors[v]), v),
        )
        forbidden = {colours[n] for n in neighbors[vertex]}
        # colours above highest + 1 are interchangeable with highest + 1
        for colour in range(min(colourCount, highest + 2)):
            if colour in forbidden:
                continue
            colours[vertex] = colour
            if search(coloured + 1, max(highest, colour)):
                return True
        colours[vertex] = -1
        return False

    if search(0, -1):
        return colours
    return None


def colouring(graph: IGraph) -> List[int]:
    """
    A proper colouring with the fewest possible colours.

    The clique number bounds the answer from below and a greedy colouring in
    degeneracy order from above; DSATUR backtracking closes any gap.
    """
    if graph.order == 0:
        return []
    neighbors = _neighborSets(graph)
    lower = cliqueNumber(graph)
    best = greedyColouring(graph, degeneracyOrder(graph))
    upper = max(best) + 1
    for colourCount in range(lower, upper):
        found = _dsaturColouring(graph, neighbors, colourCount)
        if found is not None:
            return found
    return best


def chromaticNumber(graph: IGraph) -> int:
    colours = colouring(graph)
    return max(colours) + 1 if colours else 0


def _isComplete(graph: IGraph) -> bool:
    n = graph.order
    return len(graph.edges) == n * (n - 1) // 2


def localVertexConnectivity(
    graph: IGraph, source: int, target: int, cutoff: Optional[int] = None
) -> int:
    """
    The greatest number of internally vertex-disjoint paths between two
    non-adjacent vertices, by unit-capacity augmenting paths on the graph
    with every vertex split into an in-node C{2v} and an out-node C{2v + 1}.

    @param cutoff: Stop augmenting once this many paths are found.
    """
    if graph.adjacent(source, target):
        raise ValueError(f"vertices {source} and {target} are adjacent")
    if cutoff is None:
        cutoff = graph.order
    residual: List[Dict[int, int]] = [{} for _ in range(2 * graph.order)]

    def arc(tail: int, head: int) -> None:
        residual[tail][head] = residual[tail].get(head, 0) + 1
        residual[head].setdefault(tail, 0)

    for vertex in range(graph.order):
        arc(2 * vertex, 2 * vertex + 1)
    for i, j in graph.edges:
        arc(2 * i + 1, 2 * j)
        arc(2 * j + 1, 2 * i)

    start, sink = 2 * source + 1, 2 * target
    flow = 0
    while flow < cutoff:
        parent = {start: start}
        queue = deque([start])
        while queue and sink not in parent:
            node = queue.popleft()
            for head, capacity in residual[node].items():
                if capacity > 0 and head not in parent:
                    parent[head] = node
                    queue.append(head)
        if sink not in parent:
            break
        node = sink
        while node != start:
            tail = parent[node]
            residual[tail][node] -= 1
            residual[node][tail] += 1
            node = tail
        flow += 1
    return flow


def vertexConnectivity(graph: IGraph) -> int:
    """
    The fewest vertices whose removal disconnects the graph: the minimum,
    over non-adjacent pairs, of the number of vertex-disjoint paths joining
    them.

    Only the pairs formed by a minimum-degree vertex C{v} with each of its
    non-neighbours, and the non-adjacent pairs of neighbours of C{v}, are
    examined: every minimum vertex cut either misses C{v}, and so separates
    it from a non-neighbour, or contains it, and so separates two of its
    neighbours.

    Complete graphs get C{|V| - 1}.
    """
    n = graph.order
    if _isComplete(graph):
        return max(n - 1, 0)
    if not isConnected(graph):
        return 0
    degrees = [len(graph.neighbors(v)) for v in range(n)]
    v = min(range(n), key=lambda each: (degrees[each], each))
    best = degrees[v]
    around = set(graph.neighbors(v))
    for w in range(n):
        if w != v and w not in around:
            best = min(best, localVertexConnectivity(graph, v, w, best))
    for x, y in combinations(sorted(around), 2):
        if not graph.adjacent(x, y):
            best = min(best, localVertexConnectivity(graph, x, y, best))
    _log.debug("vertex connectivity {kappa}", kappa=best)
    return best


def minimumCut(graph: IGraph) -> Tuple[int, Tuple[int, ...]]:
    """
    A global minimum edge cut by Stoer-Wagner with unit edge weights.

    @return: the cut size and the vertices on one side of it.
    """
    n = graph.order
    if n < 2:
        return 0, tuple(range(n))
    weights = np.zeros((n, n), dtype=np.int64)
    for i, j in graph.edges:
        weights[i, j] = weights[j, i] = 1
    groups: List[List[int]] = [[v] for v in range(n)]
    active = np.ones(n, dtype=bool)
    bestCut: Optional[int] = None
    bestSide: List[int] = []
    for _ in range(n - 1):
        members = np.flatnonzero(active)
        added = ~active
        first = int(members[0])
        added[first] = True
        keys = weights[first].copy()
        previous, last, cutOfPhase = first, first, 0
        for _ in range(len(members) - 1):
            nextVertex = int(np.argmax(np.where(added, -1, keys)))
            previous, last = last, nextVertex
            cutOfPhase = int(keys[nextVertex])
            added[nextVertex] = True
            keys += weights[nextVertex]
        if bestCut is None or cutOfPhase < bestCut:
            bestCut = cutOfPhase
            bestSide = sorted(groups[last])
        weights[previous] += weights[last]
        weights[:, previous] += weights[:, last]
        weights[previous, previous] = 0
        weights[last] = 0
        weights[:, last] = 0
        groups[previous].extend(groups[last])
        active[last] = False
    assert bestCut is not None
    return bestCut, tuple(bestSide)


def edgeConnectivity(graph: IGraph) -> int:
    """
    The fewest edges whose removal disconnects the graph; 0 when it is
    already disconnected.
    """
    return minimumCut(graph)[0]


@attr.s(auto_attribs=True, frozen=True)
class InvariantReport:
    """
    The connectivity and colouring invariants of a connected graph.

    Always satisfies M{omega <= chi} and M{kappa <= lambda <= delta}.
    """

    diameter: Distance
    girth: Distance
    cliqueNumber: int
    chromaticNumber: int
    vertexConnectivity: int
    edgeConnectivity: int
    minimumDegree: int

    def __attrs_post_init__(self) -> None:
        if self.cliqueNumber > self.chromaticNumber:
            raise ConsistencyGateFailure(
                "omega <= chi",
                None,
                f"at most {self.chromaticNumber}",
                self.cliqueNumber,
            )
        if not (
            self.vertexConnectivity
            <= self.edgeConnectivity
            <= self.minimumDegree
        ):
            raise ConsistencyGateFailure(
                "kappa <= lambda <= delta",
                None,
                "a nondecreasing chain",
                (
                    self.vertexConnectivity,
                    self.edgeConnectivity,
                    self.minimumDegree,
                ),
            )


def invariantReport(graph: IGraph) -> InvariantReport:
    """
    Compute every invariant of a connected graph.

    @raise DisconnectedGraph: if it isn't connected.
    """
    if not isConnected(graph):
        raise DisconnectedGraph("invariant report needs a connected graph")
    return InvariantReport(
        diameter=diameter(graph),
        girth=girth(graph),
        cliqueNumber=cliqueNumber(graph),
        chromaticNumber=chromaticNumber(graph),
        vertexConnectivity=vertexConnectivity(graph),
        edgeConnectivity=edgeConnectivity(graph),
        minimumDegree=minimumDegree(graph),
    )
