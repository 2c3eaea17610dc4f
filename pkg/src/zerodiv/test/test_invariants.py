# Copyright (c) 2024. See LICENSE for details.

"""
Tests for L{zerodiv._invariants}.
"""

from itertools import combinations, permutations, product
from typing import Iterable, Set, Tuple

from .._graph import SimpleGraph, buildStructured, isConnected, minimumDegree
from .._interfaces import ConsistencyGateFailure, DisconnectedGraph, IGraph
from .._invariants import (
    INFINITY,
    InvariantReport,
    chromaticNumber,
    cliqueNumber,
    colouring,
    degeneracyOrder,
    diameter,
    distanceMatrix,
    eccentricities,
    edgeConnectivity,
    girth,
    greedyColouring,
    invariantReport,
    localVertexConnectivity,
    maximumClique,
    minimumCut,
    radius,
    vertexConnectivity,
)
from ._trial import TestCase
from .not_hypothesis import (
    allGraphs,
    completeGraph,
    cycleGraph,
    fixtureGraphs,
    given,
    oddPrimes,
    pathGraph,
    randomConnectedGraphs,
    randomGraph,
    starGraph,
)


__all__ = ()

NamedGraph = Tuple[str, SimpleGraph]


def _induced(graph: IGraph, keep: Iterable[int]) -> SimpleGraph:
    kept = sorted(keep)
    index = {v: i for i, v in enumerate(kept)}
    return SimpleGraph.fromEdges(
        len(kept),
        [
            (index[i], index[j])
            for i, j in graph.edges
            if i in index and j in index
        ],
    )


def exhaustiveCliqueNumber(graph: IGraph) -> int:
    for size in range(graph.order, 0, -1):
        for subset in combinations(range(graph.order), size):
            if all(graph.adjacent(i, j) for i, j in combinations(subset, 2)):
                return size
    return 0


def exhaustiveChromaticNumber(graph: IGraph) -> int:
    for k in range(1, graph.order + 1):
        for colours in product(range(k), repeat=graph.order):
            if all(colours[i] != colours[j] for i, j in graph.edges):
                return k
    return 0


def exhaustiveVertexConnectivity(graph: IGraph) -> int:
    n = graph.order
    for size in range(n - 1):
        for removed in combinations(range(n), size):
            rest = set(range(n)) - set(removed)
            if not isConnected(_induced(graph, rest)):
                return size
    return max(n - 1, 0)


def exhaustiveEdgeConnectivity(graph: IGraph) -> int:
    edges = list(graph.edges)
    for size in range(len(edges) + 1):
        for removed in combinations(edges, size):
            remaining = SimpleGraph.fromEdges(
                graph.order, [e for e in edges if e not in removed]
            )
            if not isConnected(remaining):
                return size
    return len(edges)


def exhaustiveGirth(graph: IGraph) -> float:
    for length in range(3, graph.order + 1):
        for walk in permutations(range(graph.order), length):
            if walk[0] != min(walk):
                continue
            closed = walk + (walk[0],)
            if all(graph.adjacent(a, b) for a, b in zip(closed, closed[1:])):
                return length
    return INFINITY


def _isClique(graph: IGraph, vertices: Iterable[int]) -> bool:
    return all(graph.adjacent(i, j) for i, j in combinations(vertices, 2))


class DistanceTests(TestCase):
    """
    Tests for L{distanceMatrix}, L{eccentricities}, L{diameter},
    L{radius} and L{girth}.
    """

    def test_path(self) -> None:
        """
        A path on five vertices has diameter 4, radius 2 and no cycle.
        """
        graph = pathGraph(5)
        self.assertEqual(eccentricities(graph), [4, 3, 2, 3, 4])
        self.assertEqual(diameter(graph), 4)
        self.assertEqual(radius(graph), 2)
        self.assertEqual(girth(graph), INFINITY)

    def test_disconnected(self) -> None:
        """
        Disconnected graphs have infinite diameter; the distance matrix has
        L{None} for unreachable pairs.
        """
        graph = SimpleGraph.fromEdges(3, [(0, 1)])
        self.assertEqual(diameter(graph), INFINITY)
        self.assertIsNone(distanceMatrix(graph)[0][2])

    def test_trivial(self) -> None:
        """
        The single vertex and the empty graph have diameter 0.
        """
        self.assertEqual(diameter(SimpleGraph.fromEdges(1, [])), 0)
        self.assertEqual(diameter(SimpleGraph.fromEdges(0, [])), 0)

    @given(allGraphs())
    def test_girthMatchesExhaustiveSearch(self, named: NamedGraph) -> None:
        """
        L{girth} agrees with a search over every vertex sequence.
        """
        name, graph = named
        self.assertEqual(girth(graph), exhaustiveGirth(graph), name)

    def test_cycles(self) -> None:
        """
        The girth of a cycle is its length.
        """
        for n in range(3, 9):
            self.assertEqual(girth(cycleGraph(n)), n)

    @given(oddPrimes(13))
    def test_zeroDivisorGraph(self, p: int) -> None:
        """
        M{Gamma(R)} has diameter 2, radius 1 and girth 3.
        """
        graph = buildStructured(p)
        self.assertEqual(diameter(graph), 2)
        self.assertEqual(radius(graph), 1)
        self.assertEqual(girth(graph), 3)


class CliqueAndColouringTests(TestCase):
    """
    Tests for L{maximumClique}, L{cliqueNumber}, L{colouring} and
    L{chromaticNumber}.
    """

    @given(allGraphs())
    def test_cliqueMatchesExhaustiveSearch(self, named: NamedGraph) -> None:
        """
        L{maximumClique} returns a clique as large as any.
        """
        name, graph = named
        clique = maximumClique(graph)
        self.assertTrue(_isClique(graph, clique), name)
        self.assertEqual(len(clique), exhaustiveCliqueNumber(graph), name)
        self.assertEqual(cliqueNumber(graph), len(clique))

    @given(allGraphs())
    def test_chromaticMatchesExhaustiveSearch(self, named: NamedGraph) -> None:
        """
        L{colouring} is proper and uses as few colours as any proper
        colouring.
        """
        name, graph = named
        colours = colouring(graph)
        for i, j in graph.edges:
            self.assertNotEqual(colours[i], colours[j], name)
        self.assertEqual(
            chromaticNumber(graph), exhaustiveChromaticNumber(graph), name
        )

    def test_oddCycle(self) -> None:
        """
        Odd cycles need three colours although their largest clique is an
        edge.
        """
        graph = cycleGraph(5)
        self.assertEqual(cliqueNumber(graph), 2)
        self.assertEqual(chromaticNumber(graph), 3)

    def test_degeneracyGreedy(self) -> None:
        """
        Greedy colouring in degeneracy order is proper and within one of the
        degeneracy.
        """
        graph = randomGraph(8, 0.5, 7)
        order = degeneracyOrder(graph)
        self.assertEqual(sorted(order), list(range(8)))
        colours = greedyColouring(graph, order)
        for i, j in graph.edges:
            self.assertNotEqual(colours[i], colours[j])

    @given(oddPrimes(13))
    def test_zeroDivisorGraph(self, p: int) -> None:
        """
        M{Gamma(R)} has clique number and chromatic number M{p}.
        """
        graph = buildStructured(p)
        self.assertEqual(cliqueNumber(graph), p)
        self.assertEqual(chromaticNumber(graph), p)


class ConnectivityTests(TestCase):
    """
    Tests for L{vertexConnectivity}, L{localVertexConnectivity},
    L{minimumCut} and L{edgeConnectivity}.
    """

    @given(allGraphs())
    def test_vertexMatchesExhaustiveSearch(self, named: NamedGraph) -> None:
        """
        L{vertexConnectivity} is the size of a smallest separating vertex
        set (M{n - 1} for complete graphs).
        """
        name, graph = named
        self.assertEqual(
            vertexConnectivity(graph), exhaustiveVertexConnectivity(graph), name
        )

    @given(allGraphs())
    def test_edgeMatchesExhaustiveSearch(self, named: NamedGraph) -> None:
        """
        L{edgeConnectivity} is the size of a smallest disconnecting edge
        set, and L{minimumCut} names a side which that many edges leave.
        """
        name, graph = named
        value, side = minimumCut(graph)
        self.assertEqual(value, exhaustiveEdgeConnectivity(graph), name)
        self.assertEqual(edgeConnectivity(graph), value)
        inside: Set[int] = set(side)
        self.assertTrue(0 < len(inside) < graph.order, name)
        crossing = sum(
            1 for i, j in graph.edges if (i in inside) != (j in inside)
        )
        self.assertEqual(crossing, value, name)

    def test_local(self) -> None:
        """
        A cycle has two disjoint paths between opposite vertices; adjacent
        endpoints are refused.
        """
        graph = cycleGraph(6)
        self.assertEqual(localVertexConnectivity(graph, 0, 3), 2)
        self.assertEqual(localVertexConnectivity(graph, 0, 3, cutoff=1), 1)
        self.assertRaises(ValueError, localVertexConnectivity, graph, 0, 1)

    def test_star(self) -> None:
        """
        A star falls apart without its centre or any one edge.
        """
        graph = starGraph(4)
        self.assertEqual(vertexConnectivity(graph), 1)
        self.assertEqual(edgeConnectivity(graph), 1)

    def test_small(self) -> None:
        """
        Graphs with fewer than two vertices have no cut.
        """
        self.assertEqual(minimumCut(SimpleGraph.fromEdges(1, [])), (0, (0,)))
        self.assertEqual(vertexConnectivity(completeGraph(1)), 0)

    @given(oddPrimes(13))
    def test_zeroDivisorGraph(self, p: int) -> None:
        """
        Both connectivities of M{Gamma(R)} equal its minimum degree M{p - 1}.
        """
        graph = buildStructured(p)
        self.assertEqual(vertexConnectivity(graph), p - 1)
        self.assertEqual(edgeConnectivity(graph), p - 1)

    @given(randomConnectedGraphs())
    def test_connectivityChain(self, named: NamedGraph) -> None:
        """
        M{kappa <= lambda <= delta} on random connected graphs of up to 12
        vertices.
        """
        name, graph = named
        self.assertTrue(isConnected(graph), name)
        kappa = vertexConnectivity(graph)
        lam = edgeConnectivity(graph)
        self.assertTrue(kappa <= lam <= minimumDegree(graph), name)

    @given(randomConnectedGraphs())
    def test_chainAgainstNetworkX(self, named: NamedGraph) -> None:
        """
        On the same graphs both connectivities match networkx.
        """
        try:
            import networkx as nx
        except ImportError:
            self.skipTest("networkx is not installed")
        name, graph = named
        other = nx.Graph()
        other.add_nodes_from(range(graph.order))
        other.add_edges_from(graph.edges)
        self.assertEqual(
            vertexConnectivity(graph), nx.node_connectivity(other), name
        )
        self.assertEqual(
            edgeConnectivity(graph), nx.edge_connectivity(other), name
        )

    def test_againstNetworkX(self) -> None:
        """
        Connectivities agree with networkx on larger random graphs.
        """
        try:
            import networkx as nx
        except ImportError:
            self.skipTest("networkx is not installed")
        for seed in range(6):
            graph = randomGraph(14, 0.35, 100 + seed)
            other = nx.Graph()
            other.add_nodes_from(range(graph.order))
            other.add_edges_from(graph.edges)
            self.assertEqual(
                vertexConnectivity(graph), nx.node_connectivity(other)
            )
            self.assertEqual(
                edgeConnectivity(graph), nx.edge_connectivity(other)
            )


class ReportTests(TestCase):
    """
    Tests for L{invariantReport} and L{InvariantReport}.
    """

    def test_zeroDivisorGraph(self) -> None:
        """
        The report for p = 5 gathers every invariant.
        """
        self.assertEqual(
            invariantReport(buildStructured(5)),
            InvariantReport(
                diameter=2,
                girth=3,
                cliqueNumber=5,
                chromaticNumber=5,
                vertexConnectivity=4,
                edgeConnectivity=4,
                minimumDegree=4,
            ),
        )

    def test_disconnected(self) -> None:
        """
        Disconnected graphs are refused.
        """
        self.assertRaises(
            DisconnectedGraph,
            invariantReport,
            SimpleGraph.fromEdges(4, [(0, 1), (2, 3)]),
        )

    def test_inequalities(self) -> None:
        """
        A report violating M{omega <= chi} or M{kappa <= lambda <= delta}
        cannot be built.
        """
        for fields in [
            (2, 3, 4, 3, 1, 1, 1),
            (2, 3, 2, 2, 2, 1, 2),
            (2, 3, 2, 2, 1, 3, 2),
        ]:
            error = self.assertRaises(
                ConsistencyGateFailure, InvariantReport, *fields
            )
            self.assertIs(error.p, None)

    @given(fixtureGraphs())
    def test_fixtures(self, named: NamedGraph) -> None:
        """
        Every connected fixture yields a consistent report.
        """
        name, graph = named
        if not isConnected(graph):
            return
        report = invariantReport(graph)
        self.assertLessEqual(report.cliqueNumber, report.chromaticNumber, name)
