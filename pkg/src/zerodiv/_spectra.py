# -*- test-case-name: zerodiv.test.test_spectra -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Adjacency, degree and Laplacian matrices of M{Gamma(R)} and their spectra.

Exact spectra come from the graph's structure: the partition into the clique
C{A_{u^2}} and the independent set C{A_u + A_{u+u^2}} is equitable, so the
quotient matrix contributes two eigenvalues and the remaining ones are those
of the cells; the Laplacian spectrum follows from the rule for joins.  A
cyclic Jacobi eigensolver provides an independent numeric check.
"""

import math
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import attr
import numpy as np

from twisted.logger import Logger

from ._graph import ZdGraph, buildStructured
from ._interfaces import (
    AsymmetricMatrix,
    ConsistencyGateFailure,
    IGraph,
    UnsupportedPrime,
)
from ._ring import VertexClass, validatePrime
from ._surd import QuadraticSurd, surd


__all__ = ()

_log = Logger()

DEFAULT_EIGEN_TOLERANCE = 1e-9


def adjacencyMatrix(graph: IGraph) -> np.ndarray:
    """
    The 0/1 adjacency matrix with rows and columns in vertex order.
    """
    matrix = np.zeros((graph.order, graph.order), dtype=np.int64)
    for i, j in graph.edges:
        matrix[i, j] = matrix[j, i] = 1
    return matrix


def degreeMatrix(graph: IGraph) -> np.ndarray:
    return np.diag(adjacencyMatrix(graph).sum(axis=1))


def laplacianMatrix(graph: IGraph) -> np.ndarray:
    """
    M{L = D - A}; every row sums to zero.
    """
    adjacency = adjacencyMatrix(graph)
    return np.diag(adjacency.sum(axis=1)) - adjacency


@attr.s(auto_attribs=True, frozen=True)
class ExactEigen:
    """
    An eigenvalue M{(a + b sqrt(D)) / c} and its multiplicity.
    """

    value: QuadraticSurd
    multiplicity: int

    @property
    def a(self) -> int:
        return self.value.a

    @property
    def b(self) -> int:
        return self.value.b

    @property
    def c(self) -> int:
        return self.value.c

    @property
    def D(self) -> int:
        return self.value.D

    def __float__(self) -> float:
        return float(self.value)


Spectrum = Tuple[ExactEigen, ...]


def collectSpectrum(values: Iterable[Tuple[QuadraticSurd, int]]) -> Spectrum:
    """
    Merge equal eigenvalues, drop zero multiplicities, and sort ascending.
    """
    merged: Dict[QuadraticSurd, int] = {}
    for value, multiplicity in values:
        if multiplicity < 0:
            raise ValueError(f"negative multiplicity for {value}")
        if multiplicity:
            merged[value] = merged.get(value, 0) + multiplicity
    return tuple(
        ExactEigen(value, merged[value]) for value in sorted(merged)
    )


def expandSpectrum(spectrum: Spectrum) -> List[QuadraticSurd]:
    """
    Every eigenvalue repeated by its multiplicity, ascending.
    """
    return [
        eigen.value for eigen in spectrum for _ in range(eigen.multiplicity)
    ]


def spectrumSize(spectrum: Spectrum) -> int:
    return sum(eigen.multiplicity for eigen in spectrum)


def quadraticRoots(
    trace: int, determinant: int
) -> Tuple[QuadraticSurd, QuadraticSurd]:
    """
    The roots of M{x^2 - trace x + determinant}, smaller first.

    @raise ValueError: if they are not real.
    """
    discriminant = trace * trace - 4 * determinant
    if discriminant < 0:
        raise ValueError(f"x^2 - {trace}x + {determinant} has complex roots")
    return (
        surd(trace, -1, discriminant, 2),
        surd(trace, 1, discriminant, 2),
    )


def quotientMatrix(graph: IGraph, cells: Sequence[Sequence[int]]) -> np.ndarray:
    """
    The quotient matrix of an equitable partition: entry C{(r, s)} is the
    number of neighbours in cell C{s} of any vertex of cell C{r}.

    @raise ValueError: if the partition is not equitable.
    """
    cellOf = {}
    for index, cell in enumerate(cells):
        for vertex in cell:
            cellOf[vertex] = index
    quotient = np.zeros((len(cells), len(cells)), dtype=np.int64)
    for index, cell in enumerate(cells):
        rows = set()
        for vertex in cell:
            counts = [0] * len(cells)
            for neighbor in graph.neighbors(vertex):
                counts[cellOf[neighbor]] += 1
            rows.add(tuple(counts))
        if len(rows) != 1:
            raise ValueError(f"cell {index} is not equitable: {sorted(rows)}")
        quotient[index] = rows.pop()
    return quotient


def characteristicCoefficients(quotient: np.ndarray) -> Tuple[int, int]:
    """
    The trace and determinant of a 2 by 2 quotient matrix, so that its
    characteristic polynomial is M{x^2 - trace x + determinant}.
    """
    if quotient.shape != (2, 2):
        raise ValueError(f"expected a 2x2 quotient, got shape {quotient.shape}")
    trace = int(quotient[0, 0] + quotient[1, 1])
    determinant = int(
        quotient[0, 0] * quotient[1, 1] - quotient[0, 1] * quotient[1, 0]
    )
    return trace, determinant


def _splitCells(graph: ZdGraph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    independent = graph.classMembers(VertexClass.Au) + graph.classMembers(
        VertexClass.AuPlusU2
    )
    return independent, graph.classMembers(VertexClass.Au2)


def completeSplitAdjacencySpectrum(
    cliqueSize: int, independentSize: int
) -> Spectrum:
    """
    The adjacency spectrum of a clique on C{cliqueSize} vertices joined to an
    independent set of C{independentSize} vertices.

    Vectors summing to zero on the clique and vanishing elsewhere have
    eigenvalue -1; those summing to zero on the independent set and vanishing
    elsewhere have eigenvalue 0; the quotient matrix
    M{[[0, k], [m, k - 1]]} supplies the last two.
    """
    k, m = cliqueSize, independentSize
    low, high = quadraticRoots(k - 1, -k * m)
    return collectSpectrum(
        [
            (QuadraticSurd.rationalValue(-1), k - 1),
            (QuadraticSurd.rationalValue(0), m - 1),
            (low, 1),
            (high, 1),
        ]
    )


def joinLaplacianSpectrum(
    first: Spectrum, second: Spectrum
) -> Spectrum:
    """
    The Laplacian spectrum of the join of two graphs from theirs: the zero
    eigenvalues merge into 0 and M{n1 + n2}, and every other eigenvalue is
    shifted by the order of the other graph.
    """
    n1, n2 = spectrumSize(first), spectrumSize(second)
    values = []
    for spectrum, shift in ((first, n2), (second, n1)):
        remaining = expandSpectrum(spectrum)
        # the smallest Laplacian eigenvalue is the trivial 0
        values.extend((value + shift, 1) for value in remaining[1:])
    values.append((QuadraticSurd.rationalValue(0), 1))
    values.append((QuadraticSurd.rationalValue(n1 + n2), 1))
    return collectSpectrum(values)


def completeLaplacianSpectrum(order: int) -> Spectrum:
    return collectSpectrum(
        [
            (QuadraticSurd.rationalValue(0), 1),
            (QuadraticSurd.rationalValue(order), order - 1),
        ]
    )


def emptyLaplacianSpectrum(order: int) -> Spectrum:
    return collectSpectrum([(QuadraticSurd.rationalValue(0), order)])


def _checkedOddPrime(p: int) -> int:
    validatePrime(p)
    if p < 3:
        raise UnsupportedPrime("exact spectra are derived for p >= 3")
    return p


def exactAdjacencySpectrum(p: int) -> Spectrum:
    """
    The exact adjacency spectrum of M{Gamma(R)}.

    The equitable partition is read off the constructed graph, so a wrong
    block structure fails here rather than producing a wrong spectrum.

    @raise ConsistencyGateFailure: if the graph is not the expected complete
        split graph.
    """
    graph = buildStructured(_checkedOddPrime(p))
    independent, clique = _splitCells(graph)
    try:
        quotient = quotientMatrix(graph, [independent, clique])
    except ValueError as e:
        raise ConsistencyGateFailure(
            "equitable class partition", p, "an equitable partition", str(e)
        )
    if quotient[0, 0] != 0 or quotient[1, 1] != len(clique) - 1:
        raise ConsistencyGateFailure(
            "complete split quotient",
            p,
            (0, len(clique) - 1),
            (int(quotient[0, 0]), int(quotient[1, 1])),
        )
    spectrum = completeSplitAdjacencySpectrum(len(clique), len(independent))
    low, high = quadraticRoots(*characteristicCoefficients(quotient))
    if {low, high} - {eigen.value for eigen in spectrum}:
        raise ConsistencyGateFailure(
            "quotient eigenvalues in spectrum",
            p,
            sorted([low, high]),
            sorted(eigen.value for eigen in spectrum),
        )
    return spectrum


def exactLaplacianSpectrum(p: int) -> Spectrum:
    """
    The exact Laplacian spectrum of M{Gamma(R)}, the join of the complete
    graph on C{A_{u^2}} with the empty graph on C{A_u + A_{u+u^2}}.
    """
    graph = buildStructured(_checkedOddPrime(p))
    independent, clique = _splitCells(graph)
    return joinLaplacianSpectrum(
        completeLaplacianSpectrum(len(clique)),
        emptyLaplacianSpectrum(len(independent)),
    )


def numericSpectrum(
    matrix: Any, maximumSweeps: int = 100
) -> List[float]:
    """
    All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
    sorted ascending.

    Sweeps continue until the off-diagonal Frobenius norm drops below
    C{1e-12} times the norm of the matrix.

    @raise AsymmetricMatrix: if C{matrix} is not square and symmetric.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise AsymmetricMatrix(f"matrix of shape {a.shape} is not square")
    if not np.array_equal(a, a.T):
        raise AsymmetricMatrix("matrix is not symmetric")
    n = a.shape[0]
    tolerance = 1e-12 * float(np.linalg.norm(a))
    skipBelow = tolerance / max(n, 1)

    def offNorm() -> float:
        off = a - np.diag(np.diag(a))
        return float(np.sqrt(np.sum(off * off)))

    sweeps = 0
    while offNorm() > tolerance:
        if sweeps == maximumSweeps:
            raise ArithmeticError(
                f"Jacobi did not converge in {maximumSweeps} sweeps"
            )
        sweeps += 1
        for k in range(n - 1):
            for l in range(k + 1, n):
                apq = a[k, l]
                if abs(apq) <= skipBelow:
                    continue
                theta = (a[l, l] - a[k, k]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                columnK, columnL = a[:, k].copy(), a[:, l].copy()
                a[:, k] = c * columnK - s * columnL
                a[:, l] = s * columnK + c * columnL
                rowK, rowL = a[k, :].copy(), a[l, :].copy()
                a[k, :] = c * rowK - s * rowL
                a[l, :] = s * rowK + c * rowL
                a[k, l] = a[l, k] = 0.0
    _log.debug(
        "Jacobi converged after {sweeps} sweeps (n={n})", sweeps=sweeps, n=n
    )
    return sorted(float(x) for x in np.diag(a))


def spectraAgree(
    exact: Spectrum,
    numeric: Sequence[float],
    tolerance: float = DEFAULT_EIGEN_TOLERANCE,
) -> bool:
    """
    Do the sorted expansions agree elementwise within C{tolerance}?
    """
    expected = [float(value) for value in expandSpectrum(exact)]
    return len(expected) == len(numeric) and all(
        abs(x - y) <= tolerance for x, y in zip(expected, numeric)
    )


def adjacencyRank(graph: IGraph) -> int:
    """
    The rank of the adjacency matrix over the rationals, by fraction-free
    (Bareiss) elimination on Python integers.
    """
    rows = [list(map(int, row)) for row in adjacencyMatrix(graph).tolist()]
    rank = 0
    previousPivot = 1
    columns = graph.order
    for column in range(columns):
        pivotRow = next(
            (r for r in range(rank, len(rows)) if rows[r][column] != 0), None
        )
        if pivotRow is None:
            continue
        rows[rank], rows[pivotRow] = rows[pivotRow], rows[rank]
        pivot = rows[rank][column]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][column]
            row = rows[r]
            if factor == 0 and not any(row):
                continue
            rows[r] = [
                (pivot * row[c] - factor * rows[rank][c]) // previousPivot
                for c in range(columns)
            ]
        previousPivot = pivot
        rank += 1
        rows = rows[:rank] + [row for row in rows[rank:] if any(row)]
    return rank


@attr.s(auto_attribs=True, frozen=True)
class SpectralSummary:
    """
    Energies, spectral radii and adjacency rank, exactly.
    """

    energy: QuadraticSurd
    laplacianEnergy: QuadraticSurd
    spectralRadius: QuadraticSurd
    laplacianSpectralRadius: QuadraticSurd
    adjacencyRank: int


def energy(spectrum: Spectrum) -> QuadraticSurd:
    """
    The sum of absolute eigenvalues, with multiplicity.
    """
    total = QuadraticSurd.rationalValue(0)
    for eigen in spectrum:
        total = total + abs(eigen.value) * eigen.multiplicity
    return total


def laplacianEnergy(spectrum: Spectrum) -> QuadraticSurd:
    """
    The sum of M{|mu - 2|E|/|V||}; the average degree M{2|E|/|V|} is the
    mean Laplacian eigenvalue, since the trace of M{L} is M{2|E|}.
    """
    total = QuadraticSurd.rationalValue(0)
    for eigen in spectrum:
        total = total + eigen.value * eigen.multiplicity
    average = total / spectrumSize(spectrum)
    return energy(
        tuple(
            ExactEigen(eigen.value - average, eigen.multiplicity)
            for eigen in spectrum
        )
    )


def spectralRadius(spectrum: Spectrum) -> QuadraticSurd:
    return max(abs(eigen.value) for eigen in spectrum)


def rankFromSpectrum(spectrum: Spectrum) -> int:
    zero = QuadraticSurd.rationalValue(0)
    return spectrumSize(spectrum) - sum(
        eigen.multiplicity for eigen in spectrum if eigen.value == zero
    )


def spectralSummary(
    p: int,
    crossCheck: bool = True,
    tolerance: float = DEFAULT_EIGEN_TOLERANCE,
) -> SpectralSummary:
    """
    Compute the spectral quantities of M{Gamma(R)} from the exact spectra.

    @param crossCheck: Also run the Jacobi eigensolver on both matrices and
        require agreement within C{tolerance}.

    @raise ConsistencyGateFailure: if the cross-check fails.
    """
    adjacency = exactAdjacencySpectrum(p)
    laplacian = exactLaplacianSpectrum(p)
    if crossCheck:
        graph = buildStructured(p)
        for name, exact, matrix in (
            ("adjacency", adjacency, adjacencyMatrix(graph)),
            ("laplacian", laplacian, laplacianMatrix(graph)),
        ):
            numeric = numericSpectrum(matrix)
            if not spectraAgree(exact, numeric, tolerance):
                _log.critical(
                    "{name} spectrum disagrees with Jacobi at p={p}",
                    name=name,
                    p=p,
                )
                raise ConsistencyGateFailure(
                    f"{name} spectrum vs Jacobi",
                    p,
                    [float(x) for x in expandSpectrum(exact)],
                    numeric,
                )
    return SpectralSummary(
        energy=energy(adjacency),
        laplacianEnergy=laplacianEnergy(laplacian),
        spectralRadius=spectralRadius(adjacency),
        laplacianSpectralRadius=spectralRadius(laplacian),
        adjacencyRank=rankFromSpectrum(adjacency),
    )


def spectrumToJSON(spectrum: Spectrum) -> List[Dict[str, object]]:
    """
    A JSON-ready rendering: decimal value, exact C{a, b, c, D}, and
    multiplicity.
    """
    return [
        {
            "value": format(float(eigen.value), ".12f"),
            "exact": {"a": eigen.a, "b": eigen.b, "c": eigen.c, "D": eigen.D},
            "text": str(eigen.value),
            "multiplicity": eigen.multiplicity,
        }
        for eigen in spectrum
    ]


def _base(value: QuadraticSurd) -> str:
    text = str(value)
    return f"({text})" if text.startswith("-") else text


def formatSpectrum(spectrum: Spectrum) -> str:
    """
    Render as C{"{-3, -1, 0^(5), 4}"}: ascending, multiplicities above 1 as
    exponents.
    """
    return (
        "{"
        + ", ".join(
            str(eigen.value)
            if eigen.multiplicity == 1
            else f"{_base(eigen.value)}^({eigen.multiplicity})"
            for eigen in spectrum
        )
        + "}"
    )
