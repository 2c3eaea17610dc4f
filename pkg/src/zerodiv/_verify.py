# -*- test-case-name: zerodiv.test.test_verify -*-
# Copyright (c) 2024. See LICENSE for details.

"""
The claims ledger: published closed forms for M{Gamma(R)}, each evaluated
at a prime and judged against the value the graph itself yields.

Every closed form is checked exactly (integers, rationals, quadratic surds,
spectra as multisets, code parameters) except the Randić index, which is
compared with a relative tolerance.  Where a published form does not
survive, a corrected form is carried as an annotation and verified as well.
"""

import csv
import json
import math
from fractions import Fraction
from functools import partial
from io import StringIO
from multiprocessing import Pool
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import attr
import numpy as np
from attr import validators
from constantly import NamedConstant, Names

from twisted.logger import Logger

from ._codes import (
    DEFAULT_ENUMERATION_CUTOFF,
    CodeParams,
    MinCutOracle,
    MinimumDistanceMethod,
    codeParametersForGraph,
    incidenceMatrix,
)
from ._graph import (
    ZdGraph,
    buildBruteforce,
    buildStructured,
    componentCount,
    degreeSequence,
)
from ._indices import randic, wiener, zagrebFirst, zagrebSecond
from ._interfaces import ConsistencyGateFailure, UnsupportedPrime
from ._invariants import InvariantReport, invariantReport
from ._ring import validatePrime
from ._spectra import (
    DEFAULT_EIGEN_TOLERANCE,
    ExactEigen,
    Spectrum,
    SpectralSummary,
    adjacencyMatrix,
    adjacencyRank,
    collectSpectrum,
    exactAdjacencySpectrum,
    exactLaplacianSpectrum,
    formatSpectrum,
    quadraticRoots,
    rankFromSpectrum,
    spectralSummary,
)
from ._surd import QuadraticSurd, surd


__all__ = ()

_log = Logger()

DEFAULT_PRIMES = (3, 5, 7, 11, 13)


class Comparison(Names):
    """
    How a published value is compared with the computed one.
    """

    exactInteger = NamedConstant()
    exactRational = NamedConstant()
    exactSurd = NamedConstant()
    exactSpectrum = NamedConstant()
    exactCodeParameters = NamedConstant()
    floatRelative = NamedConstant()


class Verdict(Names):
    MATCH = NamedConstant()
    MISMATCH = NamedConstant()


def _positive(instance: Any, attribute: Any, value: float) -> None:
    if not value > 0:
        raise ValueError(f"{attribute.name} must be positive, not {value!r}")


def _atLeastThree(instance: Any, attribute: Any, value: int) -> None:
    if value < 3:
        raise ValueError(f"{attribute.name} must be at least 3, not {value!r}")


@attr.s(auto_attribs=True, frozen=True)
class VerificationSettings:
    """
    The knobs of a verification run.

    @ivar maxPrime: The largest prime L{verifyPrime} accepts.
    @ivar enumerationCutoff: The largest code dimension whose codewords are
        enumerated exhaustively.
    @ivar randicTolerance: Relative tolerance for the Randić claim.
    @ivar eigenTolerance: Absolute tolerance of the Jacobi cross-check.
    @ivar minimumDistanceMethod: A L{MinimumDistanceMethod}.
    @ivar crossCheckSpectra: Run the Jacobi cross-check at all.
    @ivar jobs: Worker processes L{verifyRange} spreads the primes over; 1
        verifies them in this process.
    """

    maxPrime: int = attr.ib(default=13, validator=_atLeastThree)
    enumerationCutoff: int = attr.ib(
        default=DEFAULT_ENUMERATION_CUTOFF,
        validator=validators.instance_of(int),
    )
    randicTolerance: float = attr.ib(default=1e-9, validator=_positive)
    eigenTolerance: float = attr.ib(
        default=DEFAULT_EIGEN_TOLERANCE, validator=_positive
    )
    minimumDistanceMethod: NamedConstant = attr.ib(
        default=MinimumDistanceMethod.auto,
        validator=validators.in_(
            list(MinimumDistanceMethod.iterconstants())
        ),
    )
    crossCheckSpectra: bool = True
    jobs: int = attr.ib(
        default=1, validator=[validators.instance_of(int), _positive]
    )


@attr.s(auto_attribs=True, frozen=True)
class OracleValues:
    """
    Everything computed from M{Gamma(R)} at one prime, after the consistency
    gates have passed.
    """

    p: int
    graph: ZdGraph = attr.ib(repr=False)
    invariants: InvariantReport
    wiener: int
    randic: float
    zagrebFirst: int
    zagrebSecond: int
    adjacencySpectrum: Spectrum
    laplacianSpectrum: Spectrum
    spectral: SpectralSummary
    adjacencyRank: int
    code: CodeParams


def _gate(name: str, p: int, expected: object, actual: object) -> None:
    if expected != actual:
        _log.critical(
            "consistency gate {gate} failed at p={p}: "
            "expected {expected!r}, got {actual!r}",
            gate=name,
            p=p,
            expected=expected,
            actual=actual,
        )
        raise ConsistencyGateFailure(name, p, expected, actual)


def _squareSum(spectrum: Spectrum) -> QuadraticSurd:
    total = QuadraticSurd.rationalValue(0)
    for eigen in spectrum:
        total = total + eigen.value * eigen.value * eigen.multiplicity
    return total


def _valueSum(spectrum: Spectrum) -> QuadraticSurd:
    total = QuadraticSurd.rationalValue(0)
    for eigen in spectrum:
        total = total + eigen.value * eigen.multiplicity
    return total


def measureOracles(
    p: int, settings: Optional[VerificationSettings] = None
) -> OracleValues:
    """
    Build M{Gamma(R)} by brute force, run the consistency gates, and compute
    every quantity the ledger makes claims about.

    @raise ConsistencyGateFailure: if two independent computations of the
        same quantity disagree.
    """
    if settings is None:
        settings = VerificationSettings()
    graph = buildBruteforce(p)
    structured = buildStructured(p)
    if graph != structured:
        _gate(
            "brute-force and structured constructions agree",
            p,
            structured.edges,
            graph.edges,
        )
    twiceEdges = 2 * len(graph.edges)
    _gate("degree sum is 2|E|", p, twiceEdges, sum(degreeSequence(graph)))
    adjacency = adjacencyMatrix(graph)
    _gate(
        "trace(A^2) is 2|E|",
        p,
        twiceEdges,
        int(np.trace(adjacency @ adjacency)),
    )

    adjacencySpectrum = exactAdjacencySpectrum(p)
    laplacianSpectrum = exactLaplacianSpectrum(p)
    _gate(
        "sum of squared adjacency eigenvalues is 2|E|",
        p,
        twiceEdges,
        _squareSum(adjacencySpectrum),
    )
    _gate(
        "sum of adjacency eigenvalues is 0", p, 0, _valueSum(adjacencySpectrum)
    )
    _gate(
        "sum of Laplacian eigenvalues is 2|E|",
        p,
        twiceEdges,
        _valueSum(laplacianSpectrum),
    )
    rank = adjacencyRank(graph)
    _gate(
        "adjacency rank by elimination and by spectrum agree",
        p,
        rankFromSpectrum(adjacencySpectrum),
        rank,
    )

    code = codeParametersForGraph(
        graph, settings.minimumDistanceMethod, settings.enumerationCutoff
    )
    _gate("code length is |E|", p, len(graph.edges), code.n)
    _gate(
        "code dimension is |V| minus components",
        p,
        graph.order - componentCount(graph),
        code.k,
    )
    if code.method == "enumerate":
        _gate(
            "enumeration and min-cut distances agree",
            p,
            MinCutOracle().minimumDistance(incidenceMatrix(graph), graph),
            code.d,
        )

    return OracleValues(
        p=p,
        graph=graph,
        invariants=invariantReport(graph),
        wiener=wiener(graph),
        randic=randic(graph),
        zagrebFirst=zagrebFirst(graph),
        zagrebSecond=zagrebSecond(graph),
        adjacencySpectrum=adjacencySpectrum,
        laplacianSpectrum=laplacianSpectrum,
        spectral=spectralSummary(
            p,
            crossCheck=settings.crossCheckSpectra,
            tolerance=settings.eigenTolerance,
        ),
        adjacencyRank=rank,
        code=code,
    )


@attr.s(auto_attribs=True, frozen=True)
class SpectrumDifference:
    """
    The eigenvalues, with multiplicity, found on only one side.
    """

    oracleOnly: Spectrum
    publishedOnly: Spectrum

    def __str__(self) -> str:
        oracle = formatSpectrum(self.oracleOnly)
        return f"+{oracle} -{formatSpectrum(self.publishedOnly)}"


def _spectrumDifference(
    oracle: Spectrum, published: Spectrum
) -> SpectrumDifference:
    counts = {eigen.value: eigen.multiplicity for eigen in oracle}
    for eigen in published:
        counts[eigen.value] = counts.get(eigen.value, 0) - eigen.multiplicity
    return SpectrumDifference(
        collectSpectrum((v, m) for v, m in counts.items() if m > 0),
        collectSpectrum((v, -m) for v, m in counts.items() if m < 0),
    )


def _exact(value: Fraction) -> Union[int, Fraction]:
    return value.numerator if value.denominator == 1 else value


def valuesAgree(
    comparison: NamedConstant,
    oracle: Any,
    published: Any,
    tolerance: float = 1e-9,
) -> bool:
    """
    Do two values agree under C{comparison}?  Only L{Comparison.floatRelative}
    involves floating point.
    """
    if comparison is Comparison.floatRelative:
        return abs(oracle - published) <= tolerance * max(1.0, abs(published))
    return bool(oracle == published)


def discrepancy(comparison: NamedConstant, oracle: Any, published: Any) -> Any:
    """
    The signed difference C{oracle - published}, in the claim's own terms.
    """
    if comparison is Comparison.exactSpectrum:
        return _spectrumDifference(oracle, published)
    if comparison is Comparison.exactCodeParameters:
        return (
            oracle.n - published.n,
            oracle.k - published.k,
            oracle.d - published.d,
        )
    difference = oracle - published
    if isinstance(difference, Fraction):
        return _exact(difference)
    return difference


@attr.s(auto_attribs=True, frozen=True)
class ClaimVerdict:
    """
    The outcome of one claim at one prime.

    @ivar discrepancy: C{oracleValue - publishedValue}.
    @ivar correctedValue: The corrected form's value, if the claim carries
        one; L{None} otherwise.
    """

    claimId: str
    p: int
    publishedValue: Any
    oracleValue: Any
    verdict: NamedConstant
    discrepancy: Any
    correctedValue: Any = None
    correctedVerdict: Optional[NamedConstant] = None


ClosedForm = Callable[[int], Any]


@attr.s(auto_attribs=True, frozen=True)
class Claim:
    """
    A published closed form in C{p}, and where its ground truth comes from.

    @ivar oracleSource: The computation supplying the ground truth; distinct
        across the ledger.
    @ivar correctedForm: A replacement closed form, for claims whose
        published form does not hold, verified alongside it.
    """

    id: str
    description: str
    publishedRef: str
    comparison: NamedConstant
    oracleSource: str
    closedForm: ClosedForm = attr.ib(eq=False, repr=False)
    oracle: Callable[[OracleValues], Any] = attr.ib(eq=False, repr=False)
    correctedForm: Optional[ClosedForm] = attr.ib(
        default=None, eq=False, repr=False
    )

    def evaluate(
        self, values: OracleValues, tolerance: float = 1e-9
    ) -> ClaimVerdict:
        p = values.p
        published = self.closedForm(p)
        oracle = self.oracle(values)
        agree = valuesAgree(self.comparison, oracle, published, tolerance)
        corrected = None
        correctedVerdict = None
        if self.correctedForm is not None:
            corrected = self.correctedForm(p)
            correctedVerdict = (
                Verdict.MATCH
                if valuesAgree(self.comparison, oracle, corrected, tolerance)
                else Verdict.MISMATCH
            )
        return ClaimVerdict(
            claimId=self.id,
            p=p,
            publishedValue=published,
            oracleValue=oracle,
            verdict=Verdict.MATCH if agree else Verdict.MISMATCH,
            discrepancy=discrepancy(self.comparison, oracle, published),
            correctedValue=corrected,
            correctedVerdict=correctedVerdict,
        )


def _edgeCount(p: int) -> int:
    return (2 * p**3 - 3 * p**2 - p + 2) // 2


def _rational(value: Union[int, Fraction]) -> QuadraticSurd:
    return QuadraticSurd.rationalValue(value)


def _rationalSpectrum(values: Iterable[Tuple[int, int]]) -> Spectrum:
    return collectSpectrum((_rational(v), m) for v, m in values)


def _adjacencyDiscriminant(p: int) -> int:
    return (p - 2) ** 2 + 4 * p * (p - 1) ** 2


def _publishedAdjacencySpectrum(p: int) -> Spectrum:
    return _rationalSpectrum(
        [(0, p * p - p - 1), (3 * p - 5, 1), (-1, p - 2), (3 - 2 * p, 1)]
    )


def _correctedAdjacencySpectrum(p: int) -> Spectrum:
    low, high = quadraticRoots(p - 2, -p * (p - 1) ** 2)
    return collectSpectrum(
        [
            (_rational(0), p * p - p - 1),
            (_rational(-1), p - 2),
            (low, 1),
            (high, 1),
        ]
    )


def _publishedRandic(p: int) -> float:
    return (
        (p - 1)
        / (2 * (p * p - 2))
        * (2 * p * math.sqrt((p - 1) * (p * p - 2)) + (p - 2))
    )


def claimsLedger() -> Tuple[Claim, ...]:
    """
    The fixed ledger of twenty claims, ordered by id.
    """
    integer = Comparison.exactInteger
    return (
        Claim(
            "C01_vertex_count",
            "number of vertices",
            "|V| = p^2 - 1",
            integer,
            "graph-build: brute-force vertex count",
            lambda p: p * p - 1,
            lambda v: v.graph.order,
        ),
        Claim(
            "C02_edge_count",
            "number of edges",
            "|E| = (2p^3 - 3p^2 - p + 2)/2",
            integer,
            "graph-build: brute-force edge count",
            _edgeCount,
            lambda v: len(v.graph.edges),
        ),
        Claim(
            "C03_diameter",
            "diameter",
            "diam = 2",
            integer,
            "graph-invariants: all-pairs BFS diameter",
            lambda p: 2,
            lambda v: v.invariants.diameter,
        ),
        Claim(
            "C04_girth",
            "girth",
            "gr = 3",
            integer,
            "graph-invariants: BFS girth",
            lambda p: 3,
            lambda v: v.invariants.girth,
        ),
        Claim(
            "C05_clique_number",
            "clique number",
            "omega = p",
            integer,
            "graph-invariants: branch-and-bound maximum clique",
            lambda p: p,
            lambda v: v.invariants.cliqueNumber,
        ),
        Claim(
            "C06_chromatic_number",
            "chromatic number",
            "chi = p",
            integer,
            "graph-invariants: DSATUR exact colouring",
            lambda p: p,
            lambda v: v.invariants.chromaticNumber,
        ),
        Claim(
            "C07_vertex_connectivity",
            "vertex connectivity",
            "kappa = p - 1",
            integer,
            "graph-invariants: vertex-split max-flow connectivity",
            lambda p: p - 1,
            lambda v: v.invariants.vertexConnectivity,
        ),
        Claim(
            "C08_edge_connectivity",
            "edge connectivity",
            "lambda = p - 1",
            integer,
            "graph-invariants: Stoer-Wagner minimum cut",
            lambda p: p - 1,
            lambda v: v.invariants.edgeConnectivity,
        ),
        Claim(
            "C09_wiener",
            "Wiener index",
            "W = p(2p^3 - 2p^2 - 7p + 5)/2",
            integer,
            "topo-indices: distance sum over vertex pairs",
            lambda p: _exact(
                Fraction(p * (2 * p**3 - 2 * p**2 - 7 * p + 5), 2)
            ),
            lambda v: v.wiener,
            lambda p: _exact(
                Fraction(2 * p**4 - 2 * p**3 - 3 * p**2 + p + 2, 2)
            ),
        ),
        Claim(
            "C10_randic",
            "Randic index",
            "R = (p-1)/(2(p^2-2)) [2p sqrt((p-1)(p^2-2)) + (p-2)]",
            Comparison.floatRelative,
            "topo-indices: compensated edge summation",
            _publishedRandic,
            lambda v: v.randic,
        ),
        Claim(
            "C11_zagreb_first",
            "first Zagreb index",
            "M1 = (p-1)(p^4 + p^3 - 4p^2 + p + 4)",
            integer,
            "topo-indices: squared degree sum",
            lambda p: (p - 1) * (p**4 + p**3 - 4 * p**2 + p + 4),
            lambda v: v.zagrebFirst,
            lambda p: (p - 1) * (p**4 + p**3 - 6 * p**2 + p + 4),
        ),
        Claim(
            "C12_zagreb_second",
            "second Zagreb index",
            "M2 = (3p^6 - 9p^5 + 22p^3 - 16p^2 - 8p + 8)/2",
            integer,
            "topo-indices: edge degree-product sum",
            lambda p: _exact(
                Fraction(
                    3 * p**6 - 9 * p**5 + 22 * p**3 - 16 * p**2 - 8 * p + 8, 2
                )
            ),
            lambda v: v.zagrebSecond,
        ),
        Claim(
            "C13_adj_spectrum",
            "adjacency spectrum",
            "0^(p^2-p-1), (3p-5)^(1), (-1)^(p-2), (3-2p)^(1)",
            Comparison.exactSpectrum,
            "spectra: equitable-partition exact adjacency spectrum",
            _publishedAdjacencySpectrum,
            lambda v: v.adjacencySpectrum,
            _correctedAdjacencySpectrum,
        ),
        Claim(
            "C14_adj_energy",
            "energy",
            "energy = 6p - 10",
            Comparison.exactSurd,
            "spectra: absolute eigenvalue sum",
            lambda p: _rational(6 * p - 10),
            lambda v: v.spectral.energy,
            lambda p: surd(p - 2, 1, _adjacencyDiscriminant(p)),
        ),
        Claim(
            "C15_adj_rank",
            "adjacency rank",
            "rank A = p",
            integer,
            "spectra: fraction-free elimination rank",
            lambda p: p,
            lambda v: v.adjacencyRank,
        ),
        Claim(
            "C16_adj_spectral_radius",
            "spectral radius",
            "rho = 3p - 5",
            Comparison.exactSurd,
            "spectra: largest absolute adjacency eigenvalue",
            lambda p: _rational(3 * p - 5),
            lambda v: v.spectral.spectralRadius,
            lambda p: surd(p - 2, 1, _adjacencyDiscriminant(p), 2),
        ),
        Claim(
            "C17_lap_spectrum",
            "Laplacian spectrum",
            "0^(1), (p^2-1)^(p-1), (p-1)^(p^2-p-1)",
            Comparison.exactSpectrum,
            "spectra: join-rule exact Laplacian spectrum",
            lambda p: _rationalSpectrum(
                [(0, 1), (p * p - 1, p - 1), (p - 1, p * p - p - 1)]
            ),
            lambda v: v.laplacianSpectrum,
        ),
        Claim(
            "C18_lap_energy",
            "Laplacian energy",
            "LE = (2p^5 - 6p^4 + 6p^3 - 4p + 1)/(p^2 - 1)",
            Comparison.exactRational,
            "spectra: absolute deviation from the average degree",
            lambda p: _rational(
                Fraction(2 * p**5 - 6 * p**4 + 6 * p**3 - 4 * p + 1, p * p - 1)
            ),
            lambda v: v.spectral.laplacianEnergy,
            lambda p: _rational(
                Fraction(2 * p**5 - 6 * p**4 + 6 * p**3 - 4 * p + 2, p * p - 1)
            ),
        ),
        Claim(
            "C19_lap_spectral_radius",
            "Laplacian spectral radius",
            "mu = p^2 - 1",
            Comparison.exactSurd,
            "spectra: largest Laplacian eigenvalue",
            lambda p: _rational(p * p - 1),
            lambda v: v.spectral.laplacianSpectralRadius,
        ),
        Claim(
            "C20_code_params",
            "incidence code parameters",
            "[(2p^3 - 3p^2 - p + 2)/2, p^2 - 2, p - 1]_2",
            Comparison.exactCodeParameters,
            "gf2-codes: incidence code length, GF(2) rank and minimum distance",
            lambda p: CodeParams(
                _edgeCount(p), p * p - 2, p - 1, "closed form"
            ),
            lambda v: v.code,
        ),
    )


def _checkedPrime(p: int, settings: VerificationSettings) -> int:
    validatePrime(p)
    if p == 2:
        raise UnsupportedPrime("the closed forms assume an odd prime, got 2")
    if p > settings.maxPrime:
        raise UnsupportedPrime(
            f"p={p} is above the configured maximum {settings.maxPrime}"
        )
    return p


def verifyPrime(
    p: int, settings: Optional[VerificationSettings] = None
) -> Tuple[ClaimVerdict, ...]:
    """
    Judge every claim of the ledger at C{p}.

    @raise UnsupportedPrime: for C{p = 2} or above C{settings.maxPrime}.
    @raise ConsistencyGateFailure: if an internal check fails.
    """
    if settings is None:
        settings = VerificationSettings()
    _checkedPrime(p, settings)
    _log.info("verifying closed forms at p={p}", p=p)
    values = measureOracles(p, settings)
    verdicts = []
    for claim in claimsLedger():
        tolerance = (
            settings.randicTolerance
            if claim.comparison is Comparison.floatRelative
            else 0.0
        )
        verdict = claim.evaluate(values, tolerance)
        _log.debug(
            "{claim} at p={p}: {verdict}",
            claim=claim.id,
            p=p,
            verdict=verdict.verdict.name,
        )
        verdicts.append(verdict)
    return tuple(verdicts)


def summarize(verdicts: Sequence[ClaimVerdict], corrected: bool = False) -> str:
    """
    C{"MATCH for all"}, C{"MISMATCH for all"} or C{"MATCH only at {3, 5}"}.
    """
    if not verdicts:
        raise ValueError("nothing to summarize")
    matches = [
        v.p
        for v in verdicts
        if (v.correctedVerdict if corrected else v.verdict) is Verdict.MATCH
    ]
    if len(matches) == len(verdicts):
        return "MATCH for all"
    if not matches:
        return "MISMATCH for all"
    return "MATCH only at {" + ", ".join(str(p) for p in matches) + "}"


@attr.s(auto_attribs=True, frozen=True)
class VerificationReport:
    """
    Verdicts for every claim at every prime, ordered by claim id, then by
    prime.
    """

    primes: Tuple[int, ...]
    claims: Tuple[Claim, ...]
    verdicts: Tuple[ClaimVerdict, ...]

    def verdictsFor(self, claimId: str) -> Tuple[ClaimVerdict, ...]:
        return tuple(v for v in self.verdicts if v.claimId == claimId)

    def verdict(self, claimId: str, p: int) -> ClaimVerdict:
        for each in self.verdicts:
            if each.claimId == claimId and each.p == p:
                return each
        raise KeyError((claimId, p))

    def summary(self, claimId: str) -> str:
        return summarize(self.verdictsFor(claimId))

    def correctedSummary(self, claimId: str) -> Optional[str]:
        verdicts = self.verdictsFor(claimId)
        if verdicts[0].correctedVerdict is None:
            return None
        return summarize(verdicts, corrected=True)


def _portableSettings(settings: VerificationSettings) -> Dict[str, Any]:
    fields = attr.asdict(settings, recurse=False)
    fields["minimumDistanceMethod"] = settings.minimumDistanceMethod.name
    return fields


def _portableVerdict(verdict: ClaimVerdict) -> Dict[str, Any]:
    fields = attr.asdict(verdict, recurse=False)
    fields["verdict"] = verdict.verdict.name
    if verdict.correctedVerdict is not None:
        fields["correctedVerdict"] = verdict.correctedVerdict.name
    return fields


def _restoredVerdict(fields: Dict[str, Any]) -> ClaimVerdict:
    fields = dict(fields, verdict=Verdict.lookupByName(fields["verdict"]))
    if fields["correctedVerdict"] is not None:
        fields["correctedVerdict"] = Verdict.lookupByName(
            fields["correctedVerdict"]
        )
    return ClaimVerdict(**fields)


def _verifyInWorker(
    settingsFields: Dict[str, Any], p: int
) -> List[Dict[str, Any]]:
    # named constants are compared by identity, so only their names cross
    # the process boundary
    settings = VerificationSettings(
        **dict(
            settingsFields,
            minimumDistanceMethod=MinimumDistanceMethod.lookupByName(
                settingsFields["minimumDistanceMethod"]
            ),
            jobs=1,
        )
    )
    return [_portableVerdict(each) for each in verifyPrime(p, settings)]


def _verifyInPool(
    primes: Sequence[int], settings: VerificationSettings
) -> Dict[int, Tuple[ClaimVerdict, ...]]:
    workers = min(settings.jobs, len(primes))
    _log.info(
        "verifying {count} primes in {workers} processes",
        count=len(primes),
        workers=workers,
    )
    with Pool(workers) as pool:
        results = pool.map(
            partial(_verifyInWorker, _portableSettings(settings)), primes
        )
    return {
        p: tuple(_restoredVerdict(fields) for fields in verdicts)
        for p, verdicts in zip(primes, results)
    }


def verifyRange(
    primes: Iterable[int], settings: Optional[VerificationSettings] = None
) -> VerificationReport:
    """
    Verify the ledger at each of C{primes}, in ascending order.  The primes
    are independent; with C{settings.jobs} above 1 they are verified in
    that many worker processes.

    @raise ValueError: if C{primes} is empty.
    """
    ordered = tuple(sorted(set(primes)))
    if not ordered:
        raise ValueError("no primes to verify")
    if settings is None:
        settings = VerificationSettings()
    for p in ordered:
        _checkedPrime(p, settings)
    byPrime: Optional[Dict[int, Tuple[ClaimVerdict, ...]]] = None
    if settings.jobs > 1 and len(ordered) > 1:
        try:
            byPrime = _verifyInPool(ordered, settings)
        except OSError as e:
            # no process support, e.g. no POSIX semaphores
            _log.warn(
                "worker processes unavailable ({error}); verifying in-process",
                error=e,
            )
    if byPrime is None:
        byPrime = {p: verifyPrime(p, settings) for p in ordered}
    claims = tuple(sorted(claimsLedger(), key=lambda claim: claim.id))
    verdicts = tuple(
        verdict
        for claim in claims
        for p in ordered
        for verdict in byPrime[p]
        if verdict.claimId == claim.id
    )
    return VerificationReport(ordered, claims, verdicts)


def renderValue(value: Any) -> Any:
    """
    A JSON-ready rendering: integers stay integers, floats stay floats, and
    every other exact value becomes its exact text.
    """
    if value is None or isinstance(value, (int, float)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, QuadraticSurd):
        if value.isRational():
            return renderValue(value.rational)
        return str(value)
    if isinstance(value, tuple) and all(
        isinstance(e, ExactEigen) for e in value
    ):
        return formatSpectrum(value)
    if isinstance(value, tuple):
        return "[" + ", ".join(str(each) for each in value) + "]"
    return str(value)


def _approximation(value: Any) -> Optional[str]:
    irrational = isinstance(value, QuadraticSurd) and not (
        value.isRational() and value.rational.denominator == 1
    )
    if irrational or (isinstance(value, Fraction) and value.denominator != 1):
        return format(float(value), ".12f")
    return None


def _perPrime(verdict: ClaimVerdict) -> Dict[str, Any]:
    row: Dict[str, Any] = {
        "p": verdict.p,
        "paper_value": renderValue(verdict.publishedValue),
        "oracle_value": renderValue(verdict.oracleValue),
        "verdict": verdict.verdict.name,
        "discrepancy": renderValue(verdict.discrepancy),
    }
    for key, value in (
        ("paper_approx", verdict.publishedValue),
        ("oracle_approx", verdict.oracleValue),
    ):
        approximation = _approximation(value)
        if approximation is not None:
            row[key] = approximation
    if verdict.correctedVerdict is not None:
        row["corrected_value"] = renderValue(verdict.correctedValue)
        row["corrected_verdict"] = verdict.correctedVerdict.name
    return row


def reportToJSON(report: VerificationReport) -> str:
    """
    Render a report as JSON with sorted keys; identical reports render to
    identical bytes.
    """
    claims = []
    for claim in report.claims:
        entry: Dict[str, Any] = {
            "id": claim.id,
            "description": claim.description,
            "paper_ref": claim.publishedRef,
            "comparison": claim.comparison.name,
            "oracle_source": claim.oracleSource,
            "per_prime": [_perPrime(v) for v in report.verdictsFor(claim.id)],
            "summary": report.summary(claim.id),
        }
        corrected = report.correctedSummary(claim.id)
        if corrected is not None:
            entry["corrected_summary"] = corrected
        claims.append(entry)
    document = {"generated_for": list(report.primes), "claims": claims}
    text = json.dumps(document, sort_keys=True, indent=2, allow_nan=False)
    return text + "\n"


_CSV_FIELDS = (
    "id",
    "paper_ref",
    "p",
    "paper_value",
    "oracle_value",
    "verdict",
    "discrepancy",
    "corrected_value",
    "corrected_verdict",
    "summary",
)


def reportToCSV(report: VerificationReport) -> str:
    """
    One row per claim and prime.
    """
    stream = StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(_CSV_FIELDS)
    for claim in report.claims:
        summary = report.summary(claim.id)
        for verdict in report.verdictsFor(claim.id):
            corrected = verdict.correctedVerdict
            writer.writerow(
                [
                    claim.id,
                    claim.publishedRef,
                    verdict.p,
                    renderValue(verdict.publishedValue),
                    renderValue(verdict.oracleValue),
                    verdict.verdict.name,
                    renderValue(verdict.discrepancy),
                    (
                        ""
                        if corrected is None
                        else renderValue(verdict.correctedValue)
                    ),
                    "" if corrected is None else corrected.name,
                    summary,
                ]
            )
    return stream.getvalue()


def reportToText(report: VerificationReport) -> str:
    """
    One line per claim: its id and summary, and the corrected form's summary
    where there is one.
    """
    width = max(len(claim.id) for claim in report.claims)
    lines = ["primes: " + ", ".join(str(p) for p in report.primes)]
    for claim in report.claims:
        line = f"{claim.id:<{width}}  {report.summary(claim.id)}"
        corrected = report.correctedSummary(claim.id)
        if corrected is not None:
            line += f" (corrected form: {corrected})"
        lines.append(line)
    return "\n".join(lines) + "\n"
