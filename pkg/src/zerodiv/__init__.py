"""
The zero-divisor graph of M{F_p[u]/(u^3)}: construction, invariants,
topological indices, spectra, the binary incidence code, and a harness that
checks published closed forms for all of them.
"""

from ._codes import (
    BinaryMatrix,
    CodeParams,
    EnumerationOracle,
    MinCutOracle,
    MinimumDistanceMethod,
    codeParameters,
    gf2Rank,
    incidenceMatrix,
    minimumDistance,
)
from ._graph import (
    EdgeBlock,
    SimpleGraph,
    ZdGraph,
    buildBruteforce,
    buildStructured,
    degreeSequence,
    dotLabel,
    edgesToCSV,
    isConnected,
    toDOT,
)
from ._indices import (
    IndexValue,
    TopologicalIndex,
    randic,
    wiener,
    zagrebFirst,
    zagrebSecond,
)
from ._invariants import (
    InvariantReport,
    chromaticNumber,
    cliqueNumber,
    diameter,
    edgeConnectivity,
    girth,
    invariantReport,
    vertexConnectivity,
)
from ._ring import (
    RingElem,
    VertexClass,
    classify,
    formatElement,
    isUnit,
    nonzeroZeroDivisors,
    parseElement,
    ringAdd,
    ringMul,
)
from ._spectra import (
    ExactEigen,
    SpectralSummary,
    adjacencyMatrix,
    exactAdjacencySpectrum,
    exactLaplacianSpectrum,
    laplacianMatrix,
    numericSpectrum,
    spectralSummary,
)
from ._surd import QuadraticSurd, surd
from ._verify import (
    Claim,
    ClaimVerdict,
    Comparison,
    VerificationReport,
    VerificationSettings,
    Verdict,
    claimsLedger,
    reportToCSV,
    reportToJSON,
    reportToText,
    verifyPrime,
    verifyRange,
)
from ._version import __version__ as _incremental_version


__all__ = (
    "BinaryMatrix",
    "Claim",
    "ClaimVerdict",
    "CodeParams",
    "Comparison",
    "EdgeBlock",
    "EnumerationOracle",
    "ExactEigen",
    "IndexValue",
    "InvariantReport",
    "MinCutOracle",
    "MinimumDistanceMethod",
    "QuadraticSurd",
    "RingElem",
    "SimpleGraph",
    "SpectralSummary",
    "TopologicalIndex",
    "Verdict",
    "VerificationReport",
    "VerificationSettings",
    "VertexClass",
    "ZdGraph",
    "__author__",
    "__copyright__",
    "__license__",
    "__version__",
    "adjacencyMatrix",
    "buildBruteforce",
    "buildStructured",
    "chromaticNumber",
    "claimsLedger",
    "classify",
    "cliqueNumber",
    "codeParameters",
    "degreeSequence",
    "dotLabel",
    "diameter",
    "edgeConnectivity",
    "edgesToCSV",
    "exactAdjacencySpectrum",
    "exactLaplacianSpectrum",
    "formatElement",
    "gf2Rank",
    "girth",
    "incidenceMatrix",
    "invariantReport",
    "isConnected",
    "isUnit",
    "laplacianMatrix",
    "minimumDistance",
    "nonzeroZeroDivisors",
    "numericSpectrum",
    "parseElement",
    "randic",
    "reportToCSV",
    "reportToJSON",
    "reportToText",
    "ringAdd",
    "ringMul",
    "spectralSummary",
    "surd",
    "toDOT",
    "verifyPrime",
    "verifyRange",
    "vertexConnectivity",
    "wiener",
    "zagrebFirst",
    "zagrebSecond",
)


# Make it a str, as the version is usually compared as text
__version__ = _incremental_version.base()

__author__ = "The zerodiv contributors"
__license__ = "MIT"
__copyright__ = f"Copyright 2024 {__author__}"
