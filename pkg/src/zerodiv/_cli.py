# -*- test-case-name: zerodiv.test.test_cli -*-
# Copyright (c) 2024. See LICENSE for details.

"""
The C{zerodiv} command line.
"""

import json
import math
import os
import sys
from typing import IO, Any, Callable, Dict, NoReturn, Optional, Sequence, Tuple

import attr
from click import BadParameter, Choice, ClickException
from click import group as commandGroup
from click import option as commandOption
from click import pass_obj
from constantly import NamedConstant

from twisted.logger import (
    FilteringLogObserver,
    LogLevel,
    LogLevelFilterPredicate,
    Logger,
    globalLogBeginner,
    textFileLogObserver,
)

from ._codes import (
    DEFAULT_ENUMERATION_CUTOFF,
    MinimumDistanceMethod,
    codeParametersForGraph,
    incidenceMatrix,
)
from ._graph import ZdGraph, buildBruteforce, edgesToCSV, toDOT
from ._indices import indexValues
from ._interfaces import ConsistencyGateFailure
from ._invariants import invariantReport, radius
from ._spectra import (
    exactAdjacencySpectrum,
    exactLaplacianSpectrum,
    formatSpectrum,
    spectralSummary,
    spectrumToJSON,
)
from ._surd import QuadraticSurd
from ._verify import (
    DEFAULT_PRIMES,
    VerificationSettings,
    renderValue,
    reportToCSV,
    reportToJSON,
    reportToText,
    verifyRange,
)


__all__ = ()

_log = Logger()

FORMATS: Dict[str, Tuple[str, ...]] = {
    "graph": ("text", "json", "csv", "dot"),
    "invariants": ("text", "json"),
    "indices": ("text", "json"),
    "spectra": ("text", "json"),
    "code": ("text", "json"),
    "verify": ("text", "json", "csv"),
}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONSISTENCY = 2


def _nonEmpty(instance: Any, attribute: Any, value: Tuple[int, ...]) -> None:
    if not value:
        raise ValueError("at least one prime is required")


@attr.s(auto_attribs=True, frozen=True)
class CliConfig:
    """
    One validated invocation.

    @ivar command: A key of L{FORMATS}.
    @ivar primes: The primes to work on; every command but C{verify} takes
        exactly one.
    @ivar format: An output format valid for C{command}.
    @ivar minimumDistanceMethod: A L{MinimumDistanceMethod}.
    @ivar outputPath: Where to write the artifact; standard output if
        L{None}.
    """

    command: str = attr.ib(validator=attr.validators.in_(list(FORMATS)))
    primes: Tuple[int, ...] = attr.ib(converter=tuple, validator=_nonEmpty)
    format: str = "text"
    minimumDistanceMethod: NamedConstant = MinimumDistanceMethod.auto
    outputPath: Optional[str] = None

    def __attrs_post_init__(self) -> None:
        if self.format not in FORMATS[self.command]:
            raise ValueError(
                f"format {self.format!r} is not available for "
                f"{self.command!r}; choose from "
                + ", ".join(FORMATS[self.command])
            )
        if self.command != "verify" and len(self.primes) != 1:
            raise ValueError(f"{self.command!r} takes a single prime")

    @property
    def prime(self) -> int:
        return self.primes[0]


def _dumps(document: Any) -> str:
    text = json.dumps(document, sort_keys=True, indent=2, allow_nan=False)
    return text + "\n"


def _exactWithDecimal(value: QuadraticSurd) -> Dict[str, Any]:
    return {"exact": renderValue(value), "value": format(float(value), ".12f")}


def renderGraph(config: CliConfig) -> str:
    graph = buildBruteforce(config.prime)
    if config.format == "dot":
        return toDOT(graph)
    if config.format == "csv":
        return edgesToCSV(graph)
    if config.format == "json":
        return _dumps(
            {
                "p": graph.p,
                "vertices": [
                    {
                        "index": index,
                        "label": graph.label(index),
                        "class": graph.vertexClass(index).name,
                    }
                    for index in range(graph.order)
                ],
                "edges": [
                    {"source": i, "target": j, "block": block.value}
                    for (i, j), block in zip(graph.edges, graph.blocks)
                ],
            }
        )
    lines = [
        f"Gamma(R) for p={graph.p}: {graph.order} vertices, "
        f"{len(graph.edges)} edges"
    ]
    lines.extend(
        f"n{index} {graph.label(index)} {graph.vertexClass(index).name}"
        for index in range(graph.order)
    )
    lines.extend(
        f"n{i} -- n{j} {block.value}"
        for (i, j), block in zip(graph.edges, graph.blocks)
    )
    return "\n".join(lines) + "\n"


def renderInvariants(config: CliConfig) -> str:
    graph = buildBruteforce(config.prime)
    report = invariantReport(graph)
    values = {
        "diameter": report.diameter,
        "radius": radius(graph),
        "girth": report.girth,
        "clique_number": report.cliqueNumber,
        "chromatic_number": report.chromaticNumber,
        "vertex_connectivity": report.vertexConnectivity,
        "edge_connectivity": report.edgeConnectivity,
        "minimum_degree": report.minimumDegree,
    }
    return _renderMapping(config, values)


def renderIndices(config: CliConfig) -> str:
    graph = buildBruteforce(config.prime)
    values = {each.name.name: each.value for each in indexValues(graph)}
    return _renderMapping(config, values)


def _jsonScalar(value: Any) -> Any:
    # an infinite girth or diameter is written as null
    if isinstance(value, float) and math.isinf(value):
        return None
    return value


def _renderMapping(config: CliConfig, values: Dict[str, Any]) -> str:
    if config.format == "json":
        document = {key: _jsonScalar(value) for key, value in values.items()}
        return _dumps({"p": config.prime, **document})
    return "".join(f"{key}: {value!r}\n" for key, value in values.items())


def renderSpectra(config: CliConfig) -> str:
    p = config.prime
    adjacency = exactAdjacencySpectrum(p)
    laplacian = exactLaplacianSpectrum(p)
    summary = spectralSummary(p)
    scalars = {
        "energy": summary.energy,
        "laplacian_energy": summary.laplacianEnergy,
        "spectral_radius": summary.spectralRadius,
        "laplacian_spectral_radius": summary.laplacianSpectralRadius,
    }
    if config.format == "json":
        document: Dict[str, Any] = {
            "p": p,
            "adjacency": spectrumToJSON(adjacency),
            "laplacian": spectrumToJSON(laplacian),
            "adjacency_rank": summary.adjacencyRank,
        }
        document.update(
            (key, _exactWithDecimal(value)) for key, value in scalars.items()
        )
        return _dumps(document)
    lines = [
        f"adjacency: {formatSpectrum(adjacency)}",
        f"laplacian: {formatSpectrum(laplacian)}",
        f"adjacency_rank: {summary.adjacencyRank}",
    ]
    lines.extend(
        f"{key}: {value} ({float(value):.12f})"
        for key, value in scalars.items()
    )
    return "\n".join(lines) + "\n"


def renderCode(config: CliConfig) -> str:
    graph: ZdGraph = buildBruteforce(config.prime)
    params = codeParametersForGraph(
        graph, config.minimumDistanceMethod, DEFAULT_ENUMERATION_CUTOFF
    )
    if config.format == "json":
        return _dumps(
            {
                "p": config.prime,
                "n": params.n,
                "k": params.k,
                "d": params.d,
                "field": params.field,
                "d_method": params.method,
                "generator": incidenceMatrix(graph).toText().splitlines(),
            }
        )
    return f"{params}\n"


def renderVerify(config: CliConfig) -> str:
    report = verifyRange(
        config.primes,
        VerificationSettings(
            minimumDistanceMethod=config.minimumDistanceMethod,
            jobs=min(len(config.primes), os.cpu_count() or 1),
        ),
    )
    if config.format == "json":
        return reportToJSON(report)
    if config.format == "csv":
        return reportToCSV(report)
    return reportToText(report)


_RENDERERS: Dict[str, Callable[[CliConfig], str]] = {
    "graph": renderGraph,
    "invariants": renderInvariants,
    "indices": renderIndices,
    "spectra": renderSpectra,
    "code": renderCode,
    "verify": renderVerify,
}


def run(config: CliConfig, stdout: IO[str]) -> None:
    """
    Produce the artifact for C{config} and write it to C{config.outputPath},
    or to C{stdout}.
    """
    _log.info(
        "{command} for primes {primes}",
        command=config.command,
        primes=config.primes,
    )
    artifact = _RENDERERS[config.command](config)
    if config.outputPath is None:
        stdout.write(artifact)
    else:
        try:
            with open(
                config.outputPath, "w", encoding="utf-8", newline=""
            ) as f:
                f.write(artifact)
        except OSError as e:
            raise ClickException(
                f"cannot write {config.outputPath}: {e.strerror}"
            )


def _parsePrimes(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(each) for each in text.split(",") if each.strip())
    except ValueError:
        raise BadParameter(f"not a comma-separated list of integers: {text!r}")


def _configure(
    stdout: IO[str],
    command: str,
    prime: Optional[int],
    primes: Optional[str],
    outputFormat: str,
    method: str,
    out: Optional[str],
) -> None:
    if prime is not None and primes is not None:
        raise BadParameter("give either --prime or --primes, not both")
    if prime is not None:
        chosen: Tuple[int, ...] = (prime,)
    elif primes is not None:
        chosen = _parsePrimes(primes)
    elif command == "verify":
        chosen = DEFAULT_PRIMES
    else:
        raise BadParameter("--prime is required")
    try:
        config = CliConfig(
            command=command,
            primes=chosen,
            format=outputFormat,
            minimumDistanceMethod=MinimumDistanceMethod.lookupByName(method),
            outputPath=out,
        )
    except ValueError as e:
        raise BadParameter(str(e))
    run(config, stdout)


def _commonOptions(
    formats: Sequence[str],
) -> Callable[[Callable[..., None]], Callable[..., None]]:
    def decorate(f: Callable[..., None]) -> Callable[..., None]:
        for decorator in reversed(
            [
                commandOption(
                    "--prime", type=int, default=None, help="A prime p"
                ),
                commandOption(
                    "--primes",
                    default=None,
                    help="Comma-separated primes, e.g. 3,5,7",
                ),
                commandOption(
                    "--format",
                    "outputFormat",
                    type=Choice(list(formats)),
                    default="text",
                    show_default=True,
                ),
                commandOption(
                    "--min-distance-method",
                    "method",
                    type=Choice(
                        [c.name for c in MinimumDistanceMethod.iterconstants()]
                    ),
                    default="auto",
                    show_default=True,
                ),
                commandOption(
                    "--out", default=None, help="Write here, not to stdout"
                ),
            ]
        ):
            f = decorator(f)
        return f

    return decorate


@commandGroup()
def zerodiv() -> None:
    """
    The zero-divisor graph of F_p[u]/(u^3), its invariants, spectra and
    incidence code, and verification of their closed forms.
    """


def _defineCommand(name: str, summary: str) -> None:
    @zerodiv.command(name=name, help=summary)
    @_commonOptions(FORMATS[name])
    @pass_obj
    def command(
        stdout: Optional[IO[str]],
        prime: Optional[int],
        primes: Optional[str],
        outputFormat: str,
        method: str,
        out: Optional[str],
    ) -> None:
        _configure(
            stdout if stdout is not None else sys.stdout,
            name,
            prime,
            primes,
            outputFormat,
            method,
            out,
        )


_defineCommand("graph", "Build Gamma(R) and export it.")
_defineCommand(
    "invariants",
    "Diameter, girth, clique and chromatic numbers, connectivities.",
)
_defineCommand("indices", "Wiener, Randic and Zagreb indices.")
_defineCommand("spectra", "Exact adjacency and Laplacian spectra and energies.")
_defineCommand("code", "Parameters of the binary incidence code.")
_defineCommand("verify", "Judge every closed form at each prime.")


def execute(
    args: Sequence[str],
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    """
    Run the command line and return its exit status: 0 on success, 1 for a
    usage error or invalid input, 2 for a failed consistency gate.
    """
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr
    try:
        status = zerodiv.main(
            args=list(args),
            prog_name="zerodiv",
            standalone_mode=False,
            obj=stdout,
        )
    except ConsistencyGateFailure as e:
        stderr.write(f"ERROR: {e}\n")
        return EXIT_CONSISTENCY
    except ClickException as e:
        stderr.write(f"ERROR: {e.format_message()}\n")
        return EXIT_USAGE
    except (ValueError, IndexError) as e:
        stderr.write(f"ERROR: {e}\n")
        return EXIT_USAGE
    return status if isinstance(status, int) else EXIT_OK


def startLogging(stream: IO[str], level: NamedConstant = LogLevel.warn) -> None:
    """
    Send log events at C{level} and above to C{stream}.
    """
    globalLogBeginner.beginLoggingTo(
        [
            FilteringLogObserver(
                textFileLogObserver(stream),
                [LogLevelFilterPredicate(defaultLogLevel=level)],
            )
        ],
        redirectStandardIO=False,
    )


def main() -> NoReturn:
    startLogging(sys.stderr)
    sys.exit(execute(sys.argv[1:]))
