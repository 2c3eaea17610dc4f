# Copyright (c) 2024. See LICENSE for details.

"""
Tests for L{zerodiv._cli}.
"""

import json
from io import StringIO
from typing import List, NoReturn, Tuple

from twisted.python.filepath import FilePath

from .. import _spectra, _verify
from .._cli import (
    EXIT_CONSISTENCY,
    EXIT_OK,
    EXIT_USAGE,
    FORMATS,
    CliConfig,
    execute,
)
from .._codes import MinimumDistanceMethod
from .._verify import VerificationSettings
from ._trial import TestCase


__all__ = ()


def runCommand(args: List[str]) -> Tuple[int, str, str]:
    stdout, stderr = StringIO(), StringIO()
    status = execute(args, stdout, stderr)
    return status, stdout.getvalue(), stderr.getvalue()


def rejectConstant(name: str) -> NoReturn:
    raise ValueError(f"non-standard JSON constant {name}")


class CliConfigTests(TestCase):
    """
    Tests for L{CliConfig}.
    """

    def test_valid(self) -> None:
        config = CliConfig("graph", [5], "dot")
        self.assertEqual(config.primes, (5,))
        self.assertEqual(config.prime, 5)
        self.assertIs(config.minimumDistanceMethod, MinimumDistanceMethod.auto)

    def test_invalid(self) -> None:
        """
        Unknown commands, formats not offered by the command, missing
        primes and several primes for a single-prime command are refused.
        """
        self.assertRaises(ValueError, CliConfig, "draw", [3])
        self.assertRaises(ValueError, CliConfig, "code", [3], "dot")
        self.assertRaises(ValueError, CliConfig, "verify", [])
        self.assertRaises(ValueError, CliConfig, "graph", [3, 5])

    def test_formats(self) -> None:
        """
        Every command renders text; only C{graph} renders DOT.
        """
        for command, formats in FORMATS.items():
            self.assertIn("text", formats)
            self.assertEqual("dot" in formats, command == "graph")


class CommandTests(TestCase):
    """
    Tests for L{execute} with each sub-command.
    """

    def test_code(self) -> None:
        """
        C{code} prints the parameters in bracket notation.
        """
        self.assertEqual(
            runCommand(["code", "--prime", "3"]),
            (EXIT_OK, "[13, 7, 2]_2\n", ""),
        )

    def test_codeJSON(self) -> None:
        """
        The JSON form names the oracle and includes the generator rows.
        """
        status, out, _ = runCommand(
            ["code", "--prime", "3", "--format", "json",
             "--min-distance-method", "mincut"]
        )  # fmt: skip
        self.assertEqual(status, EXIT_OK)
        document = json.loads(out)
        self.assertEqual(
            (document["n"], document["k"], document["d"]), (13, 7, 2)
        )
        self.assertEqual(document["d_method"], "mincut")
        self.assertEqual(document["generator"][0], "1100000000000")

    def test_graphDOT(self) -> None:
        """
        C{graph --format dot} writes 8 nodes and 13 edges for p = 3.
        """
        status, out, _ = runCommand(
            ["graph", "--prime", "3", "--format", "dot"]
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.count("[label="), 8)
        self.assertEqual(out.count(" -- "), 13)

    def test_graphJSON(self) -> None:
        status, out, _ = runCommand(
            ["graph", "--prime", "5", "--format", "json"]
        )
        self.assertEqual(status, EXIT_OK)
        document = json.loads(out)
        self.assertEqual(len(document["vertices"]), 24)
        self.assertEqual(len(document["edges"]), 86)
        self.assertEqual(document["vertices"][0]["label"], "u")

    def test_invariants(self) -> None:
        status, out, _ = runCommand(
            ["invariants", "--prime", "5", "--format", "json"]
        )
        self.assertEqual(status, EXIT_OK)
        document = json.loads(out)
        self.assertEqual(document["diameter"], 2)
        self.assertEqual(document["radius"], 1)
        self.assertEqual(document["chromatic_number"], 5)
        self.assertEqual(document["edge_connectivity"], 4)

    def test_invariantsEvenPrime(self) -> None:
        """
        At p = 2 the graph is a path, so its girth is infinite; the JSON
        output writes it as null and stays strict JSON.
        """
        status, out, _ = runCommand(
            ["invariants", "--prime", "2", "--format", "json"]
        )
        self.assertEqual(status, EXIT_OK)
        document = json.loads(out, parse_constant=rejectConstant)
        self.assertIsNone(document["girth"])
        self.assertEqual(document["diameter"], 2)
        self.assertEqual(document["p"], 2)

    def test_indices(self) -> None:
        status, out, _ = runCommand(["indices", "--prime", "3"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("Wiener: 43\n", out)
        self.assertIn("Zagreb1: 122\n", out)

    def test_spectra(self) -> None:
        """
        The text form shows both spectra and the exact energies.
        """
        status, out, _ = runCommand(["spectra", "--prime", "3"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("adjacency: {-3, -1, 0^(5), 4}\n", out)
        self.assertIn("laplacian: {0, 2^(5), 8^(2)}\n", out)
        self.assertIn("laplacian_energy: 19 (19.000000000000)\n", out)

    def test_verifyJSON(self) -> None:
        """
        C{verify --primes 3,5 --format json} reports the code claim as
        matching at both primes.
        """
        status, out, _ = runCommand(
            ["verify", "--primes", "3,5", "--format", "json"]
        )
        self.assertEqual(status, EXIT_OK)
        document = json.loads(out)
        self.assertEqual(document["generated_for"], [3, 5])
        code = [c for c in document["claims"] if c["id"] == "C20_code_params"]
        self.assertEqual(
            [row["verdict"] for row in code[0]["per_prime"]], ["MATCH", "MATCH"]
        )

    def test_verifyConcurrently(self) -> None:
        """
        C{verify} spreads several primes over worker processes; the report
        is the one a single process produces.
        """
        status, out, _ = runCommand(
            ["verify", "--primes", "5,3", "--format", "csv"]
        )
        self.assertEqual(status, EXIT_OK)
        serial = _verify.verifyRange([3, 5], VerificationSettings(jobs=1))
        self.assertEqual(out, _verify.reportToCSV(serial))

    def test_out(self) -> None:
        """
        C{--out} writes the artifact to a file and nothing to stdout.
        """
        path = FilePath(self.mktemp())
        status, out, _ = runCommand(
            ["graph", "--prime", "3", "--format", "csv", "--out", path.path]
        )
        self.assertEqual((status, out), (EXIT_OK, ""))
        lines = path.getContent().decode("utf-8").splitlines()
        self.assertEqual(lines[0], "index,source,target,block")
        self.assertEqual(len(lines), 14)


class FailureTests(TestCase):
    """
    Exit statuses and error messages.
    """

    def test_formatNotOffered(self) -> None:
        status, out, err = runCommand(
            ["code", "--prime", "3", "--format", "dot"]
        )
        self.assertEqual((status, out), (EXIT_USAGE, ""))
        self.assertTrue(err.startswith("ERROR: "))

    def test_evenPrime(self) -> None:
        """
        Verifying at 2 is an input error.
        """
        status, out, err = runCommand(["verify", "--primes", "2"])
        self.assertEqual((status, out), (EXIT_USAGE, ""))
        self.assertIn("odd prime", err)

    def test_notPrime(self) -> None:
        status, _, err = runCommand(["graph", "--prime", "9"])
        self.assertEqual(status, EXIT_USAGE)
        self.assertTrue(err.startswith("ERROR: "))

    def test_missingPrime(self) -> None:
        status, _, err = runCommand(["spectra"])
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn("--prime", err)

    def test_badPrimeList(self) -> None:
        status, _, _ = runCommand(["verify", "--primes", "3,five"])
        self.assertEqual(status, EXIT_USAGE)

    def test_bothPrimeOptions(self) -> None:
        status, _, _ = runCommand(["verify", "--prime", "3", "--primes", "5"])
        self.assertEqual(status, EXIT_USAGE)

    def test_enumerationTooLarge(self) -> None:
        """
        Asking to enumerate a code of dimension 47 is refused.
        """
        status, out, err = runCommand(
            ["code", "--prime", "7", "--min-distance-method", "enumerate"]
        )
        self.assertEqual((status, out), (EXIT_USAGE, ""))
        self.assertIn("mincut", err)

    def test_unwritableOut(self) -> None:
        """
        An C{--out} path that cannot be written is an error, not a
        traceback.
        """
        path = FilePath(self.mktemp()).child("missing").child("graph.dot")
        status, out, err = runCommand(
            ["graph", "--prime", "3", "--format", "dot", "--out", path.path]
        )
        self.assertEqual((status, out), (EXIT_USAGE, ""))
        self.assertTrue(err.startswith("ERROR: cannot write "))

    def test_internalCheckFailure(self) -> None:
        """
        A failed internal check outside the verification gates also exits
        with status 2.
        """
        self.patch(
            _spectra,
            "completeSplitAdjacencySpectrum",
            lambda clique, independent: (),
        )
        status, out, err = runCommand(["spectra", "--prime", "3"])
        self.assertEqual((status, out), (EXIT_CONSISTENCY, ""))
        self.assertIn("quotient eigenvalues", err)

    def test_gateFailure(self) -> None:
        """
        A failed consistency gate exits with status 2.
        """
        self.patch(_verify, "adjacencyRank", lambda graph: 0)
        status, out, err = runCommand(["verify", "--primes", "3"])
        self.assertEqual((status, out), (EXIT_CONSISTENCY, ""))
        self.assertIn("consistency gate", err)
