"""
Unit tests for the CLI commands.
Tests argument handling, exit codes and command output.
"""

import json
import os
import shutil
import sys
import tempfile
import unittest
from io import StringIO
from pathlib import Path
from unittest.mock import patch

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.cli.commands import (EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, CatalogCommands, UsageError,
                              read_presentation_file)
from src.cli.interface import build_parser, run
from src.classify.errors import ClassificationInvariantError
from src.utils.configs import get_envelope
from tests.fixtures.test_data import (D8_PRESENTATION, Q8_PRESENTATION, write_catalog,
                                      write_entry_file)

SAMPLE_FILE = project_root / "samples" / "q8.entry.json"


class CliTestCase(unittest.TestCase):
    def setUp(self):
        """Set up a temporary catalog and entry files."""
        self.temp_dir = tempfile.mkdtemp()
        self.catalog_dir = os.path.join(self.temp_dir, "catalog")
        write_catalog(self.catalog_dir)
        self.commands = CatalogCommands(catalog_dir=self.catalog_dir)

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def run_cli(self, argv):
        with patch('sys.stdout', new=StringIO()) as fake_output, \
                patch('sys.stderr', new=StringIO()):
            code = run(argv)
        return code, fake_output.getvalue()

    def entry_file(self, name, presentation, p, params=None):
        return write_entry_file(os.path.join(self.temp_dir, name), presentation, p, params)


class TestReadPresentationFile(CliTestCase):
    """Test cases for read_presentation_file."""

    def test_reads_entry(self):
        """Test that p and params are bound and parameters declared."""
        path = self.entry_file("cyclic.json", {"generators": [{"name": "a", "order": "p^n"}]},
                               3, {"n": 2})
        entry, params = read_presentation_file(path)
        self.assertEqual(params, {"p": 3, "n": 2})
        self.assertEqual(entry.parameter_names, ["n"])
        self.assertEqual(entry.id, "cyclic")

    def test_bad_files(self):
        """Test missing files, broken JSON and missing keys."""
        with self.assertRaises(UsageError):
            read_presentation_file(os.path.join(self.temp_dir, "absent.json"))
        broken = os.path.join(self.temp_dir, "broken.json")
        with open(broken, 'w') as f:
            f.write("{oops")
        with self.assertRaises(UsageError):
            read_presentation_file(broken)
        no_prime = os.path.join(self.temp_dir, "no_prime.json")
        with open(no_prime, 'w') as f:
            json.dump({"presentation": Q8_PRESENTATION}, f)
        with self.assertRaises(UsageError):
            read_presentation_file(no_prime)


class TestAnalyze(CliTestCase):
    """Test cases for the analyze and fingerprint commands."""

    def test_analyze_sample(self):
        """Test the analysis of the shipped Q8 sample."""
        code, output = self.run_cli(["analyze", str(SAMPLE_FILE)])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Q8: order 8 = 2^3", output)
        self.assertIn("A_t index t = 1", output)
        self.assertIn("alpha_1 = 1", output)
        self.assertIn("minimal non-abelian of type Q8", output)
        self.assertIn("pc presentation:", output)
        self.assertIn("b^2 = a^2", output)

    def test_analyze_a2_group(self):
        """Test that an A2 group reports its maximal-subgroup tally."""
        path = self.entry_file("d16.json", {
            "generators": [{"name": "s", "order": "2"}, {"name": "r", "order": "8"}],
            "relations": ["r^s=r^-1"],
        }, 2)
        code, output = self.run_cli(["analyze", path])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("A_t index t = 2", output)
        self.assertIn("mu = [", output)

    def test_analyze_bad_file(self):
        """Test that an unreadable file is a usage error."""
        code, output = self.run_cli(["analyze", os.path.join(self.temp_dir, "absent.json")])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("❌", output)

    def test_analyze_inconsistent(self):
        """Test that a presentation failing its defining relations is a usage error."""
        path = self.entry_file("bad.json", dict(D8_PRESENTATION, defining=["s^2=r^2"]), 2)
        code, output = self.run_cli(["analyze", path])
        self.assertEqual(code, EXIT_USAGE)

    @patch('src.cli.commands.at_index', side_effect=ClassificationInvariantError("broken"))
    def test_analyze_invariant_error(self, mock_at_index):
        """Test that a broken engine invariant exits with status 2."""
        code, output = self.run_cli(["analyze", str(SAMPLE_FILE)])
        self.assertEqual(code, EXIT_INTERNAL)
        self.assertIn("Internal invariant violated", output)

    def test_fingerprint(self):
        """Test the fingerprint listing."""
        code, output = self.run_cli(["fingerprint", str(SAMPLE_FILE)])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("🔍 Q8:", output)
        self.assertIn("order: 8", output)


class TestFpConic(CliTestCase):
    """Test cases for the fp-conic command."""

    def test_count(self):
        """Test x^2 + y^2 = 1 over F_3."""
        code, output = self.run_cli(["fp-conic", "--p", "3", "--r", "1", "--u", "1"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(output.strip(), "4")

    def test_field_errors(self):
        """Test that p = 2 and composite p exit with status 1."""
        self.assertEqual(self.run_cli(["fp-conic", "--p", "2", "--r", "1", "--u", "1"])[0], EXIT_USAGE)
        self.assertEqual(self.run_cli(["fp-conic", "--p", "9", "--r", "1", "--u", "1"])[0], EXIT_USAGE)

    def test_usage_errors(self):
        """Test that bad flags exit with status 1."""
        self.assertEqual(self.run_cli(["fp-conic", "--p", "x", "--r", "1", "--u", "1"])[0], EXIT_USAGE)
        self.assertEqual(self.run_cli(["fp-conic", "--p", "3"])[0], EXIT_USAGE)
        self.assertEqual(self.run_cli(["catalog-verify", "--jobs", "0"])[0], EXIT_USAGE)
        self.assertEqual(self.run_cli(["no-such-command"])[0], EXIT_USAGE)
        self.assertEqual(self.run_cli([])[0], EXIT_USAGE)


class TestCatalogCommands(CliTestCase):
    """Test cases for catalog-list and catalog-verify."""

    def test_list(self):
        """Test listing the temporary catalog."""
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-list"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("📋 3 entries", output)
        self.assertIn("T2", output)

    def test_list_pattern(self):
        """Test an id glob and one that matches nothing."""
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-list", "T1"])
        self.assertIn("📋 1 entries", output)
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-list", "X*"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("No catalog entries match", output)

    def test_broken_catalog(self):
        """Test that a catalog failing its manifest exits with status 1."""
        os.remove(os.path.join(self.catalog_dir, "manifest.json"))
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-list"])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("Catalog error", output)

    def test_verify_writes_reports(self):
        """Test a serial verification run and its report files."""
        output_dir = os.path.join(self.temp_dir, "reports")
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-verify", "T3",
                                     "--prime", "2", "--max-order", "8", "--jobs", "1",
                                     "--output", output_dir])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("⚠️  T3 [p=2] order 8", output)
        self.assertIn("1 mismatch", output)
        self.assertIn("✅ Verification completed", output)
        for name in ("claims.jsonl", "summary.json", "summary.csv", "findings.txt"):
            self.assertTrue(os.path.exists(os.path.join(output_dir, name)), name)

    @patch('src.cli.commands.ReportOutputManager')
    def test_verify_write_failure(self, mock_manager):
        """Test that a failed report write exits with status 2."""
        mock_manager.return_value.save_all.return_value = {"summary.json": False}
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-verify", "T3",
                                     "--prime", "2", "--max-order", "8", "--jobs", "1",
                                     "--output", os.path.join(self.temp_dir, "reports")])
        self.assertEqual(code, EXIT_INTERNAL)

    @patch('src.cli.commands.verify_all')
    def test_verify_default_primes(self, mock_verify):
        """Test that catalog-verify without --prime covers every prime of the envelope."""
        mock_verify.side_effect = ClassificationInvariantError("stopped after the call")
        code, output = self.run_cli(["--catalog", self.catalog_dir, "catalog-verify", "--jobs", "1"])
        self.assertEqual(code, EXIT_INTERNAL)
        self.assertEqual(mock_verify.call_args[0][1], sorted(get_envelope()))
        self.assertIn(5, mock_verify.call_args[0][1])
        self.assertIn(f"for p in {sorted(get_envelope())}", output)

    def test_parser_defaults(self):
        """Test the parsed defaults of catalog-verify."""
        args = build_parser().parse_args(["catalog-verify"])
        self.assertIsNone(args.primes)
        self.assertIsNone(args.max_order)
        self.assertIsNone(args.pattern)
        args = build_parser().parse_args(["catalog-verify", "--prime", "2", "--prime", "5"])
        self.assertEqual(args.primes, [2, 5])


if __name__ == '__main__':
    unittest.main()
