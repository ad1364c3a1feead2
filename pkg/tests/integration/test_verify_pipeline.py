"""
Integration tests for the complete verification pipeline.
Tests catalog loading, serial and parallel verification and report output.
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

import pandas as pd

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.catalog import load_catalog
from src.cli.interface import run
from src.data.models import ClaimStatus
from src.data.processors import ReportOutputManager
from src.verify import verify_all
from tests.fixtures.test_data import write_catalog

GUARDS = {"max_group_order": 10 ** 6, "max_subgroups": 10 ** 5, "sample_triples": 200, "seed": 7}
ORACLE_LIMITS = {"hall_max_order": {2: 32, 3: 27}}


class TestVerifyPipeline(unittest.TestCase):
    """Integration tests from catalog files to report files."""

    def setUp(self):
        """Set up a temporary catalog and output directory."""
        self.temp_dir = tempfile.mkdtemp()
        self.catalog_dir = os.path.join(self.temp_dir, "catalog")
        self.output_dir = os.path.join(self.temp_dir, "reports")
        write_catalog(self.catalog_dir)
        self.catalog = load_catalog(self.catalog_dir)

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_catalog_to_reports(self):
        """Test verification followed by the four report files."""
        summary = verify_all(self.catalog, [2, 3], max_order=27, jobs=1, guards=GUARDS,
                             oracle_limits=ORACLE_LIMITS)
        manager = ReportOutputManager(self.output_dir)
        self.assertTrue(all(manager.save_all(summary).values()))

        records = manager.load_claims()
        self.assertEqual(len(records), sum(len(r.claims) for r in summary.reports))
        mismatches = [r for r in records if r.status is ClaimStatus.MISMATCH]
        self.assertEqual([(r.entry_id, r.claim) for r in mismatches], [("T3", "exponent")])

        data = manager.load_summary()
        self.assertEqual(data["counts"], summary.counts())
        self.assertEqual(data["instances"], 3)
        self.assertEqual(data["infrastructure_errors"], [])

        df = pd.read_csv(os.path.join(self.output_dir, "summary.csv"))
        self.assertEqual(list(df["entry_id"]), ["T1", "T2", "T3"])

        with open(os.path.join(self.output_dir, "findings.txt")) as f:
            findings = f.read()
        self.assertIn("T3 [p=2] exponent: expected 8, computed 4", findings)

    def test_reports_are_stable(self):
        """Test that two runs give the same claim records."""
        first = verify_all(self.catalog, [2], max_order=16, jobs=1, guards=GUARDS,
                           oracle_limits=ORACLE_LIMITS)
        second = verify_all(self.catalog, [2], max_order=16, jobs=1, guards=GUARDS,
                            oracle_limits=ORACLE_LIMITS)
        self.assertEqual([r.to_dict()["claims"] for r in first.reports],
                         [r.to_dict()["claims"] for r in second.reports])
        self.assertEqual([r.digest for r in first.reports], [r.digest for r in second.reports])

    def test_parallel_matches_serial(self):
        """Test that worker processes produce the serial reports."""
        serial = verify_all(self.catalog, [2, 3], max_order=27, jobs=1, guards=GUARDS,
                            oracle_limits=ORACLE_LIMITS)
        parallel = verify_all(self.catalog, [2, 3], max_order=27, jobs=2, guards=GUARDS,
                              oracle_limits=ORACLE_LIMITS, catalog_dir=self.catalog_dir)
        self.assertTrue(parallel.clean)
        self.assertEqual([(r.entry_id, r.assignment, r.digest) for r in parallel.reports],
                         [(r.entry_id, r.assignment, r.digest) for r in serial.reports])
        self.assertEqual(parallel.counts(), serial.counts())

    def test_cli_verify(self):
        """Test catalog-verify end to end through the command line."""
        with patch('sys.stdout', new=StringIO()) as fake_output:
            code = run(["--catalog", self.catalog_dir, "catalog-verify", "--prime", "2",
                        "--prime", "3", "--max-order", "27", "--jobs", "1",
                        "--output", self.output_dir])
        self.assertEqual(code, 0)
        self.assertIn("✅ Verification completed", fake_output.getvalue())
        with open(os.path.join(self.output_dir, "summary.json")) as f:
            data = json.load(f)
        self.assertEqual(data["primes"], [2, 3])
        self.assertEqual(data["counts"]["Mismatch"], 1)


if __name__ == '__main__':
    unittest.main()
