"""
Unit tests for the verification harness.
Tests claim comparison, single-entry verification, task generation,
collision scanning and whole-catalog runs.
"""

import copy
import os
import shutil
import sys
import tempfile
import unittest
from pathlib import Path
from unittest.mock import MagicMock, patch

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.catalog import ParameterAssignment, load_catalog
from src.catalog.entry import CatalogEntry
from src.catalog.loader import Catalog
from src.data.models import ClaimStatus, VerificationReport
from src.verify import (UnknownClaim, compute_claim, family_parameters, find_collisions, judge,
                        skipped_report, verify_all, verify_entry)
from src.verify.Master import Master
from src.verify.Task import Result, VerificationTask, generate_tasks
from src.verify.Worker import Worker
from tests.fixtures.test_data import SAMPLE_ENTRIES, d8, q8, write_catalog

GUARDS = {"max_group_order": 10 ** 6, "max_subgroups": 10 ** 5, "sample_triples": 200, "seed": 7}
ORACLE_LIMITS = {
    "hall_max_order": {2: 64, 3: 243},
    "subset_pair_max_order": {2: 32, 3: 27},
    "literal_at_index_max_order": {2: 32, 3: 81},
}


class VerifyTestCase(unittest.TestCase):
    def setUp(self):
        """Set up the sample catalog in a temporary directory."""
        self.temp_dir = tempfile.mkdtemp()
        self.catalog_dir = os.path.join(self.temp_dir, "catalog")
        write_catalog(self.catalog_dir)
        self.catalog = load_catalog(self.catalog_dir)

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def verify(self, entry_id, p, guards=GUARDS, **values):
        return verify_entry(self.catalog.get(entry_id), ParameterAssignment.of(p, **values),
                            self.catalog, guards, ORACLE_LIMITS)


class TestJudge(unittest.TestCase):
    """Test cases for claim comparison."""

    def test_equal_values_match(self):
        """Test plain equality."""
        self.assertEqual(judge("d", 2, 2), (ClaimStatus.MATCH, None))
        self.assertEqual(judge("center_type", (2,), (2,)), (ClaimStatus.MATCH, None))
        self.assertEqual(judge("derived_type", None, None), (ClaimStatus.MATCH, None))

    def test_mismatch(self):
        """Test unequal values and None against a value."""
        self.assertEqual(judge("d", 3, 2), (ClaimStatus.MISMATCH, None))
        self.assertEqual(judge("derived_type", (4,), None), (ClaimStatus.MISMATCH, None))
        self.assertEqual(judge("metacyclic", True, False), (ClaimStatus.MISMATCH, None))

    def test_lower_bound_claim(self):
        """Test that min_a1_maximal is a lower bound."""
        self.assertEqual(judge("min_a1_maximal", 2, 3)[0], ClaimStatus.MATCH)
        self.assertEqual(judge("min_a1_maximal", 2, 1)[0], ClaimStatus.MISMATCH)

    def test_alternative_reading(self):
        """Test that a matching alternative is named on the mismatch."""
        status, reading = judge("alpha1", 18, 14, [("second count", 14)])
        self.assertIs(status, ClaimStatus.MISMATCH)
        self.assertEqual(reading, "second count")


class TestComputeClaim(unittest.TestCase):
    """Test cases for compute_claim."""

    def test_values_on_q8(self):
        """Test a few claims on Q8."""
        G = q8()
        self.assertEqual(compute_claim("order", G, 1000), 8)
        self.assertEqual(compute_claim("at", G, 1000), 1)
        self.assertEqual(compute_claim("center_type", G, 1000), (2,))
        self.assertEqual(compute_claim("mu", G, 1000), (3, 0, 0))
        self.assertTrue(compute_claim("frattini_central", G, 1000))

    def test_dihedral_maximals(self):
        """Test the maximal-subgroup claims on D8."""
        G = d8()
        self.assertTrue(compute_claim("has_abelian_maximal", G, 1000))
        self.assertEqual(compute_claim("a1_maximal_count", G, 1000), 0)
        self.assertFalse(compute_claim("has_a1_maximal", G, 1000))

    def test_unknown_claim(self):
        """Test that unknown claim names raise."""
        with self.assertRaises(UnknownClaim):
            compute_claim("beauty", q8(), 1000)


class TestVerifyEntry(VerifyTestCase):
    """Test cases for verify_entry."""

    def test_matching_family(self):
        """Test T1 at p=3, n=2, where every claim holds."""
        report = self.verify("T1", 3, n=2)
        self.assertEqual(report.assignment, "p=3,n=2")
        self.assertEqual(report.order, 27)
        self.assertEqual(report.count(ClaimStatus.MISMATCH), 0)
        self.assertEqual(report.claim("alpha1").status, ClaimStatus.MATCH)
        self.assertEqual(report.claim("at").status, ClaimStatus.MATCH)
        self.assertEqual(report.claim("mu").status, ClaimStatus.UNCLAIMED)
        self.assertEqual(report.failed_properties, [])
        self.assertIsNotNone(report.digest)

    def test_oracle_properties_run(self):
        """Test that small instances carry the oracle cross-checks."""
        report = self.verify("T1", 3, n=2)
        names = {check.name for check in report.properties}
        self.assertIn("alpha1_methods_agree", names)
        self.assertIn("at_index_definitions_agree", names)
        self.assertIn("subgroup_descent_agrees", names)

    def test_wrong_claim_is_recorded(self):
        """Test that a wrong exponent becomes a mismatch and a finding."""
        report = self.verify("T3", 2)
        record = report.claim("exponent")
        self.assertIs(record.status, ClaimStatus.MISMATCH)
        self.assertEqual((record.expected, record.computed), (8, 4))
        self.assertIn("exponent: expected 8, computed 4", report.findings)
        self.assertEqual(report.claim("d").status, ClaimStatus.MATCH)

    def test_defining_relations_recorded(self):
        """Test that the entry's own relations are evaluated in the built group."""
        report = self.verify("T3", 2)
        check = next(c for c in report.properties if c.name == "defining_relations_hold")
        self.assertTrue(check.holds)
        self.assertEqual(check.detail, "1 relations echoed in the built group")

    def test_wrong_defining_relation_fails(self):
        """Test that a defining relation the group breaks is a failed property, not a crash."""
        entries = copy.deepcopy(SAMPLE_ENTRIES)
        entries[2]["presentation"]["defining"] = ["s^2=1", "s^2=r^2"]
        catalog_dir = os.path.join(self.temp_dir, "wrong")
        write_catalog(catalog_dir, entries)
        catalog = load_catalog(catalog_dir)
        report = verify_entry(catalog.get("T3"), ParameterAssignment.of(2), catalog, GUARDS,
                              ORACLE_LIMITS)
        check = next(c for c in report.properties if c.name == "defining_relations_hold")
        self.assertFalse(check.holds)
        self.assertEqual(check.detail, "fails: s^2=r^2")
        self.assertIn(check, report.failed_properties)
        self.assertIn("property defining_relations_hold fails: fails: s^2=r^2", report.findings)

    def test_product_entry(self):
        """Test the A2 product entry Q8 x C2."""
        report = self.verify("T2", 2)
        self.assertEqual(report.order, 16)
        self.assertEqual(report.count(ClaimStatus.MISMATCH), 0)
        self.assertEqual(report.claim("at").computed, 2)

    def test_order_guard_skips(self):
        """Test that an instance above max_group_order is skipped."""
        guards = dict(GUARDS, max_group_order=10)
        report = self.verify("T1", 3, guards=guards, n=2)
        self.assertEqual(len(report.claims), 1)
        record = report.claim("instance")
        self.assertIs(record.status, ClaimStatus.SKIPPED)
        self.assertTrue(record.detail.startswith("max_group_order"))

    def test_lattice_guard_skips_claims(self):
        """Test that claims needing more subgroups than allowed are skipped."""
        guards = dict(GUARDS, max_subgroups=1)
        report = self.verify("T3", 2, guards=guards)
        record = report.claim("mu")
        self.assertIs(record.status, ClaimStatus.SKIPPED)
        self.assertTrue(record.detail.startswith("max_subgroups"))

    def test_skipped_report(self):
        """Test the shape of a skipped report."""
        report = skipped_report("T1", "envelope", "no admissible assignment")
        self.assertIsNone(report.assignment)
        self.assertEqual(report.claims[0].claim, "instance")
        self.assertEqual(report.claims[0].detail, "envelope: no admissible assignment")


class TestTasks(VerifyTestCase):
    """Test cases for task generation and workers."""

    def test_generate_tasks(self):
        """Test tasks inside the envelope and the entries left outside."""
        entries = self.catalog.select()
        tasks, uncovered = generate_tasks(entries, [2, 3], {3: 81})
        self.assertEqual([task.key for task in tasks], ["T1@p=3,n=2", "T1@p=3,n=3"])
        self.assertEqual([task.priority for task in tasks], [27, 81])
        self.assertEqual([entry.id for entry in uncovered], ["T2", "T3"])

    def test_result_timestamp(self):
        """Test that results are stamped on creation."""
        result = Result(0, "serial", "T1", "p=3,n=2")
        self.assertIsNotNone(result.verified_at)
        result.add_error("boom")
        self.assertEqual(result.errors, ["boom"])

    def test_worker_process(self):
        """Test a worker verifying one task."""
        worker = Worker("serial", None, None, 0, {}, guards=GUARDS, oracle_limits=ORACLE_LIMITS,
                        catalog=self.catalog)
        task = VerificationTask(0, "T3", ParameterAssignment.of(2))
        result = worker.process(task)
        self.assertTrue(result.success)
        self.assertEqual(result.assignment, "p=2")
        self.assertEqual(result.report.count(ClaimStatus.MISMATCH), 1)

    def test_worker_failure(self):
        """Test that an infrastructure error becomes a failed result."""
        worker = Worker("serial", None, None, 0, {}, guards=GUARDS, oracle_limits=ORACLE_LIMITS,
                        catalog=self.catalog)
        task = VerificationTask(0, "T3", ParameterAssignment.of(2))
        with patch('src.verify.Worker.verify_entry', side_effect=RuntimeError("broken")):
            result = worker.process(task)
        self.assertFalse(result.success)
        self.assertIn("RuntimeError: broken", result.error_message)

    @patch('src.verify.Master.get_worker_bounds', return_value=(1, 4))
    def test_master_queues_by_priority(self, mock_bounds):
        """Test that smaller groups are queued first whatever the task order."""
        queue = MagicMock()
        master = Master(queue, MagicMock(), {}, n=2)
        tasks = [VerificationTask(0, "T1", ParameterAssignment.of(3, n=3), priority=81),
                 VerificationTask(1, "T3", ParameterAssignment.of(2), priority=8),
                 VerificationTask(2, "T1", ParameterAssignment.of(3, n=2), priority=27),
                 VerificationTask(3, "T2", ParameterAssignment.of(2), priority=8)]
        master.add_tasks(tasks)
        self.assertEqual([c.args[0].id for c in queue.put.call_args_list], [1, 3, 2, 0])
        self.assertEqual(master.number_of_Tasks, 4)

    @patch('src.verify.Master.get_worker_bounds', return_value=(1, 4))
    def test_master_clamps_workers(self, mock_bounds):
        """Test that the job count is clamped into the configured range."""
        master = Master(MagicMock(), MagicMock(), {}, n=16)
        self.assertEqual(master.workers, 4)
        master = Master(MagicMock(), MagicMock(), {}, n=0)
        self.assertEqual(master.workers, 1)


class TestCollisions(unittest.TestCase):
    """Test cases for find_collisions."""

    def report(self, entry_id, assignment, digest, **parameters):
        parameters = dict({"p": 3}, **parameters)
        return VerificationReport(entry_id, assignment, p=3, order=729,
                                  parameters=parameters, digest=digest)

    def setUp(self):
        """Set up a catalog with one entry declaring an isomorphism family."""
        entry = CatalogEntry.from_dict({
            "id": "E", "block": "E", "level": 3, "order": "p^6",
            "presentation": {"generators": [{"name": "a", "order": "p"}]},
            "parameters": [{"name": "nu"}, {"name": "t"}],
            "equivalence": {"family": "cong2"},
        })
        self.catalog = Catalog([entry])

    def test_expected_collision(self):
        """Test that t = 1 and t = 4 are isomorphic at p = 3."""
        reports = [self.report("E", "p=3,nu=2,t=1", "abc", nu=2, t=1),
                   self.report("E", "p=3,nu=2,t=4", "abc", nu=2, t=4)]
        collisions = find_collisions(reports, self.catalog)
        self.assertEqual(len(collisions), 1)
        self.assertTrue(collisions[0].expected)

    def test_distinct_entries(self):
        """Test that two entries with one fingerprint collide unexpectedly."""
        reports = [self.report("E", "p=3,nu=2,t=1", "abc", nu=2, t=1),
                   self.report("F", "p=3", "abc")]
        collisions = find_collisions(reports, self.catalog)
        self.assertEqual(len(collisions), 1)
        self.assertFalse(collisions[0].expected)
        self.assertEqual(collisions[0].detail, "distinct entries share a fingerprint")

    def test_mapped_family(self):
        """Test a family read through a parameter mapping: s = 2^-1 nu2 + k at p = 5."""
        entry = CatalogEntry.from_dict({
            "id": "S", "block": "S", "level": 3, "order": "p^7",
            "presentation": {"generators": [{"name": "a", "order": "p"}]},
            "parameters": [{"name": "nu2"}, {"name": "k"}],
            "equivalence": {"family": "cong1",
                            "params": {"nu1": 2, "nu2": "nu2", "r": 0, "s": "(inv(2)*nu2 + k) % p"}},
        })
        self.assertEqual(family_parameters(entry, {"p": 5, "nu2": 1, "k": 1}),
                         {"nu1": 2, "nu2": 1, "r": 0, "s": 4})

        def report(k):
            return VerificationReport("S", f"p=5,nu2=1,k={k}", p=5, order=5 ** 7,
                                      parameters={"p": 5, "nu2": 1, "k": k}, digest="abc")

        collisions = find_collisions([report(0), report(1), report(2)], Catalog([entry]))
        self.assertEqual([(c.first, c.second, c.expected) for c in collisions], [
            ("S@p=5,nu2=1,k=0", "S@p=5,nu2=1,k=1", True),
            ("S@p=5,nu2=1,k=0", "S@p=5,nu2=1,k=2", False),
            ("S@p=5,nu2=1,k=1", "S@p=5,nu2=1,k=2", False),
        ])

    def test_no_collision(self):
        """Test distinct digests and reports without one."""
        reports = [self.report("E", "p=3,nu=2,t=1", "abc", nu=2, t=1),
                   self.report("E", "p=3,nu=2,t=2", "def", nu=2, t=2),
                   self.report("F", None, None)]
        self.assertEqual(find_collisions(reports, self.catalog), [])


class TestVerifyAll(VerifyTestCase):
    """Test cases for verify_all."""

    def test_serial_run(self):
        """Test a serial run over the sample catalog."""
        seen = []
        summary = verify_all(self.catalog, [2, 3], max_order=27, jobs=1, guards=GUARDS,
                             oracle_limits=ORACLE_LIMITS, on_result=seen.append)
        keys = [f"{r.entry_id}@{r.assignment}" for r in summary.reports]
        self.assertEqual(keys, ["T1@p=3,n=2", "T2@p=2", "T3@p=2"])
        self.assertEqual(len(seen), 3)
        self.assertEqual(summary.counts()["Mismatch"], 1)
        self.assertEqual(summary.collisions, [])
        self.assertTrue(summary.clean)

    def test_envelope_skip(self):
        """Test that an entry with no instance inside the envelope is skipped."""
        summary = verify_all(self.catalog, [2], max_order=8, jobs=1, guards=GUARDS,
                             oracle_limits=ORACLE_LIMITS)
        by_id = {r.entry_id: r for r in summary.reports}
        self.assertEqual(sorted(by_id), ["T2", "T3"])
        self.assertIsNone(by_id["T2"].assignment)
        self.assertTrue(by_id["T2"].claims[0].detail.startswith("envelope"))

    def test_pattern(self):
        """Test that the pattern restricts the entries."""
        summary = verify_all(self.catalog, [2], max_order=16, pattern="T3", jobs=1,
                             guards=GUARDS, oracle_limits=ORACLE_LIMITS)
        self.assertEqual(summary.entry_ids, ["T3"])

    def test_no_primes(self):
        """Test that an empty prime list verifies nothing."""
        summary = verify_all(self.catalog, [], jobs=1, guards=GUARDS, oracle_limits=ORACLE_LIMITS)
        self.assertEqual(summary.reports, [])
        self.assertTrue(summary.clean)

    @patch('src.verify.harness.Master')
    def test_parallel_failure(self, mock_master):
        """Test that failed parallel results become infrastructure errors."""
        mock_master.return_value.run.return_value = [
            Result(0, 0, "T3", "p=2", success=False, error_message="RuntimeError: boom")]
        summary = verify_all(self.catalog, [2], max_order=8, pattern="T3", jobs=2,
                             guards=GUARDS, oracle_limits=ORACLE_LIMITS,
                             catalog_dir=self.catalog_dir)
        self.assertFalse(summary.clean)
        self.assertEqual(summary.infrastructure_errors, ["T3 at p=2: RuntimeError: boom"])
        self.assertEqual(mock_master.call_args.kwargs["n"], 2)


if __name__ == '__main__':
    unittest.main()
