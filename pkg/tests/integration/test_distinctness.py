"""
Integration tests for the distinctness of parametrised catalog families.
Tests that the listed assignments of each entry are pairwise separated by
the entry's isomorphism family, and runs the fingerprint scan at p = 5.
"""

import sys
import unittest
from collections import defaultdict
from itertools import combinations
from pathlib import Path

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.catalog import enumerate_small, load_catalog
from src.catalog.instances import expected_order
from src.fp import PrimeField, param_equivalent
from src.pcgroup.expressions import evaluate_int
from src.verify import distinctness_scan, family_parameters, verify_all

FAMILY_ENTRIES = ["M48", "M49", "M50", "M51", "M52", "M56", "M57", "M58", "M59", "M60", "N22"]

# (p, nu2, k, k') of M56 whose s values meet s + s' = 2 nu2
M56_PAIRS = {
    5: {(1, 0, 1), (2, 0, 2)},
    7: {(1, 0, 1), (3, 0, 3), (3, 1, 2)},
}


class TestFamilyDistinctness(unittest.TestCase):
    """Isomorphism conditions over the listed assignments."""

    @classmethod
    def setUpClass(cls):
        """Load the shipped catalog once."""
        cls.catalog = load_catalog(project_root / "catalog")

    def equivalent_pairs(self, entry_id, p):
        entry = self.catalog.get(entry_id)
        F = PrimeField(p)
        by_order = defaultdict(list)
        for assignment in enumerate_small(entry, p ** 7, [p]):
            by_order[expected_order(entry, assignment)].append(assignment)
        pairs = []
        for assignments in by_order.values():
            for first, second in combinations(assignments, 2):
                if param_equivalent(entry.equivalence["family"],
                                    family_parameters(entry, first.to_dict()),
                                    family_parameters(entry, second.to_dict()), F):
                    pairs.append((first, second))
        return pairs

    def test_listed_assignments_separated(self):
        """Test that no two listed assignments of one order meet the family condition."""
        for p in (5, 7):
            for entry_id in FAMILY_ENTRIES:
                if entry_id == "M56":
                    continue
                with self.subTest(entry=entry_id, p=p):
                    self.assertEqual(self.equivalent_pairs(entry_id, p), [])

    def test_m56_pairs(self):
        """Test the M56 parameters that the cong1 condition identifies."""
        for p, expected in M56_PAIRS.items():
            pairs = set()
            for first, second in self.equivalent_pairs("M56", p):
                a, b = first.to_dict(), second.to_dict()
                self.assertEqual((a["nu1"], a["nu2"]), (b["nu1"], b["nu2"]))
                pairs.add((a["nu2"], min(a["k"], b["k"]), max(a["k"], b["k"])))
            self.assertEqual(pairs, expected, p)

    def test_cong0_entries_separated(self):
        """Test that M48 to M51 stay apart at p = 5 and M50 meets M48 at p = 7."""
        def values(entry_id, p):
            env = {"p": p, "eta": evaluate_int("nonres()", {"p": p})}
            return family_parameters(self.catalog.get(entry_id), env)

        ids = ["M48", "M49", "M50", "M51"]
        for first, second in combinations(ids, 2):
            with self.subTest(first=first, second=second):
                self.assertFalse(param_equivalent("cong0", values(first, 5), values(second, 5),
                                                  PrimeField(5)))
        self.assertTrue(param_equivalent("cong0", values("M48", 7), values("M50", 7), PrimeField(7)))
        self.assertTrue(param_equivalent("cong0", values("M49", 7), values("M51", 7), PrimeField(7)))

    def test_fingerprint_scan_at_five(self):
        """Test the fingerprint scan over the order p^5 entries of cong0 and cong0a at p = 5."""
        pattern = "M48,M49,M50,M51,M52"
        summary = verify_all(self.catalog, [5], max_order=5 ** 5, pattern=pattern)
        scanned = sorted(r.entry_id for r in summary.reports if r.digest is not None)
        self.assertEqual(scanned, pattern.split(","))
        collisions = distinctness_scan(self.catalog, [5], reports=summary.reports)
        self.assertEqual(len(collisions), len(summary.collisions))
        for collision in collisions:
            with self.subTest(first=collision.first, second=collision.second):
                self.assertEqual(collision.order, 5 ** 5)
                self.assertNotEqual(collision.first.split("@")[0], collision.second.split("@")[0])
                self.assertFalse(collision.expected)


if __name__ == '__main__':
    unittest.main()
