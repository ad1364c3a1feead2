"""
Integration tests for known invariants of catalog groups.
Tests alpha_1, the (mu0, mu1, mu2) tally and metacyclicity of selected
entries against their hand-checked values at the smallest primes.
"""

import sys
import unittest
from pathlib import Path

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.catalog import enumerate_small, instantiate, load_catalog
from src.data.models import ClaimStatus
from src.verify import compute_claim, verify_entry

MAX_SUBGROUPS = 10 ** 5
GUARDS = {"max_group_order": 10 ** 6, "max_subgroups": MAX_SUBGROUPS, "sample_triples": 500, "seed": 7}

# entry id -> (prime, largest order tried, alpha_1)
ALPHA1_VALUES = {
    "A1": (2, 32, 5), "A2": (2, 32, 5), "A3": (2, 32, 5),
    "A4": (3, 243, 11), "A5": (3, 243, 11), "A6": (3, 243, 11),
    "B6": (3, 243, 44),
    "C7": (3, 243, 20), "C16": (2, 64, 8),
    "E2": (3, 243, 28),
    "J1": (2, 32, 16),
    "O1": (2, 32, 20), "O2": (2, 32, 20), "O3": (3, 243, 90), "O4": (3, 243, 90),
    "O5": (2, 64, 30), "O6": (2, 128, 28),
}


class TestGoldenValues(unittest.TestCase):
    """Hand-checked invariants of catalog groups."""

    @classmethod
    def setUpClass(cls):
        """Load the shipped catalog once."""
        cls.catalog = load_catalog(project_root / "catalog")

    def groups(self, entry_id, p, max_order):
        entry = self.catalog.get(entry_id)
        assignments = enumerate_small(entry, max_order, [p])
        self.assertTrue(assignments, entry_id)
        for assignment in assignments:
            yield assignment, instantiate(entry, assignment, self.catalog, max_order, 500, 7)

    def test_alpha1(self):
        """Test alpha_1 of blocks A, B, C, E, J and O."""
        for entry_id, (p, max_order, alpha1) in ALPHA1_VALUES.items():
            for assignment, G in self.groups(entry_id, p, max_order):
                with self.subTest(entry=entry_id, assignment=assignment.key()):
                    self.assertEqual(compute_claim("alpha1", G, MAX_SUBGROUPS), alpha1)

    def test_mu_triples(self):
        """Test the maximal-subgroup tally of C7, J1 and K1."""
        cases = {"C7": (3, 243, (0, 2, 2)), "J1": (2, 32, (3, 0, 12)), "K1": (3, 3 ** 7, (0, 0, 4))}
        for entry_id, (p, max_order, mu) in cases.items():
            for assignment, G in self.groups(entry_id, p, max_order):
                with self.subTest(entry=entry_id, assignment=assignment.key()):
                    self.assertEqual(compute_claim("mu", G, MAX_SUBGROUPS), mu)

    def test_k1_at_three(self):
        """Test alpha_1 = 13 and metacyclicity of K1 at p = 3."""
        for assignment, G in self.groups("K1", 3, 3 ** 7):
            self.assertEqual(assignment.key(), "p=3,r=1,s=2,t=0")
            self.assertEqual(compute_claim("alpha1", G, MAX_SUBGROUPS), 13)
            self.assertTrue(compute_claim("metacyclic", G, MAX_SUBGROUPS))

    def test_o6_reading(self):
        """Test that O6 disagrees with its stated alpha_1 and agrees with the enumeration."""
        entry = self.catalog.get("O6")
        assignment = enumerate_small(entry, 128, [2])[0]
        record = verify_entry(entry, assignment, self.catalog, GUARDS, {}).claim("alpha1")
        self.assertIs(record.status, ClaimStatus.MISMATCH)
        self.assertEqual((record.expected, record.computed), (30, 28))
        self.assertEqual(record.reading, "count from the subgroup enumeration in the proof")


if __name__ == '__main__':
    unittest.main()
