"""
Unit tests for characteristic subgroups and numerical invariants.
"""

import sys
import unittest
from pathlib import Path

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.catalog.constructors import cyclic, dihedral, redei_metacyclic, redei_nonmetacyclic
from src.structure import (abelian_invariants, center, derived_subgroup, frattini, is_metacyclic,
                           mho, omega, quotient, structure_record)
from src.structure.errors import NotAbelianError, NotNormalError
from src.subgroups import closure
from tests.fixtures.test_data import build_group, d8, elementary_8, q8


class TestStructureRecord(unittest.TestCase):
    """Test cases for structure_record."""

    def test_quaternion(self):
        """Test the record of Q8."""
        record = structure_record(q8())
        self.assertEqual(record.order, 8)
        self.assertEqual((record.d, record.c, record.exponent), (2, 2, 4))
        self.assertEqual(record.derived_order, 2)
        self.assertEqual(record.derived_type, (2,))
        self.assertEqual(record.center_type, (2,))
        self.assertEqual(record.frattini_type, (2,))
        self.assertEqual(record.lcs_orders, (8, 2, 1))
        self.assertEqual(record.abelianization_type, (2, 2))

    def test_cyclic(self):
        """Test the record of C27."""
        record = structure_record(cyclic(3, 3))
        self.assertEqual((record.d, record.c, record.exponent), (1, 1, 27))
        self.assertEqual(record.derived_order, 1)
        self.assertEqual(record.center_type, (27,))
        self.assertEqual(record.frattini_type, (9,))

    def test_dihedral_sixteen(self):
        """Test that D16 has class 3."""
        record = structure_record(dihedral(4))
        self.assertEqual(record.order, 16)
        self.assertEqual(record.c, 3)
        self.assertEqual(record.lcs_orders, (16, 4, 2, 1))
        self.assertEqual(record.derived_type, (4,))

    def test_order_formula_for_a1(self):
        """Test |G| = p |G'| |Z(G)| on minimal non-abelian groups."""
        for G in (q8(), d8(), redei_metacyclic(3, 2, 1), redei_nonmetacyclic(3, 1, 1)):
            record = structure_record(G)
            self.assertEqual(record.order, G.prime * record.derived_order * record.center_order)

    def test_to_dict(self):
        """Test that the record serialises to a plain dict."""
        data = structure_record(q8()).to_dict()
        self.assertEqual(data["order"], 8)
        self.assertIn("lcs_orders", data)


class TestCharacteristicSubgroups(unittest.TestCase):
    """Test cases for the characteristic subgroups."""

    def test_quaternion_subgroups(self):
        """Test that Q8 has centre, derived and Frattini subgroup of order 2."""
        G = q8()
        self.assertEqual(center(G).order, 2)
        self.assertEqual(derived_subgroup(G).order, 2)
        self.assertEqual(frattini(G).order, 2)

    def test_omega_and_mho(self):
        """Test Omega_1 and mho_1."""
        self.assertEqual(omega(q8(), 1).order, 2)
        self.assertEqual(omega(d8(), 1).order, 8)
        self.assertEqual(mho(q8(), 1).order, 2)
        self.assertEqual(mho(elementary_8(), 1).order, 1)
        with self.assertRaises(ValueError):
            omega(q8(), 0)

    def test_abelian_invariants(self):
        """Test types of abelian groups."""
        self.assertEqual(abelian_invariants(elementary_8()), (2, 2, 2))
        self.assertEqual(abelian_invariants(cyclic(3, 2)), (9,))
        with self.assertRaises(NotAbelianError):
            abelian_invariants(q8())

    def test_quotient(self):
        """Test quotients by normal subgroups."""
        G = dihedral(4)
        self.assertEqual(quotient(G, center(G)).order, 8)
        D = d8()
        reflection = closure(D, [D.generator("s")])
        with self.assertRaises(NotNormalError):
            quotient(D, reflection)


class TestMetacyclic(unittest.TestCase):
    """Test cases for is_metacyclic."""

    def test_metacyclic_groups(self):
        """Test groups that are metacyclic."""
        self.assertTrue(is_metacyclic(q8()))
        self.assertTrue(is_metacyclic(d8()))
        self.assertTrue(is_metacyclic(redei_metacyclic(3, 2, 1)))
        self.assertTrue(is_metacyclic(cyclic(2, 3)))

    def test_non_metacyclic_groups(self):
        """Test groups that are not metacyclic."""
        self.assertFalse(is_metacyclic(elementary_8()))
        self.assertFalse(is_metacyclic(redei_nonmetacyclic(3, 1, 1)))

    def test_cyclic_subgroup_must_contain_derived(self):
        """Test a group whose cyclic subgroups with small quotient all miss part of G'."""
        G = build_group({
            "generators": [
                {"name": "b", "order": "2"},
                {"name": "c", "order": "2", "power": "a^4"},
                {"name": "a", "order": "8"},
            ],
            "relations": ["[a,b]=c", "c^b=c*a^4", "a^c=a^5"],
        }, {"p": 2})
        self.assertEqual(G.order, 32)
        self.assertEqual(derived_subgroup(G).order, 4)
        self.assertFalse(is_metacyclic(G))


if __name__ == '__main__':
    unittest.main()
