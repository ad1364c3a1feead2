"""
Unit tests for the configs module.
Tests configuration loading, default merging and the typed accessors.
"""

import json
import os
import shutil
import sys
import tempfile
import unittest
from pathlib import Path

# Add project root and src to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from src.utils.configs import (DEFAULT_CONFIG, get_catalog_dir, get_envelope, get_guards,
                               get_oracle_limits, get_output_dir, get_worker_bounds, load_config)
from tests.fixtures.test_data import SAMPLE_CONFIG


class TestConfigs(unittest.TestCase):
    """Test cases for the configs module."""

    def setUp(self):
        """Set up a temporary config file."""
        self.temp_dir = tempfile.mkdtemp()
        self.config_path = os.path.join(self.temp_dir, "config.json")
        with open(self.config_path, 'w') as f:
            json.dump(SAMPLE_CONFIG, f)

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_missing_file_gives_defaults(self):
        """Test that a missing config file falls back to the defaults."""
        config = load_config(os.path.join(self.temp_dir, "absent.json"))
        self.assertEqual(config, DEFAULT_CONFIG)
        self.assertIsNot(config["guards"], DEFAULT_CONFIG["guards"])

    def test_user_values_override(self):
        """Test that scalar values replace the defaults."""
        config = load_config(self.config_path)
        self.assertEqual(config["max_workers"], 2)
        self.assertEqual(config["output_dir"], "test_output")

    def test_nested_sections_merge(self):
        """Test that nested sections are merged key by key."""
        config = load_config(self.config_path)
        self.assertEqual(config["guards"]["max_group_order"], 4096)
        self.assertIn("hall_max_order", config["oracle_limits"])
        with open(self.config_path, 'w') as f:
            json.dump({"guards": {"seed": 1}}, f)
        guards = get_guards(self.config_path)
        self.assertEqual(guards["seed"], 1)
        self.assertEqual(guards["max_subgroups"], DEFAULT_CONFIG["guards"]["max_subgroups"])

    def test_envelope_keys_are_ints(self):
        """Test that the envelope is keyed by int primes."""
        envelope = get_envelope(self.config_path)
        self.assertEqual(envelope[2], 32)
        self.assertEqual(envelope[3], 81)
        self.assertNotIn("2", envelope)

    def test_oracle_limits(self):
        """Test the nested int keys of the oracle limits."""
        limits = get_oracle_limits(self.config_path)
        self.assertEqual(limits["hall_max_order"][3], DEFAULT_CONFIG["oracle_limits"]["hall_max_order"]["3"])
        self.assertIn("subset_pair_max_order", limits)

    def test_paths_and_bounds(self):
        """Test the directory and worker accessors."""
        self.assertEqual(get_worker_bounds(self.config_path), (1, 2))
        self.assertEqual(get_catalog_dir(self.config_path), Path("catalog"))
        self.assertEqual(get_output_dir(self.config_path), Path("test_output"))

    def test_invalid_json(self):
        """Test that a broken config file raises."""
        with open(self.config_path, 'w') as f:
            f.write("{broken")
        with self.assertRaises(json.JSONDecodeError):
            load_config(self.config_path)

    def test_shipped_config(self):
        """Test that the shipped config.json carries every default key."""
        with open(project_root / "config.json") as f:
            shipped = json.load(f)
        self.assertEqual(set(shipped), set(DEFAULT_CONFIG))


if __name__ == '__main__':
    unittest.main()
