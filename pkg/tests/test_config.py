import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import tempfile
import unittest
from pathlib import Path
from unittest import mock

from config.models import EnumerationBounds, RunConfig, VerifyConfig
from config.settings import Settings


class TestSettings(unittest.TestCase):
    def test_environment_override(self):
        with mock.patch.dict(os.environ, {"CHROMA_MAX_PERMS": "120", "CHROMA_WORKERS": "3"}):
            source = Settings()
        self.assertEqual((source.max_perms, source.workers), (120, 3))
        bounds = EnumerationBounds.from_settings(source)
        self.assertEqual(bounds.max_perms, 120)
        self.assertEqual(bounds.max_complex_d, source.max_complex_d)


class TestEnumerationBounds(unittest.TestCase):
    def test_bounds_must_be_positive(self):
        with self.assertRaises(ValueError):
            EnumerationBounds(max_d=0)
        with self.assertRaises(ValueError):
            EnumerationBounds(max_iso_vertices=-1)

    def test_to_dict(self):
        self.assertEqual(EnumerationBounds(max_d=5).to_dict()["max_d"], 5)


class TestRunConfig(unittest.TestCase):
    def test_yaml_defaults(self):
        config = RunConfig.from_yaml()
        self.assertEqual(config.verify.exhaustive_d, 5)
        self.assertEqual(config.verify.sample_d, [5, 6])
        self.assertEqual(config.output_format, "text")
        self.assertIsNone(config.verify.fault)

    def test_custom_yaml(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "run.yaml"
            path.write_text("verify:\n  seed: 7\n  sample_d: [3]\noutput:\n  format: json\n")
            config = RunConfig.from_yaml(str(path))
        self.assertEqual((config.seed, config.verify.sample_d, config.output_format), (7, [3], "json"))
        self.assertEqual(config.verify.sample_count, VerifyConfig().sample_count)

    def test_missing_yaml(self):
        with self.assertRaises(FileNotFoundError):
            RunConfig.from_yaml("/nonexistent/chroma.yaml")

    def test_validation(self):
        with self.assertRaises(ValueError):
            RunConfig(output_format="xml")
        with self.assertRaises(ValueError):
            RunConfig(workers=0)

    def test_from_dict_round_trip(self):
        config = RunConfig.from_dict({"verify": {"exhaustive_d": 3, "fault": "ties_never_cut"}, "workers": 2})
        data = config.to_dict()
        self.assertEqual(data["verify"]["exhaustive_d"], 3)
        self.assertEqual(data["verify"]["fault"], "ties_never_cut")
        self.assertEqual(data["workers"], 2)
        self.assertEqual(VerifyConfig.from_dict(data["verify"]), config.verify)


if __name__ == '__main__':
    unittest.main()
