import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import json
import unittest

from common.exceptions import ComplexError
from config.models import EnumerationBounds, RunConfig, VerifyConfig
from verifier import CheckResult, InstanceSet, SuiteReport, VerificationReporter, VerificationSuite
from verifier.checks.base import BaseCheck
from verifier.checks.registry import CheckRegistry


def small_config(**overrides) -> RunConfig:
    verify = VerifyConfig(
        exhaustive_d=3,
        sample_d=[4],
        sample_count=3,
        seed=17,
        hilbert_max_n=2,
        hilbert_max_d=3,
        label_pairs=2,
    )
    for key, value in overrides.items():
        setattr(verify, key, value)
    return RunConfig(bounds=EnumerationBounds(), verify=verify)


class AbortingCheck(BaseCheck):
    name = "aborting"
    claim = "raises"

    def run(self):
        raise ComplexError("no complex for you")


class TestRegistry(unittest.TestCase):
    def test_available_checks(self):
        names = CheckRegistry.get_available_checks()
        self.assertEqual(len(names), 18)
        self.assertEqual(names[0], "w_theorem")
        self.assertIn("equivalent_pair", names)
        self.assertIsNone(CheckRegistry.get_check_class("nope"))

    def test_create_check(self):
        config = small_config()
        instances = InstanceSet(config.verify, config.bounds)
        check = CheckRegistry.create_check("WORKED_EXAMPLE", instances, config.verify, config.bounds)
        self.assertEqual(check.name, "worked_example")
        self.assertIsNone(CheckRegistry.create_check("nope", instances, config.verify, config.bounds))


class TestInstances(unittest.TestCase):
    def test_families(self):
        config = small_config()
        instances = InstanceSet(config.verify, config.bounds)
        self.assertEqual(len(instances.up_to_relabeling(3)), 8)
        self.assertEqual(len(instances.up_to_relabeling(4)), 11)
        self.assertEqual(len(instances.sampled(4)), 3)
        self.assertEqual(instances.sampled(4), InstanceSet(config.verify, config.bounds).sampled(4))
        g, h = instances.equivalent_pair()
        self.assertEqual((g.d, g.edge_count), (5, 6))
        self.assertNotEqual(g, h)

    def test_default_config_is_exhaustive_on_five_vertices(self):
        config = RunConfig.from_yaml()
        instances = InstanceSet(config.verify, config.bounds)
        self.assertEqual(len(instances.up_to_relabeling(5)), 1024)
        self.assertEqual(len(instances.family(3, 5)), 8 + 64 + 1024)


class TestSuite(unittest.TestCase):
    def test_small_suite_passes(self):
        report = VerificationSuite(small_config()).run()
        self.assertEqual(report.failed_checks, [])
        self.assertTrue(report.passed)
        self.assertEqual([r.name for r in report.results], CheckRegistry.get_available_checks())

    def test_two_edge_check_reports_distinguishing_invariant(self):
        report = VerificationSuite(small_config()).run(["two_edge_graphs"])
        result = report.results[0]
        self.assertTrue(result.passed)
        self.assertEqual(result.instances, 2)
        self.assertIn("d=5: facet-degree multisets differ", result.detail)

    def test_injected_fault_fails_w_theorem(self):
        report = VerificationSuite(small_config(fault="ties_never_cut")).run(["w_theorem", "worked_example"])
        self.assertFalse(report.passed)
        self.assertEqual(report.failed_checks, ["w_theorem"])

    def test_same_seed_same_report(self):
        reporter = VerificationReporter()
        names = ["w_theorem", "label_invariance", "tail_h_vector"]
        first = reporter.render(VerificationSuite(small_config()).run(names))
        second = reporter.render(VerificationSuite(small_config()).run(names))
        self.assertEqual(first, second)

    def test_worker_pool_keeps_order(self):
        config = small_config()
        config.workers = 3
        names = ["codec_examples", "worked_example", "facet_count"]
        report = VerificationSuite(config).run(names)
        self.assertEqual([r.name for r in report.results], names)

    def test_unknown_check(self):
        with self.assertRaises(ValueError):
            VerificationSuite(small_config()).run(["nope"])

    def test_aborted_check_is_a_failure(self):
        config = small_config()
        check = AbortingCheck(InstanceSet(config.verify, config.bounds), config.verify, config.bounds)
        result = VerificationSuite._run_check(check)
        self.assertFalse(result.passed)
        self.assertIn("no complex for you", result.detail)


class TestReporter(unittest.TestCase):
    def setUp(self):
        self.report = SuiteReport(
            results=[
                CheckResult("alpha", "a holds", 3, 0),
                CheckResult("beta", "b holds", 2, 1, "broken on x"),
            ],
            settings={"seed": 1},
        )

    def test_result_status(self):
        self.assertFalse(CheckResult("empty", "vacuous", 0, 0).passed)
        self.assertEqual(self.report.failed_checks, ["beta"])

    def test_text(self):
        text = VerificationReporter().render(self.report)
        self.assertIn("beta: broken on x", text)
        self.assertTrue(text.endswith("FAILED: beta"))
        passing = SuiteReport(results=[CheckResult("alpha", "a holds", 3, 0)])
        self.assertTrue(VerificationReporter().render(passing).endswith("ALL 1 CHECKS PASSED"))

    def test_json(self):
        payload = json.loads(VerificationReporter().render(self.report, "json"))
        self.assertFalse(payload["passed"])
        self.assertEqual([c["status"] for c in payload["checks"]], ["PASS", "FAIL"])
        self.assertEqual(payload["settings"], {"seed": 1})


if __name__ == '__main__':
    unittest.main()
