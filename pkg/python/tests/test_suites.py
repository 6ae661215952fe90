# Copyright © 2024 laxcomma contributors.

import json
import unittest

import laxcomma_tests

from laxcomma.config import SearchBudget
from laxcomma.errors import SearchBudgetExceeded
from laxcomma.suites import (
    COMMA_MAX_OBJECTS,
    SUITES,
    Record,
    SuiteOptions,
    SuiteReport,
    check,
    comma_categories,
    run_suite,
)

SMALL = SuiteOptions(max_elems=2)


class TestCheck(laxcomma_tests.LaxCommaTestCase):
    def test_bool(self):
        self.assertEqual(check("p", "x", lambda: True), Record("p", "x", True))
        self.assertEqual(check("p", "x", lambda: False), Record("p", "x", False, "x"))

    def test_witness_pair(self):
        self.assertEqual(check("p", "x", lambda: (False, [1, 2])).witness, [1, 2])
        self.assertIsNone(check("p", "x", lambda: (True, [1, 2])).witness)

    def test_value_error_is_a_failure(self):
        def boom():
            raise ValueError("no limit at 0")

        r = check("p", "x", boom)
        self.assertFalse(r.passed)
        self.assertEqual(r.witness, "no limit at 0")

    def test_other_errors_propagate(self):
        def exhausted():
            SearchBudget(0).tick()

        with self.assertRaises(SearchBudgetExceeded):
            check("p", "x", exhausted)


class TestReport(laxcomma_tests.LaxCommaTestCase):
    def test_to_dict(self):
        report = SuiteReport(
            "demo", [Record("p", "a", True), Record("q", "b", False, ("u", 1))], 1.5
        )
        self.assertEqual(report.totals, {"all": 2, "pass": 1, "fail": 1})
        self.assertFalse(report.ok)
        doc = report.to_dict()
        self.assertEqual(list(doc), ["suite", "totals", "records", "elapsed_ms"])
        self.assertEqual(doc["records"][0], {"property": "p", "instance": "a", "pass": True})
        self.assertEqual(doc["records"][1]["witness"], ["u", 1])
        json.dumps(doc)

    def test_empty_report_is_ok(self):
        self.assertTrue(SuiteReport("demo").ok)


class TestSuites(laxcomma_tests.LaxCommaTestCase):
    def test_registry(self):
        expected = {
            "comma-universal",
            "comma-adjunction",
            "kz-coherence",
            "coalg-iso",
            "factorization",
            "coequalizer",
            "cancellation",
            "idempotent-equiv",
            "kz-equiv",
            "ct-final",
            "admissibility",
            "extensivity",
        }
        self.assertEqual(set(SUITES), expected)

    def test_unknown_suite(self):
        with self.assertRaisesRegex(ValueError, "unknown-suite"):
            run_suite("kz", SMALL)

    def test_unknown_mutation(self):
        with self.assertRaisesRegex(ValueError, "Unknown mutation"):
            SuiteOptions(mutate="drop-unit")

    def test_kz_coherence(self):
        report = run_suite("kz-coherence", SuiteOptions(max_elems=2), timing=False)
        self.assertTrue(report.ok, report.failures())
        self.assertGreater(report.totals["all"], 0)
        self.assertIsNone(report.elapsed_ms)
        self.assertIsNone(report.to_dict()["elapsed_ms"])

    def test_flip_gamma_is_caught(self):
        opts = SuiteOptions(max_elems=2, mutate="flip-gamma")
        report = run_suite("kz-coherence", opts)
        self.assertFalse(report.ok)
        self.assertIsNotNone(report.elapsed_ms)
        keys = {"gamma-natural", "identity-unit", "gamma-over-lambda", "delta-gamma", "gamma-rho"}
        for r in report.failures():
            self.assertTrue(set(r.witness) <= keys)

    def test_records_sorted(self):
        report = run_suite("coalg-iso", SuiteOptions(max_elems=2), timing=False)
        keys = [(r.instance, r.property) for r in report.records]
        self.assertEqual(keys, sorted(keys))
        self.assertTrue(report.ok, report.failures())

    def test_deterministic(self):
        first = run_suite("kz-coherence", SuiteOptions(max_elems=2), timing=False)
        second = run_suite("kz-coherence", SuiteOptions(max_elems=2), timing=False)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_cancellation(self):
        report = run_suite("cancellation", SuiteOptions(max_elems=2), timing=False)
        self.assertTrue(report.ok, report.failures())
        counter = {r.instance for r in report.records if r.property == "lali-counterexample"}
        self.assertEqual(counter, {"s0", "s0.d0", "d0"})

    def test_comma_categories_reach_four_objects(self):
        categories = comma_categories()
        self.assertIn("2x2", {c.name for c in categories})
        self.assertTrue(all(len(c.objects) <= COMMA_MAX_OBJECTS for c in categories))

    def test_ct_final(self):
        report = run_suite("ct-final", SuiteOptions(max_elems=2), timing=False)
        self.assertTrue(report.ok, report.failures())
        verdicts = {r.instance for r in report.records if r.property == "adjunction-iff-cocomplete"}
        bijections = {r.instance for r in report.records if r.property == "hom-bijection"}
        self.assertEqual(len(verdicts), 3)
        # The discrete pair has no join, hence no left adjoint.
        self.assertEqual(len(bijections), 2)
        self.assertTrue(bijections < verdicts)

    def test_coequalizer_bases(self):
        report = run_suite("coequalizer", SuiteOptions(max_elems=1), timing=False)
        self.assertTrue(report.ok, report.failures())
        bases = {r.instance.split(":")[0] for r in report.records}
        self.assertEqual(bases, {"2/1", "1+1/1", "V/1", "Λ/1", "2/{p,q}"})

    def test_budget_is_shared(self):
        opts = SuiteOptions(max_elems=2, budget=SearchBudget(1))
        with self.assertRaises(SearchBudgetExceeded):
            run_suite("kz-coherence", opts)


if __name__ == "__main__":
    unittest.main()
