# Copyright © 2024 laxcomma contributors.

import os
import unittest

import laxcomma_tests
from laxcomma.config import (
    DEFAULT_MAX_SEARCH,
    SearchBudget,
    ensure_budget,
    log_level,
    max_elems,
    max_search,
)
from laxcomma.errors import SearchBudgetExceeded


class TestConfig(laxcomma_tests.LaxCommaTestCase):
    def test_defaults(self):
        os.environ.pop("LAXCOMMA_MAX_SEARCH", None)
        os.environ.pop("LAXCOMMA_MAX_ELEMS", None)
        os.environ.pop("LAXCOMMA_LOG_LEVEL", None)
        self.assertEqual(max_search(), DEFAULT_MAX_SEARCH)
        self.assertEqual(max_elems(), 4)
        self.assertEqual(log_level(), "WARNING")

    def test_environment(self):
        os.environ["LAXCOMMA_MAX_SEARCH"] = "1e3"
        os.environ["LAXCOMMA_LOG_LEVEL"] = "debug"
        self.assertEqual(max_search(), 1000)
        self.assertEqual(SearchBudget().limit, 1000)
        self.assertEqual(log_level(), "DEBUG")

    def test_bad_values(self):
        os.environ["LAXCOMMA_MAX_SEARCH"] = "lots"
        with self.assertRaises(ValueError):
            max_search()
        os.environ["LAXCOMMA_MAX_SEARCH"] = "0"
        with self.assertRaises(ValueError):
            max_search()

    def test_budget(self):
        budget = SearchBudget(3)
        budget.tick(3)
        with self.assertRaises(SearchBudgetExceeded) as cm:
            budget.tick(what="probe")
        self.assertEqual(cm.exception.limit, 3)
        self.assertIn("probe", str(cm.exception))
        self.assertIs(ensure_budget(budget), budget)
        self.assertIsInstance(ensure_budget(None), SearchBudget)


if __name__ == "__main__":
    unittest.main()
