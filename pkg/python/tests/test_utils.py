# Copyright © 2024 laxcomma contributors.

import json
import unittest

import laxcomma_tests
from laxcomma.utils import format_id, ordered, to_jsonable, tree_map


class TestUtils(laxcomma_tests.LaxCommaTestCase):
    def test_format_id(self):
        self.assertEqual(format_id("u"), "u")
        self.assertEqual(format_id(("0", ("u", "id1"))), "(0,(u,id1))")
        self.assertEqual(format_id(frozenset({"b", "a"})), "{a,b}")
        self.assertEqual(format_id(3), "3")

    def test_ordered_mixed(self):
        self.assertEqual(ordered(["b", ("a", "c"), "a"]), [("a", "c"), "a", "b"])

    def test_tree_map(self):
        tree = {"a": 0, "b": [1, 2], "c": {3}}
        tree = tree_map(lambda x: x + 1, tree)
        self.assertEqual(tree, {"a": 1, "b": [2, 3], "c": [4]})

    def test_to_jsonable(self):
        doc = to_jsonable({"pair": ("x", "y"), "items": [("a", 1), None, True]})
        self.assertEqual(doc, {"pair": "(x,y)", "items": ["(a,1)", None, True]})
        json.dumps(doc)


if __name__ == "__main__":
    unittest.main()
