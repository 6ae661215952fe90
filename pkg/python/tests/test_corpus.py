# Copyright © 2024 laxcomma contributors.

import os
import unittest

import laxcomma_tests
import numpy as np

from laxcomma.catalog import cyclic2, parallel, two
from laxcomma.config import SearchBudget
from laxcomma.corpus import (
    canonical_codes,
    canonical_form,
    category_corpus,
    coequalizer_corpus,
    corpus_enumerate,
    local_orders,
    pocategory_corpus,
    preorder_corpus,
    preorders,
    shape_corpus,
)
from laxcomma.constructions import preorder_coequalizer
from laxcomma.errors import SearchBudgetExceeded
from laxcomma.fincat import FinPreorder, preorder_closure
from laxcomma.kan import ran_monotone
from laxcomma.thin2 import pocategory_violations


class TestPreorders(laxcomma_tests.LaxCommaTestCase):
    def test_counts_up_to_iso(self):
        self.assertEqual([len(preorders(n)) for n in range(5)], [1, 1, 3, 9, 33])

    def test_labelled_counts(self):
        counts = [len(preorders(n, up_to_iso=False)) for n in range(5)]
        self.assertEqual(counts, [1, 1, 4, 29, 355])

    def test_every_result_is_a_preorder(self):
        for p in preorders(3, up_to_iso=False):
            m = p.matrix()
            self.assertTrue(np.diag(m).all())
            square = (m.astype(np.uint8) @ m.astype(np.uint8)) > 0
            self.assertFalse((square & ~m).any())

    def test_deterministic(self):
        first = [p.le for p in preorders(3)]
        second = [p.le for p in preorders(3)]
        self.assertEqual(first, second)

    def test_representatives_are_pairwise_non_isomorphic(self):
        forms = [canonical_form(p) for p in preorders(4)]
        self.assertEqual(len(set(forms)), len(forms))

    def test_canonical_form_ignores_labelling(self):
        up = preorder_closure(["0", "1"], [("0", "1")])
        down = preorder_closure(["0", "1"], [("1", "0")])
        self.assertEqual(canonical_form(up), canonical_form(down))
        discrete = FinPreorder(["0", "1"], [("0", "0"), ("1", "1")])
        self.assertNotEqual(canonical_form(up), canonical_form(discrete))

    def test_canonical_codes_of_a_stack(self):
        m = np.stack([np.eye(2, dtype=bool), np.ones((2, 2), dtype=bool)])
        codes = canonical_codes(m)
        self.assertEqual(codes.shape, (2,))
        self.assertNotEqual(codes[0], codes[1])

    def test_bounds(self):
        with self.assertRaisesRegex(ValueError, "bounds-too-large"):
            preorders(6)
        with self.assertRaisesRegex(ValueError, "bounds-too-large"):
            list(preorder_corpus(9))


class TestCorpora(laxcomma_tests.LaxCommaTestCase):
    def test_preorder_corpus(self):
        corpus = list(preorder_corpus(3))
        self.assertEqual([len(p) for p in corpus], [1] + [2] * 3 + [3] * 9)
        partial = list(preorder_corpus(3, antisymmetric=True))
        self.assertTrue(all(p.is_antisymmetric() for p in partial))
        self.assertEqual(len(partial), 1 + 2 + 5)

    def test_preorder_corpus_reads_max_elems(self):
        os.environ["LAXCOMMA_MAX_ELEMS"] = "2"
        self.assertEqual(len(list(preorder_corpus())), 4)

    def test_category_corpus(self):
        corpus = list(category_corpus(max_elems=2, max_objects=2))
        names = [c.name for c in corpus]
        self.assertIn("||", names)
        self.assertTrue(all(len(c.objects) <= 2 for c in corpus))

    def test_shapes_are_nonempty(self):
        shapes = shape_corpus(2)
        self.assertTrue(all(c.objects for c in shapes))
        self.assertIn("||", [c.name for c in shapes])

    def test_local_orders(self):
        self.assertEqual(len(list(local_orders(two()))), 1)
        self.assertEqual(len(list(local_orders(parallel()))), 4)
        # e <= t forces t <= e after whiskering by t
        self.assertEqual(len(list(local_orders(cyclic2()))), 2)

    def test_pocategory_corpus(self):
        corpus = list(pocategory_corpus())
        self.assertEqual(len(corpus), len(set(corpus)))
        for k in corpus:
            self.assertEqual(pocategory_violations(k), [])
        self.assertEqual(corpus[-1].name, "Pos{1,2}")

    def test_pocategory_corpus_three_objects(self):
        small = list(pocategory_corpus())
        large = list(pocategory_corpus(max_objects=3))
        self.assertGreater(len(large), len(small))
        self.assertTrue(set(small) <= set(large))
        self.assertEqual(large[-1].name, "Pos{1,2}")
        for k in large:
            self.assertEqual(pocategory_violations(k), [])

    def test_coequalizer_corpus(self):
        instances = list(coequalizer_corpus(2))
        for inst in instances:
            inst.validate()
        self.assertEqual({inst.z.name for inst in instances}, {"2", "1+1", "V", "Λ"})
        self.assertTrue(any(len(inst.w) == 2 for inst in instances))
        self.assertEqual({inst.a("*") for inst in instances if inst.z.name == "2" and len(inst.w) == 1}, {"0", "1"})
        missing = [
            inst
            for inst in instances
            if ran_monotone(preorder_coequalizer(inst.g, inst.h).e, inst.b)[0] is None
        ]
        self.assertTrue(missing)
        self.assertTrue(all(inst.z.name == "Λ" for inst in missing))

    def test_pocategory_bounds(self):
        with self.assertRaisesRegex(ValueError, "bounds-too-large"):
            list(pocategory_corpus(max_objects=4))
        with self.assertRaisesRegex(ValueError, "bounds-too-large"):
            list(pocategory_corpus(max_hom=5))

    def test_budget(self):
        with self.assertRaises(SearchBudgetExceeded):
            list(local_orders(parallel(), SearchBudget(2)))

    def test_enumerate(self):
        self.assertEqual(len(list(corpus_enumerate("preorder", 2))), 4)
        self.assertTrue(list(corpus_enumerate("category", 1)))
        with self.assertRaisesRegex(ValueError, "Unknown corpus kind"):
            corpus_enumerate("monoid")


if __name__ == "__main__":
    unittest.main()
