# Copyright © 2024 laxcomma contributors.

import unittest

import laxcomma_tests
from laxcomma.catalog import chain2, point, two
from laxcomma.corpus import pocategory_corpus
from laxcomma.errors import ValidationError
from laxcomma.thin2 import (
    Monad2Data,
    PoFunctor,
    adjunction_check,
    adjunctions,
    algebra_structures,
    algebras_are_inverses,
    cancellation_checks,
    comma_search,
    compose_adjunctions,
    counit_invertible,
    eilenberg_moore,
    identity_monad,
    identity_pofunctor,
    is_fully_faithful,
    is_lali,
    is_lari,
    is_rali,
    is_rari,
    kz_criterion,
    monad_classification,
    monads_on,
    pos_pocategory,
    preorder_pocategory,
    pullback_search,
    search_lax_nonidempotent,
    two_adjunctions,
    validate_2adjunction,
    validate_2monad,
    validate_pocategory,
    validate_pofunctor,
)


def pos12():
    return pos_pocategory({"1": point(), "2": chain2()}, name="Pos{1,2}")


class TestPoCategory(laxcomma_tests.LaxCommaTestCase):
    def setUp(self):
        super().setUp()
        self.k = pos12()
        self.d0 = self.k.cell("1", "2", {"*": "0"})
        self.d1 = self.k.cell("1", "2", {"*": "1"})
        self.s0 = self.k.cell("2", "1", {"0": "*", "1": "*"})

    def test_pos(self):
        validate_pocategory(self.k)
        self.assertEqual(len(self.k.hom("2", "2")), 3)
        self.assertTrue(self.k.leq(self.d0, self.d1))
        self.assertFalse(self.k.leq(self.d1, self.d0))
        self.assertFalse(self.k.is_locally_discrete())
        self.assertEqual(self.k.underlying_map(self.d1), {"*": "1"})
        with self.assertRaises(ValueError):
            self.k.cell("2", "2", {"0": "1", "1": "0"})

    def test_hom_preorder(self):
        p = self.k.hom_preorder("2", "2")
        self.assertEqual(len(p), 3)
        self.assertTrue(p.is_antisymmetric())

    def test_locally_discrete(self):
        k = preorder_pocategory(chain2())
        self.assertTrue(k.is_locally_discrete())
        validate_pocategory(k)

    def test_violations(self):
        c = two()
        raw = {
            "objects": c.objects,
            "morphisms": c.morphisms,
            "identities": c.identity,
            "compose": c.composition,
            "order": [("u", "id0")],
        }
        self.assertViolation("monotonicity-violation", validate_pocategory, raw)
        raw["order"] = [("u", "v")]
        self.assertViolation("unknown-cell", validate_pocategory, raw)
        raw["order"] = []
        raw["identities"] = {"0": "u", "1": "id1"}
        self.assertViolation("unit-violation", validate_pocategory, raw)

    def test_pofunctors(self):
        F = identity_pofunctor(self.k)
        validate_pofunctor(F)
        self.assertTrue(is_fully_faithful(F))
        mor = {f: f for f in self.k.morphisms}
        mor[self.d0], mor[self.d1] = self.d1, self.d0
        swap = PoFunctor(self.k, self.k, {"1": "1", "2": "2"}, mor)
        with self.assertRaises(ValidationError):
            validate_pofunctor(swap)


class TestAdjunctions(laxcomma_tests.LaxCommaTestCase):
    def setUp(self):
        super().setUp()
        self.k = pos12()
        self.d0 = self.k.cell("1", "2", {"*": "0"})
        self.d1 = self.k.cell("1", "2", {"*": "1"})
        self.s0 = self.k.cell("2", "1", {"0": "*", "1": "*"})

    def test_endpoint_adjunctions(self):
        a = adjunction_check(self.k, self.d0, self.s0)
        self.assertTrue(a.holds)
        self.assertTrue(a.lari)
        self.assertFalse(a.lali)
        a = adjunction_check(self.k, self.s0, self.d1)
        self.assertTrue(a.holds)
        self.assertTrue(a.lali)
        self.assertFalse(adjunction_check(self.k, self.d1, self.s0).holds)
        with self.assertRaises(ValidationError):
            adjunction_check(self.k, self.d0, self.d1)

    def test_lali(self):
        k = self.k
        self.assertTrue(is_lali(k, self.s0))
        self.assertTrue(is_lali(k, k.compose(self.s0, self.d0)))
        self.assertFalse(is_lali(k, self.d0))
        self.assertTrue(is_lari(k, self.d0))
        self.assertTrue(is_rari(k, self.d1))
        self.assertFalse(is_rali(k, self.d1))

    def test_compose(self):
        k = self.k
        first = adjunction_check(k, self.d0, self.s0)
        second = adjunction_check(k, self.s0, self.d1)
        composite = compose_adjunctions(k, first, second)
        self.assertEqual(composite.f, k.compose(self.s0, self.d0))
        self.assertTrue(composite.holds)

    def test_cancellation(self):
        checks = list(cancellation_checks(self.k))
        self.assertTrue(checks)
        self.assertTrue(all(ok for _, _, ok in checks))
        laws = {law for law, _, _ in checks}
        self.assertIn("right-cancel-lali", laws)

    def test_enumeration(self):
        found = {(a.f, a.g) for a in adjunctions(self.k)}
        self.assertIn((self.d0, self.s0), found)
        self.assertIn((self.s0, self.d1), found)
        self.assertNotIn((self.d1, self.s0), found)


class TestMonads(laxcomma_tests.LaxCommaTestCase):
    def setUp(self):
        super().setUp()
        self.k = pos12()
        self.s0 = self.k.cell("2", "1", {"0": "*", "1": "*"})

    def collapse(self):
        k = self.k
        one = k.id("1")
        T = PoFunctor(k, k, {"1": "1", "2": "1"}, {f: one for f in k.morphisms})
        return Monad2Data(T, {"1": one, "2": self.s0}, {"1": one, "2": one})

    def test_identity_monad(self):
        m = validate_2monad(identity_monad(self.k))
        kind = monad_classification(m)
        self.assertTrue(kind.idempotent)
        self.assertTrue(kind.lax_idempotent)
        self.assertTrue(kind.t_eta_is_eta_t)

    def test_reflective_monad(self):
        m = validate_2monad(self.collapse())
        kind = monad_classification(m)
        self.assertTrue(kind.idempotent)
        s = algebra_structures(m, "2")
        self.assertEqual(s.structures, frozenset())
        s = algebra_structures(m, "1")
        self.assertEqual(s.structures, frozenset({self.k.id("1")}))
        self.assertTrue(s.agrees)
        self.assertTrue(algebras_are_inverses(m))

    def test_bad_monad(self):
        m = self.collapse()
        m.mu["2"] = self.s0
        self.assertViolation("endpoint-mismatch", validate_2monad, m)

    def test_eilenberg_moore(self):
        adj = validate_2adjunction(eilenberg_moore(self.collapse()))
        self.assertEqual(len(adj.F.cod.objects), 1)
        self.assertTrue(kz_criterion(adj))
        self.assertTrue(counit_invertible(adj))

    def test_two_adjunctions(self):
        k = preorder_pocategory(point())
        self.assertEqual(len(list(two_adjunctions(k, k))), 1)

    def test_no_lax_nonidempotent(self):
        self.assertIsNone(search_lax_nonidempotent([preorder_pocategory(chain2()), self.k]))

    def test_finite_monads_have_invertible_multiplication(self):
        corpus = list(pocategory_corpus(max_objects=3))
        self.assertTrue(any(len(k.objects) == 3 for k in corpus))
        monads = 0
        for k in corpus:
            for m in monads_on(k):
                monads += 1
                kind = monad_classification(m)
                self.assertTrue(kind.mu_invertible, (k.name, m))
                self.assertTrue(kind.lax_idempotent, (k.name, m))
        self.assertGreater(monads, len(corpus))
        self.assertIsNone(search_lax_nonidempotent(corpus))


class TestLimitSearch(laxcomma_tests.LaxCommaTestCase):
    def setUp(self):
        super().setUp()
        self.k = pos12()
        self.d0 = self.k.cell("1", "2", {"*": "0"})
        self.d1 = self.k.cell("1", "2", {"*": "1"})

    def test_comma(self):
        r = comma_search(self.k, self.d0, self.d1)
        self.assertTrue(r.found)
        self.assertEqual(r.apex, "1")
        self.assertFalse(comma_search(self.k, self.d1, self.d0).found)

    def test_pullback(self):
        self.assertFalse(pullback_search(self.k, self.d0, self.d1).found)
        r = pullback_search(self.k, self.d0, self.d0)
        self.assertTrue(r.found)
        self.assertEqual(r.apex, "1")

    def test_mismatch(self):
        s0 = self.k.cell("2", "1", {"0": "*", "1": "*"})
        with self.assertRaises(ValidationError):
            comma_search(self.k, self.d0, s0)


if __name__ == "__main__":
    unittest.main()
