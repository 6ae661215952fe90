# Copyright © 2024 laxcomma contributors.

import unittest

import laxcomma_tests
from laxcomma.catalog import (
    chain2,
    cyclic2,
    d0,
    d0_to_d1,
    d1,
    idempotent_monoid,
    one,
    parallel,
    s0,
    two,
    vee,
)
from laxcomma.config import SearchBudget
from laxcomma.errors import SearchBudgetExceeded
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    MonotoneMap,
    NatTrans,
    chain,
    compose_functors,
    find_adjunction,
    find_isomorphism,
    functor_properties,
    functors,
    hom_set,
    identity_functor,
    identity_nat,
    inverse_functor,
    inverse_morphism,
    monotone_maps,
    nat_hcomp,
    nat_transformations,
    nat_vcomp,
    nat_whisker,
    opposite_category,
    preorder_closure,
    product_category,
    thin_category,
    validate_category,
    validate_functor,
    validate_nat,
    validate_preorder,
)


class TestFinCategory(laxcomma_tests.LaxCommaTestCase):
    def test_catalog_is_valid(self):
        for c in (one(), two(), parallel(), cyclic2(), idempotent_monoid()):
            self.assertIs(validate_category(c), c)
        for F in (d0(), d1(), s0()):
            validate_functor(F)
        validate_nat(d0_to_d1())

    def test_compose(self):
        c = two()
        self.assertEqual(c.compose("id1", "u", "id0"), "u")
        self.assertEqual(c.hom("0", "1"), ("u",))
        self.assertEqual(c.hom("1", "0"), ())
        with self.assertRaises(ValueError):
            c.compose("u", "u")
        with self.assertRaises(ValueError):
            c.compose()

    def test_hom_set(self):
        self.assertEqual(hom_set(parallel(), "a", "b"), frozenset({"f", "g"}))
        with self.assertRaises(ValueError):
            hom_set(parallel(), "a", "c")

    def test_is_thin(self):
        self.assertTrue(two().is_thin())
        self.assertFalse(parallel().is_thin())
        self.assertFalse(cyclic2().is_thin())

    def test_missing_composite(self):
        raw = {
            "objects": ["0", "1"],
            "morphisms": {"id0": ("0", "0"), "id1": ("1", "1"), "u": ("0", "1")},
            "identities": {"0": "id0", "1": "id1"},
            "compose": {("id0", "id0"): "id0", ("id1", "id1"): "id1", ("u", "id0"): "u"},
        }
        e = self.assertViolation("missing-composite", validate_category, raw)
        self.assertIn(("id1", "u"), [v.witness for v in e.violations])

    def test_dangling_endpoint(self):
        raw = {
            "objects": ["0"],
            "morphisms": {"id0": ("0", "0"), "u": ("0", "1")},
            "identities": {"0": "id0"},
            "compose": {},
        }
        self.assertViolation("dangling-endpoint", validate_category, raw)

    def test_duplicate_identifier(self):
        raw = {
            "objects": ["0", "u"],
            "morphisms": {"id0": ("0", "0"), "u": ("0", "0")},
            "identities": {"0": "id0"},
            "compose": {},
        }
        self.assertViolation("duplicate-identifier", validate_category, raw)

    def test_identity_violation(self):
        c = cyclic2()
        bad = FinCategory(
            c.objects,
            c.morphisms,
            {"*": "t"},
            c.composition,
        )
        self.assertViolation("identity-violation", validate_category, bad)

    def test_associativity_violation(self):
        # A table on {e, a, b} that is unital but not associative.
        table = {}
        for m in ("e", "a", "b"):
            table[("e", m)] = m
            table[(m, "e")] = m
        table.update({("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "a"})
        c = FinCategory(
            ["*"], {m: ("*", "*") for m in ("e", "a", "b")}, {"*": "e"}, table
        )
        self.assertViolation("associativity-violation", validate_category, c)

    def test_all_violations_reported(self):
        raw = {
            "objects": ["0", "1"],
            "morphisms": {"id0": ("0", "0"), "id1": ("1", "1"), "u": ("0", "1")},
            "identities": {"0": "id0", "1": "id1"},
            "compose": {("id0", "id0"): "id0", ("id1", "id1"): "id1"},
        }
        e = self.assertViolation("missing-composite", validate_category, raw)
        self.assertEqual(
            sum(v.kind == "missing-composite" for v in e.violations), 2
        )

    def test_product_and_opposite(self):
        p = product_category(two(), two())
        self.assertEqual(len(p.objects), 4)
        self.assertEqual(len(p.morphisms), 9)
        validate_category(p)
        op = opposite_category(two())
        self.assertEqual(op.hom("1", "0"), ("u",))
        self.assertEqual(opposite_category(op), two())

    def test_inverse_morphism(self):
        self.assertEqual(inverse_morphism(cyclic2(), "t"), "t")
        self.assertIsNone(inverse_morphism(idempotent_monoid(), "p"))
        self.assertIsNone(inverse_morphism(two(), "u"))


class TestPreorder(laxcomma_tests.LaxCommaTestCase):
    def test_matrix(self):
        self.assertEqualMatrix(chain(3).matrix(), [[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        self.assertTrue(chain(3).is_antisymmetric())

    def test_closure(self):
        p = preorder_closure(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "b")])
        self.assertTrue(p.leq("a", "c"))
        self.assertTrue(p.equivalent("b", "c"))
        self.assertFalse(p.is_antisymmetric())
        validate_preorder(p)

    def test_violations(self):
        p = FinPreorder(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")])
        self.assertViolation("transitivity-violation", validate_preorder, p)
        p = FinPreorder(["a", "b"], [("a", "a")])
        self.assertViolation("reflexivity-violation", validate_preorder, p)
        p = FinPreorder(["a"], [("a", "a"), ("a", "z")])
        self.assertViolation("unknown-element", validate_preorder, p)

    def test_thin_category(self):
        c = thin_category(vee())
        validate_category(c)
        self.assertTrue(c.is_thin())
        self.assertEqual(c.hom("0", "1"), (("0", "1"),))
        self.assertEqual(c.compose(("1", "1"), ("0", "1")), ("0", "1"))

    def test_monotone_maps(self):
        maps = list(monotone_maps(chain2(), chain2()))
        self.assertEqual(len(maps), 3)
        self.assertTrue(all(m.is_monotone() for m in maps))
        flip = MonotoneMap(chain2(), chain2(), {"0": "1", "1": "0"})
        self.assertFalse(flip.is_monotone())

    def test_pointwise_order(self):
        p = chain2()
        low = MonotoneMap(p, p, {"0": "0", "1": "0"})
        high = MonotoneMap(p, p, {"0": "1", "1": "1"})
        self.assertTrue(low.leq(high))
        self.assertFalse(high.leq(low))
        self.assertEqual(low.then(high), high)
        F = low.as_functor()
        validate_functor(F)


class TestFunctors(laxcomma_tests.LaxCommaTestCase):
    def test_functor_counts(self):
        self.assertEqual(len(list(functors(two(), two()))), 3)
        self.assertEqual(len(list(functors(one(), two()))), 2)
        self.assertEqual(len(list(functors(parallel(), two()))), 3)
        self.assertEqual(len(list(functors(cyclic2(), cyclic2()))), 2)

    def test_functor_violations(self):
        F = FinFunctor(two(), two(), {"0": "1", "1": "0"}, {"id0": "id1", "id1": "id0", "u": "u"})
        self.assertViolation("endpoint-mismatch", validate_functor, F)
        F = FinFunctor(cyclic2(), cyclic2(), {"*": "*"}, {"e": "t", "t": "t"})
        self.assertViolation("identity-not-preserved", validate_functor, F)
        F = FinFunctor(
            cyclic2(), idempotent_monoid(), {"*": "*"}, {"e": "e", "t": "p"}
        )
        self.assertViolation("composition-not-preserved", validate_functor, F)

    def test_compose_functors(self):
        F = compose_functors(s0(), d0())
        self.assertEqual(F, identity_functor(one()))
        with self.assertRaises(ValueError):
            compose_functors(d0(), d0())

    def test_properties(self):
        props = functor_properties(d0())
        self.assertTrue(props.fully_faithful)
        self.assertFalse(props.essentially_surjective)
        props = functor_properties(s0())
        self.assertFalse(props.fully_faithful)
        self.assertTrue(props.essentially_surjective)

    def test_isomorphism(self):
        F = find_isomorphism(two(), opposite_category(two()))
        self.assertIsNotNone(F)
        G = inverse_functor(F)
        self.assertEqual(compose_functors(G, F), identity_functor(two()))
        self.assertIsNone(find_isomorphism(two(), parallel()))

    def test_budget(self):
        with self.assertRaises(SearchBudgetExceeded):
            list(functors(two(), two(), budget=SearchBudget(2)))


class TestNatTrans(laxcomma_tests.LaxCommaTestCase):
    def test_enumeration(self):
        self.assertEqual(list(nat_transformations(d0(), d1())), [d0_to_d1()])
        self.assertEqual(list(nat_transformations(d1(), d0())), [])

    def test_violations(self):
        bad = NatTrans(d1(), d0(), {"*": "u"})
        self.assertViolation("component-endpoint-error", validate_nat, bad)
        self.assertViolation("non-parallel", validate_nat, NatTrans(d0(), s0(), {}))

    def test_naturality_violation(self):
        F = FinFunctor(two(), parallel(), {"0": "a", "1": "b"}, {"id0": "ida", "id1": "idb", "u": "f"})
        G = FinFunctor(two(), parallel(), {"0": "a", "1": "b"}, {"id0": "ida", "id1": "idb", "u": "g"})
        e = self.assertViolation(
            "naturality-violation", validate_nat, NatTrans(F, G, {"0": "ida", "1": "idb"})
        )
        self.assertEqual(e.violations[0].witness, ("u",))
        validate_nat(NatTrans(F, F, {"0": "ida", "1": "idb"}))

    def test_composites(self):
        t = d0_to_d1()
        self.assertEqual(nat_vcomp(identity_nat(d1()), t), t)
        self.assertEqual(nat_vcomp(t, identity_nat(d0())), t)
        w = nat_whisker(None, t, s0())
        self.assertTrue(w.is_identity())
        h = nat_hcomp(identity_nat(s0()), t)
        self.assertEqual(h, w)
        with self.assertRaises(ValueError):
            nat_vcomp(t, t)


class TestAdjunctions(laxcomma_tests.LaxCommaTestCase):
    def test_endpoint_adjoints(self):
        self.assertIsNotNone(find_adjunction(d0(), s0()))
        self.assertIsNotNone(find_adjunction(s0(), d1()))
        self.assertIsNone(find_adjunction(d1(), s0()))
        self.assertIsNone(find_adjunction(s0(), d0()))

    def test_triangles(self):
        adj = find_adjunction(d0(), s0())
        validate_nat(adj.unit)
        validate_nat(adj.counit)
        self.assertEqual(adj.counit["1"], "u")

    def test_mismatch(self):
        with self.assertRaises(ValueError):
            find_adjunction(d0(), d1())


if __name__ == "__main__":
    unittest.main()
