# Copyright © 2024 laxcomma contributors.

import unittest

import laxcomma_tests
from laxcomma.catalog import chain2, d0, one, point, two, vee, wedge
from laxcomma.errors import ValidationError
from laxcomma.fincat import (
    FinFunctor,
    MonotoneMap,
    discrete,
    identity_functor,
    identity_map,
    thin_category,
    validate_functor,
    validate_nat,
)
from laxcomma.kan import (
    LaxCoeqInstance,
    cocones,
    coequalizer_iff_checks,
    coequalizer_preservation_check,
    conical_adjunction_check,
    conical_colimit,
    conical_limit,
    is_lax_slice_coequalizer,
    is_preorder_coequalizer,
    lax_slice_coequalizer,
    left_kan,
    limit_agrees_with_kan,
    ran_monotone,
    right_kan,
    universal_arrow,
)


def pair_diagram(p, x, y):
    shape = thin_category(discrete(["a", "b"]))
    return FinFunctor(
        shape,
        thin_category(p),
        {"a": x, "b": y},
        {("a", "a"): (x, x), ("b", "b"): (y, y)},
    )


def collapsing_instance(**kwargs):
    p = chain2()
    fields = dict(
        z=p,
        w=point(),
        a=MonotoneMap(point(), p, {"*": "1"}),
        x=p,
        b=identity_map(p),
        g=MonotoneMap(point(), p, {"*": "0"}),
        h=MonotoneMap(point(), p, {"*": "1"}),
    )
    fields.update(kwargs)
    return LaxCoeqInstance(**fields)


class TestLimits(laxcomma_tests.LaxCommaTestCase):
    def test_limit_of_identity(self):
        r = conical_limit(identity_functor(two()))
        self.assertTrue(r.found)
        self.assertEqual(r.apex, "0")
        self.assertEqual(len(r.certificate), 1)
        r = conical_colimit(identity_functor(two()))
        self.assertEqual(r.apex, "1")

    def test_meets_and_joins(self):
        r = conical_limit(pair_diagram(vee(), "1", "2"))
        self.assertTrue(r.found)
        self.assertEqual(r.apex, "0")
        self.assertFalse(conical_colimit(pair_diagram(vee(), "1", "2")).found)
        self.assertFalse(conical_limit(pair_diagram(wedge(), "0", "1")).found)
        self.assertEqual(conical_colimit(pair_diagram(wedge(), "0", "1")).apex, "2")

    def test_limit_agrees_with_kan(self):
        self.assertTrue(limit_agrees_with_kan(identity_functor(two())))
        self.assertTrue(limit_agrees_with_kan(pair_diagram(wedge(), "0", "1")))


class TestKan(laxcomma_tests.LaxCommaTestCase):
    def test_right_kan(self):
        r = right_kan(d0(), identity_functor(one()))
        self.assertTrue(r.found)
        self.assertTrue(r.certified)
        self.assertGreater(r.checked, 0)
        self.assertEqual(r.extension.name, "ran")
        validate_functor(r.extension)
        validate_nat(r.cell)
        self.assertEqual(r.extension.obj_map, {"0": "*", "1": "*"})

    def test_left_kan(self):
        r = left_kan(d0(), identity_functor(one()))
        self.assertTrue(r.found)
        self.assertTrue(r.certified)
        self.assertEqual(r.extension.name, "lan")
        validate_nat(r.cell)

    def test_right_kan_into_chain(self):
        r = right_kan(identity_functor(two()), identity_functor(two()))
        self.assertTrue(r.found)
        self.assertEqual(r.extension.obj_map, {"0": "0", "1": "1"})

    def test_missing_limit(self):
        shape = thin_category(discrete(["a", "b"]))
        h = FinFunctor(shape, one(), {"a": "*", "b": "*"}, {("a", "a"): "id*", ("b", "b"): "id*"})
        j = pair_diagram(wedge(), "0", "1")
        r = right_kan(h, j)
        self.assertFalse(r.found)
        self.assertEqual(r.failing_object, "*")

    def test_mismatch(self):
        with self.assertRaises(ValidationError):
            right_kan(d0(), identity_functor(two()))

    def test_ran_monotone(self):
        to_point = MonotoneMap(chain2(), point(), {"0": "*", "1": "*"})
        c, kan = ran_monotone(to_point, identity_map(chain2()))
        self.assertTrue(kan.found)
        self.assertEqual(c.mapping, {"*": "0"})


class TestLaxCoequalizer(laxcomma_tests.LaxCommaTestCase):
    def test_collapse(self):
        inst = collapsing_instance()
        result = lax_slice_coequalizer(inst)
        self.assertTrue(result.found)
        self.assertTrue(result.certified)
        self.assertEqual(result.coeq.q.elements, ("0",))
        self.assertEqual(result.c.mapping, {"0": "0"})

    def test_preservation(self):
        report = coequalizer_preservation_check(collapsing_instance())
        self.assertTrue(report.preserved)
        self.assertTrue(report.underlying_matches)

    def test_characterization(self):
        checks = coequalizer_iff_checks(collapsing_instance())
        self.assertTrue(checks)
        self.assertTrue(all(ok for _, ok in checks), checks)

    def test_identity_is_not_coequalizer(self):
        inst = collapsing_instance()
        self.assertFalse(
            is_preorder_coequalizer(inst.g, inst.h, identity_map(chain2()), [point(), chain2()])
        )

    def test_characterization_covers_other_maps(self):
        inst = collapsing_instance()
        checks = coequalizer_iff_checks(inst)
        self.assertTrue(any(label.startswith("candidate") for label, _ in checks))
        self.assertTrue(all(ok for _, ok in checks), checks)
        # Coequalizes g and h but misses "0".
        f = MonotoneMap(chain2(), chain2(), {"0": "1", "1": "1"})
        c = MonotoneMap(chain2(), chain2(), {"0": "0", "1": "0"})
        self.assertFalse(is_preorder_coequalizer(inst.g, inst.h, f, [point(), chain2()]))
        self.assertFalse(is_lax_slice_coequalizer(inst, f, c, [point(), chain2()]))

    def test_missing_right_kan(self):
        z, x = wedge(), discrete(["0", "1"])
        inst = LaxCoeqInstance(
            z=z,
            w=point(),
            a=MonotoneMap(point(), z, {"*": "2"}),
            x=x,
            b=MonotoneMap(x, z, {"0": "0", "1": "1"}),
            g=MonotoneMap(point(), x, {"*": "0"}),
            h=MonotoneMap(point(), x, {"*": "1"}),
        ).validate()
        result = lax_slice_coequalizer(inst)
        self.assertFalse(result.found)
        self.assertIsNone(result.c)
        ran, kan = ran_monotone(result.f, inst.b)
        self.assertIsNone(ran)
        self.assertFalse(kan.found)
        self.assertTrue(all(ok for _, ok in coequalizer_iff_checks(inst)))
        self.assertTrue(coequalizer_preservation_check(inst).preserved)

    def test_invalid_pair(self):
        inst = collapsing_instance(a=MonotoneMap(point(), chain2(), {"*": "0"}))
        self.assertViolation("component-endpoint-error", inst.validate)


class TestConical(laxcomma_tests.LaxCommaTestCase):
    def shapes(self):
        return [
            thin_category(point()),
            thin_category(discrete(["a", "b"])),
            thin_category(chain2()),
        ]

    def test_vee(self):
        report = conical_adjunction_check(thin_category(vee()), self.shapes())
        self.assertTrue(report.complete)
        self.assertFalse(report.cocomplete)
        self.assertFalse(report.adjunction)
        self.assertIsNotNone(report.failure)
        self.assertIsNone(report.counts_match)

    def test_wedge(self):
        report = conical_adjunction_check(thin_category(wedge()), self.shapes())
        self.assertFalse(report.complete)
        self.assertTrue(report.cocomplete)
        self.assertTrue(report.adjunction)
        self.assertTrue(report.counts_match)
        self.assertTrue(report.kan_agrees)

    def test_chain(self):
        report = conical_adjunction_check(two(), self.shapes())
        self.assertTrue(report.complete)
        self.assertTrue(report.cocomplete)
        self.assertTrue(report.adjunction)
        self.assertGreater(report.diagrams, 0)

    def test_universal_arrow(self):
        z = thin_category(wedge())
        apex, lam = universal_arrow(pair_diagram(wedge(), "0", "1"))
        self.assertEqual(apex, "2")
        self.assertEqual(set(lam.components), {"a", "b"})
        self.assertIsNone(universal_arrow(pair_diagram(vee(), "1", "2")))
        self.assertEqual(len(list(cocones(pair_diagram(vee(), "1", "2"), "0"))), 0)
        self.assertEqual(len(list(cocones(identity_functor(z), "2"))), 1)

    def test_universal_arrow_matches_colimit(self):
        for p in (vee(), wedge(), chain2()):
            for x in p.elements:
                for y in p.elements:
                    a = pair_diagram(p, x, y)
                    arrow = universal_arrow(a)
                    colimit = conical_colimit(a)
                    self.assertEqual(arrow is not None, colimit.found, (p.name, x, y))
                    if arrow is not None:
                        self.assertTrue(p.equivalent(arrow[0], colimit.apex))


if __name__ == "__main__":
    unittest.main()
