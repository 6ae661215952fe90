# Copyright © 2024 laxcomma contributors.

import unittest

import laxcomma_tests
from laxcomma.catalog import chain2, d0, d1, one, parallel, point, two
from laxcomma.errors import ValidationError
from laxcomma.fincat import (
    FinFunctor,
    MonotoneMap,
    NatTrans,
    identity_functor,
    identity_map,
    identity_nat,
)
from laxcomma.lax_slice import (
    LaxSliceMorphism,
    LaxSliceTwoCell,
    SliceObject,
    coalg_morphism_coassociative,
    coassociative,
    from_coalgebra,
    identity_morphism,
    lax_compose,
    slice_hom_category,
    slice_morphisms,
    strict_morphism,
    thin_lax_morphism,
    thin_slice_object,
    to_coalgebra,
    validate_coalg_2cell,
    validate_coalg_morphism,
    validate_coalgebra,
    validate_lax_2cell,
    validate_lax_morphism,
    validate_slice_object,
)


def endpoint(c, x, name=None):
    return FinFunctor(one(), c, {"*": x}, {"id*": c.id(x)}, name=name)


class TestLaxSlice(laxcomma_tests.LaxCommaTestCase):
    def setUp(self):
        super().setUp()
        self.bottom = SliceObject(one(), d0())
        self.top = SliceObject(one(), d1())
        self.arrow = SliceObject(two(), identity_functor(two()))

    def test_objects(self):
        validate_slice_object(self.arrow, base=two())
        self.assertViolation(
            "base-mismatch", validate_slice_object, self.bottom, base=one()
        )
        bad = SliceObject(two(), d0())
        self.assertViolation("endpoint-mismatch", validate_slice_object, bad)

    def test_hom_counts(self):
        self.assertEqual(len(slice_morphisms(self.top, self.bottom)), 1)
        self.assertEqual(len(slice_morphisms(self.top, self.bottom, mode="strict")), 0)
        self.assertEqual(len(slice_morphisms(self.bottom, self.top)), 0)
        self.assertEqual(len(slice_morphisms(self.arrow, self.arrow)), 2)
        self.assertEqual(len(slice_morphisms(self.arrow, self.arrow, mode="strict")), 1)
        with self.assertRaises(ValueError):
            slice_morphisms(self.arrow, self.arrow, mode="oplax")

    def test_lax_morphism(self):
        (m,) = slice_morphisms(self.top, self.bottom)
        validate_lax_morphism(m)
        self.assertFalse(m.is_strict())
        self.assertEqual(m.phi["*"], "u")
        self.assertTrue(identity_morphism(self.top).is_strict())

    def test_bad_morphism(self):
        f = identity_functor(one())
        m = LaxSliceMorphism(self.bottom, self.top, f, NatTrans(d1(), d0(), {"*": "u"}))
        self.assertViolation("component-endpoint-error", validate_lax_morphism, m)
        with self.assertRaises(ValidationError):
            strict_morphism(self.top, self.bottom, f)

    def test_compose(self):
        (m,) = slice_morphisms(self.top, self.bottom)
        self.assertEqual(lax_compose(identity_morphism(self.bottom), m), m)
        self.assertEqual(lax_compose(m, identity_morphism(self.top)), m)
        with self.assertRaises(ValidationError):
            lax_compose(m, m)

    def test_hom_category(self):
        hom = slice_hom_category(self.arrow, self.arrow)
        self.assertEqual(len(hom.objects), 2)
        self.assertEqual(len(hom.morphisms), 3)
        self.assertEqual(len(slice_hom_category(self.arrow, self.arrow, mode="strict").morphisms), 1)

    def test_2cells(self):
        ms = {m.f.obj("1"): m for m in slice_morphisms(self.arrow, self.arrow)}
        low, mid = ms["0"], ms["1"]
        gamma = NatTrans(low.f, mid.f, {"0": "id0", "1": "u"})
        cell = validate_lax_2cell(gamma, low, mid)
        self.assertEqual(cell.gamma, gamma)

    def test_compatibility_violation(self):
        a = endpoint(parallel(), "a")
        b = endpoint(parallel(), "b")
        src, tgt = SliceObject(one(), b), SliceObject(one(), a)
        m_f, m_g = sorted(slice_morphisms(src, tgt), key=lambda m: m.phi["*"])
        self.assertEqual((m_f.phi["*"], m_g.phi["*"]), ("f", "g"))
        gamma = identity_nat(identity_functor(one()))
        self.assertViolation("compatibility-violation", validate_lax_2cell, gamma, m_f, m_g)
        validate_lax_2cell(gamma, m_f, m_f)

    def test_thin(self):
        p = chain2()
        src = thin_slice_object(point(), MonotoneMap(point(), p, {"*": "1"}))
        tgt = thin_slice_object(point(), MonotoneMap(point(), p, {"*": "0"}))
        m = thin_lax_morphism(src, tgt, identity_map(point()))
        validate_lax_morphism(m)
        self.assertEqual(m.phi["*"], ("0", "1"))
        self.assertViolation(
            "component-endpoint-error", thin_lax_morphism, tgt, src, identity_map(point())
        )


class TestCoalgebras(laxcomma_tests.LaxCommaTestCase):
    def setUp(self):
        super().setUp()
        self.arrow = SliceObject(two(), identity_functor(two()))
        self.top = SliceObject(one(), d1())
        self.bottom = SliceObject(one(), d0())

    def test_objects(self):
        for o in (self.arrow, self.top):
            c = validate_coalgebra(to_coalgebra(o))
            self.assertTrue(coassociative(c))
            self.assertEqual(from_coalgebra(c), o)

    def test_morphisms(self):
        for m in slice_morphisms(self.arrow, self.arrow) + slice_morphisms(self.top, self.bottom):
            c = validate_coalg_morphism(to_coalgebra(m))
            self.assertEqual(c.is_strict(), m.is_strict())
            self.assertTrue(coalg_morphism_coassociative(c))
            self.assertEqual(from_coalgebra(c), m)

    def test_2cells(self):
        ms = {m.f.obj("1"): m for m in slice_morphisms(self.arrow, self.arrow)}
        gamma = NatTrans(ms["0"].f, ms["1"].f, {"0": "id0", "1": "u"})
        cell = LaxSliceTwoCell(ms["0"], ms["1"], gamma)
        c = to_coalgebra(cell)
        validate_coalg_2cell(c.gamma, c.src, c.tgt)
        self.assertEqual(from_coalgebra(c), cell)

    def test_type_error(self):
        with self.assertRaises(TypeError):
            to_coalgebra("w")
        with self.assertRaises(TypeError):
            from_coalgebra(3)


if __name__ == "__main__":
    unittest.main()
