# Copyright © 2024 laxcomma contributors.

import os
import tempfile
import unittest

import laxcomma_tests
from laxcomma.catalog import d0_to_d1, two
from laxcomma.errors import ParseError, ValidationError
from laxcomma.fincat import MonotoneMap
from laxcomma.parser import (
    Command,
    format_category,
    format_functor,
    format_spec_file,
    load_spec_file,
    parse_spec_file,
)
from laxcomma.thin2 import PoCategory, PoFunctor

ENDPOINTS = """
# the arrow category
category two {
  objects: 0 1
  morphisms: id0: 0 -> 0, id1: 1 -> 1, u: 0 -> 1
  identities: 0=id0 1=id1
}

category one { objects: * }

functor d0 : one -> two { objects: *->0 }
functor d1 : one -> two { objects: *->1 }
nat step : d0 => d1 { *: u }

command c1 { op: comma; args: d0 d1 }
"""


class TestParser(laxcomma_tests.LaxCommaTestCase):
    def test_endpoints(self):
        spec = parse_spec_file(ENDPOINTS)
        self.assertEqual(spec.category("two"), two())
        one = spec.category("one")
        self.assertEqual(one.morphisms, {"id_*": ("*", "*")})
        self.assertEqual(spec.functor("d0").obj_map, {"*": "0"})
        self.assertEqual(spec.functor("d1").mor_map, {"id_*": "id1"})
        self.assertEqual(spec.nat("step").components, d0_to_d1().components)
        self.assertEqual(spec.commands, [Command("c1", "comma", ("d0", "d1"))])
        self.assertEqual(set(spec.of_kind("functor")), {"d0", "d1"})

    def test_explicit_compose(self):
        text = """
        category c {
          objects: a b c
          morphisms: f: a -> b, g: b -> c,
                     h: a -> c
          compose: g.f=h
        }
        """
        c = parse_spec_file(text).category("c")
        self.assertEqual(c.compose("g", "f"), "h")
        self.assertEqual(c.compose("id_c", "h"), "h")

    def test_missing_composite(self):
        text = "category c {\n  objects: a b c\n  morphisms: f: a -> b, g: b -> c\n}\n"
        with self.assertRaises(ValidationError) as cm:
            parse_spec_file(text)
        self.assertEqual(cm.exception.line, 1)
        self.assertIn("missing-composite", [v.kind for v in cm.exception.violations])

    def test_preorders(self):
        text = """
        preorder p { elements: a b c; le: a<=b b<=c a<=c }
        category tp { thin: p }
        functor m : p -> p { objects: a->a b->c c->c }
        """
        spec = parse_spec_file(text)
        p = spec.preorder("p")
        self.assertTrue(p.leq("b", "b"))
        self.assertEqual(spec.category("tp").hom("a", "c"), (("a", "c"),))
        m = spec.monotone("m")
        self.assertIsInstance(m, MonotoneMap)
        self.assertTrue(m.is_monotone())
        self.assertEqual(m("b"), "c")

    def test_transitivity_is_not_implicit(self):
        text = "preorder p { elements: a b c; le: a<=b b<=c }"
        with self.assertRaises(ValidationError) as cm:
            parse_spec_file(text)
        self.assertIn("transitivity-violation", [v.kind for v in cm.exception.violations])

    def test_pocategories(self):
        text = """
        category par {
          objects: a b
          morphisms: f: a -> b, g: a -> b
        }
        pocategory K { base: par; order: f<=g }
        preorder one { elements: * }
        preorder two { elements: 0 1; le: 0<=1 }
        pocategory P { pos: one two }
        functor T : K -> K { objects: a->a b->b; morphisms: f->f g->g }
        monad M : T { eta: a=id_a b=id_b; mu: a=id_a b=id_b }
        """
        spec = parse_spec_file(text)
        k = spec.category("K")
        self.assertIsInstance(k, PoCategory)
        self.assertTrue(k.leq("f", "g"))
        self.assertFalse(k.leq("g", "f"))
        self.assertEqual(len(spec.category("P").hom("two", "two")), 3)
        self.assertIsInstance(spec.functor("T"), PoFunctor)
        self.assertEqual(spec.block("monad", "M").value.mu, {"a": "id_a", "b": "id_b"})

    def test_pocategory_needs_base(self):
        with self.assertRaises(ParseError):
            parse_spec_file("pocategory K { order: f<=g }")

    def test_ambiguous_functor(self):
        text = """
        category par { objects: a b; morphisms: f: a -> b, g: a -> b }
        category arrow { objects: 0 1; morphisms: u: 0 -> 1 }
        functor F : arrow -> par { objects: 0->a 1->b }
        """
        with self.assertRaises(ParseError) as cm:
            parse_spec_file(text)
        self.assertEqual(cm.exception.line, 4)

    def test_errors(self):
        cases = [
            ("widget w { }", 1),
            ("category c { objects: a", 1),
            ("category c { colour: red }", 1),
            ("category c { objects: a }\n\nfunctor F : c -> d { objects: a->a }", 3),
            ("category c { objects: a }\ncategory c { objects: b }", 2),
            ("category c { objects: a } trailing", 1),
            ("functor F { objects: a->a }", 1),
            ("command c1 { args: x }", 1),
            ("just text", 1),
        ]
        for text, line in cases:
            with self.assertRaises(ParseError, msg=text) as cm:
                parse_spec_file(text)
            self.assertEqual(cm.exception.line, line, text)
            self.assertTrue(str(cm.exception).startswith(f"line {line}: "))

    def test_blocks_refer_upwards(self):
        text = """
        functor d0 : one -> two { objects: *->0 }
        category one { objects: * }
        category two { objects: 0 1; morphisms: u: 0 -> 1 }
        """
        with self.assertRaises(ParseError):
            parse_spec_file(text)

    def test_format_round_trip(self):
        spec = parse_spec_file(ENDPOINTS)
        self.assertEqual(parse_spec_file(format_spec_file(spec)), spec)

    def test_format_category(self):
        text = format_category(two())
        self.assertTrue(text.startswith("category 2 {"))
        self.assertEqual(parse_spec_file(text).category("2"), two())
        spec = parse_spec_file(ENDPOINTS)
        text = format_functor(spec.functor("d0"), name="d0")
        self.assertIn("*->0", text)

    def test_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "endpoints.fincat")
            with open(path, "w", encoding="utf-8") as fid:
                fid.write(ENDPOINTS)
            spec = load_spec_file(path)
        self.assertIn(("functor", "d1"), spec)
        self.assertIsNone(spec.block("functor", "d2"))


if __name__ == "__main__":
    unittest.main()
