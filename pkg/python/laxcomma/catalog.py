# Copyright © 2024 laxcomma contributors.

"""Small named categories, preorders and functors used throughout.

The arrow category ``𝟚`` has objects ``0`` and ``1`` and the single
non-identity ``u: 0 -> 1``. ``d0`` picks the initial object ``0``, ``d1``
picks ``1`` and ``s0`` collapses ``𝟚`` onto the terminal category.
"""

from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    NatTrans,
    chain,
    product_category,
    thin_category,
)


def one() -> FinCategory:
    return FinCategory(["*"], {"id*": ("*", "*")}, {"*": "id*"}, {("id*", "id*"): "id*"}, name="1")


def two() -> FinCategory:
    return FinCategory(
        ["0", "1"],
        {"id0": ("0", "0"), "id1": ("1", "1"), "u": ("0", "1")},
        {"0": "id0", "1": "id1"},
        {
            ("id0", "id0"): "id0",
            ("id1", "id1"): "id1",
            ("u", "id0"): "u",
            ("id1", "u"): "u",
        },
        name="2",
    )


def empty() -> FinCategory:
    return FinCategory([], {}, {}, {}, name="0")


def parallel() -> FinCategory:
    """The parallel pair ``f, g: a -> b``."""
    morphisms = {"ida": ("a", "a"), "idb": ("b", "b"), "f": ("a", "b"), "g": ("a", "b")}
    composition = {("ida", "ida"): "ida", ("idb", "idb"): "idb"}
    for m in ("f", "g"):
        composition[(m, "ida")] = m
        composition[("idb", m)] = m
    return FinCategory(
        ["a", "b"], morphisms, {"a": "ida", "b": "idb"}, composition, name="||"
    )


def square() -> FinCategory:
    """The commutative square ``𝟚 × 𝟚``."""
    c = product_category(two(), two())
    return FinCategory(c.objects, c.morphisms, c.identity, c.composition, name="2x2")


def _monoid(name, unit, table) -> FinCategory:
    elements = sorted({unit} | {x for pair in table for x in pair})
    return FinCategory(
        ["*"],
        {m: ("*", "*") for m in elements},
        {"*": unit},
        table,
        name=name,
    )


def cyclic2() -> FinCategory:
    """The group of order two, ``t∘t = e``."""
    return _monoid(
        "Z/2",
        "e",
        {("e", "e"): "e", ("e", "t"): "t", ("t", "e"): "t", ("t", "t"): "e"},
    )


def idempotent_monoid() -> FinCategory:
    """The monoid ``{e, p}`` with ``p∘p = p``."""
    return _monoid(
        "{e,p}",
        "e",
        {("e", "e"): "e", ("e", "p"): "p", ("p", "e"): "p", ("p", "p"): "p"},
    )


def curated_categories():
    """The hand-picked finite categories of the corpus, smallest first."""
    return [one(), two(), parallel(), square(), cyclic2(), idempotent_monoid()]


def point() -> FinPreorder:
    return FinPreorder(["*"], [("*", "*")], name="1")


def chain2() -> FinPreorder:
    p = chain(2)
    return FinPreorder(p.elements, p.le, name="2")


def vee() -> FinPreorder:
    """The poset ``V = {0 <= 1, 0 <= 2}`` with two incomparable tops."""
    elements = ["0", "1", "2"]
    le = [(x, x) for x in elements] + [("0", "1"), ("0", "2")]
    return FinPreorder(elements, le, name="V")


def wedge() -> FinPreorder:
    """The opposite of ``V``: two incomparable bottoms below ``2``."""
    elements = ["0", "1", "2"]
    le = [(x, x) for x in elements] + [("0", "2"), ("1", "2")]
    return FinPreorder(elements, le, name="Λ")


def d0() -> FinFunctor:
    return FinFunctor(one(), two(), {"*": "0"}, {"id*": "id0"}, name="d0")


def d1() -> FinFunctor:
    return FinFunctor(one(), two(), {"*": "1"}, {"id*": "id1"}, name="d1")


def s0() -> FinFunctor:
    return FinFunctor(
        two(),
        one(),
        {"0": "*", "1": "*"},
        {"id0": "id*", "id1": "id*", "u": "id*"},
        name="s0",
    )


def d0_to_d1() -> NatTrans:
    """The transformation ``d0 => d1`` with component ``u``."""
    return NatTrans(d0(), d1(), {"*": "u"})


def thin(p: FinPreorder) -> FinCategory:
    return thin_category(p)
