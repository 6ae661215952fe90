# Copyright © 2024 laxcomma contributors.

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import (
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.errors import ValidationError, Violation
from laxcomma.utils import format_id


class FinCategory:
    """A finite category given by an explicit composition table.

    Objects and morphisms are arbitrary hashable identifiers. The table maps
    every composable pair ``(g, f)``, with ``tgt(f) == src(g)``, to the
    composite ``g∘f``. Nothing is checked here, use :func:`validate_category`
    for data that does not come from one of the constructions.

    .. code-block:: python

        from laxcomma.fincat import FinCategory

        two = FinCategory(
            objects=["0", "1"],
            morphisms={"id0": ("0", "0"), "id1": ("1", "1"), "u": ("0", "1")},
            identity={"0": "id0", "1": "id1"},
            composition={
                ("id0", "id0"): "id0",
                ("id1", "id1"): "id1",
                ("u", "id0"): "u",
                ("id1", "u"): "u",
            },
        )
        print(two.hom("0", "1"))
        # ('u',)

    Args:
        objects (Iterable): The object identifiers.
        morphisms (Mapping): Morphism identifier to ``(source, target)``.
        identity (Mapping): Object to its identity morphism.
        composition (Mapping): ``(g, f)`` to ``g∘f``.
        name (str, optional): A display name, ignored by equality.
    """

    def __init__(
        self,
        objects: Iterable[Hashable],
        morphisms: Mapping[Hashable, Tuple[Hashable, Hashable]],
        identity: Mapping[Hashable, Hashable],
        composition: Mapping[Tuple[Hashable, Hashable], Hashable],
        name: Optional[str] = None,
    ):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identity = dict(identity)
        self.composition = dict(composition)
        self.name = name
        self._homs = None
        self._key = None

    def _extra_repr(self):
        name = f"{self.name}, " if self.name else ""
        return f"{name}objects={len(self.objects)}, morphisms={len(self.morphisms)}"

    def __repr__(self):
        return f"FinCategory({self._extra_repr()})"

    @property
    def key(self):
        if self._key is None:
            self._key = (
                frozenset(self.objects),
                frozenset(self.morphisms.items()),
                frozenset(self.identity.items()),
                frozenset(self.composition.items()),
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def id(self, x):
        return self.identity[x]

    def compose(self, *fs):
        """Compose right to left: ``compose(h, g, f)`` is ``h∘g∘f``."""
        if not fs:
            raise ValueError("compose needs at least one morphism.")
        result = fs[-1]
        for g in reversed(fs[:-1]):
            try:
                result = self.composition[(g, result)]
            except KeyError:
                raise ValueError(
                    f"Morphisms {format_id(g)} and {format_id(result)} "
                    "are not composable."
                )
        return result

    def hom(self, x, y) -> Tuple[Hashable, ...]:
        if self._homs is None:
            homs = {}
            for f, (s, t) in self.morphisms.items():
                homs.setdefault((s, t), []).append(f)
            self._homs = {k: tuple(v) for k, v in homs.items()}
        return self._homs.get((x, y), ())

    def composable_pairs(self) -> Iterator[Tuple[Hashable, Hashable]]:
        for f in self.morphisms:
            for g in self.morphisms:
                if self.src(g) == self.tgt(f):
                    yield g, f

    def is_thin(self) -> bool:
        return all(
            len(self.hom(x, y)) <= 1 for x in self.objects for y in self.objects
        )

    def non_identities(self) -> List[Hashable]:
        ids = set(self.identity.values())
        return [f for f in self.morphisms if f not in ids]


def _raw_category(raw) -> FinCategory:
    if isinstance(raw, FinCategory):
        return raw
    return FinCategory(
        objects=raw["objects"],
        morphisms=raw["morphisms"],
        identity=raw.get("identities", raw.get("identity", {})),
        composition=raw.get("compose", raw.get("composition", {})),
        name=raw.get("name"),
    )


def category_violations(c: FinCategory) -> List[Violation]:
    """Scan every law of a finite category and return all the failures."""
    violations = []
    objects = set(c.objects)
    if len(objects) != len(c.objects):
        dup = [x for x in objects if c.objects.count(x) > 1]
        violations.append(Violation("duplicate-identifier", tuple(dup)))
    clash = objects & set(c.morphisms)
    if clash:
        violations.append(
            Violation(
                "duplicate-identifier",
                tuple(sorted(map(format_id, clash))),
                "used both as object and morphism",
            )
        )

    for f, (s, t) in c.morphisms.items():
        if s not in objects or t not in objects:
            violations.append(
                Violation("dangling-endpoint", (f,), f"endpoints {s} -> {t}")
            )
    if violations:
        return violations

    for (g, f), h in c.composition.items():
        if g not in c.morphisms or f not in c.morphisms or h not in c.morphisms:
            violations.append(
                Violation("dangling-endpoint", (g, f), f"unknown morphism in {h}")
            )
        elif c.src(g) != c.tgt(f):
            violations.append(
                Violation("dangling-endpoint", (g, f), "pair is not composable")
            )
        elif c.morphisms[h] != (c.src(f), c.tgt(g)):
            s, t = c.morphisms[h]
            violations.append(
                Violation(
                    "dangling-endpoint",
                    (g, f),
                    f"composite {format_id(h)}: {format_id(s)} -> {format_id(t)} "
                    f"should go {format_id(c.src(f))} -> {format_id(c.tgt(g))}",
                )
            )

    for g, f in c.composable_pairs():
        if (g, f) not in c.composition:
            violations.append(Violation("missing-composite", (g, f)))

    for x in c.objects:
        i = c.identity.get(x)
        if i is None or c.morphisms.get(i) != (x, x):
            violations.append(
                Violation("identity-violation", (x,), "missing or not an endomorphism")
            )
            continue
        for f in c.morphisms:
            if c.src(f) == x and c.composition.get((f, i)) != f:
                violations.append(
                    Violation("identity-violation", (x,), f"{format_id(f)}∘id != f")
                )
            if c.tgt(f) == x and c.composition.get((i, f)) != f:
                violations.append(
                    Violation("identity-violation", (x,), f"id∘{format_id(f)} != f")
                )

    table = c.composition
    for (g, f), gf in table.items():
        for h in c.morphisms:
            if (h, g) not in table or (h, gf) not in table:
                continue
            hg = table[(h, g)]
            if (hg, f) not in table:
                continue
            if table[(h, gf)] != table[(hg, f)]:
                violations.append(Violation("associativity-violation", (h, g, f)))
    return violations


def validate_category(raw) -> FinCategory:
    """Validate raw category data.

    Args:
        raw (FinCategory or dict): Either a :class:`FinCategory` or a mapping
            with keys ``objects``, ``morphisms``, ``identities`` and
            ``compose``.

    Returns:
        FinCategory: The validated category.

    Raises:
        ValidationError: Listing every violated law with its witness.
    """
    c = _raw_category(raw)
    violations = category_violations(c)
    if violations:
        raise ValidationError("category", violations)
    return c


class FinPreorder:
    """A finite set with a reflexive and transitive relation.

    Args:
        elements (Iterable): The element identifiers.
        le (Iterable): The pairs ``(x, y)`` with ``x <= y``.
    """

    def __init__(self, elements: Iterable[Hashable], le: Iterable[Tuple], name=None):
        self.elements = tuple(elements)
        self.le = frozenset(le)
        self.name = name

    def __repr__(self):
        pairs = " ".join(
            f"{format_id(x)}<={format_id(y)}"
            for x, y in sorted(self.le, key=format_id)
            if x != y
        )
        return f"FinPreorder({list(map(format_id, self.elements))}, {pairs})"

    def __eq__(self, other):
        if not isinstance(other, FinPreorder):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.le == other.le

    def __hash__(self):
        return hash((frozenset(self.elements), self.le))

    def __len__(self):
        return len(self.elements)

    def leq(self, x, y) -> bool:
        return (x, y) in self.le

    def equivalent(self, x, y) -> bool:
        return self.leq(x, y) and self.leq(y, x)

    def matrix(self) -> np.ndarray:
        """The relation as a boolean matrix indexed like :attr:`elements`."""
        index = {x: i for i, x in enumerate(self.elements)}
        m = np.zeros((len(self.elements),) * 2, dtype=bool)
        for x, y in self.le:
            m[index[x], index[y]] = True
        return m

    def is_antisymmetric(self) -> bool:
        m = self.matrix()
        return not (m & m.T & ~np.eye(len(self), dtype=bool)).any()

    def opposite(self) -> "FinPreorder":
        return FinPreorder(self.elements, ((y, x) for x, y in self.le))


def transitive_closure(m: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a square boolean matrix."""
    n = m.shape[0]
    closed = m | np.eye(n, dtype=bool)
    while True:
        step = closed | ((closed.astype(np.int64) @ closed.astype(np.int64)) > 0)
        if (step == closed).all():
            return closed
        closed = step


def preorder_from_matrix(elements: Sequence[Hashable], m: np.ndarray) -> FinPreorder:
    rows, cols = np.nonzero(m)
    return FinPreorder(elements, ((elements[i], elements[j]) for i, j in zip(rows, cols)))


def preorder_closure(elements: Iterable[Hashable], pairs: Iterable[Tuple]) -> FinPreorder:
    """The least preorder containing ``pairs``."""
    elements = tuple(elements)
    index = {x: i for i, x in enumerate(elements)}
    m = np.zeros((len(elements),) * 2, dtype=bool)
    for x, y in pairs:
        m[index[x], index[y]] = True
    return preorder_from_matrix(elements, transitive_closure(m))


def chain(n: int) -> FinPreorder:
    """The chain ``0 <= 1 <= ... <= n-1`` with string elements."""
    elements = [str(i) for i in range(n)]
    return FinPreorder(
        elements, ((x, y) for i, x in enumerate(elements) for y in elements[i:])
    )


def discrete(elements: Iterable[Hashable]) -> FinPreorder:
    elements = tuple(elements)
    return FinPreorder(elements, ((x, x) for x in elements))


def preorder_violations(p: FinPreorder) -> List[Violation]:
    violations = []
    elements = set(p.elements)
    for x, y in p.le:
        if x not in elements or y not in elements:
            violations.append(Violation("unknown-element", (x, y)))
    for x in p.elements:
        if not p.leq(x, x):
            violations.append(Violation("reflexivity-violation", (x,)))
    for x, y in p.le:
        for z in p.elements:
            if p.leq(y, z) and not p.leq(x, z):
                violations.append(
                    Violation(
                        "transitivity-violation",
                        (x, y, z),
                        f"{format_id(x)}<={format_id(z)} is missing",
                    )
                )
    return violations


def validate_preorder(p: FinPreorder) -> FinPreorder:
    violations = preorder_violations(p)
    if violations:
        raise ValidationError("preorder", violations)
    return p


@lru_cache(maxsize=None)
def thin_category(p: FinPreorder) -> FinCategory:
    """The category with one morphism ``(x, y)`` for every ``x <= y``."""
    morphisms = {(x, y): (x, y) for x, y in p.le}
    composition = {}
    for x, y in p.le:
        for z in p.elements:
            if p.leq(y, z):
                composition[((y, z), (x, y))] = (x, z)
    return FinCategory(
        p.elements,
        {f: morphisms[f] for f in sorted(morphisms, key=format_id)},
        {x: (x, x) for x in p.elements},
        composition,
        name=p.name,
    )


class FinFunctor:
    """A functor between finite categories.

    Args:
        dom (FinCategory): The domain.
        cod (FinCategory): The codomain.
        obj_map (Mapping): Object assignment.
        mor_map (Mapping): Morphism assignment.
    """

    def __init__(
        self,
        dom: FinCategory,
        cod: FinCategory,
        obj_map: Mapping,
        mor_map: Mapping,
        name: Optional[str] = None,
    ):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self.name = name
        self._key = None

    def __repr__(self):
        name = self.name or "FinFunctor"
        objs = ", ".join(
            f"{format_id(x)}->{format_id(self.obj_map.get(x))}" for x in self.dom.objects
        )
        return f"{name}({objs})"

    @property
    def key(self):
        if self._key is None:
            self._key = (
                self.dom,
                self.cod,
                frozenset(self.obj_map.items()),
                frozenset(self.mor_map.items()),
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def obj(self, x):
        return self.obj_map[x]

    def mor(self, f):
        return self.mor_map[f]


def functor_violations(F: FinFunctor) -> List[Violation]:
    violations = []
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        if F.obj_map.get(x) not in cod.identity:
            violations.append(Violation("endpoint-mismatch", (x,), "object unmapped"))
    if violations:
        return violations
    for f, (s, t) in dom.morphisms.items():
        g = F.mor_map.get(f)
        if g not in cod.morphisms:
            violations.append(Violation("endpoint-mismatch", (f,), "morphism unmapped"))
        elif cod.morphisms[g] != (F.obj(s), F.obj(t)):
            violations.append(
                Violation(
                    "endpoint-mismatch",
                    (f,),
                    f"image {format_id(g)} does not go "
                    f"{format_id(F.obj(s))} -> {format_id(F.obj(t))}",
                )
            )
    if violations:
        return violations
    for x in dom.objects:
        if F.mor(dom.id(x)) != cod.id(F.obj(x)):
            violations.append(Violation("identity-not-preserved", (x,)))
    for (g, f), gf in dom.composition.items():
        if F.mor(gf) != cod.compose(F.mor(g), F.mor(f)):
            violations.append(Violation("composition-not-preserved", (g, f)))
    return violations


def validate_functor(F: FinFunctor) -> FinFunctor:
    """Check the functor laws against both composition tables.

    Raises:
        ValidationError: With ``endpoint-mismatch``,
            ``identity-not-preserved`` or ``composition-not-preserved``
            violations.
    """
    violations = functor_violations(F)
    if violations:
        raise ValidationError("functor", violations)
    return F


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(
        c, c, {x: x for x in c.objects}, {f: f for f in c.morphisms}, name="id"
    )


def constant_functor(dom: FinCategory, cod: FinCategory, x) -> FinFunctor:
    i = cod.id(x)
    return FinFunctor(
        dom, cod, {o: x for o in dom.objects}, {f: i for f in dom.morphisms}
    )


def compose_functors(*fs: FinFunctor) -> FinFunctor:
    """Compose right to left: ``compose_functors(G, F)`` is ``G∘F``."""
    result = fs[-1]
    for g in reversed(fs[:-1]):
        if g.dom != result.cod:
            raise ValueError(
                f"Cannot compose {g!r} after {result!r}: codomain mismatch."
            )
        result = FinFunctor(
            result.dom,
            g.cod,
            {x: g.obj(y) for x, y in result.obj_map.items()},
            {f: g.mor(h) for f, h in result.mor_map.items()},
        )
    return result


def is_isomorphism(F: FinFunctor) -> bool:
    objs = set(F.obj_map.values())
    mors = set(F.mor_map.values())
    return (
        len(objs) == len(F.dom.objects) == len(F.cod.objects)
        and len(mors) == len(F.dom.morphisms) == len(F.cod.morphisms)
    )


def inverse_functor(F: FinFunctor) -> FinFunctor:
    if not is_isomorphism(F):
        raise ValueError(f"{F!r} is not an isomorphism of categories.")
    return FinFunctor(
        F.cod,
        F.dom,
        {y: x for x, y in F.obj_map.items()},
        {g: f for f, g in F.mor_map.items()},
    )


class NatTrans:
    """A natural transformation ``src => tgt`` given by its components."""

    def __init__(self, src: FinFunctor, tgt: FinFunctor, components: Mapping):
        self.src = src
        self.tgt = tgt
        self.components = dict(components)
        self._key = None

    def __repr__(self):
        comps = ", ".join(
            f"{format_id(x)}: {format_id(self.components.get(x))}"
            for x in self.src.dom.objects
        )
        return f"NatTrans({comps})"

    @property
    def key(self):
        if self._key is None:
            self._key = (self.src, self.tgt, frozenset(self.components.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, NatTrans):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __getitem__(self, x):
        return self.components[x]

    @property
    def dom(self) -> FinCategory:
        return self.src.dom

    @property
    def cod(self) -> FinCategory:
        return self.src.cod

    def is_identity(self) -> bool:
        return self.src == self.tgt and all(
            self.components[x] == self.cod.id(self.src.obj(x)) for x in self.dom.objects
        )


def nat_violations(t: NatTrans) -> List[Violation]:
    violations = []
    src, tgt = t.src, t.tgt
    if src.dom != tgt.dom or src.cod != tgt.cod:
        return [Violation("non-parallel", (), "source and target functors differ in type")]
    cod = src.cod
    for x in src.dom.objects:
        c = t.components.get(x)
        if c not in cod.morphisms or cod.morphisms[c] != (src.obj(x), tgt.obj(x)):
            violations.append(Violation("component-endpoint-error", (x,)))
    if violations:
        return violations
    for f, (x, y) in src.dom.morphisms.items():
        if cod.compose(tgt.mor(f), t[x]) != cod.compose(t[y], src.mor(f)):
            violations.append(Violation("naturality-violation", (f,)))
    return violations


def validate_nat(t: NatTrans) -> NatTrans:
    violations = nat_violations(t)
    if violations:
        raise ValidationError("natural transformation", violations)
    return t


def identity_nat(F: FinFunctor) -> NatTrans:
    return NatTrans(F, F, {x: F.cod.id(F.obj(x)) for x in F.dom.objects})


def nat_vcomp(s: NatTrans, t: NatTrans) -> NatTrans:
    """Vertical composite ``s·t`` of ``t: F => G`` followed by ``s: G => H``."""
    if t.tgt != s.src:
        raise ValueError("non-composable: the target of t is not the source of s.")
    cod = s.cod
    return NatTrans(
        t.src, s.tgt, {x: cod.compose(s[x], t[x]) for x in t.dom.objects}
    )


def nat_whisker(
    f: Optional[FinFunctor], t: NatTrans, g: Optional[FinFunctor] = None
) -> NatTrans:
    """Whisker ``t`` by ``f`` on the right and ``g`` on the left.

    The result is ``g t f`` with component ``g(t_{f(x)})`` at ``x``. Either
    functor may be ``None`` for the identity.
    """
    if f is not None and f.cod != t.dom:
        raise ValueError("non-composable: f does not land in the domain of t.")
    if g is not None and g.dom != t.cod:
        raise ValueError("non-composable: g does not start at the codomain of t.")
    src, tgt = t.src, t.tgt
    if f is not None:
        src, tgt = compose_functors(src, f), compose_functors(tgt, f)
    if g is not None:
        src, tgt = compose_functors(g, src), compose_functors(g, tgt)
    components = {}
    for x in src.dom.objects:
        c = t[f.obj(x) if f is not None else x]
        components[x] = g.mor(c) if g is not None else c
    return NatTrans(src, tgt, components)


def nat_hcomp(s: NatTrans, t: NatTrans) -> NatTrans:
    """Horizontal composite ``s∗t`` of ``t: F => G`` and ``s: H => K``."""
    if t.cod != s.dom:
        raise ValueError("non-composable: t does not land in the domain of s.")
    H = s.src
    cod = s.cod
    return NatTrans(
        compose_functors(s.src, t.src),
        compose_functors(s.tgt, t.tgt),
        {x: cod.compose(s[t.tgt.obj(x)], H.mor(t[x])) for x in t.dom.objects},
    )


def hom_set(c: FinCategory, x, y) -> frozenset:
    """The morphisms ``x -> y`` of ``c``."""
    for o in (x, y):
        if o not in c.identity:
            raise ValueError(f"unknown-object: {format_id(o)}")
    return frozenset(c.hom(x, y))


def isomorphic_objects(c: FinCategory, x, y) -> bool:
    for f in c.hom(x, y):
        for g in c.hom(y, x):
            if c.compose(g, f) == c.id(x) and c.compose(f, g) == c.id(y):
                return True
    return False


def inverse_morphism(c: FinCategory, f):
    x, y = c.morphisms[f]
    for g in c.hom(y, x):
        if c.compose(g, f) == c.id(x) and c.compose(f, g) == c.id(y):
            return g
    return None


@dataclass(frozen=True)
class FunctorProperties:
    fully_faithful: bool
    essentially_surjective: bool
    isomorphism: bool


def functor_properties(F: FinFunctor) -> FunctorProperties:
    """Decide full faithfulness, essential surjectivity and invertibility."""
    dom, cod = F.dom, F.cod
    fully_faithful = True
    for x in dom.objects:
        for y in dom.objects:
            image = [F.mor(f) for f in dom.hom(x, y)]
            target = cod.hom(F.obj(x), F.obj(y))
            if len(set(image)) != len(image) or set(image) != set(target):
                fully_faithful = False
                break
        if not fully_faithful:
            break
    images = set(F.obj_map.values())
    essentially_surjective = all(
        any(isomorphic_objects(cod, z, y) for z in images) for y in cod.objects
    )
    return FunctorProperties(fully_faithful, essentially_surjective, is_isomorphism(F))


@lru_cache(maxsize=None)
def product_category(a: FinCategory, b: FinCategory) -> FinCategory:
    """The product ``a × b`` with pair identifiers ``(x, y)`` and ``(f, g)``."""
    objects = [(x, y) for x in a.objects for y in b.objects]
    morphisms = {
        (f, g): ((a.src(f), b.src(g)), (a.tgt(f), b.tgt(g)))
        for f in a.morphisms
        for g in b.morphisms
    }
    identity = {(x, y): (a.id(x), b.id(y)) for x, y in objects}
    composition = {
        ((g1, g2), (f1, f2)): (gf1, gf2)
        for (g1, f1), gf1 in a.composition.items()
        for (g2, f2), gf2 in b.composition.items()
    }
    name = f"{a.name}×{b.name}" if a.name and b.name else None
    return FinCategory(objects, morphisms, identity, composition, name=name)


def projections(a: FinCategory, b: FinCategory) -> Tuple[FinFunctor, FinFunctor]:
    p = product_category(a, b)
    p0 = FinFunctor(p, a, {o: o[0] for o in p.objects}, {f: f[0] for f in p.morphisms})
    p1 = FinFunctor(p, b, {o: o[1] for o in p.objects}, {f: f[1] for f in p.morphisms})
    return p0, p1


def pairing(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """The functor ``⟨F, G⟩`` into ``cod(F) × cod(G)``."""
    if F.dom != G.dom:
        raise ValueError("Pairing needs functors with a common domain.")
    p = product_category(F.cod, G.cod)
    return FinFunctor(
        F.dom,
        p,
        {x: (F.obj(x), G.obj(x)) for x in F.dom.objects},
        {f: (F.mor(f), G.mor(f)) for f in F.dom.morphisms},
    )


def product_functor(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """The functor ``F × G`` between product categories."""
    dom = product_category(F.dom, G.dom)
    cod = product_category(F.cod, G.cod)
    return FinFunctor(
        dom,
        cod,
        {(x, y): (F.obj(x), G.obj(y)) for x, y in dom.objects},
        {(f, g): (F.mor(f), G.mor(g)) for f, g in dom.morphisms},
    )


def product_nat(s: NatTrans, t: NatTrans) -> NatTrans:
    """The transformation ``s × t: F × G => F' × G'``."""
    return NatTrans(
        product_functor(s.src, t.src),
        product_functor(s.tgt, t.tgt),
        {(x, y): (s[x], t[y]) for x in s.dom.objects for y in t.dom.objects},
    )


def pairing_nat(s: NatTrans, t: NatTrans) -> NatTrans:
    """The transformation ``⟨s, t⟩: ⟨F, G⟩ => ⟨F', G'⟩``."""
    return NatTrans(
        pairing(s.src, t.src),
        pairing(s.tgt, t.tgt),
        {x: (s[x], t[x]) for x in s.dom.objects},
    )


@lru_cache(maxsize=None)
def opposite_category(a: FinCategory) -> FinCategory:
    name = f"{a.name}^op" if a.name else None
    if a.name and a.name.endswith("^op"):
        name = a.name[: -len("^op")]
    return FinCategory(
        a.objects,
        {f: (t, s) for f, (s, t) in a.morphisms.items()},
        a.identity,
        {(f, g): h for (g, f), h in a.composition.items()},
        name=name,
    )


def opposite_functor(F: FinFunctor) -> FinFunctor:
    return FinFunctor(
        opposite_category(F.dom), opposite_category(F.cod), F.obj_map, F.mor_map
    )


def opposite_nat(t: NatTrans) -> NatTrans:
    """``t: F => G`` becomes ``t^op: G^op => F^op`` with the same components."""
    return NatTrans(opposite_functor(t.tgt), opposite_functor(t.src), t.components)


def functors(
    a: FinCategory,
    b: FinCategory,
    budget: SearchBudget = None,
    obj_map: Mapping = None,
) -> Iterator[FinFunctor]:
    """Enumerate every functor ``a -> b``.

    Object assignments are enumerated first; morphisms are then filled in by
    backtracking and every composite is checked as soon as its three
    morphisms have images.

    Args:
        a (FinCategory): The domain.
        b (FinCategory): The codomain.
        budget (SearchBudget, optional): The node counter to charge.
        obj_map (Mapping, optional): Restrict to functors with this object
            assignment.
    """
    budget = ensure_budget(budget)
    moving = a.non_identities()
    order = {f: i for i, f in enumerate(moving)}

    def rank(f):
        return order.get(f, -1)

    checks = [[] for _ in moving]
    for (g, f), gf in a.composition.items():
        last = max(rank(g), rank(f), rank(gf))
        if last >= 0:
            checks[last].append((g, f, gf))

    if obj_map is not None:
        assignments = [dict(obj_map)]
    else:
        assignments = (
            dict(zip(a.objects, images))
            for images in itertools.product(b.objects, repeat=len(a.objects))
        )

    for objs in assignments:
        budget.tick(what="functor enumeration")
        mors = {a.id(x): b.id(objs[x]) for x in a.objects}
        if any(
            mors[gf] != b.compose(mors[g], mors[f])
            for (g, f), gf in a.composition.items()
            if rank(g) < 0 and rank(f) < 0 and rank(gf) < 0
        ):
            continue

        def extend(i):
            if i == len(moving):
                yield FinFunctor(a, b, objs, mors)
                return
            f = moving[i]
            s, t = a.morphisms[f]
            for candidate in b.hom(objs[s], objs[t]):
                budget.tick(what="functor enumeration")
                mors[f] = candidate
                if all(
                    mors[gf] == b.compose(mors[g], mors[h]) for g, h, gf in checks[i]
                ):
                    yield from extend(i + 1)
            mors.pop(f, None)

        yield from extend(0)


def nat_transformations(
    F: FinFunctor, G: FinFunctor, budget: SearchBudget = None
) -> Iterator[NatTrans]:
    """Enumerate every natural transformation ``F => G``."""
    budget = ensure_budget(budget)
    if F.dom != G.dom or F.cod != G.cod:
        raise ValueError("non-parallel functors.")
    dom, cod = F.dom, F.cod
    objects = list(dom.objects)
    position = {x: i for i, x in enumerate(objects)}
    checks = [[] for _ in objects]
    for f, (x, y) in dom.morphisms.items():
        checks[max(position[x], position[y])].append((f, x, y))
    components = {}

    def extend(i):
        if i == len(objects):
            yield NatTrans(F, G, components)
            return
        x = objects[i]
        for c in cod.hom(F.obj(x), G.obj(x)):
            budget.tick(what="natural transformation enumeration")
            components[x] = c
            if all(
                cod.compose(G.mor(f), components[s])
                == cod.compose(components[t], F.mor(f))
                for f, s, t in checks[i]
            ):
                yield from extend(i + 1)
        components.pop(x, None)

    yield from extend(0)


def find_isomorphism(
    a: FinCategory, b: FinCategory, budget: SearchBudget = None
) -> Optional[FinFunctor]:
    """Search for an isomorphism of categories ``a -> b``."""
    if len(a.objects) != len(b.objects) or len(a.morphisms) != len(b.morphisms):
        return None
    budget = ensure_budget(budget)
    for perm in itertools.permutations(b.objects):
        objs = dict(zip(a.objects, perm))
        if any(
            len(a.hom(x, y)) != len(b.hom(objs[x], objs[y]))
            for x in a.objects
            for y in a.objects
        ):
            budget.tick(what="isomorphism search")
            continue
        for F in functors(a, b, budget=budget, obj_map=objs):
            if is_isomorphism(F):
                return F
    return None


@dataclass
class FunctorAdjunction:
    left: FinFunctor
    right: FinFunctor
    unit: NatTrans
    counit: NatTrans


def find_adjunction(
    F: FinFunctor, G: FinFunctor, budget: SearchBudget = None
) -> Optional[FunctorAdjunction]:
    """Search for a unit and counit exhibiting ``F ⊣ G``.

    Returns the first pair satisfying both triangle identities, or ``None``.
    """
    if F.cod != G.dom or G.cod != F.dom:
        raise ValueError("endpoint-mismatch: F and G are not opposite functors.")
    budget = ensure_budget(budget)
    GF, FG = compose_functors(G, F), compose_functors(F, G)
    counits = list(nat_transformations(FG, identity_functor(F.cod), budget=budget))
    for eta in nat_transformations(identity_functor(F.dom), GF, budget=budget):
        for eps in counits:
            budget.tick(what="adjunction search")
            left = nat_vcomp(nat_whisker(F, eps), nat_whisker(None, eta, F))
            right = nat_vcomp(nat_whisker(None, eps, G), nat_whisker(G, eta))
            if left.is_identity() and right.is_identity():
                return FunctorAdjunction(F, G, eta, eps)
    return None


class MonotoneMap:
    """A monotone map between finite preorders."""

    def __init__(self, dom: FinPreorder, cod: FinPreorder, mapping: Mapping):
        self.dom = dom
        self.cod = cod
        self.mapping = dict(mapping)

    def __repr__(self):
        pairs = ", ".join(
            f"{format_id(x)}->{format_id(self.mapping.get(x))}" for x in self.dom.elements
        )
        return f"MonotoneMap({pairs})"

    def __eq__(self, other):
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return (self.dom, self.cod, self.mapping) == (other.dom, other.cod, other.mapping)

    def __hash__(self):
        return hash((self.dom, self.cod, frozenset(self.mapping.items())))

    def __call__(self, x):
        return self.mapping[x]

    def is_monotone(self) -> bool:
        return all(self.cod.leq(self(x), self(y)) for x, y in self.dom.le)

    def then(self, other: "MonotoneMap") -> "MonotoneMap":
        if other.dom != self.cod:
            raise ValueError("endpoint-mismatch: cannot compose monotone maps.")
        return MonotoneMap(self.dom, other.cod, {x: other(self(x)) for x in self.dom.elements})

    def as_functor(self) -> FinFunctor:
        dom, cod = thin_category(self.dom), thin_category(self.cod)
        return FinFunctor(
            dom,
            cod,
            {x: self(x) for x in self.dom.elements},
            {(x, y): (self(x), self(y)) for x, y in self.dom.le},
        )

    def leq(self, other: "MonotoneMap") -> bool:
        """Pointwise order, the 2-cells of the 2-category of preorders."""
        return all(self.cod.leq(self(x), other(x)) for x in self.dom.elements)


def identity_map(p: FinPreorder) -> MonotoneMap:
    return MonotoneMap(p, p, {x: x for x in p.elements})


def monotone_maps(
    p: FinPreorder, q: FinPreorder, budget: SearchBudget = None
) -> Iterator[MonotoneMap]:
    """Enumerate every monotone map ``p -> q`` by backtracking."""
    budget = ensure_budget(budget)
    elements = list(p.elements)
    mapping = {}

    def extend(i):
        if i == len(elements):
            yield MonotoneMap(p, q, mapping)
            return
        x = elements[i]
        for y in q.elements:
            budget.tick(what="monotone map enumeration")
            mapping[x] = y
            if all(
                q.leq(mapping[u], mapping[v])
                for u, v in p.le
                if (u == x or v == x) and u in mapping and v in mapping
            ):
                yield from extend(i + 1)
        mapping.pop(x, None)

    yield from extend(0)
