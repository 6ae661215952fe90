# Copyright © 2024 laxcomma contributors.

import itertools
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence

from laxcomma.catalog import one
from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.errors import ValidationError, Violation
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    MonotoneMap,
    NatTrans,
    compose_functors,
    constant_functor,
    functors,
    identity_functor,
    monotone_maps,
    nat_transformations,
    nat_whisker,
    preorder_closure,
    thin_category,
    validate_nat,
)
from laxcomma.utils import format_id, ordered


def _check_cospan(a: FinFunctor, b: FinFunctor, what: str):
    if a.cod != b.cod:
        raise ValidationError(
            what, [Violation("codomain-mismatch", (a.name or "a", b.name or "b"))]
        )


@dataclass
class CommaResult:
    """The comma category ``a↓b`` with its projections and the 2-cell λ.

    Objects are triples ``(ox, ow, β)`` with ``β: a(ox) -> b(ow)``; a morphism
    ``(ox, ow, β) -> (ox', ow', β')`` is ``(f, g, β, β')`` with
    ``b(g)∘β = β'∘a(f)``.
    """

    a: FinFunctor
    b: FinFunctor
    cat: FinCategory
    proj0: FinFunctor
    proj1: FinFunctor
    lam: NatTrans


def comma_category(a: FinFunctor, b: FinFunctor) -> CommaResult:
    """Build the comma category of ``a`` along ``b``.

    Args:
        a (FinFunctor): ``x -> y``.
        b (FinFunctor): ``w -> y``.

    Returns:
        CommaResult: ``a↓b`` with ``lam: a∘proj0 => b∘proj1``.
    """
    _check_cospan(a, b, "comma")
    x, w, y = a.dom, b.dom, a.cod
    objects = [
        (ox, ow, beta)
        for ox in x.objects
        for ow in w.objects
        for beta in y.hom(a.obj(ox), b.obj(ow))
    ]
    morphisms = {}
    for src in objects:
        for tgt in objects:
            for f in x.hom(src[0], tgt[0]):
                for g in w.hom(src[1], tgt[1]):
                    if y.compose(b.mor(g), src[2]) == y.compose(tgt[2], a.mor(f)):
                        morphisms[(f, g, src[2], tgt[2])] = (src, tgt)
    identity = {o: (x.id(o[0]), w.id(o[1]), o[2], o[2]) for o in objects}
    composition = {}
    for m1, (s1, t1) in morphisms.items():
        for m2, (s2, t2) in morphisms.items():
            if s2 == t1:
                composite = (x.compose(m2[0], m1[0]), w.compose(m2[1], m1[1]), s1[2], t2[2])
                composition[(m2, m1)] = composite
    name = f"{a.name}↓{b.name}" if a.name and b.name else None
    cat = FinCategory(objects, morphisms, identity, composition, name=name)

    proj0 = FinFunctor(cat, x, {o: o[0] for o in objects}, {m: m[0] for m in morphisms})
    proj1 = FinFunctor(cat, w, {o: o[1] for o in objects}, {m: m[1] for m in morphisms})
    lam = NatTrans(
        compose_functors(a, proj0), compose_functors(b, proj1), {o: o[2] for o in objects}
    )
    return CommaResult(a, b, cat, proj0, proj1, lam)


def _unique(candidates, what):
    candidates = list(candidates)
    if not candidates:
        raise ValueError(f"no-factorization: {what} has no factorization.")
    if len(candidates) > 1:
        raise ValueError(f"non-unique: {what} has {len(candidates)} factorizations.")
    return candidates[0]


def comma_factor(
    c: CommaResult,
    h0: FinFunctor,
    h1: FinFunctor,
    phi: NatTrans,
    budget: SearchBudget = None,
) -> FinFunctor:
    """The unique ``h`` with ``proj0∘h = h0``, ``proj1∘h = h1`` and
    ``lam∘h = phi``.

    Uniqueness is checked by scanning every functor into the comma category
    with the forced object assignment.

    Raises:
        ValueError: If ``phi`` is not a transformation ``a∘h0 => b∘h1``.
    """
    if phi.src != compose_functors(c.a, h0) or phi.tgt != compose_functors(c.b, h1):
        raise ValidationError(
            "comma cone", [Violation("endpoint-mismatch", (), "phi: a∘h0 => b∘h1")]
        )
    validate_nat(phi)
    t = h0.dom
    obj_map = {o: (h0.obj(o), h1.obj(o), phi[o]) for o in t.objects}

    def matches(h):
        return (
            compose_functors(c.proj0, h) == h0
            and compose_functors(c.proj1, h) == h1
            and nat_whisker(h, c.lam) == phi
        )

    candidates = functors(t, c.cat, budget=budget, obj_map=obj_map)
    return _unique(filter(matches, candidates), "comma cone")


def comma_factor_2cell(
    c: CommaResult,
    h: FinFunctor,
    h2: FinFunctor,
    xi0: NatTrans,
    xi1: NatTrans,
    budget: SearchBudget = None,
) -> NatTrans:
    """The 2-dimensional clause of the comma object.

    Given ``xi0: proj0∘h => proj0∘h2`` and ``xi1: proj1∘h => proj1∘h2``
    satisfying ``(lam h2)·(a xi0) = (b xi1)·(lam h)``, returns the unique
    ``xi: h => h2`` with ``proj0 xi = xi0`` and ``proj1 xi = xi1``.
    """
    y = c.a.cod
    for o in h.dom.objects:
        beta, beta2 = h.obj(o)[2], h2.obj(o)[2]
        if y.compose(c.b.mor(xi1[o]), beta) != y.compose(beta2, c.a.mor(xi0[o])):
            raise ValidationError(
                "comma 2-cell", [Violation("compatibility-violation", (o,))]
            )

    def matches(xi):
        return all(
            xi[o][0] == xi0[o] and xi[o][1] == xi1[o] for o in h.dom.objects
        )

    return _unique(
        filter(matches, nat_transformations(h, h2, budget=budget)), "comma 2-cell"
    )


@dataclass
class PullbackResult:
    """The strict pullback of ``a`` and ``b``: pairs agreeing in the codomain."""

    a: FinFunctor
    b: FinFunctor
    cat: FinCategory
    proj0: FinFunctor
    proj1: FinFunctor


def pullback_category(a: FinFunctor, b: FinFunctor) -> PullbackResult:
    _check_cospan(a, b, "pullback")
    x, w = a.dom, b.dom
    objects = [(ox, ow) for ox in x.objects for ow in w.objects if a.obj(ox) == b.obj(ow)]
    morphisms = {
        (f, g): ((x.src(f), w.src(g)), (x.tgt(f), w.tgt(g)))
        for f in x.morphisms
        for g in w.morphisms
        if a.mor(f) == b.mor(g)
    }
    identity = {(ox, ow): (x.id(ox), w.id(ow)) for ox, ow in objects}
    composition = {
        ((g1, g2), (f1, f2)): (x.compose(g1, f1), w.compose(g2, f2))
        for f1, f2 in morphisms
        for g1, g2 in morphisms
        if x.src(g1) == x.tgt(f1) and w.src(g2) == w.tgt(f2)
    }
    name = f"{a.name}×{b.name}" if a.name and b.name else None
    cat = FinCategory(objects, morphisms, identity, composition, name=name)
    proj0 = FinFunctor(cat, x, {o: o[0] for o in objects}, {m: m[0] for m in morphisms})
    proj1 = FinFunctor(cat, w, {o: o[1] for o in objects}, {m: m[1] for m in morphisms})
    return PullbackResult(a, b, cat, proj0, proj1)


def pullback_factor(
    p: PullbackResult, h0: FinFunctor, h1: FinFunctor, budget: SearchBudget = None
) -> FinFunctor:
    """The unique ``h`` with ``proj0∘h = h0`` and ``proj1∘h = h1``."""
    if compose_functors(p.a, h0) != compose_functors(p.b, h1):
        raise ValidationError(
            "pullback cone", [Violation("non-commuting", (), "a∘h0 != b∘h1")]
        )
    obj_map = {o: (h0.obj(o), h1.obj(o)) for o in h0.dom.objects}

    def matches(h):
        return compose_functors(p.proj0, h) == h0 and compose_functors(p.proj1, h) == h1

    candidates = functors(h0.dom, p.cat, budget=budget, obj_map=obj_map)
    return _unique(filter(matches, candidates), "pullback cone")


def pullback_factor_2cell(
    p: PullbackResult,
    h: FinFunctor,
    h2: FinFunctor,
    xi0: NatTrans,
    xi1: NatTrans,
    budget: SearchBudget = None,
) -> NatTrans:
    """The unique ``xi: h => h2`` over ``xi0`` and ``xi1`` with ``a xi0 = b xi1``."""
    for o in h.dom.objects:
        if p.a.mor(xi0[o]) != p.b.mor(xi1[o]):
            raise ValidationError(
                "pullback 2-cell", [Violation("compatibility-violation", (o,))]
            )

    def matches(xi):
        return all(xi[o] == (xi0[o], xi1[o]) for o in h.dom.objects)

    return _unique(
        filter(matches, nat_transformations(h, h2, budget=budget)), "pullback 2-cell"
    )


@dataclass
class CoeqResult:
    """A coequalizer ``e: x -> q`` of a parallel pair of monotone maps."""

    g: MonotoneMap
    h: MonotoneMap
    q: FinPreorder
    e: MonotoneMap


def _check_parallel(g: MonotoneMap, h: MonotoneMap):
    if g.dom != h.dom or g.cod != h.cod:
        raise ValidationError(
            "coequalizer", [Violation("endpoint-mismatch", (), "g and h are not parallel")]
        )


def preorder_coequalizer(g: MonotoneMap, h: MonotoneMap) -> CoeqResult:
    """Coequalize two monotone maps ``w -> x``.

    The quotient identifies ``g(t) ~ h(t)`` and closes the image order
    reflexively and transitively. Each class is named by its least member in
    rendered order.
    """
    _check_parallel(g, h)
    x = g.cod
    parent = {e: e for e in x.elements}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for t in g.dom.elements:
        r1, r2 = find(g(t)), find(h(t))
        if r1 != r2:
            parent[r2] = r1

    classes: Dict[Hashable, List] = {}
    for e in x.elements:
        classes.setdefault(find(e), []).append(e)
    rep = {}
    for members in classes.values():
        least = ordered(members)[0]
        for e in members:
            rep[e] = least
    elements = [e for e in x.elements if rep[e] == e]
    q = preorder_closure(elements, ((rep[u], rep[v]) for u, v in x.le))
    return CoeqResult(g, h, q, MonotoneMap(x, q, rep))


def coequalizer_factor(
    coeq: CoeqResult, k: MonotoneMap, budget: SearchBudget = None
) -> MonotoneMap:
    """The unique ``m: q -> t`` with ``m∘e = k`` for a coequalizing ``k``."""
    if coeq.g.then(k) != coeq.h.then(k):
        raise ValidationError(
            "coequalizer", [Violation("non-coequalizing", (), f"{k!r}")]
        )
    return _unique(
        (m for m in monotone_maps(coeq.q, k.cod, budget=budget) if coeq.e.then(m) == k),
        "coequalizing map",
    )


@dataclass
class ReflectionResult:
    """The preorder reflection of a category and its unit."""

    category: FinCategory
    preorder: FinPreorder
    unit: FinFunctor


def preorder_reflection(c: FinCategory) -> ReflectionResult:
    """Collapse ``c`` to the preorder with ``x <= y`` iff ``c(x, y)`` is
    nonempty."""
    p = FinPreorder(
        c.objects, ((x, y) for x in c.objects for y in c.objects if c.hom(x, y))
    )
    unit = FinFunctor(
        c,
        thin_category(p),
        {x: x for x in c.objects},
        {f: (s, t) for f, (s, t) in c.morphisms.items()},
        name="η",
    )
    return ReflectionResult(c, p, unit)


def reflection_factor(r: ReflectionResult, F: FinFunctor, q: FinPreorder) -> MonotoneMap:
    """The unique monotone map through which ``F: c -> q`` factors."""
    if F.cod != thin_category(q):
        raise ValidationError(
            "reflection", [Violation("endpoint-mismatch", (), "F must land in a preorder")]
        )
    m = MonotoneMap(r.preorder, q, {x: F.obj(x) for x in r.preorder.elements})
    if not m.is_monotone() or compose_functors(m.as_functor(), r.unit) != F:
        raise ValueError("no-factorization: the reflection does not factor F.")
    return m


@dataclass
class CoproductResult:
    parts: List[FinPreorder]
    preorder: FinPreorder
    injections: List[MonotoneMap]


def coproduct_preorder(parts: Sequence[FinPreorder]) -> CoproductResult:
    """Disjoint union with elements ``(i, x)`` and componentwise order."""
    parts = list(parts)
    elements = [(i, x) for i, p in enumerate(parts) for x in p.elements]
    le = [((i, x), (i, y)) for i, p in enumerate(parts) for x, y in p.le]
    q = FinPreorder(elements, le)
    injections = [
        MonotoneMap(p, q, {x: (i, x) for x in p.elements}) for i, p in enumerate(parts)
    ]
    return CoproductResult(parts, q, injections)


def copair(c: CoproductResult, maps: Sequence[MonotoneMap]) -> MonotoneMap:
    """The map out of the coproduct induced by one map per part."""
    if len(maps) != len(c.parts):
        raise ValueError(f"copair needs {len(c.parts)} maps, got {len(maps)}.")
    cod = maps[0].cod if maps else FinPreorder([], [])
    return MonotoneMap(c.preorder, cod, {(i, x): maps[i](x) for i, x in c.preorder.elements})


def restrict(p: FinPreorder, elements) -> FinPreorder:
    """The induced sub-preorder on ``elements``."""
    keep = set(elements)
    return FinPreorder(
        [e for e in p.elements if e in keep],
        ((x, y) for x, y in p.le if x in keep and y in keep),
    )


@dataclass
class ExtensivityReport:
    """The decomposition of an object over a coproduct.

    ``fibers[j]`` is the part of ``w`` lying over ``parts[j]`` and
    ``comparison_iso`` certifies ``w ≅ ⊔ fibers`` over the coproduct.
    """

    fibers: List[FinPreorder]
    closed: bool
    comparison_iso: bool
    hom_count: Optional[int] = None
    hom_product: Optional[int] = None

    @property
    def ok(self) -> bool:
        counts = self.hom_count == self.hom_product
        return self.closed and self.comparison_iso and counts


def _fibers(c: CoproductResult, a: MonotoneMap) -> List[FinPreorder]:
    return [
        restrict(a.dom, [e for e in a.dom.elements if a(e)[0] == j])
        for j in range(len(c.parts))
    ]


def _over(c, fiber, a, j):
    return MonotoneMap(fiber, c.parts[j], {e: a(e)[1] for e in fiber.elements})


def _slice_homs(a: MonotoneMap, b: MonotoneMap, budget) -> int:
    return sum(
        1 for m in monotone_maps(a.dom, b.dom, budget=budget) if m.then(b) == a
    )


def extensivity_check(
    parts: Sequence[FinPreorder],
    a: MonotoneMap,
    other: Optional[MonotoneMap] = None,
    budget: SearchBudget = None,
) -> ExtensivityReport:
    """Decompose ``a: w -> ⊔parts`` into its fibers.

    Verifies that each fiber is a union of connected pieces of ``w``, that
    the comparison ``⊔ fibers -> w`` is an isomorphism over the coproduct,
    and, when ``other`` is given, that maps ``a -> other`` over the coproduct
    are counted by the product of the fiberwise counts.
    """
    budget = ensure_budget(budget)
    c = coproduct_preorder(parts)
    if a.cod != c.preorder:
        raise ValidationError(
            "extensivity", [Violation("endpoint-mismatch", (), "a must land in ⊔parts")]
        )
    w = a.dom
    fibers = _fibers(c, a)
    closed = all(a(x)[0] == a(y)[0] for x, y in w.le)

    glued = coproduct_preorder(fibers)
    comparison = MonotoneMap(glued.preorder, w, {(j, e): e for j, e in glued.preorder.elements})
    images = [comparison(e) for e in glued.preorder.elements]
    bijective = len(set(images)) == len(images) == len(w.elements)
    reflects = all(
        glued.preorder.leq(u, v) == w.leq(comparison(u), comparison(v))
        for u in glued.preorder.elements
        for v in glued.preorder.elements
    )
    over = all(a(comparison((j, e))) == (j, a(e)[1]) for j, e in glued.preorder.elements)
    report = ExtensivityReport(fibers, closed, bijective and reflects and over)

    if other is not None:
        others = _fibers(c, other)
        report.hom_count = _slice_homs(a, other, budget)
        product = 1
        for j in range(len(parts)):
            product *= _slice_homs(
                _over(c, fibers[j], a, j), _over(c, others[j], other, j), budget
            )
        report.hom_product = product
    return report


@dataclass
class FamCategory:
    """Finite families of objects of ``base`` of length at most ``bound``.

    A morphism is ``(src, t0, ts, tgt)``: a reindexing ``t0`` of positions
    and, at every position ``i``, a morphism ``ts[i]: src[i] -> tgt[t0[i]]``.
    """

    base: FinCategory
    bound: int
    cat: FinCategory
    inclusion: FinFunctor

    def has_two_cell(self, t, t2, leq=None) -> bool:
        """Whether a 2-cell ``t => t2`` can exist.

        There is none unless the reindexings agree; componentwise the base
        order ``leq`` decides, equality when the base is locally discrete.
        """
        leq = leq or (lambda f, g: f == g)
        if (t[0], t[3]) != (t2[0], t2[3]) or t[1] != t2[1]:
            return False
        return all(leq(f, g) for f, g in zip(t[2], t2[2]))


def fam_build(base: FinCategory, bound: int) -> FamCategory:
    """Build the category of families of length at most ``bound``."""
    if bound < 1:
        raise ValueError(f"bound-too-small: Fam needs bound >= 1, got {bound}.")
    objects = [
        fam for n in range(bound + 1) for fam in itertools.product(base.objects, repeat=n)
    ]
    morphisms = {}
    for src in objects:
        for tgt in objects:
            for t0 in itertools.product(range(len(tgt)), repeat=len(src)):
                homs = [base.hom(src[i], tgt[j]) for i, j in enumerate(t0)]
                for ts in itertools.product(*homs):
                    morphisms[(src, t0, ts, tgt)] = (src, tgt)
    identity = {
        o: (o, tuple(range(len(o))), tuple(base.id(x) for x in o), o) for o in objects
    }
    composition = {}
    for f, (src, mid) in morphisms.items():
        for g, (mid2, tgt) in morphisms.items():
            if mid2 != mid:
                continue
            t0 = tuple(g[1][j] for j in f[1])
            ts = tuple(base.compose(g[2][j], f[2][i]) for i, j in enumerate(f[1]))
            composition[(g, f)] = (src, t0, ts, tgt)
    name = f"Fam({base.name})" if base.name else None
    cat = FinCategory(objects, morphisms, identity, composition, name=name)
    inclusion = FinFunctor(
        base,
        cat,
        {x: (x,) for x in base.objects},
        {f: ((s,), (0,), (f,), (t,)) for f, (s, t) in base.morphisms.items()},
        name="I",
    )
    return FamCategory(base, bound, cat, inclusion)


@dataclass
class AdjoinedInitial:
    """``c`` with a freely added initial object ``bottom``."""

    base: FinCategory
    cat: FinCategory
    bottom: Hashable
    inclusion: FinFunctor

    def bang(self, x):
        """The unique morphism ``bottom -> x``."""
        return ("!", x)


def adjoin_initial(c: FinCategory, bottom: Hashable = "⊥") -> AdjoinedInitial:
    if bottom in c.identity:
        raise ValueError(f"{format_id(bottom)} is already an object of {c!r}.")
    objects = (bottom,) + c.objects
    morphisms = dict(c.morphisms)
    morphisms.update({("!", x): (bottom, x) for x in objects})
    identity = dict(c.identity)
    identity[bottom] = ("!", bottom)
    composition = dict(c.composition)
    for x in objects:
        composition[(("!", x), ("!", bottom))] = ("!", x)
    for f, (s, t) in c.morphisms.items():
        composition[(f, ("!", s))] = ("!", t)
    name = f"{c.name}+⊥" if c.name else None
    cat = FinCategory(objects, morphisms, identity, composition, name=name)
    inclusion = FinFunctor(
        c, cat, {x: x for x in c.objects}, {f: f for f in c.morphisms}, name="G"
    )
    return AdjoinedInitial(c, cat, bottom, inclusion)


def initial_objects(c: FinCategory) -> List[Hashable]:
    return [x for x in c.objects if all(len(c.hom(x, y)) == 1 for y in c.objects)]


def slice_category(c: FinCategory, x) -> CommaResult:
    """The slice ``c/x`` as the comma of the identity along ``x: 𝟙 -> c``."""
    return comma_category(identity_functor(c), constant_functor(one(), c, x))
