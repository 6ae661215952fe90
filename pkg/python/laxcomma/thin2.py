# Copyright © 2024 laxcomma contributors.

"""Finite locally thin 2-categories.

Between two parallel 1-cells there is at most one 2-cell, so a 2-category of
this kind is a finite category whose hom-sets carry preorders. Modifications
and triangle identities degenerate to inequalities and equalities, which
makes the adjunction and monad theory below decidable by finite scans.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Tuple

from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.errors import ValidationError, Violation
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    _raw_category,
    category_violations,
    functor_violations,
    functors,
    inverse_morphism,
    monotone_maps,
    preorder_violations,
    thin_category,
)
from laxcomma.utils import format_id

logger = logging.getLogger(__name__)


class PoCategory:
    """A finite category whose hom-sets are preordered.

    Args:
        base (FinCategory): The underlying category of objects and 1-cells.
        order (Iterable): Pairs ``(f, g)`` of parallel 1-cells with a 2-cell
            ``f => g``, written ``f <= g``.
        carriers (Mapping, optional): For 2-categories of preordered sets,
            the preorder carried by each object.
    """

    def __init__(
        self,
        base: FinCategory,
        order: Iterable[Tuple[Hashable, Hashable]],
        name: Optional[str] = None,
        carriers: Optional[Mapping[Hashable, FinPreorder]] = None,
    ):
        self.base = base
        self.order = frozenset(order)
        self.name = name or base.name
        self.carriers = dict(carriers or {})

    def __repr__(self):
        name = f"{self.name}, " if self.name else ""
        return (
            f"PoCategory({name}objects={len(self.objects)}, "
            f"cells={len(self.morphisms)})"
        )

    def __eq__(self, other):
        if not isinstance(other, PoCategory):
            return NotImplemented
        return self is other or (self.base, self.order) == (other.base, other.order)

    def __hash__(self):
        return hash((self.base, self.order))

    @property
    def objects(self):
        return self.base.objects

    @property
    def morphisms(self):
        return self.base.morphisms

    def src(self, f):
        return self.base.src(f)

    def tgt(self, f):
        return self.base.tgt(f)

    def id(self, x):
        return self.base.id(x)

    def compose(self, *fs):
        return self.base.compose(*fs)

    def hom(self, x, y):
        return self.base.hom(x, y)

    def leq(self, f, g) -> bool:
        return (f, g) in self.order

    def hom_preorder(self, x, y) -> FinPreorder:
        cells = self.hom(x, y)
        return FinPreorder(cells, ((f, g) for f in cells for g in cells if self.leq(f, g)))

    def is_locally_discrete(self) -> bool:
        return all(f == g for f, g in self.order)

    def inverse(self, f):
        return inverse_morphism(self.base, f)

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def cell(self, x, y, mapping: Mapping):
        """The 1-cell ``x -> y`` of a 2-category of preorders with the given
        underlying map."""
        if x not in self.carriers:
            raise ValueError(f"{self!r} has no carrier for {format_id(x)}.")
        f = (x, y, tuple(mapping[e] for e in self.carriers[x].elements))
        if f not in self.morphisms:
            raise ValueError(f"The map {dict(mapping)} is not a 1-cell {x} -> {y}.")
        return f

    def underlying_map(self, f) -> Dict:
        x, _, images = f
        return dict(zip(self.carriers[x].elements, images))


def _raw_pocategory(raw) -> PoCategory:
    if isinstance(raw, PoCategory):
        return raw
    base = _raw_category(raw)
    order = set(raw.get("order", ()))
    order.update((f, f) for f in base.morphisms)
    return PoCategory(base, order, name=raw.get("name"))


def pocategory_violations(k: PoCategory) -> List[Violation]:
    violations = []
    for v in category_violations(k.base):
        if v.kind == "identity-violation":
            v = Violation("unit-violation", v.witness, v.message)
        violations.append(v)
    if violations:
        return violations

    for f, g in k.order:
        if f not in k.morphisms or g not in k.morphisms:
            violations.append(Violation("unknown-cell", (f, g)))
        elif k.morphisms[f] != k.morphisms[g]:
            violations.append(
                Violation("monotonicity-violation", (f, g), "2-cell between non-parallel 1-cells")
            )
    if violations:
        return violations
    for x in k.objects:
        for y in k.objects:
            violations.extend(preorder_violations(k.hom_preorder(x, y)))

    above = {}
    for f, g in k.order:
        above.setdefault(f, []).append(g)
    for (g, f), gf in k.base.composition.items():
        for g2 in above.get(g, [g]):
            for f2 in above.get(f, [f]):
                if not k.leq(gf, k.compose(g2, f2)):
                    violations.append(
                        Violation(
                            "monotonicity-violation",
                            (g, f),
                            f"{format_id(g)}∘{format_id(f)} is not below "
                            f"{format_id(g2)}∘{format_id(f2)}",
                        )
                    )
    return violations


def validate_pocategory(raw) -> PoCategory:
    """Validate a locally thin 2-category by a full scan.

    Args:
        raw (PoCategory or dict): A :class:`PoCategory`, or category data as
            accepted by :func:`~laxcomma.fincat.validate_category` with an
            extra ``order`` list of pairs ``(f, g)`` meaning ``f <= g``.
            Reflexive pairs are added.

    Raises:
        ValidationError: With ``monotonicity-violation``,
            ``associativity-violation`` or ``unit-violation`` entries.
    """
    k = _raw_pocategory(raw)
    violations = pocategory_violations(k)
    if violations:
        raise ValidationError("po-category", violations)
    return k


def locally_discrete(c: FinCategory) -> PoCategory:
    return PoCategory(c, ((f, f) for f in c.morphisms))


def preorder_pocategory(p: FinPreorder) -> PoCategory:
    """A preorder seen as a thin, locally discrete 2-category."""
    return locally_discrete(thin_category(p))


def pos_pocategory(
    preorders: Mapping[Hashable, FinPreorder],
    name: Optional[str] = None,
    budget: SearchBudget = None,
) -> PoCategory:
    """The 2-category of the given preorders, monotone maps and the pointwise
    order.

    1-cells are triples ``(x, y, images)`` where ``images`` lists the values
    on the elements of ``x`` in order. Use :meth:`PoCategory.cell` to look
    them up from a mapping.

    .. code-block:: python

        from laxcomma.catalog import chain2, point
        from laxcomma.thin2 import pos_pocategory

        k = pos_pocategory({"1": point(), "2": chain2()})
        d0 = k.cell("1", "2", {"*": "0"})
    """
    budget = ensure_budget(budget)
    names = list(preorders)
    morphisms, maps = {}, {}
    for x in names:
        for y in names:
            for m in monotone_maps(preorders[x], preorders[y], budget=budget):
                f = (x, y, tuple(m(e) for e in preorders[x].elements))
                morphisms[f] = (x, y)
                maps[f] = m
    identity = {x: (x, x, tuple(preorders[x].elements)) for x in names}
    composition = {}
    for f, (x, y) in morphisms.items():
        for g, (y2, z) in morphisms.items():
            if y2 == y:
                h = maps[f].then(maps[g])
                composition[(g, f)] = (x, z, tuple(h(e) for e in preorders[x].elements))
    order = [
        (f, g)
        for f, (x, y) in morphisms.items()
        for g in morphisms
        if morphisms[g] == (x, y) and maps[f].leq(maps[g])
    ]
    base = FinCategory(names, morphisms, identity, composition, name=name)
    return PoCategory(base, order, name=name, carriers=preorders)


class PoFunctor:
    """A 2-functor between locally thin 2-categories."""

    def __init__(self, dom: PoCategory, cod: PoCategory, obj_map: Mapping, mor_map: Mapping):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)

    def __repr__(self):
        objs = ", ".join(
            f"{format_id(x)}->{format_id(self.obj_map.get(x))}" for x in self.dom.objects
        )
        return f"PoFunctor({objs})"

    def __eq__(self, other):
        if not isinstance(other, PoFunctor):
            return NotImplemented
        return (self.dom, self.cod, self.obj_map, self.mor_map) == (
            other.dom,
            other.cod,
            other.obj_map,
            other.mor_map,
        )

    def __hash__(self):
        return hash(
            (frozenset(self.obj_map.items()), frozenset(self.mor_map.items()))
        )

    def obj(self, x):
        return self.obj_map[x]

    def mor(self, f):
        return self.mor_map[f]

    def underlying(self) -> FinFunctor:
        return FinFunctor(self.dom.base, self.cod.base, self.obj_map, self.mor_map)


def pofunctor_violations(F: PoFunctor) -> List[Violation]:
    violations = functor_violations(F.underlying())
    if violations:
        return violations
    for f, g in F.dom.order:
        if not F.cod.leq(F.mor(f), F.mor(g)):
            violations.append(Violation("order-not-preserved", (f, g)))
    return violations


def validate_pofunctor(F: PoFunctor) -> PoFunctor:
    violations = pofunctor_violations(F)
    if violations:
        raise ValidationError("2-functor", violations)
    return F


def identity_pofunctor(k: PoCategory) -> PoFunctor:
    return PoFunctor(k, k, {x: x for x in k.objects}, {f: f for f in k.morphisms})


def compose_pofunctors(G: PoFunctor, F: PoFunctor) -> PoFunctor:
    """The composite ``G∘F``."""
    if F.cod != G.dom:
        raise ValueError("endpoint-mismatch: cannot compose 2-functors.")
    return PoFunctor(
        F.dom,
        G.cod,
        {x: G.obj(y) for x, y in F.obj_map.items()},
        {f: G.mor(g) for f, g in F.mor_map.items()},
    )


def pofunctors(k: PoCategory, l: PoCategory, budget: SearchBudget = None) -> Iterator[PoFunctor]:
    """Enumerate every 2-functor ``k -> l``."""
    for F in functors(k.base, l.base, budget=budget):
        if all(l.leq(F.mor(f), F.mor(g)) for f, g in k.order):
            yield PoFunctor(k, l, F.obj_map, F.mor_map)


def is_fully_faithful(F: PoFunctor) -> bool:
    """Bijective on 1-cells and reflecting the order on every hom."""
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        for y in dom.objects:
            cells = dom.hom(x, y)
            image = [F.mor(f) for f in cells]
            if len(set(image)) != len(cells) or set(image) != set(cod.hom(F.obj(x), F.obj(y))):
                return False
            for f in cells:
                for g in cells:
                    if dom.leq(f, g) != cod.leq(F.mor(f), F.mor(g)):
                        return False
    return True


@dataclass(frozen=True)
class Adjunction1Cell:
    """An internal adjunction candidate ``f ⊣ g`` with its classification.

    ``lali`` and ``rari`` are set when the counit ``f∘g <= id`` is an
    identity, ``lari`` and ``rali`` when the unit ``id <= g∘f`` is.
    """

    f: Hashable
    g: Hashable
    holds: bool
    lali: bool
    rali: bool
    lari: bool
    rari: bool


def adjunction_check(k: PoCategory, f, g) -> Adjunction1Cell:
    """Decide whether ``f ⊣ g`` in ``k``.

    In a locally thin 2-category the triangle identities hold automatically,
    so the adjunction reduces to ``id_x <= g∘f`` and ``f∘g <= id_y``.

    Args:
        k (PoCategory): The ambient 2-category.
        f: A 1-cell ``x -> y``.
        g: A 1-cell ``y -> x``.

    Returns:
        Adjunction1Cell: The verdict and the lali/rali/lari/rari flags.
    """
    x, y = k.morphisms[f]
    if k.morphisms[g] != (y, x):
        raise ValidationError(
            "adjunction",
            [Violation("endpoint-mismatch", (f, g), "g must go back along f")],
        )
    gf, fg = k.compose(g, f), k.compose(f, g)
    holds = k.leq(k.id(x), gf) and k.leq(fg, k.id(y))
    counit_identity = holds and fg == k.id(y)
    unit_identity = holds and gf == k.id(x)
    return Adjunction1Cell(
        f,
        g,
        holds,
        lali=counit_identity,
        rali=unit_identity,
        lari=unit_identity,
        rari=counit_identity,
    )


def compose_adjunctions(k: PoCategory, first: Adjunction1Cell, second: Adjunction1Cell) -> Adjunction1Cell:
    """The composite ``f2∘f1 ⊣ g1∘g2`` of ``f1 ⊣ g1`` followed by ``f2 ⊣ g2``."""
    if k.tgt(first.f) != k.src(second.f):
        raise ValidationError(
            "adjunction",
            [Violation("endpoint-mismatch", (first.f, second.f))],
        )
    return adjunction_check(k, k.compose(second.f, first.f), k.compose(first.g, second.g))


def adjunctions(k: PoCategory) -> Iterator[Adjunction1Cell]:
    """Every internal adjunction of ``k``."""
    for f, (x, y) in k.morphisms.items():
        for g in k.hom(y, x):
            a = adjunction_check(k, f, g)
            if a.holds:
                yield a


def _left_search(k, f, flag):
    x, y = k.morphisms[f]
    return any(getattr(adjunction_check(k, f, g), flag) for g in k.hom(y, x))


def _right_search(k, g, flag):
    y, x = k.morphisms[g]
    return any(getattr(adjunction_check(k, f, g), flag) for f in k.hom(x, y))


def is_lali(k: PoCategory, f) -> bool:
    return _left_search(k, f, "lali")


def is_lari(k: PoCategory, f) -> bool:
    return _left_search(k, f, "lari")


def is_rali(k: PoCategory, g) -> bool:
    return _right_search(k, g, "rali")


def is_rari(k: PoCategory, g) -> bool:
    return _right_search(k, g, "rari")


def cancellation_checks(k: PoCategory) -> Iterator[Tuple[str, Tuple, bool]]:
    """The cancellation laws over every composable pair ``f∘f'``.

    Yields ``(law, (f, f'), holds)`` for each pair where the hypothesis of the
    law applies: left cancellation of laris and raris along ``f`` and right
    cancellation of lalis and ralis along ``f'``.
    """
    for (f, f2), ff2 in sorted(k.base.composition.items(), key=format_id):
        if is_lari(k, f):
            yield "left-cancel-lari", (f, f2), is_lari(k, ff2) == is_lari(k, f2)
        if is_rari(k, f):
            yield "left-cancel-rari", (f, f2), is_rari(k, ff2) == is_rari(k, f2)
        if is_lali(k, f2):
            yield "right-cancel-lali", (f, f2), is_lali(k, ff2) == is_lali(k, f)
        if is_rali(k, f2):
            yield "right-cancel-rali", (f, f2), is_rali(k, ff2) == is_rali(k, f)


class Monad2Data:
    """A 2-monad ``(T, η, μ)`` on a locally thin 2-category.

    Args:
        T (PoFunctor): The endo-2-functor.
        eta (Mapping): ``x -> η_x: x -> T(x)``.
        mu (Mapping): ``x -> μ_x: T²(x) -> T(x)``.
    """

    def __init__(self, T: PoFunctor, eta: Mapping, mu: Mapping):
        self.T = T
        self.eta = dict(eta)
        self.mu = dict(mu)

    def __repr__(self):
        return f"Monad2Data(T={self.T!r})"

    @property
    def k(self) -> PoCategory:
        return self.T.dom


def monad_violations(m: Monad2Data) -> List[Violation]:
    T, k = m.T, m.k
    if T.cod != k:
        return [Violation("endpoint-mismatch", (), "T is not an endo-2-functor")]
    violations = pofunctor_violations(T)
    if violations:
        return violations
    for x in k.objects:
        tx = T.obj(x)
        if k.morphisms.get(m.eta.get(x)) != (x, tx):
            violations.append(Violation("endpoint-mismatch", (x,), "η_x: x -> Tx"))
        if k.morphisms.get(m.mu.get(x)) != (T.obj(tx), tx):
            violations.append(Violation("endpoint-mismatch", (x,), "μ_x: TTx -> Tx"))
    if violations:
        return violations
    eta, mu = m.eta, m.mu
    for f, (x, y) in k.morphisms.items():
        if k.compose(T.mor(f), eta[x]) != k.compose(eta[y], f):
            violations.append(Violation("naturality-violation", (f,), "η"))
        if k.compose(T.mor(f), mu[x]) != k.compose(mu[y], T.mor(T.mor(f))):
            violations.append(Violation("naturality-violation", (f,), "μ"))
    for x in k.objects:
        tx = T.obj(x)
        if k.compose(mu[x], eta[tx]) != k.id(tx):
            violations.append(Violation("unit-law-violation", (x,), "μ_x∘η_Tx"))
        if k.compose(mu[x], T.mor(eta[x])) != k.id(tx):
            violations.append(Violation("unit-law-violation", (x,), "μ_x∘T(η_x)"))
        if k.compose(mu[x], mu[tx]) != k.compose(mu[x], T.mor(mu[x])):
            violations.append(Violation("assoc-violation", (x,)))
    return violations


def validate_2monad(m: Monad2Data) -> Monad2Data:
    violations = monad_violations(m)
    if violations:
        raise ValidationError("2-monad", violations)
    return m


def identity_monad(k: PoCategory) -> Monad2Data:
    ids = {x: k.id(x) for x in k.objects}
    return Monad2Data(identity_pofunctor(k), ids, ids)


@dataclass(frozen=True)
class MonadClassification:
    idempotent: bool
    lax_idempotent: bool
    mu_invertible: bool
    t_eta_is_eta_t: bool


def monad_classification(m: Monad2Data) -> MonadClassification:
    """Classify a 2-monad as idempotent and/or lax idempotent.

    The monad is idempotent when every ``μ_x`` is invertible (cross-checked
    against ``T(η_x) = η_Tx``) and lax idempotent when ``μ_x ⊣ η_Tx`` is a
    rari adjunction, i.e. ``id <= η_Tx∘μ_x`` for every object.
    """
    T, k = m.T, m.k
    mu_invertible = all(k.is_iso(m.mu[x]) for x in k.objects)
    t_eta = all(T.mor(m.eta[x]) == m.eta[T.obj(x)] for x in k.objects)
    lax = all(
        k.leq(k.id(T.obj(T.obj(x))), k.compose(m.eta[T.obj(x)], m.mu[x]))
        for x in k.objects
    )
    return MonadClassification(mu_invertible, lax, mu_invertible, t_eta)


@dataclass(frozen=True)
class AlgebraStructures:
    """The algebra structures ``a: T(x) -> x`` found on one object.

    ``structures`` holds the answer for the classified case: all retractions
    of ``η_x`` for an idempotent monad, the retractions with ``a ⊣ η_x`` for a
    lax idempotent one, and the strict algebras otherwise. ``strict`` always
    holds the structures satisfying the strict algebra laws.
    """

    obj: Hashable
    structures: frozenset
    strict: frozenset
    inverses: frozenset
    classified: bool

    @property
    def agrees(self) -> bool:
        return self.structures == self.strict


def algebra_structures(m: Monad2Data, x) -> AlgebraStructures:
    T, k = m.T, m.k
    tx = T.obj(x)
    eta = m.eta[x]
    retractions = [a for a in k.hom(tx, x) if k.compose(a, eta) == k.id(x)]
    strict = frozenset(
        a for a in retractions if k.compose(a, m.mu[x]) == k.compose(a, T.mor(a))
    )
    inverses = frozenset(a for a in retractions if k.compose(eta, a) == k.id(tx))
    kind = monad_classification(m)
    if kind.idempotent:
        structures = frozenset(retractions)
    elif kind.lax_idempotent:
        structures = frozenset(
            a for a in retractions if k.leq(k.id(tx), k.compose(eta, a))
        )
    else:
        structures = strict
    return AlgebraStructures(
        x, structures, strict, inverses, kind.idempotent or kind.lax_idempotent
    )


def algebras_are_inverses(m: Monad2Data) -> bool:
    """Whether every strict algebra structure is an inverse of the unit."""
    for x in m.k.objects:
        s = algebra_structures(m, x)
        if not s.strict <= s.inverses:
            return False
    return True


class TwoAdjunction:
    """A 2-adjunction ``F ⊣ G`` with unit ``eta`` and counit ``eps``.

    Args:
        F (PoFunctor): The left adjoint ``k -> l``.
        G (PoFunctor): The right adjoint ``l -> k``.
        eta (Mapping): ``x -> η_x: x -> GF(x)`` for objects of ``k``.
        eps (Mapping): ``y -> ε_y: FG(y) -> y`` for objects of ``l``.
    """

    def __init__(self, F: PoFunctor, G: PoFunctor, eta: Mapping, eps: Mapping):
        self.F = F
        self.G = G
        self.eta = dict(eta)
        self.eps = dict(eps)

    def __repr__(self):
        return f"TwoAdjunction(F={self.F!r}, G={self.G!r})"


def two_adjunction_violations(adj: TwoAdjunction) -> List[Violation]:
    F, G = adj.F, adj.G
    k, l = F.dom, F.cod
    violations = []
    if G.dom != l or G.cod != k:
        return [Violation("endpoint-mismatch", (), "G must go back along F")]
    for x in k.objects:
        if k.morphisms.get(adj.eta.get(x)) != (x, G.obj(F.obj(x))):
            violations.append(Violation("endpoint-mismatch", (x,), "η_x"))
    for y in l.objects:
        if l.morphisms.get(adj.eps.get(y)) != (F.obj(G.obj(y)), y):
            violations.append(Violation("endpoint-mismatch", (y,), "ε_y"))
    if violations:
        return violations
    for f, (x, x2) in k.morphisms.items():
        if k.compose(G.mor(F.mor(f)), adj.eta[x]) != k.compose(adj.eta[x2], f):
            violations.append(Violation("naturality-violation", (f,), "η"))
    for g, (y, y2) in l.morphisms.items():
        if l.compose(g, adj.eps[y]) != l.compose(adj.eps[y2], F.mor(G.mor(g))):
            violations.append(Violation("naturality-violation", (g,), "ε"))
    for x in k.objects:
        fx = F.obj(x)
        if l.compose(adj.eps[fx], F.mor(adj.eta[x])) != l.id(fx):
            violations.append(Violation("triangle-violation", (x,), "εF∘Fη"))
    for y in l.objects:
        gy = G.obj(y)
        if k.compose(G.mor(adj.eps[y]), adj.eta[gy]) != k.id(gy):
            violations.append(Violation("triangle-violation", (y,), "Gε∘ηG"))
    return violations


def validate_2adjunction(adj: TwoAdjunction) -> TwoAdjunction:
    violations = two_adjunction_violations(adj)
    if violations:
        raise ValidationError("2-adjunction", violations)
    return adj


def two_adjunctions(
    k: PoCategory, l: PoCategory, budget: SearchBudget = None
) -> Iterator[TwoAdjunction]:
    """Enumerate every 2-adjunction ``F ⊣ G`` with ``F: k -> l``."""
    budget = ensure_budget(budget)
    rights = list(pofunctors(l, k, budget=budget))
    for F in pofunctors(k, l, budget=budget):
        for G in rights:
            etas = [k.hom(x, G.obj(F.obj(x))) for x in k.objects]
            epss = [l.hom(F.obj(G.obj(y)), y) for y in l.objects]
            for eta in itertools.product(*etas):
                for eps in itertools.product(*epss):
                    budget.tick(what="2-adjunction enumeration")
                    adj = TwoAdjunction(
                        F, G, dict(zip(k.objects, eta)), dict(zip(l.objects, eps))
                    )
                    if not two_adjunction_violations(adj):
                        yield adj


def induced_monad(adj: TwoAdjunction) -> Monad2Data:
    """The 2-monad ``(GF, η, GεF)`` of a 2-adjunction."""
    T = compose_pofunctors(adj.G, adj.F)
    mu = {x: adj.G.mor(adj.eps[adj.F.obj(x)]) for x in adj.F.dom.objects}
    return Monad2Data(T, adj.eta, mu)


def kz_criterion(adj: TwoAdjunction) -> bool:
    """Whether ``Gε_y ⊣ η_Gy`` is a lali adjunction for every ``y``.

    The counit ``Gε_y∘η_Gy = id`` is a triangle identity, so only the unit
    inequality ``id <= η_Gy∘Gε_y`` is tested.
    """
    G, k = adj.G, adj.G.cod
    for y in adj.F.cod.objects:
        gy = G.obj(y)
        top = adj.G.obj(adj.F.obj(gy))
        if not k.leq(k.id(top), k.compose(adj.eta[gy], G.mor(adj.eps[y]))):
            return False
    return True


def counit_invertible(adj: TwoAdjunction) -> bool:
    return all(adj.F.cod.is_iso(e) for e in adj.eps.values())


def eilenberg_moore(m: Monad2Data) -> TwoAdjunction:
    """The 2-category of strict algebras with its free/forgetful adjunction.

    Objects are pairs ``(x, a)``; a 1-cell ``(x, a) -> (y, b)`` is
    ``((x, a), (y, b), f)`` with ``b∘T(f) = f∘a``, ordered as in ``k``.
    """
    T, k = m.T, m.k
    algebras = [(x, a) for x in k.objects for a in sorted(algebra_structures(m, x).strict, key=format_id)]
    morphisms, underlying = {}, {}
    for xa in algebras:
        for yb in algebras:
            (x, a), (y, b) = xa, yb
            for f in k.hom(x, y):
                if k.compose(b, T.mor(f)) == k.compose(f, a):
                    morphisms[(xa, yb, f)] = (xa, yb)
                    underlying[(xa, yb, f)] = f
    identity = {xa: (xa, xa, k.id(xa[0])) for xa in algebras}
    composition = {}
    for f, (xa, yb) in morphisms.items():
        for g, (yb2, zc) in morphisms.items():
            if yb2 == yb:
                composition[(g, f)] = (xa, zc, k.compose(underlying[g], underlying[f]))
    order = [
        (f, g)
        for f in morphisms
        for g in morphisms
        if morphisms[f] == morphisms[g] and k.leq(underlying[f], underlying[g])
    ]
    name = f"{k.name}^T" if k.name else None
    em = PoCategory(FinCategory(algebras, morphisms, identity, composition, name=name), order)

    free = {x: (T.obj(x), m.mu[x]) for x in k.objects}
    F = PoFunctor(
        k,
        em,
        free,
        {f: (free[x], free[y], T.mor(f)) for f, (x, y) in k.morphisms.items()},
    )
    G = PoFunctor(em, k, {xa: xa[0] for xa in algebras}, underlying)
    eps = {xa: (free[xa[0]], xa, xa[1]) for xa in algebras}
    return TwoAdjunction(F, G, m.eta, eps)


def monads_on(k: PoCategory, budget: SearchBudget = None) -> Iterator[Monad2Data]:
    """Enumerate every 2-monad on ``k``."""
    budget = ensure_budget(budget)
    objects = list(k.objects)
    for T in pofunctors(k, k, budget=budget):
        eta_choices = [k.hom(x, T.obj(x)) for x in objects]
        mu_choices = [k.hom(T.obj(T.obj(x)), T.obj(x)) for x in objects]
        for etas in itertools.product(*eta_choices):
            budget.tick(what="monad enumeration")
            eta = dict(zip(objects, etas))
            if any(
                k.compose(T.mor(f), eta[x]) != k.compose(eta[y], f)
                for f, (x, y) in k.morphisms.items()
            ):
                continue
            for mus in itertools.product(*mu_choices):
                budget.tick(what="monad enumeration")
                m = Monad2Data(T, eta, dict(zip(objects, mus)))
                if not monad_violations(m):
                    yield m


def search_lax_nonidempotent(
    pocategories: Iterable[PoCategory], budget: SearchBudget = None
) -> Optional[Tuple[PoCategory, Monad2Data]]:
    """Look for a lax idempotent 2-monad whose multiplication is not invertible.

    Every 2-monad on the given 2-categories is classified. Returns the first
    witness, or ``None`` when the search is exhausted.

    On finitely many objects with finite hom-sets the search always comes
    back empty: ``μ_x∘η_Tx = id`` makes ``η`` split mono along each orbit
    ``x, Tx, T²x, ...``, which is eventually periodic; on the periodic part
    the split monos compose to an endomorphism with a left inverse, hence an
    automorphism, so ``μ`` is invertible there, and naturality of ``μ`` at
    ``η_x`` carries invertibility back down the orbit.
    """
    budget = ensure_budget(budget)
    for k in pocategories:
        count = 0
        for m in monads_on(k, budget=budget):
            count += 1
            kind = monad_classification(m)
            if kind.lax_idempotent and not kind.idempotent:
                return k, m
        logger.debug("%r: %d monads, all idempotent or not lax", k, count)
    return None


@dataclass(frozen=True)
class CommaSearchResult:
    found: bool
    apex: Optional[Hashable] = None
    p0: Optional[Hashable] = None
    p1: Optional[Hashable] = None


def _cones(k, t, a, b, strict):
    x, w = k.src(a), k.src(b)
    for h0 in k.hom(t, x):
        for h1 in k.hom(t, w):
            lhs, rhs = k.compose(a, h0), k.compose(b, h1)
            if lhs == rhs or (not strict and k.leq(lhs, rhs)):
                yield h0, h1


def _is_universal(k, q, p0, p1, a, b, strict, budget):
    for t in k.objects:
        for h0, h1 in _cones(k, t, a, b, strict):
            budget.tick(what="comma search")
            factors = [
                h
                for h in k.hom(t, q)
                if k.compose(p0, h) == h0 and k.compose(p1, h) == h1
            ]
            if len(factors) != 1:
                return False
        cells = k.hom(t, q)
        for h in cells:
            for h2 in cells:
                if (
                    k.leq(k.compose(p0, h), k.compose(p0, h2))
                    and k.leq(k.compose(p1, h), k.compose(p1, h2))
                    and not k.leq(h, h2)
                ):
                    return False
    return True


def _limit_search(k, a, b, strict, budget):
    budget = ensure_budget(budget)
    if k.tgt(a) != k.tgt(b):
        raise ValidationError("comma", [Violation("endpoint-mismatch", (a, b))])
    for q in k.objects:
        for p0, p1 in _cones(k, q, a, b, strict):
            if _is_universal(k, q, p0, p1, a, b, strict, budget):
                return CommaSearchResult(True, q, p0, p1)
    return CommaSearchResult(False)


def comma_search(k: PoCategory, a, b, budget: SearchBudget = None) -> CommaSearchResult:
    """Search ``k`` for a comma object of ``a: x -> y`` along ``b: w -> y``.

    A candidate ``(q, p0, p1)`` with ``a∘p0 <= b∘p1`` is accepted when every
    such cone from an object of ``k`` factors uniquely through it and
    2-cells between factorizations are reflected by the projections.
    """
    return _limit_search(k, a, b, False, budget)


def pullback_search(k: PoCategory, a, b, budget: SearchBudget = None) -> CommaSearchResult:
    """The strict analogue of :func:`comma_search`, with ``a∘p0 = b∘p1``."""
    return _limit_search(k, a, b, True, budget)
