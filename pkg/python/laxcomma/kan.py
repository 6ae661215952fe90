# Copyright © 2024 laxcomma contributors.

"""Conical limits, pointwise Kan extensions and coequalizers in lax slices.

Everything is decided by exhaustive search over finite categories: cones
are enumerated, universality is certified against every competing cone, and
the Kan extension bijection is checked against every functor and every
transformation of the bounded candidate space.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from laxcomma.catalog import one
from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.constructions import CoeqResult, comma_category, preorder_coequalizer
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
    isomorphic_objects,
    monotone_maps,
    nat_transformations,
    nat_vcomp,
    nat_whisker,
    opposite_functor,
    opposite_nat,
)
from laxcomma.utils import format_id

logger = logging.getLogger(__name__)


@dataclass
class ConeSearchResult:
    """The outcome of a (co)limit search.

    When ``found``, ``certificate`` lists every competing cone as
    ``(apex, legs, mediating morphism)``.
    """

    found: bool
    apex: Optional[Hashable] = None
    legs: Dict[Hashable, Hashable] = field(default_factory=dict)
    certificate: List[Tuple] = field(default_factory=list)


def cones(d: FinFunctor, t, budget: SearchBudget = None):
    """Every cone over ``d`` with apex ``t``, as a dict of legs."""
    budget = ensure_budget(budget)
    shape, z = d.dom, d.cod
    objects = list(shape.objects)
    choices = [z.hom(t, d.obj(s)) for s in objects]
    for legs in itertools.product(*choices):
        budget.tick(what="cone search")
        legs = dict(zip(objects, legs))
        if all(
            z.compose(d.mor(f), legs[s]) == legs[s2]
            for f, (s, s2) in shape.morphisms.items()
        ):
            yield legs


def _mediating(d, apex, legs, t, other):
    z = d.cod
    return [
        m
        for m in z.hom(t, apex)
        if all(z.compose(legs[s], m) == other[s] for s in d.dom.objects)
    ]


def conical_limit(d: FinFunctor, budget: SearchBudget = None) -> ConeSearchResult:
    """Search for a terminal cone over ``d: shape -> z``.

    ``found=False`` is an ordinary answer: finite categories need not have
    limits.
    """
    budget = ensure_budget(budget)
    z = d.cod
    competitors = [(t, legs) for t in z.objects for legs in cones(d, t, budget)]
    for apex, legs in competitors:
        certificate = []
        for t, other in competitors:
            budget.tick(what="cone search")
            ms = _mediating(d, apex, legs, t, other)
            if len(ms) != 1:
                break
            certificate.append((t, other, ms[0]))
        else:
            return ConeSearchResult(True, apex, legs, certificate)
    return ConeSearchResult(False)


def conical_colimit(d: FinFunctor, budget: SearchBudget = None) -> ConeSearchResult:
    """Search for an initial cocone, as a limit in the opposite category."""
    return conical_limit(opposite_functor(d), budget=budget)


@dataclass
class KanResult:
    """A pointwise Kan extension with its 2-cell and certificate.

    For ``right_kan`` the 2-cell is the counit ``ran∘h => j``; for
    ``left_kan`` it is the unit ``j => lan∘h``.
    """

    found: bool
    extension: Optional[FinFunctor] = None
    cell: Optional[NatTrans] = None
    certified: Optional[bool] = None
    failing_object: Optional[Hashable] = None
    checked: int = 0
    limits: Dict[Hashable, ConeSearchResult] = field(default_factory=dict)


def _under(x: FinCategory, h: FinFunctor, o):
    """The comma ``o↓h`` with objects ``(*, ow, β: o -> h(ow))``."""
    return comma_category(constant_functor(one(), x, o), h)


def right_kan(
    h: FinFunctor, j: FinFunctor, certify: bool = True, budget: SearchBudget = None
) -> KanResult:
    """The right Kan extension of ``j: w -> z`` along ``h: w -> x``.

    At each object ``o`` of ``x`` the value is the limit of ``j∘proj`` over
    the comma ``o↓h``. With ``certify``, every functor ``f: x -> z`` and every
    ``β: f∘h => j`` is checked to factor through the counit exactly once.
    """
    budget = ensure_budget(budget)
    if h.dom != j.dom:
        raise ValidationError("Kan extension", [Violation("endpoint-mismatch", (), "h and j need a common domain")])
    x, z = h.cod, j.cod
    limits, commas = {}, {}
    for o in x.objects:
        cm = _under(x, h, o)
        diagram = compose_functors(j, cm.proj1)
        result = conical_limit(diagram, budget)
        if not result.found:
            logger.debug("no limit at %s", format_id(o))
            return KanResult(False, failing_object=o, limits=limits)
        limits[o], commas[o] = result, cm

    def leg(o, ow, beta):
        return limits[o].legs[("*", ow, beta)]

    mor_map = {}
    for f, (o, o2) in x.morphisms.items():
        apex, apex2 = limits[o].apex, limits[o2].apex
        other = {
            ("*", ow, beta): leg(o, ow, x.compose(beta, f))
            for _, ow, beta in commas[o2].cat.objects
        }
        diagram = compose_functors(j, commas[o2].proj1)
        ms = _mediating(diagram, apex2, limits[o2].legs, apex, other)
        mor_map[f] = ms[0]
    extension = FinFunctor(x, z, {o: limits[o].apex for o in x.objects}, mor_map, name="ran")
    counit = NatTrans(
        compose_functors(extension, h),
        j,
        {ow: leg(h.obj(ow), ow, x.id(h.obj(ow))) for ow in h.dom.objects},
    )
    result = KanResult(True, extension, counit, limits=limits)
    if certify:
        result.certified, result.checked = _certify_right(h, j, extension, counit, budget)
    return result


def _certify_right(h, j, extension, counit, budget):
    checked = 0
    for f in functors(h.cod, j.cod, budget=budget):
        fh = compose_functors(f, h)
        for beta in nat_transformations(fh, j, budget=budget):
            checked += 1
            count = 0
            for hat in nat_transformations(f, extension, budget=budget):
                if nat_vcomp(counit, nat_whisker(h, hat)).components == beta.components:
                    count += 1
            if count != 1:
                return False, checked
    return True, checked


def left_kan(
    h: FinFunctor, j: FinFunctor, certify: bool = True, budget: SearchBudget = None
) -> KanResult:
    """The left Kan extension, computed as a right one between opposites."""
    dual = right_kan(opposite_functor(h), opposite_functor(j), certify=certify, budget=budget)
    if not dual.found:
        return KanResult(False, failing_object=dual.failing_object, limits=dual.limits)
    extension = opposite_functor(dual.extension)
    extension.name = "lan"
    unit = opposite_nat(dual.cell)
    unit = NatTrans(j, compose_functors(extension, h), unit.components)
    return KanResult(True, extension, unit, dual.certified, None, dual.checked, dual.limits)


def terminal_functor(x: FinCategory) -> FinFunctor:
    """``ι^x: x -> 𝟙``."""
    return constant_functor(x, one(), "*")


def limit_agrees_with_kan(j: FinFunctor, budget: SearchBudget = None) -> bool:
    """The limit of ``j`` and ``ran_{ι} j`` at the point agree up to iso."""
    budget = ensure_budget(budget)
    limit = conical_limit(j, budget)
    kan = right_kan(terminal_functor(j.dom), j, certify=False, budget=budget)
    if limit.found != kan.found:
        return False
    if not limit.found:
        return True
    return isomorphic_objects(j.cod, limit.apex, kan.extension.obj("*"))


# Coequalizers in the lax slice over a finite preorder.


@dataclass
class LaxCoeqInstance:
    """A parallel pair ``g, h: (w, a) -> (x, b)`` in the lax slice over ``z``.

    The 2-cells are forced by thinness and exist when ``b∘g <= a`` and
    ``b∘h <= a`` pointwise.
    """

    z: FinPreorder
    w: FinPreorder
    a: MonotoneMap
    x: FinPreorder
    b: MonotoneMap
    g: MonotoneMap
    h: MonotoneMap

    def validate(self):
        violations = []
        for name, m in (("g", self.g), ("h", self.h)):
            if not m.is_monotone():
                violations.append(Violation("not-monotone", (name,)))
            elif not m.then(self.b).leq(self.a):
                violations.append(Violation("component-endpoint-error", (name,), "b∘m <= a fails"))
        if violations:
            raise ValidationError("lax slice pair", violations)
        return self


@dataclass
class LaxCoeqResult:
    found: bool
    coeq: Optional[CoeqResult] = None
    f: Optional[MonotoneMap] = None
    c: Optional[MonotoneMap] = None
    kan: Optional[KanResult] = None
    certified: Optional[bool] = None


def ran_monotone(f: MonotoneMap, b: MonotoneMap, certify: bool = False, budget: SearchBudget = None) -> Tuple[Optional[MonotoneMap], KanResult]:
    """``ran_f b`` for monotone maps, through thin categories."""
    kan = right_kan(f.as_functor(), b.as_functor(), certify=certify, budget=budget)
    if not kan.found:
        return None, kan
    c = MonotoneMap(f.cod, b.cod, {e: kan.extension.obj(e) for e in f.cod.elements})
    return c, kan


def default_candidates(inst: LaxCoeqInstance, q: Optional[FinPreorder] = None) -> List[FinPreorder]:
    point = FinPreorder(["*"], [("*", "*")])
    two = FinPreorder(["0", "1"], [("0", "0"), ("1", "1"), ("0", "1")])
    anti = FinPreorder(["0", "1"], [("0", "0"), ("1", "1")])
    candidates = [point, two, anti, inst.x, inst.z]
    if q is not None:
        candidates.append(q)
    return candidates


def is_preorder_coequalizer(
    g: MonotoneMap,
    h: MonotoneMap,
    f: MonotoneMap,
    candidates: Sequence[FinPreorder],
    budget: SearchBudget = None,
) -> bool:
    """Whether ``f`` coequalizes ``g, h`` and every coequalizing map into a
    candidate factors through it uniquely."""
    budget = ensure_budget(budget)
    if g.then(f) != h.then(f):
        return False
    for t in candidates:
        for k in monotone_maps(f.dom, t, budget=budget):
            if g.then(k) != h.then(k):
                continue
            count = sum(1 for u in monotone_maps(f.cod, t, budget=budget) if f.then(u) == k)
            if count != 1:
                return False
    return True


def is_lax_slice_coequalizer(
    inst: LaxCoeqInstance,
    f: MonotoneMap,
    c: MonotoneMap,
    candidates: Sequence[FinPreorder],
    budget: SearchBudget = None,
) -> bool:
    """Certify ``(f, φ): (x, b) -> (q, c)`` as the coequalizer of the pair.

    Requires ``c∘f <= b`` and ``f∘g = f∘h``; then every ``(f', φ')`` into a
    candidate ``(q', c')`` coequalizing the pair must factor through a unique
    ``(u, ψ)`` with ``u∘f = f'`` and ``c'∘u <= c``.
    """
    budget = ensure_budget(budget)
    if not f.then(c).leq(inst.b) or inst.g.then(f) != inst.h.then(f):
        return False
    z = inst.z
    for t in candidates:
        coequalizing = [
            f2
            for f2 in monotone_maps(inst.x, t, budget=budget)
            if inst.g.then(f2) == inst.h.then(f2)
        ]
        factors = list(monotone_maps(f.cod, t, budget=budget))
        for c2 in monotone_maps(t, z, budget=budget):
            for f2 in coequalizing:
                if not f2.then(c2).leq(inst.b):
                    continue
                count = sum(1 for u in factors if f.then(u) == f2 and u.then(c2).leq(c))
                if count != 1:
                    return False
    return True


def lax_slice_coequalizer(
    inst: LaxCoeqInstance,
    candidates: Optional[Sequence[FinPreorder]] = None,
    budget: SearchBudget = None,
) -> LaxCoeqResult:
    """Coequalize a pair in the lax slice over a preorder.

    The underlying map is the preorder coequalizer ``f`` and the new leg is
    ``c = ran_f b``; the result is then certified against the candidates.
    """
    budget = ensure_budget(budget)
    inst.validate()
    coeq = preorder_coequalizer(inst.g, inst.h)
    c, kan = ran_monotone(coeq.e, inst.b, budget=budget)
    if c is None:
        return LaxCoeqResult(False, coeq, coeq.e, None, kan)
    if candidates is None:
        candidates = default_candidates(inst, coeq.q)
    certified = is_lax_slice_coequalizer(inst, coeq.e, c, candidates, budget)
    return LaxCoeqResult(True, coeq, coeq.e, c, kan, certified)


@dataclass
class PreservationReport:
    preserved: bool
    underlying_matches: bool


def coequalizer_preservation_check(
    inst: LaxCoeqInstance,
    candidates: Optional[Sequence[FinPreorder]] = None,
    budget: SearchBudget = None,
) -> PreservationReport:
    """Forget the leg of the lax-slice coequalizer and re-certify the
    underlying map as a coequalizer of preorders."""
    budget = ensure_budget(budget)
    result = lax_slice_coequalizer(inst, candidates, budget)
    if not result.found:
        return PreservationReport(True, True)
    if candidates is None:
        candidates = default_candidates(inst, result.coeq.q)
    plain = preorder_coequalizer(inst.g, inst.h)
    matches = plain.e == result.f
    return PreservationReport(
        is_preorder_coequalizer(inst.g, inst.h, result.f, candidates, budget), matches
    )


def coequalizer_iff_checks(
    inst: LaxCoeqInstance,
    candidates: Optional[Sequence[FinPreorder]] = None,
    budget: SearchBudget = None,
    max_codomain: Optional[int] = None,
) -> List[Tuple[str, bool]]:
    """Both directions of the characterization on a family of candidates.

    Candidate maps ``f`` are the preorder coequalizer and every monotone map
    from ``x`` into a candidate preorder that coequalizes ``g, h``,
    surjective or not. Each is paired with every monotone ``c`` satisfying
    ``c∘f <= b``. Being a lax-slice coequalizer must coincide with ``f``
    being a preorder coequalizer and ``c`` being ``ran_f b`` up to
    equivalence. With ``max_codomain``, only candidates with at most that
    many elements receive the extra maps.
    """
    budget = ensure_budget(budget)
    coeq = preorder_coequalizer(inst.g, inst.h)
    if candidates is None:
        candidates = default_candidates(inst, coeq.q)
    maps, seen = [("coequalizer", coeq.e)], {coeq.e}
    for n, t in enumerate(candidates):
        if max_codomain is not None and len(t) > max_codomain:
            continue
        for f in monotone_maps(inst.x, t, budget=budget):
            if f not in seen and inst.g.then(f) == inst.h.then(f):
                seen.add(f)
                maps.append((f"candidate{n}:{f!r}", f))
    checks = []
    for label, f in maps:
        is_coeq = is_preorder_coequalizer(inst.g, inst.h, f, candidates, budget)
        ran, _ = ran_monotone(f, inst.b, budget=budget)
        for c in monotone_maps(f.cod, inst.z, budget=budget):
            if not f.then(c).leq(inst.b):
                continue
            lhs = is_lax_slice_coequalizer(inst, f, c, candidates, budget)
            is_ran = ran is not None and all(
                inst.z.equivalent(c(e), ran(e)) for e in f.cod.elements
            )
            checks.append((f"{label}:{c!r}", lhs == (is_coeq and is_ran)))
    return checks


# The conical completeness adjunction.


@dataclass
class ConicalReport:
    """Whether ``K: z -> 𝔹//z`` has a left adjoint.

    ``adjunction`` is decided on its own, by searching a universal arrow
    from every diagram to ``K``. ``complete`` and ``cocomplete`` come from
    the (co)limit searches and are reported alongside. When the adjunction
    exists, ``counts_match`` compares ``z(L a, e)`` with the cocones from
    ``a`` to ``e`` for every pair, and ``kan_agrees`` says ``L a`` is
    isomorphic to the apex of ``lan_ι a``.
    """

    complete: bool
    cocomplete: bool
    adjunction: bool
    counts_match: Optional[bool]
    diagrams: int
    failure: Optional[Tuple] = None
    kan_agrees: Optional[bool] = None


def cocones(a: FinFunctor, e, budget: SearchBudget = None):
    """Every cocone from ``a`` to ``e``, as a transformation ``a => Δe``."""
    return nat_transformations(a, constant_functor(a.dom, a.cod, e), budget=budget)


def _cocone_key(legs) -> frozenset:
    return frozenset(legs.items())


def universal_arrow(a: FinFunctor, budget: SearchBudget = None) -> Optional[Tuple[Hashable, NatTrans]]:
    """A universal arrow from ``a`` to ``K``.

    That is an object ``L`` of ``z`` and a cocone ``λ: a => ΔL`` such that
    ``m |-> Δm∘λ`` maps ``z(L, e)`` bijectively onto the cocones from ``a``
    to ``e``, for every object ``e``. Returns ``None`` when no object
    qualifies.
    """
    budget = ensure_budget(budget)
    z = a.cod
    targets = {e: {_cocone_key(c.components) for c in cocones(a, e, budget)} for e in z.objects}
    for apex in z.objects:
        for lam in cocones(a, apex, budget):
            if all(_transports(z, lam, apex, e, targets[e], budget) for e in z.objects):
                return apex, lam
    return None


def _transports(z, lam, apex, e, target, budget) -> bool:
    hom = z.hom(apex, e)
    images = set()
    for m in hom:
        budget.tick(what="universal arrow")
        images.add(_cocone_key({s: z.compose(m, leg) for s, leg in lam.components.items()}))
    return len(images) == len(hom) and images == target


def conical_adjunction_check(
    z: FinCategory, shapes: Sequence[FinCategory], budget: SearchBudget = None
) -> ConicalReport:
    """Decide the adjunction between ``z`` and the lax slice ``𝔹//z``.

    ``K`` sends an object ``e`` to ``(𝟙, e)`` and reverses 2-cells, so a
    morphism ``(x, a) -> K(e)`` is a cocone from ``a`` to ``e``. The left
    adjoint exists when every diagram from ``shapes`` has a universal arrow
    to ``K``; its value is then compared with ``lan_{ι^x} a``. Limits and
    colimits are searched for every diagram as well, so the verdict can be
    held against cocompleteness.
    """
    budget = ensure_budget(budget)
    diagrams, complete, cocomplete = 0, True, True
    adjunction, counts_match, kan_agrees, failure = True, True, True, None
    for shape in shapes:
        for a in functors(shape, z, budget=budget):
            diagrams += 1
            complete = complete and conical_limit(a, budget).found
            cocomplete = cocomplete and conical_colimit(a, budget).found
            if not adjunction:
                continue
            arrow = universal_arrow(a, budget)
            if arrow is None:
                logger.debug("no universal arrow from %r", a)
                adjunction, failure = False, (shape.name or repr(shape), a)
                continue
            apex, _ = arrow
            lan = left_kan(terminal_functor(shape), a, certify=False, budget=budget)
            kan_agrees = kan_agrees and lan.found and isomorphic_objects(
                z, apex, lan.extension.obj("*")
            )
            for e in z.objects:
                if len(z.hom(apex, e)) != sum(1 for _ in cocones(a, e, budget)):
                    counts_match, failure = False, (a, e)
    if not adjunction:
        counts_match = kan_agrees = None
    return ConicalReport(
        complete, cocomplete, adjunction, counts_match, diagrams, failure, kan_agrees
    )
