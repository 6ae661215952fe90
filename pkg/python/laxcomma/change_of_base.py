# Copyright © 2024 laxcomma contributors.

"""Change of base along a functor ``c: y -> z``.

``c!`` composes with ``c``, ``c*`` pulls back along ``c`` and ``c^⇐`` takes
the comma object along ``c``. The adjunction ``c! ⊣ c^⇐`` between the strict
slice over ``y`` and the lax slice over ``z`` is verified object by object
from its explicit unit ``ρ`` and counit ``δ``.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.constructions import (
    CommaResult,
    PullbackResult,
    adjoin_initial,
    comma_category,
    comma_factor,
    comma_factor_2cell,
    initial_objects,
    preorder_reflection,
    pullback_category,
    pullback_factor,
    pullback_factor_2cell,
    slice_category,
)
from laxcomma.errors import ValidationError, Violation
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    MonotoneMap,
    NatTrans,
    compose_functors,
    constant_functor,
    identity_functor,
    identity_nat,
    is_isomorphism,
    monotone_maps,
    nat_vcomp,
    nat_violations,
    nat_whisker,
    thin_category,
)
from laxcomma.lax_slice import (
    LaxSliceMorphism,
    LaxSliceTwoCell,
    SliceObject,
    lax_compose,
    slice_morphisms,
    thin_slice_object,
)

logger = logging.getLogger(__name__)


class BaseChangeContext:
    """A base functor ``c: y -> z`` with cached comma and pullback objects.

    Caches are keyed by the structural value of the leg, so building the same
    comma twice yields the same identifiers.
    """

    def __init__(self, c: FinFunctor):
        self.c = c
        self._commas: Dict[FinFunctor, CommaResult] = {}
        self._pullbacks: Dict[FinFunctor, PullbackResult] = {}

    def __repr__(self):
        return f"BaseChangeContext(c={self.c!r})"

    @property
    def y(self) -> FinCategory:
        return self.c.dom

    @property
    def z(self) -> FinCategory:
        return self.c.cod

    def comma(self, b: FinFunctor) -> CommaResult:
        if b not in self._commas:
            self._commas[b] = comma_category(b, self.c)
        return self._commas[b]

    def pullback(self, a: FinFunctor) -> PullbackResult:
        if a not in self._pullbacks:
            self._pullbacks[a] = pullback_category(a, self.c)
        return self._pullbacks[a]


def _base_mismatch(o, expected):
    return ValidationError(
        "change of base",
        [Violation("base-mismatch", (), f"{o!r} does not live over {expected.name or expected!r}")],
    )


def direct_image(ctx: BaseChangeContext, x, mode: str = "lax"):
    """Apply ``c!`` to a slice object, morphism or 2-cell over ``y``.

    In ``strict`` mode only strict morphisms are accepted, which is ``c!``
    restricted to the strict slice.
    """
    c = ctx.c
    if isinstance(x, SliceObject):
        if x.base != ctx.y:
            raise _base_mismatch(x, ctx.y)
        return SliceObject(x.w, compose_functors(c, x.a))
    if isinstance(x, LaxSliceMorphism):
        if mode == "strict" and not x.is_strict():
            raise ValidationError("direct image", [Violation("non-strict-input", ())])
        src, tgt = direct_image(ctx, x.src), direct_image(ctx, x.tgt)
        phi = nat_whisker(None, x.phi, c)
        return LaxSliceMorphism(src, tgt, x.f, NatTrans(compose_functors(tgt.a, x.f), src.a, phi.components))
    if isinstance(x, LaxSliceTwoCell):
        return LaxSliceTwoCell(
            direct_image(ctx, x.src, mode), direct_image(ctx, x.tgt, mode), x.gamma
        )
    raise TypeError(f"Cannot take the direct image of {type(x).__name__}.")


def base_change_pullback(ctx: BaseChangeContext, x, budget: SearchBudget = None):
    """Apply ``c*`` to a strict slice object, morphism or 2-cell over ``z``."""
    if isinstance(x, SliceObject):
        if x.base != ctx.z:
            raise _base_mismatch(x, ctx.z)
        p = ctx.pullback(x.a)
        return SliceObject(p.cat, p.proj1)
    if isinstance(x, LaxSliceMorphism):
        if not x.is_strict():
            raise ValidationError("pullback change of base", [Violation("non-strict-input", ())])
        pa, pb = ctx.pullback(x.src.a), ctx.pullback(x.tgt.a)
        h = pullback_factor(pb, compose_functors(x.f, pa.proj0), pa.proj1, budget=budget)
        src, tgt = SliceObject(pa.cat, pa.proj1), SliceObject(pb.cat, pb.proj1)
        return LaxSliceMorphism(src, tgt, h, identity_nat(pa.proj1))
    if isinstance(x, LaxSliceTwoCell):
        m1 = base_change_pullback(ctx, x.src, budget)
        m2 = base_change_pullback(ctx, x.tgt, budget)
        pa, pb = ctx.pullback(x.src.src.a), ctx.pullback(x.src.tgt.a)
        xi0 = nat_whisker(pa.proj0, x.gamma)
        xi1 = identity_nat(pa.proj1)
        xi = pullback_factor_2cell(pb, m1.f, m2.f, xi0, xi1, budget=budget)
        return LaxSliceTwoCell(m1, m2, xi)
    raise TypeError(f"Cannot pull back {type(x).__name__}.")


def base_change_comma(ctx: BaseChangeContext, x, budget: SearchBudget = None):
    """Apply ``c^⇐`` to a lax slice object, morphism or 2-cell over ``z``.

    ``(x, b)`` goes to ``(b↓c, proj1)``. A morphism ``(f, φ)`` goes to the
    strict morphism through the unique functor sending ``(o, oy, β)`` to
    ``(f(o), oy, β∘φ_o)``.
    """
    if isinstance(x, SliceObject):
        if x.base != ctx.z:
            raise _base_mismatch(x, ctx.z)
        cm = ctx.comma(x.a)
        return SliceObject(cm.cat, cm.proj1)
    if isinstance(x, LaxSliceMorphism):
        ca, cb = ctx.comma(x.src.a), ctx.comma(x.tgt.a)
        h0 = compose_functors(x.f, ca.proj0)
        phi = nat_vcomp(ca.lam, nat_whisker(ca.proj0, x.phi))
        phi = NatTrans(compose_functors(x.tgt.a, h0), phi.tgt, phi.components)
        h = comma_factor(cb, h0, ca.proj1, phi, budget=budget)
        src, tgt = SliceObject(ca.cat, ca.proj1), SliceObject(cb.cat, cb.proj1)
        return LaxSliceMorphism(src, tgt, h, identity_nat(ca.proj1))
    if isinstance(x, LaxSliceTwoCell):
        m1 = base_change_comma(ctx, x.src, budget)
        m2 = base_change_comma(ctx, x.tgt, budget)
        ca, cb = ctx.comma(x.src.src.a), ctx.comma(x.src.tgt.a)
        xi0 = nat_whisker(ca.proj0, x.gamma)
        xi0 = NatTrans(compose_functors(cb.proj0, m1.f), compose_functors(cb.proj0, m2.f), xi0.components)
        xi1 = identity_nat(ca.proj1)
        xi = comma_factor_2cell(cb, m1.f, m2.f, xi0, xi1, budget=budget)
        return LaxSliceTwoCell(m1, m2, xi)
    raise TypeError(f"Cannot take the comma change of base of {type(x).__name__}.")


@dataclass
class CommaAdjunctionWitness:
    """The unit at ``(w, a)`` and the counit at ``(x, b)`` with their checks."""

    rho_prime: FinFunctor
    rho: LaxSliceMorphism
    delta: LaxSliceMorphism
    reports: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.reports.values())


def unit_at(ctx: BaseChangeContext, o: SliceObject, budget: SearchBudget = None) -> Tuple[FinFunctor, LaxSliceMorphism]:
    """``ρ' : w -> ca↓c`` sending ``o`` to ``(o, a(o), id)``, and ``ρ = (ρ', id)``."""
    c = ctx.c
    ca = compose_functors(c, o.a)
    cm = ctx.comma(ca)
    rho_prime = comma_factor(cm, identity_functor(o.w), o.a, identity_nat(ca), budget=budget)
    rho = LaxSliceMorphism(o, SliceObject(cm.cat, cm.proj1), rho_prime, identity_nat(o.a))
    return rho_prime, rho


def counit_at(ctx: BaseChangeContext, o: SliceObject) -> LaxSliceMorphism:
    """``δ = (proj0, λ)`` from ``c!c^⇐(x, b)`` to ``(x, b)``."""
    cm = ctx.comma(o.a)
    src = SliceObject(cm.cat, compose_functors(ctx.c, cm.proj1))
    return LaxSliceMorphism(src, o, cm.proj0, cm.lam)


def verify_comma_adjunction(
    ctx: BaseChangeContext,
    w_obj: SliceObject,
    z_obj: SliceObject,
    budget: SearchBudget = None,
) -> CommaAdjunctionWitness:
    """Build ``ρ`` at ``w_obj`` and ``δ`` at ``z_obj`` and check both
    triangle identities on the nose.

    Args:
        ctx (BaseChangeContext): The base functor ``c: y -> z``.
        w_obj (SliceObject): An object ``(w, a)`` over ``y``.
        z_obj (SliceObject): An object ``(x, b)`` over ``z``.
    """
    budget = ensure_budget(budget)
    if w_obj.base != ctx.y:
        raise _base_mismatch(w_obj, ctx.y)
    if z_obj.base != ctx.z:
        raise _base_mismatch(z_obj, ctx.z)
    c = ctx.c
    rho_prime, rho = unit_at(ctx, w_obj, budget)
    delta = counit_at(ctx, z_obj)
    reports = {}

    cm = ctx.comma(compose_functors(c, w_obj.a))
    reports["unit-projection"] = compose_functors(cm.proj0, rho_prime) == identity_functor(w_obj.w)
    reports["unit-over-y"] = compose_functors(cm.proj1, rho_prime) == w_obj.a
    reports["unit-lambda"] = nat_whisker(rho_prime, cm.lam).is_identity()

    # δ_{c!(w,a)} ∘ c!(ρ) = id
    first = lax_compose(counit_at(ctx, direct_image(ctx, w_obj)), direct_image(ctx, rho))
    reports["triangle-left"] = _is_identity_morphism(first)

    # c^⇐(δ) ∘ ρ_{c^⇐(x,b)} = id
    image = base_change_comma(ctx, z_obj, budget)
    _, rho2 = unit_at(ctx, image, budget)
    second = lax_compose(base_change_comma(ctx, delta, budget), rho2)
    reports["triangle-right"] = _is_identity_morphism(second)
    return CommaAdjunctionWitness(rho_prime, rho, delta, reports)


def _is_identity_morphism(m: LaxSliceMorphism) -> bool:
    return (
        m.src == m.tgt
        and m.f == identity_functor(m.src.w)
        and m.phi.is_identity()
    )


def unit_naturality(ctx: BaseChangeContext, m: LaxSliceMorphism, budget: SearchBudget = None) -> bool:
    """``ρ_{tgt}∘m = c^⇐c!(m)∘ρ_{src}`` for a strict morphism over ``y``."""
    _, rho1 = unit_at(ctx, m.src, budget)
    _, rho2 = unit_at(ctx, m.tgt, budget)
    image = base_change_comma(ctx, direct_image(ctx, m, "strict"), budget)
    return lax_compose(rho2, m) == lax_compose(image, rho1)


def counit_naturality(ctx: BaseChangeContext, m: LaxSliceMorphism, budget: SearchBudget = None) -> bool:
    """``δ_{tgt}∘c!c^⇐(m) = m∘δ_{src}`` for a lax morphism over ``z``."""
    image = direct_image(ctx, base_change_comma(ctx, m, budget), "strict")
    return lax_compose(counit_at(ctx, m.tgt), image) == lax_compose(m, counit_at(ctx, m.src))


@dataclass
class FactorizationResult:
    """The comparison ``b↓c -> (b↓id_z) ×_z y`` and its verdict."""

    comparison: FinFunctor
    comma: CommaResult
    pullback: PullbackResult
    iso: bool


def factorization_iso(ctx: BaseChangeContext, o: SliceObject, budget: SearchBudget = None) -> FactorizationResult:
    """Compare ``c^⇐`` with ``c*`` after ``id_z^⇐``.

    The comparison sends ``(ox, oy, β)`` to ``((ox, c(oy), β), oy)`` and is
    obtained from the two universal properties, not written down directly.
    """
    if o.base != ctx.z:
        raise _base_mismatch(o, ctx.z)
    z, c = ctx.z, ctx.c
    cm = ctx.comma(o.a)
    arrows = comma_category(o.a, identity_functor(z))
    pb = pullback_category(arrows.proj1, c)

    h1 = compose_functors(c, cm.proj1)
    lam = NatTrans(cm.lam.src, compose_functors(identity_functor(z), h1), cm.lam.components)
    into_arrows = comma_factor(arrows, cm.proj0, h1, lam, budget=budget)
    comparison = pullback_factor(pb, into_arrows, cm.proj1, budget=budget)
    return FactorizationResult(comparison, cm, pb, is_isomorphism(comparison))


def factorization_naturality(ctx: BaseChangeContext, m: LaxSliceMorphism, budget: SearchBudget = None) -> bool:
    """The comparison commutes with the actions of both sides on ``m``."""
    r1 = factorization_iso(ctx, m.src, budget)
    r2 = factorization_iso(ctx, m.tgt, budget)
    left = compose_functors(r2.comparison, base_change_comma(ctx, m, budget).f)

    z = ctx.z
    identity_ctx = BaseChangeContext(identity_functor(z))
    arrows_map = base_change_comma(identity_ctx, m, budget).f
    h0 = compose_functors(arrows_map, r1.pullback.proj0)
    across = pullback_factor(r2.pullback, h0, r1.pullback.proj1, budget=budget)
    return left == compose_functors(across, r1.comparison)


@dataclass
class KZWitness:
    """``ρ̄ ⊣ δ̄`` for ``id_y^⇐`` at an object ``(x, b)`` over ``y``.

    ``gamma`` is the 2-cell ``ρ̄∘δ̄ => id`` on the comma ``b↓id_y``.
    """

    obj: SliceObject
    comma: CommaResult
    rho_bar: FinFunctor
    delta_bar: FinFunctor
    gamma: NatTrans


def kz_witness(o: SliceObject, budget: SearchBudget = None) -> KZWitness:
    """Build the witness; ``Γ`` at ``(ox, oy, β)`` is ``(id_ox, β)``."""
    y = o.base
    cm = comma_category(o.a, identity_functor(y))
    h1 = o.a
    phi = NatTrans(compose_functors(o.a, identity_functor(o.w)), compose_functors(identity_functor(y), h1), {x: y.id(o.a.obj(x)) for x in o.w.objects})
    rho_bar = comma_factor(cm, identity_functor(o.w), h1, phi, budget=budget)
    delta_bar = cm.proj0
    components = {}
    for ox, oy, beta in cm.cat.objects:
        components[(ox, oy, beta)] = (o.w.id(ox), beta, y.id(o.a.obj(ox)), beta)
    gamma = NatTrans(compose_functors(rho_bar, delta_bar), identity_functor(cm.cat), components)
    return KZWitness(o, cm, rho_bar, delta_bar, gamma)


def verify_kz_witness(wit: KZWitness) -> Dict[str, bool]:
    """Check ``δ̄∘ρ̄ = id`` and the triangle identities of ``Γ``."""
    cm = wit.comma
    reports = {}
    reports["gamma-natural"] = not nat_violations(wit.gamma)
    reports["identity-unit"] = compose_functors(wit.delta_bar, wit.rho_bar) == identity_functor(wit.obj.w)
    if not reports["gamma-natural"]:
        reports["gamma-over-lambda"] = False
        reports["delta-gamma"] = False
        reports["gamma-rho"] = False
        return reports
    over = nat_whisker(None, wit.gamma, cm.proj1)
    reports["gamma-over-lambda"] = over.components == cm.lam.components
    reports["delta-gamma"] = nat_whisker(None, wit.gamma, wit.delta_bar).is_identity()
    reports["gamma-rho"] = nat_whisker(wit.rho_bar, wit.gamma).is_identity()
    return reports


def flip_gamma(wit: KZWitness) -> KZWitness:
    """Mutation: replace the first non-identity component of ``Γ`` by an
    identity."""
    cat = wit.comma.cat
    components = dict(wit.gamma.components)
    for o in cat.objects:
        if components[o] != cat.id(o):
            components[o] = cat.id(o)
            break
    gamma = NatTrans(wit.gamma.src, wit.gamma.tgt, components)
    return replace(wit, gamma=gamma)


@dataclass
class Ambient:
    """A unit ``η_y: y -> GF(y)`` of an adjunction between categories and a
    smaller 2-category, together with the reflected object ``F(y)``.

    ``reflect`` returns ``(F(y), η_y)`` with ``F(y)`` a preorder.
    """

    name: str
    reflect: Callable[[FinCategory], Tuple[FinPreorder, FinFunctor]]


def preorder_reflection_ambient() -> Ambient:
    def reflect(y):
        r = preorder_reflection(y)
        return r.preorder, r.unit

    return Ambient("preorder-reflection", reflect)


def collapsing_ambient() -> Ambient:
    """A negative control: every category is sent to the point."""
    point = FinPreorder(["*"], [("*", "*")], name="1")

    def reflect(y):
        return point, constant_functor(y, thin_category(point), "*")

    return Ambient("collapse", reflect)


def default_samples(fy: FinPreorder, budget: SearchBudget = None) -> List[SliceObject]:
    """Strict slice objects over ``F(y)``: the identity, every point and every
    chain of length two."""
    point = FinPreorder(["*"], [("*", "*")], name="1")
    two = FinPreorder(["0", "1"], [("0", "0"), ("1", "1"), ("0", "1")], name="2")
    samples = [thin_slice_object(fy, MonotoneMap(fy, fy, {e: e for e in fy.elements}))]
    for m in monotone_maps(point, fy, budget=budget):
        samples.append(thin_slice_object(point, m))
    for m in monotone_maps(two, fy, budget=budget):
        samples.append(thin_slice_object(two, m))
    return samples


@dataclass
class AdmissibilityRecord:
    """One ordered pair of samples.

    ``before``/``after`` count strict morphisms on either side of the
    pullback along ``η_y``. ``lax_before`` counts lax morphisms over
    ``F(y)`` and ``lax_after`` strict morphisms between their commas along
    ``η_y``; the comma side need not be full, so only ``lax_injective``
    enters the verdict.
    """

    pair: Tuple[int, int]
    before: int
    after: int
    injective: bool
    lax_before: Optional[int] = None
    lax_after: Optional[int] = None
    lax_injective: Optional[bool] = None

    @property
    def bijective(self) -> bool:
        return self.injective and self.before == self.after

    @property
    def ok(self) -> bool:
        return self.bijective and bool(self.lax_injective)


@dataclass
class AdmissibilityReport:
    ambient: str
    y: FinCategory
    records: List[AdmissibilityRecord]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)


def lifted_fully_faithful_check(
    ambient: Ambient,
    y: FinCategory,
    samples: Optional[Sequence[SliceObject]] = None,
    budget: SearchBudget = None,
) -> AdmissibilityReport:
    """Test the lifted composite ``η_y^*∘Ǧ`` for full faithfulness.

    For each ordered pair of sampled strict slice objects over ``F(y)``, the
    strict morphisms are counted before and after pulling back along
    ``η_y``, and the action on morphisms is checked for injectivity. The
    comma-side composite ``η_y^⇐∘Ǧ`` is applied to every lax morphism of
    the pair and must be injective as well.
    """
    budget = ensure_budget(budget)
    fy, eta = ambient.reflect(y)
    if samples is None:
        samples = default_samples(fy, budget)
    ctx = BaseChangeContext(eta)
    pulled = [base_change_pullback(ctx, o, budget) for o in samples]
    commas = [base_change_comma(ctx, o, budget) for o in samples]
    records = []
    for i, o1 in enumerate(samples):
        for j, o2 in enumerate(samples):
            before = slice_morphisms(o1, o2, "strict", budget=budget)
            images = {base_change_pullback(ctx, m, budget).f for m in before}
            after = slice_morphisms(pulled[i], pulled[j], "strict", budget=budget)
            record = AdmissibilityRecord(
                (i, j), len(before), len(after), len(images) == len(before)
            )
            lax = slice_morphisms(o1, o2, "lax", budget=budget)
            lax_images = {base_change_comma(ctx, m, budget).f for m in lax}
            record.lax_before = len(lax)
            record.lax_after = len(slice_morphisms(commas[i], commas[j], "strict", budget=budget))
            record.lax_injective = len(lax_images) == len(lax)
            records.append(record)
    report = AdmissibilityReport(ambient.name, y, records)
    logger.debug("%s over %r: %d pairs, ok=%s", ambient.name, y, len(records), report.ok)
    return report


@dataclass
class AdjoinInitialReport:
    """Admissibility of ``c -> c+⊥`` at every object of ``c+⊥``."""

    has_initial: bool
    fully_faithful: Dict[Hashable, bool]

    @property
    def ok(self) -> bool:
        return self.has_initial and all(self.fully_faithful.values())


def hom_action_bijective(
    src: FinCategory,
    tgt: FinCategory,
    obj: Callable[[Hashable], Hashable],
    mor: Callable[[Hashable], Hashable],
) -> bool:
    """Whether ``(obj, mor)`` maps every hom-set of ``src`` bijectively onto
    the matching hom-set of ``tgt``."""
    for o1 in src.objects:
        for o2 in src.objects:
            hom = src.hom(o1, o2)
            target = set(tgt.hom(obj(o1), obj(o2)))
            images = {mor(m) for m in hom}
            if len(images) != len(hom) or images != target:
                return False
    return True


def adjoin_initial_check(c: FinCategory) -> AdjoinInitialReport:
    """Check the slice functors ``c/L(y) -> (c+⊥)/y`` for full faithfulness.

    The inclusion has a left adjoint ``L`` exactly when ``c`` has an initial
    object ``0``; then ``L(⊥) = 0`` and ``L`` is the identity elsewhere.
    Away from ``⊥`` the slice functor keeps objects and morphisms; over
    ``⊥`` everything goes to ``(⊥, id)`` and its identity.
    """
    zeros = initial_objects(c)
    if not zeros:
        return AdjoinInitialReport(False, {})
    zero = zeros[0]
    ext = adjoin_initial(c)
    result = {}
    for y in ext.cat.objects:
        tgt = slice_category(ext.cat, y).cat
        if y == ext.bottom:
            top = (ext.bottom, "*", ext.cat.id(ext.bottom))
            src = slice_category(c, zero).cat
            result[y] = hom_action_bijective(src, tgt, lambda o: top, lambda m: tgt.id(top))
            continue
        src = slice_category(c, y).cat
        result[y] = hom_action_bijective(src, tgt, lambda o: o, lambda m: m)
    return AdjoinInitialReport(True, result)
