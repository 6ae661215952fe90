# Copyright © 2024 laxcomma contributors.

"""The lax slice ``Cat//y`` and its description as ``(y×−)``-coalgebras.

An object is a pair ``(w, a)`` with ``a: w -> y``. A morphism
``(w, a) -> (x, b)`` is a pair ``(f, φ)`` of a functor ``f: w -> x`` and a
natural transformation ``φ: b∘f => a``. A 2-cell ``γ: (f, φ) => (f', φ')`` is
a transformation ``γ: f => f'`` with ``φ'·(bγ) = φ``. The strict slice is
the part where ``φ`` is an identity.

Nothing here materializes a whole slice; every operation acts on the given
objects, morphisms and 2-cells.
"""

from dataclasses import dataclass
from typing import List, Optional

from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.errors import ValidationError, Violation
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    MonotoneMap,
    NatTrans,
    compose_functors,
    functor_violations,
    functors,
    identity_functor,
    identity_nat,
    nat_transformations,
    nat_vcomp,
    nat_violations,
    nat_whisker,
    pairing,
    pairing_nat,
    product_category,
    product_functor,
    product_nat,
    projections,
    thin_category,
)


@dataclass(frozen=True)
class SliceObject:
    w: FinCategory
    a: FinFunctor

    @property
    def base(self) -> FinCategory:
        return self.a.cod

    def __repr__(self):
        return f"SliceObject({self.w.name or self.w!r}, {self.a!r})"


@dataclass(frozen=True)
class LaxSliceMorphism:
    """``(f, phi): src -> tgt`` with ``phi: tgt.a∘f => src.a``."""

    src: SliceObject
    tgt: SliceObject
    f: FinFunctor
    phi: NatTrans

    def is_strict(self) -> bool:
        return self.phi.is_identity()

    def __repr__(self):
        return f"LaxSliceMorphism(f={self.f!r}, phi={self.phi!r})"


@dataclass(frozen=True)
class LaxSliceTwoCell:
    src: LaxSliceMorphism
    tgt: LaxSliceMorphism
    gamma: NatTrans


def validate_slice_object(o: SliceObject, base: Optional[FinCategory] = None) -> SliceObject:
    violations = functor_violations(o.a)
    if o.a.dom != o.w:
        violations.append(Violation("endpoint-mismatch", (), "a must start at w"))
    if base is not None and o.base != base:
        violations.append(Violation("base-mismatch", (), f"expected base {base!r}"))
    if violations:
        raise ValidationError("slice object", violations)
    return o


def lax_morphism_violations(m: LaxSliceMorphism) -> List[Violation]:
    if m.src.base != m.tgt.base:
        return [Violation("base-mismatch", ())]
    violations = functor_violations(m.f)
    if m.f.dom != m.src.w or m.f.cod != m.tgt.w:
        violations.append(Violation("endpoint-mismatch", (), "f: w -> x"))
    if violations:
        return violations
    if m.phi.src != compose_functors(m.tgt.a, m.f) or m.phi.tgt != m.src.a:
        return [Violation("endpoint-mismatch", (), "phi must go b∘f => a")]
    return nat_violations(m.phi)


def validate_lax_morphism(m: LaxSliceMorphism) -> LaxSliceMorphism:
    violations = lax_morphism_violations(m)
    if violations:
        raise ValidationError("lax slice morphism", violations)
    return m


def identity_morphism(o: SliceObject) -> LaxSliceMorphism:
    return LaxSliceMorphism(o, o, identity_functor(o.w), identity_nat(o.a))


def strict_morphism(src: SliceObject, tgt: SliceObject, f: FinFunctor) -> LaxSliceMorphism:
    """The morphism ``(f, id)``; requires ``tgt.a∘f = src.a``."""
    bf = compose_functors(tgt.a, f)
    if bf != src.a:
        raise ValidationError(
            "strict slice morphism", [Violation("endpoint-mismatch", (), "b∘f != a")]
        )
    return LaxSliceMorphism(src, tgt, f, identity_nat(bf))


def lax_compose(m2: LaxSliceMorphism, m1: LaxSliceMorphism) -> LaxSliceMorphism:
    """The composite ``m2∘m1`` with 2-cell ``φ1·(φ2 f)``.

    Its component at ``o`` is ``φ1_o ∘ φ2_{f(o)}``.
    """
    if m1.tgt != m2.src:
        raise ValidationError(
            "lax slice composite", [Violation("endpoint-mismatch", ())]
        )
    phi = nat_vcomp(m1.phi, nat_whisker(m1.f, m2.phi))
    return LaxSliceMorphism(m1.src, m2.tgt, compose_functors(m2.f, m1.f), phi)


def compatibility_violations(gamma: NatTrans, m1: LaxSliceMorphism, m2: LaxSliceMorphism) -> List[Violation]:
    y = m1.src.base
    b = m1.tgt.a
    violations = []
    for o in m1.src.w.objects:
        if y.compose(m2.phi[o], b.mor(gamma[o])) != m1.phi[o]:
            violations.append(Violation("compatibility-violation", (o,)))
    return violations


def validate_lax_2cell(gamma: NatTrans, m1: LaxSliceMorphism, m2: LaxSliceMorphism) -> LaxSliceTwoCell:
    """Check ``γ: m1 => m2`` against the pasting equation ``φ2·(bγ) = φ1``.

    Raises:
        ValidationError: With a ``compatibility-violation`` naming every object
            where the equation fails.
    """
    if (m1.src, m1.tgt) != (m2.src, m2.tgt):
        raise ValidationError("lax slice 2-cell", [Violation("non-parallel", ())])
    if gamma.src != m1.f or gamma.tgt != m2.f:
        raise ValidationError(
            "lax slice 2-cell", [Violation("endpoint-mismatch", (), "γ: f => f'")]
        )
    violations = nat_violations(gamma) or compatibility_violations(gamma, m1, m2)
    if violations:
        raise ValidationError("lax slice 2-cell", violations)
    return LaxSliceTwoCell(m1, m2, gamma)


def slice_morphisms(
    o1: SliceObject, o2: SliceObject, mode: str = "lax", budget: SearchBudget = None
) -> List[LaxSliceMorphism]:
    """Every lax (or strict) slice morphism ``o1 -> o2``."""
    if mode not in ("lax", "strict"):
        raise ValueError(f"mode must be 'lax' or 'strict', got {mode!r}.")
    if o1.base != o2.base:
        raise ValidationError("slice hom", [Violation("base-mismatch", ())])
    budget = ensure_budget(budget)
    result = []
    for f in functors(o1.w, o2.w, budget=budget):
        bf = compose_functors(o2.a, f)
        if mode == "strict":
            if bf == o1.a:
                result.append(LaxSliceMorphism(o1, o2, f, identity_nat(bf)))
            continue
        for phi in nat_transformations(bf, o1.a, budget=budget):
            result.append(LaxSliceMorphism(o1, o2, f, phi))
    return result


def slice_hom_category(
    o1: SliceObject, o2: SliceObject, mode: str = "lax", budget: SearchBudget = None
) -> FinCategory:
    """The hom-category from ``o1`` to ``o2`` in the lax or strict slice.

    Objects are :class:`LaxSliceMorphism` values; a morphism is a triple
    ``(m, m', γ)`` for a 2-cell ``γ: m => m'``.
    """
    budget = ensure_budget(budget)
    objects = slice_morphisms(o1, o2, mode=mode, budget=budget)
    morphisms = {}
    for m in objects:
        for m2 in objects:
            for gamma in nat_transformations(m.f, m2.f, budget=budget):
                if not compatibility_violations(gamma, m, m2):
                    morphisms[(m, m2, gamma)] = (m, m2)
    identity = {m: (m, m, identity_nat(m.f)) for m in objects}
    composition = {}
    for c1, (m, m2) in morphisms.items():
        for c2, (n, n2) in morphisms.items():
            if n == m2:
                composition[(c2, c1)] = (m, n2, nat_vcomp(c2[2], c1[2]))
    return FinCategory(objects, morphisms, identity, composition, name=f"hom_{mode}")


def thin_slice_object(w: FinPreorder, a: MonotoneMap) -> SliceObject:
    """A preorder over a preorder, read as a slice object of thin categories."""
    return SliceObject(thin_category(w), a.as_functor())


def thin_lax_morphism(src: SliceObject, tgt: SliceObject, f: MonotoneMap) -> LaxSliceMorphism:
    """The unique lax morphism over a monotone map when the base is thin.

    Raises:
        ValidationError: If ``b(f(o)) <= a(o)`` fails somewhere.
    """
    F = f.as_functor()
    bf = compose_functors(tgt.a, F)
    y = src.base
    components = {}
    for o in src.w.objects:
        cell = y.hom(bf.obj(o), src.a.obj(o))
        if not cell:
            raise ValidationError(
                "lax slice morphism", [Violation("component-endpoint-error", (o,))]
            )
        components[o] = cell[0]
    return LaxSliceMorphism(src, tgt, F, NatTrans(bf, src.a, components))


# Coalgebras for the comonad y×− (the product with y).


@dataclass(frozen=True)
class CoalgebraObject:
    """``a2: w -> y×w`` with ``proj_w∘a2 = id_w``."""

    base: FinCategory
    w: FinCategory
    a2: FinFunctor


@dataclass(frozen=True)
class LaxCoalgMorphism:
    """``phi2: b2∘f => (y×f)∘a2``."""

    src: CoalgebraObject
    tgt: CoalgebraObject
    f: FinFunctor
    phi2: NatTrans

    def is_strict(self) -> bool:
        return self.phi2.is_identity()


@dataclass(frozen=True)
class CoalgTwoCell:
    src: LaxCoalgMorphism
    tgt: LaxCoalgMorphism
    gamma: NatTrans


def _act(y: FinCategory, f: FinFunctor) -> FinFunctor:
    """``y×f``, the comonad applied to a functor."""
    return product_functor(identity_functor(y), f)


def _act_nat(y: FinCategory, t: NatTrans) -> NatTrans:
    return product_nat(identity_nat(identity_functor(y)), t)


def comultiplication(y: FinCategory, w: FinCategory) -> FinFunctor:
    """``δ_w: y×w -> y×(y×w)``, the diagonal on ``y``."""
    dom = product_category(y, w)
    cod = product_category(y, dom)
    return FinFunctor(
        dom,
        cod,
        {(c, o): (c, (c, o)) for c, o in dom.objects},
        {(g, h): (g, (g, h)) for g, h in dom.morphisms},
    )


def coalgebra_violations(obj: CoalgebraObject) -> List[Violation]:
    y, w, a2 = obj.base, obj.w, obj.a2
    violations = functor_violations(a2)
    if a2.dom != w or a2.cod != product_category(y, w):
        violations.append(Violation("endpoint-mismatch", (), "a2: w -> y×w"))
    if violations:
        return violations
    proj_w = projections(y, w)[1]
    if compose_functors(proj_w, a2) != identity_functor(w):
        violations.append(Violation("counit-violation", ()))
    return violations


def validate_coalgebra(obj: CoalgebraObject) -> CoalgebraObject:
    violations = coalgebra_violations(obj)
    if violations:
        raise ValidationError("coalgebra", violations)
    return obj


def coassociative(obj: CoalgebraObject) -> bool:
    """``(y×a2)∘a2 = δ_w∘a2``."""
    y, w, a2 = obj.base, obj.w, obj.a2
    return compose_functors(_act(y, a2), a2) == compose_functors(comultiplication(y, w), a2)


def coalg_morphism_violations(m: LaxCoalgMorphism) -> List[Violation]:
    y = m.src.base
    if m.tgt.base != y:
        return [Violation("base-mismatch", ())]
    b2f = compose_functors(m.tgt.a2, m.f)
    target = compose_functors(_act(y, m.f), m.src.a2)
    if m.phi2.src != b2f or m.phi2.tgt != target:
        return [Violation("endpoint-mismatch", (), "phi2: b2∘f => (y×f)∘a2")]
    violations = nat_violations(m.phi2)
    if violations:
        return violations
    proj_x = projections(y, m.tgt.w)[1]
    if not nat_whisker(None, m.phi2, proj_x).is_identity():
        violations.append(Violation("counit-violation", (), "proj∘phi2 is not the identity"))
    return violations


def validate_coalg_morphism(m: LaxCoalgMorphism) -> LaxCoalgMorphism:
    violations = coalg_morphism_violations(m)
    if violations:
        raise ValidationError("lax coalgebra morphism", violations)
    return m


def coalg_morphism_coassociative(m: LaxCoalgMorphism) -> bool:
    """The coassociativity equation of a lax coalgebra morphism.

    Both sides are 2-cells ``δ∘b2∘f => (y×y×f)∘(y×a2)∘a2``: the image of
    ``phi2`` under ``δ``, and the pasting of ``y×phi2`` with ``phi2``.
    """
    y, a2, b2 = m.src.base, m.src.a2, m.tgt.a2
    lhs = nat_whisker(None, m.phi2, comultiplication(y, m.tgt.w))
    first = nat_whisker(None, m.phi2, _act(y, b2))
    second = nat_whisker(a2, _act_nat(y, m.phi2))
    try:
        rhs = nat_vcomp(second, first)
    except ValueError:
        return False
    return lhs == rhs


def coalg_2cell_violations(gamma: NatTrans, m1: LaxCoalgMorphism, m2: LaxCoalgMorphism) -> List[Violation]:
    y = m1.src.base
    lhs = nat_vcomp(m2.phi2, nat_whisker(None, gamma, m1.tgt.a2))
    rhs = nat_vcomp(nat_whisker(m1.src.a2, _act_nat(y, gamma)), m1.phi2)
    if lhs == rhs:
        return []
    return [
        Violation("compatibility-violation", (o,))
        for o in m1.src.w.objects
        if lhs[o] != rhs[o]
    ]


def validate_coalg_2cell(gamma: NatTrans, m1: LaxCoalgMorphism, m2: LaxCoalgMorphism) -> CoalgTwoCell:
    violations = nat_violations(gamma) or coalg_2cell_violations(gamma, m1, m2)
    if violations:
        raise ValidationError("coalgebra 2-cell", violations)
    return CoalgTwoCell(m1, m2, gamma)


def to_coalgebra(x):
    """Send a slice object, morphism or 2-cell to the coalgebra side.

    ``(w, a)`` becomes ``(w, ⟨a, id⟩)``, ``(f, φ)`` becomes ``(f, ⟨φ, id_f⟩)``
    and a 2-cell keeps its transformation.
    """
    if isinstance(x, SliceObject):
        return CoalgebraObject(x.base, x.w, pairing(x.a, identity_functor(x.w)))
    if isinstance(x, LaxSliceMorphism):
        phi2 = pairing_nat(x.phi, identity_nat(x.f))
        return LaxCoalgMorphism(to_coalgebra(x.src), to_coalgebra(x.tgt), x.f, phi2)
    if isinstance(x, LaxSliceTwoCell):
        return CoalgTwoCell(to_coalgebra(x.src), to_coalgebra(x.tgt), x.gamma)
    raise TypeError(f"Cannot send {type(x).__name__} to the coalgebra side.")


def from_coalgebra(x):
    """Inverse of :func:`to_coalgebra`: compose with the projection to ``y``."""
    if isinstance(x, CoalgebraObject):
        proj_y = projections(x.base, x.w)[0]
        return SliceObject(x.w, compose_functors(proj_y, x.a2))
    if isinstance(x, LaxCoalgMorphism):
        proj_y = projections(x.src.base, x.tgt.w)[0]
        phi = nat_whisker(None, x.phi2, proj_y)
        src, tgt = from_coalgebra(x.src), from_coalgebra(x.tgt)
        # the whiskered endpoints are the composites b∘f and a on the nose
        phi = NatTrans(compose_functors(tgt.a, x.f), src.a, phi.components)
        return LaxSliceMorphism(src, tgt, x.f, phi)
    if isinstance(x, CoalgTwoCell):
        return LaxSliceTwoCell(from_coalgebra(x.src), from_coalgebra(x.tgt), x.gamma)
    raise TypeError(f"Cannot send {type(x).__name__} to the slice side.")
