# Copyright © 2024 laxcomma contributors.

"""Property suites over the enumerated corpus.

Each suite is a generator of :class:`Record` values registered under its
name. A record fails with a witness: the violated report keys, the
offending tuple, or the message of the error raised while checking.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional

from laxcomma import config
from laxcomma.catalog import chain2, curated_categories, d0, d1, one, parallel, point, s0, two
from laxcomma.change_of_base import (
    BaseChangeContext,
    adjoin_initial_check,
    collapsing_ambient,
    counit_naturality,
    factorization_iso,
    factorization_naturality,
    flip_gamma,
    kz_witness,
    lifted_fully_faithful_check,
    preorder_reflection_ambient,
    unit_naturality,
    verify_comma_adjunction,
    verify_kz_witness,
)
from laxcomma.config import SearchBudget
from laxcomma.constructions import (
    comma_category,
    comma_factor,
    comma_factor_2cell,
    coproduct_preorder,
    extensivity_check,
    fam_build,
    pullback_category,
    pullback_factor,
)
from laxcomma.corpus import (
    coequalizer_corpus,
    pocategory_corpus,
    preorder_corpus,
    shape_corpus,
)
from laxcomma.fincat import (
    FinCategory,
    compose_functors,
    functors,
    monotone_maps,
    nat_transformations,
    product_category,
    thin_category,
)
from laxcomma.kan import (
    coequalizer_iff_checks,
    coequalizer_preservation_check,
    conical_adjunction_check,
    lax_slice_coequalizer,
    limit_agrees_with_kan,
)
from laxcomma.lax_slice import (
    CoalgebraObject,
    LaxSliceTwoCell,
    SliceObject,
    coalg_morphism_coassociative,
    coalg_morphism_violations,
    coalgebra_violations,
    coassociative,
    from_coalgebra,
    slice_hom_category,
    slice_morphisms,
    to_coalgebra,
)
from laxcomma.thin2 import (
    adjunctions,
    algebras_are_inverses,
    cancellation_checks,
    compose_adjunctions,
    counit_invertible,
    eilenberg_moore,
    induced_monad,
    is_lali,
    kz_criterion,
    monad_classification,
    monads_on,
    pos_pocategory,
    search_lax_nonidempotent,
    two_adjunction_violations,
    two_adjunctions,
)
from laxcomma.utils import format_id, to_jsonable

logger = logging.getLogger(__name__)


MUTATIONS = ("flip-gamma",)
COMMA_MAX_OBJECTS = 4


@dataclass
class Record:
    property: str
    instance: str
    passed: bool
    witness: Any = None


@dataclass
class SuiteOptions:
    """Bounds and switches shared by every suite.

    Args:
        max_elems (int, optional): Largest preorder in the corpus. Default:
            ``LAXCOMMA_MAX_ELEMS``.
        mutate (str, optional): A mutation to inject, e.g. ``"flip-gamma"``.
        budget (SearchBudget, optional): Shared node counter.
    """

    max_elems: Optional[int] = None
    mutate: Optional[str] = None
    budget: Optional[SearchBudget] = None

    def __post_init__(self):
        if self.max_elems is None:
            self.max_elems = config.max_elems()
        if self.mutate is not None and self.mutate not in MUTATIONS:
            raise ValueError(f"Unknown mutation {self.mutate!r}; choose from {MUTATIONS}.")
        if self.budget is None:
            self.budget = SearchBudget()


@dataclass
class SuiteReport:
    suite: str
    records: List[Record] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def totals(self) -> Dict[str, int]:
        passed = sum(1 for r in self.records if r.passed)
        return {"all": len(self.records), "pass": passed, "fail": len(self.records) - passed}

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> List[Record]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        """The JSON report, fields in a fixed order."""
        records = []
        for r in self.records:
            entry = {"property": r.property, "instance": r.instance, "pass": r.passed}
            if not r.passed:
                entry["witness"] = to_jsonable(r.witness)
            records.append(entry)
        return {
            "suite": self.suite,
            "totals": self.totals,
            "records": records,
            "elapsed_ms": self.elapsed_ms,
        }


SUITES: Dict[str, Callable[[SuiteOptions], Iterator[Record]]] = {}


def suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


def check(prop: str, instance: str, fn: Callable[[], Any]) -> Record:
    """Run one property.

    ``fn`` returns either a bool or a ``(bool, witness)`` pair. A
    ``ValueError`` raised inside counts as a failure witnessed by its
    message.
    """
    try:
        outcome = fn()
    except ValueError as e:
        return Record(prop, instance, False, str(e))
    ok, witness = outcome if isinstance(outcome, tuple) else (outcome, None)
    if not ok and witness is None:
        witness = instance
    return Record(prop, instance, bool(ok), None if ok else witness)


def _failed_keys(reports: Dict[str, bool]):
    failed = sorted(k for k, v in reports.items() if not v)
    return not failed, failed


def _name(c) -> str:
    return c.name or repr(c)


def _small_categories() -> List[FinCategory]:
    return [one(), two(), parallel()]


def _slice_objects(y: FinCategory, shapes: List[FinCategory], budget) -> List[SliceObject]:
    return [SliceObject(w, a) for w in shapes for a in functors(w, y, budget=budget)]


def _base_functors(budget):
    bases = [d0(), d1(), s0()]
    for y in (one(), two()):
        for z in (one(), two()):
            for c in functors(y, z, budget=budget):
                if c not in bases:
                    bases.append(c)
    return bases


def _functor_id(F, i=None) -> str:
    text = F.name or f"{_name(F.dom)}->{_name(F.cod)}"
    return text if i is None else f"{text}#{i}"


def _combined(prop: str, instance: str, records: Iterator[Record]) -> Record:
    """One record for a family of checks: the first failure, else a pass."""
    for r in records:
        if not r.passed:
            return Record(prop, instance, False, r.witness)
    return Record(prop, instance, True)


def comma_categories() -> List[FinCategory]:
    """The cospan targets of the comma-universal suite."""
    return [y for y in curated_categories() if len(y.objects) <= COMMA_MAX_OBJECTS]


@suite("comma-universal")
def comma_universal(opts: SuiteOptions) -> Iterator[Record]:
    """Every cone over every cospan into a curated category with at most
    ``COMMA_MAX_OBJECTS`` objects, from legs out of ``𝟙`` and ``𝟚``, factors
    uniquely through the comma and the pullback; compatible 2-cells induce a
    unique 2-cell."""
    budget = opts.budget
    for y in comma_categories():
        legs = [
            (a, f"{_name(x)}->{_name(y)}#{i}")
            for x in (one(), two())
            for i, a in enumerate(functors(x, y, budget=budget))
        ]
        for a, a_id in legs:
            for b, b_id in legs:
                cm = comma_category(a, b)
                pb = pullback_category(a, b)
                for t in (one(), two()):
                    instance = f"{a_id},{b_id},{_name(t)}"
                    factored = []
                    comma_recs, pullback_recs = [], []
                    for h0 in functors(t, a.dom, budget=budget):
                        ah0 = compose_functors(a, h0)
                        for h1 in functors(t, b.dom, budget=budget):
                            bh1 = compose_functors(b, h1)
                            for phi in nat_transformations(ah0, bh1, budget=budget):
                                comma_recs.append(
                                    check(
                                        "comma-factor",
                                        instance,
                                        lambda: (True, factored.append(comma_factor(cm, h0, h1, phi, budget))),
                                    )
                                )
                            if ah0 == bh1:
                                pullback_recs.append(
                                    check(
                                        "pullback-factor",
                                        instance,
                                        lambda: (True, pullback_factor(pb, h0, h1, budget)),
                                    )
                                )
                    yield _combined("comma-factor", instance, comma_recs)
                    yield _combined("pullback-factor", instance, pullback_recs)
                    if t.name == "1":
                        yield _combined(
                            "comma-2cell", instance, _comma_2cells(cm, factored, instance, budget)
                        )


def _comma_2cells(cm, factored, instance, budget) -> Iterator[Record]:
    y = cm.a.cod
    for h in factored:
        for h2 in factored:
            p0h, p0h2 = compose_functors(cm.proj0, h), compose_functors(cm.proj0, h2)
            p1h, p1h2 = compose_functors(cm.proj1, h), compose_functors(cm.proj1, h2)
            for xi0 in nat_transformations(p0h, p0h2, budget=budget):
                for xi1 in nat_transformations(p1h, p1h2, budget=budget):
                    compatible = all(
                        y.compose(cm.b.mor(xi1[o]), h.obj(o)[2])
                        == y.compose(h2.obj(o)[2], cm.a.mor(xi0[o]))
                        for o in h.dom.objects
                    )
                    if compatible:
                        yield check(
                            "comma-2cell",
                            instance,
                            lambda: (True, comma_factor_2cell(cm, h, h2, xi0, xi1, budget)),
                        )


@suite("comma-adjunction")
def comma_adjunction(opts: SuiteOptions) -> Iterator[Record]:
    """Triangle identities and naturality of ``c! ⊣ c^⇐``."""
    budget = opts.budget
    shapes = [one(), two()]
    for i, c in enumerate(_base_functors(budget)):
        ctx = BaseChangeContext(c)
        over_y = _slice_objects(ctx.y, shapes, budget)
        over_z = _slice_objects(ctx.z, shapes, budget)
        for j, w_obj in enumerate(over_y):
            for k, z_obj in enumerate(over_z):
                instance = f"{_functor_id(c, i)}:{j},{k}"
                yield check(
                    "triangles",
                    instance,
                    lambda: _failed_keys(verify_comma_adjunction(ctx, w_obj, z_obj, budget).reports),
                )
        for j, o1 in enumerate(over_y):
            for k, o2 in enumerate(over_y):
                for n, m in enumerate(slice_morphisms(o1, o2, "strict", budget)):
                    yield check(
                        "unit-naturality",
                        f"{_functor_id(c, i)}:{j}->{k}#{n}",
                        lambda: unit_naturality(ctx, m, budget),
                    )
        for j, o1 in enumerate(over_z):
            for k, o2 in enumerate(over_z):
                for n, m in enumerate(slice_morphisms(o1, o2, "lax", budget)):
                    yield check(
                        "counit-naturality",
                        f"{_functor_id(c, i)}:{j}->{k}#{n}",
                        lambda: counit_naturality(ctx, m, budget),
                    )


@suite("kz-coherence")
def kz_coherence(opts: SuiteOptions) -> Iterator[Record]:
    """The witness ``Γ`` of ``ρ̄ ⊣ δ̄`` at every corpus object."""
    budget = opts.budget
    for y in _small_categories():
        for j, o in enumerate(_slice_objects(y, [one(), two()], budget)):
            instance = f"{_name(y)}:{j}"

            def verdict():
                wit = kz_witness(o, budget)
                if opts.mutate == "flip-gamma":
                    wit = flip_gamma(wit)
                return _failed_keys(verify_kz_witness(wit))

            yield check("kz-witness", instance, verdict)


@suite("coalg-iso")
def coalg_iso(opts: SuiteOptions) -> Iterator[Record]:
    """Round trips between the lax slice and lax coalgebras of ``y×−``."""
    budget = opts.budget
    for y in (one(), two()):
        objects = _slice_objects(y, [one(), two()], budget)
        for j, o in enumerate(objects):
            instance = f"{_name(y)}:{j}"
            co = to_coalgebra(o)
            yield check("object-round-trip", instance, lambda: from_coalgebra(co) == o)
            yield check(
                "object-valid",
                instance,
                lambda: (not coalgebra_violations(co), coalgebra_violations(co)),
            )
            yield check("object-coassociative", instance, lambda: coassociative(co))
        for j, o1 in enumerate(objects):
            for k, o2 in enumerate(objects):
                hom = slice_hom_category(o1, o2, "lax", budget)
                for n, m in enumerate(hom.objects):
                    instance = f"{_name(y)}:{j}->{k}#{n}"
                    cm = to_coalgebra(m)
                    yield check("morphism-round-trip", instance, lambda: from_coalgebra(cm) == m)
                    yield check(
                        "morphism-valid",
                        instance,
                        lambda: (not coalg_morphism_violations(cm), coalg_morphism_violations(cm)),
                    )
                    yield check(
                        "strictness-preserved", instance, lambda: cm.is_strict() == m.is_strict()
                    )
                    yield check(
                        "morphism-coassociative", instance, lambda: coalg_morphism_coassociative(cm)
                    )
                for n, (m, m2, gamma) in enumerate(hom.morphisms):
                    cell = LaxSliceTwoCell(m, m2, gamma)
                    yield check(
                        "2cell-round-trip",
                        f"{_name(y)}:{j}->{k}@{n}",
                        lambda: from_coalgebra(to_coalgebra(cell)) == cell,
                    )
        yield from _coalgebras_back(y, budget)


def _coalgebras_back(y, budget) -> Iterator[Record]:
    for w in (one(), two()):
        for i, a2 in enumerate(functors(w, product_category(y, w), budget=budget)):
            co = CoalgebraObject(y, w, a2)
            if coalgebra_violations(co):
                continue
            yield check(
                "coalgebra-round-trip",
                f"{_name(y)}:{_name(w)}#{i}",
                lambda: to_coalgebra(from_coalgebra(co)) == co,
            )


@suite("factorization")
def factorization(opts: SuiteOptions) -> Iterator[Record]:
    """``c^⇐`` is ``c*`` after ``id_z^⇐`` up to a natural isomorphism."""
    budget = opts.budget
    for i, c in enumerate(_base_functors(budget)):
        ctx = BaseChangeContext(c)
        over_z = _slice_objects(ctx.z, [one(), two()], budget)
        for j, o in enumerate(over_z):
            yield check(
                "comparison-iso",
                f"{_functor_id(c, i)}:{j}",
                lambda: factorization_iso(ctx, o, budget).iso,
            )
        for j, o1 in enumerate(over_z):
            for k, o2 in enumerate(over_z):
                for n, m in enumerate(slice_morphisms(o1, o2, "lax", budget)):
                    yield check(
                        "comparison-natural",
                        f"{_functor_id(c, i)}:{j}->{k}#{n}",
                        lambda: factorization_naturality(ctx, m, budget),
                    )


@suite("coequalizer")
def coequalizer(opts: SuiteOptions) -> Iterator[Record]:
    """Coequalizers in lax slices over small preorders: preservation by the
    forgetful map and the characterization through ``ran_f b``."""
    budget = opts.budget
    for inst in coequalizer_corpus(opts.max_elems):
        instance = f"{inst.z.name}/{inst.w.name}:{inst.x.name}:{inst.a!r}:{inst.b!r}:{inst.g!r},{inst.h!r}"

        def preserved():
            report = coequalizer_preservation_check(inst, budget=budget)
            return report.preserved and report.underlying_matches

        def certified():
            result = lax_slice_coequalizer(inst, budget=budget)
            return (not result.found) or bool(result.certified)

        def characterized():
            checks = coequalizer_iff_checks(inst, budget=budget, max_codomain=2)
            failed = [label for label, ok in checks if not ok]
            return not failed, failed

        yield check("preserved", instance, preserved)
        yield check("certified", instance, certified)
        yield check("kan-characterization", instance, characterized)


def _pos12():
    return pos_pocategory({"1": point(), "2": chain2()}, name="Pos{1,2}")


@suite("cancellation")
def cancellation(opts: SuiteOptions) -> Iterator[Record]:
    """Cancellation of laris, raris, lalis and ralis, lali composites, and
    the ``d0`` counterexample."""
    budget = opts.budget
    for k in pocategory_corpus(budget=budget):
        for law, pair, ok in cancellation_checks(k):
            yield check(law, f"{_name(k)}:{format_id(pair)}", lambda: ok)
        lalis = [a for a in adjunctions(k) if a.lali]
        for first in lalis:
            for second in lalis:
                if k.tgt(first.f) == k.src(second.f):
                    composite = compose_adjunctions(k, first, second)
                    yield check(
                        "lali-composite",
                        f"{_name(k)}:{format_id((first.f, second.f))}",
                        lambda: composite.lali,
                    )
    k = _pos12()
    cell_d0 = k.cell("1", "2", {"*": "0"})
    cell_s0 = k.cell("2", "1", {"0": "*", "1": "*"})
    expected = {
        "s0": (cell_s0, True),
        "s0.d0": (k.compose(cell_s0, cell_d0), True),
        "d0": (cell_d0, False),
    }
    for name, (cell, want) in expected.items():
        yield check("lali-counterexample", name, lambda: is_lali(k, cell) == want)


def _adjunction_corpus(budget):
    small = [k for k in pocategory_corpus(budget=budget) if len(k.objects) <= 2]
    for k in small:
        for m in monads_on(k, budget=budget):
            yield k, eilenberg_moore(m), m
    for k in small:
        for l in small:
            if len(k.morphisms) * len(l.morphisms) <= 16:
                for adj in two_adjunctions(k, l, budget=budget):
                    yield k, adj, None


@suite("idempotent-equiv")
def idempotent_equiv(opts: SuiteOptions) -> Iterator[Record]:
    """The conditions characterizing idempotent 2-monads agree."""
    budget = opts.budget
    for n, (k, adj, source) in enumerate(_adjunction_corpus(budget)):
        instance = f"{_name(k)}#{n}"
        m = induced_monad(adj)
        kind = monad_classification(m)

        def agree():
            values = {
                "mu-invertible": kind.mu_invertible,
                "t-eta": kind.t_eta_is_eta_t,
                "algebras-inverse": algebras_are_inverses(m),
            }
            return len(set(values.values())) == 1, values

        yield check("conditions-agree", instance, agree)
        yield check(
            "adjunction-valid",
            instance,
            lambda: (not two_adjunction_violations(adj), two_adjunction_violations(adj)),
        )
        yield check(
            "reflective-idempotent",
            instance,
            lambda: not counit_invertible(adj) or kind.idempotent,
        )
        if source is not None:
            yield check(
                "algebras-induce-monad",
                instance,
                lambda: m.T == source.T and m.eta == source.eta and m.mu == source.mu,
            )


@suite("kz-equiv")
def kz_equiv(opts: SuiteOptions) -> Iterator[Record]:
    """Lax idempotency of induced monads against the ``Gε ⊣ ηG`` criterion."""
    budget = opts.budget
    for n, (k, adj, _) in enumerate(_adjunction_corpus(budget)):
        instance = f"{_name(k)}#{n}"
        kind = monad_classification(induced_monad(adj))
        yield check("kz-criterion", instance, lambda: kind.lax_idempotent == kz_criterion(adj))
        yield check(
            "idempotent-is-lax", instance, lambda: not kind.idempotent or kind.lax_idempotent
        )
        if k.is_locally_discrete():
            yield check(
                "locally-discrete", instance, lambda: kind.lax_idempotent == kind.idempotent
            )
    found = search_lax_nonidempotent(
        pocategory_corpus(max_objects=3, budget=budget), budget=budget
    )
    yield check(
        "no-lax-nonidempotent",
        "corpus",
        lambda: (found is None, None if found is None else repr(found[1])),
    )


@suite("ct-final")
def ct_final(opts: SuiteOptions) -> Iterator[Record]:
    """The left adjoint to ``z -> 𝔹//z`` exists exactly when ``z`` has the
    colimits of every 𝔹-diagram."""
    budget = opts.budget
    shapes = shape_corpus(3)
    small_shapes = shape_corpus(2)
    for p in preorder_corpus(opts.max_elems, antisymmetric=True):
        z = thin_category(p)
        report = conical_adjunction_check(z, shapes, budget)
        instance = f"{p.name}"
        yield check(
            "adjunction-iff-cocomplete",
            instance,
            lambda: (report.adjunction == report.cocomplete, report.failure),
        )
        if report.adjunction:
            yield check("hom-bijection", instance, lambda: (bool(report.counts_match), report.failure))
            yield check("colimit-is-kan", instance, lambda: bool(report.kan_agrees))
        for s in small_shapes:
            for i, d in enumerate(functors(s, z, budget=budget)):
                yield check(
                    "limit-is-kan",
                    f"{instance}:{_name(s)}#{i}",
                    lambda: limit_agrees_with_kan(d, budget),
                )


@suite("admissibility")
def admissibility(opts: SuiteOptions) -> Iterator[Record]:
    """Full faithfulness of the lifted composite for the preorder
    reflection, against a collapsing control."""
    budget = opts.budget
    ambient = preorder_reflection_ambient()
    for y in curated_categories():
        report = lifted_fully_faithful_check(ambient, y, budget=budget)
        failed = [r.pair for r in report.records if not r.ok]
        yield check("lifted-fully-faithful", _name(y), lambda: (report.ok, failed))
        initial = adjoin_initial_check(y)
        if initial.has_initial:
            yield check(
                "adjoin-initial",
                _name(y),
                lambda: (initial.ok, [k for k, v in initial.fully_faithful.items() if not v]),
            )
    control = lifted_fully_faithful_check(collapsing_ambient(), two(), budget=budget)
    yield check("negative-control", "collapse:2", lambda: not control.ok)


@suite("extensivity")
def extensivity(opts: SuiteOptions) -> Iterator[Record]:
    """Slices over a binary coproduct of preorders split into products, and
    Fam has no 2-cells across different reindexings."""
    budget = opts.budget
    small = list(preorder_corpus(2))
    for i, p in enumerate(small):
        for j, q in enumerate(small):
            cp = coproduct_preorder([p, q]).preorder
            objects = [
                a for w in preorder_corpus(min(opts.max_elems, 2)) for a in monotone_maps(w, cp)
            ]
            for n, a in enumerate(objects):
                for k, other in enumerate(objects):
                    report = extensivity_check([p, q], a, other, budget)
                    yield check(
                        "extensive",
                        f"{p.name}+{q.name}:{n},{k}",
                        lambda: (report.ok, (report.hom_count, report.hom_product)),
                    )
    for c in (one(), two()):
        fam = fam_build(c, 2)
        bad = [
            (t, t2)
            for t, (s, e) in fam.cat.morphisms.items()
            for t2 in fam.cat.hom(s, e)
            if fam.has_two_cell(t, t2) != (t == t2)
        ]
        yield check("fam-2cells", _name(fam.cat), lambda: (not bad, bad[:1]))


def run_suite(name: str, opts: Optional[SuiteOptions] = None, timing: bool = True) -> SuiteReport:
    """Run a named suite; records come back sorted by instance.

    Raises:
        ValueError: ``unknown-suite`` for a name that is not registered.
    """
    if name not in SUITES:
        raise ValueError(f"unknown-suite: {name!r}; choose from {', '.join(sorted(SUITES))}.")
    opts = opts or SuiteOptions()
    tic = time.perf_counter()
    records = list(SUITES[name](opts))
    elapsed = (time.perf_counter() - tic) * 1e3 if timing else None
    records.sort(key=lambda r: (r.instance, r.property))
    report = SuiteReport(name, records, elapsed)
    logger.info("%s: %d/%d passed", name, report.totals["pass"], report.totals["all"])
    return report
