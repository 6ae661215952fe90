# Copyright © 2024 laxcomma contributors.

"""Deterministic enumeration of small preorders, categories and
po-categories.

Preorders are enumerated as boolean relation matrices, all at once, and
deduplicated up to isomorphism through a canonical code: the least bit
pattern of the matrix over all relabellings of the elements.
"""

import itertools
import logging
from typing import Iterator, List, Optional

import numpy as np

from laxcomma import config
from laxcomma.catalog import chain2, curated_categories, point, vee, wedge
from laxcomma.config import SearchBudget, ensure_budget
from laxcomma.fincat import (
    FinCategory,
    FinPreorder,
    monotone_maps,
    preorder_from_matrix,
    thin_category,
)
from laxcomma.kan import LaxCoeqInstance
from laxcomma.thin2 import PoCategory, locally_discrete, pocategory_violations, pos_pocategory

logger = logging.getLogger(__name__)

MAX_PREORDER_ELEMS = 5
MAX_POCATEGORY_OBJECTS = 3
MAX_HOM_SIZE = 4


def _check_bound(value: int, limit: int, what: str):
    if value > limit:
        raise ValueError(
            f"bounds-too-large: {what} is limited to {limit}, got {value}."
        )


def _relations(n: int) -> np.ndarray:
    """Every reflexive relation on ``n`` points as an ``(N, n, n)`` array."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    codes = np.arange(1 << len(off), dtype=np.int64)
    m = np.zeros((len(codes), n, n), dtype=bool)
    idx = np.arange(n)
    m[:, idx, idx] = True
    for k, (i, j) in enumerate(off):
        m[:, i, j] = (codes >> k) & 1
    return m


def _transitive(m: np.ndarray) -> np.ndarray:
    """Mask of the relations in the stack ``m`` that are transitive."""
    as_int = m.astype(np.uint8)
    square = np.matmul(as_int, as_int) > 0
    return ~(square & ~m).any(axis=(1, 2))


def _codes(m: np.ndarray) -> np.ndarray:
    n = m.shape[-1]
    weights = (1 << np.arange(n * n, dtype=np.int64)).reshape(n, n)
    return (m.astype(np.int64) * weights).sum(axis=(1, 2))


def canonical_codes(m: np.ndarray) -> np.ndarray:
    """The least code of each relation in the stack over all relabellings."""
    n = m.shape[-1]
    best = None
    for perm in itertools.permutations(range(n)):
        perm = list(perm)
        codes = _codes(m[:, perm][:, :, perm])
        best = codes if best is None else np.minimum(best, codes)
    return best if best is not None else np.zeros(len(m), dtype=np.int64)


def canonical_form(p: FinPreorder) -> int:
    return int(canonical_codes(p.matrix()[None])[0])


def preorders(n: int, up_to_iso: bool = True) -> List[FinPreorder]:
    """All preorders on the elements ``"0"..str(n-1)``.

    Args:
        n (int): The number of elements.
        up_to_iso (bool): Keep one representative per isomorphism class.
            Default: ``True``.

    .. code-block:: python

        >>> [len(preorders(n)) for n in range(5)]
        [1, 1, 3, 9, 33]
        >>> len(preorders(2, up_to_iso=False))
        4
    """
    _check_bound(n, MAX_PREORDER_ELEMS, "preorder size")
    elements = [str(i) for i in range(n)]
    m = _relations(n)
    m = m[_transitive(m)]
    if up_to_iso:
        codes = canonical_codes(m)
        _, first = np.unique(codes, return_index=True)
        m = m[first]
        m = m[np.argsort(_codes(m), kind="stable")]
    else:
        m = m[np.argsort(_codes(m), kind="stable")]
    result = []
    for i, rel in enumerate(m):
        p = preorder_from_matrix(elements, rel)
        result.append(FinPreorder(p.elements, p.le, name=f"P{n}.{i}"))
    logger.debug("%d preorders on %d elements", len(result), n)
    return result


def preorder_corpus(
    max_elems: Optional[int] = None,
    min_elems: int = 1,
    antisymmetric: bool = False,
    up_to_iso: bool = True,
) -> Iterator[FinPreorder]:
    """Preorders by increasing size, ``LAXCOMMA_MAX_ELEMS`` by default."""
    max_elems = config.max_elems() if max_elems is None else max_elems
    _check_bound(max_elems, MAX_PREORDER_ELEMS, "preorder size")
    for n in range(min_elems, max_elems + 1):
        for p in preorders(n, up_to_iso=up_to_iso):
            if not antisymmetric or p.is_antisymmetric():
                yield p


def category_corpus(max_elems: Optional[int] = None, max_objects: int = 4) -> Iterator[FinCategory]:
    """The curated categories followed by the thin categories of the
    preorder corpus, all with at most ``max_objects`` objects."""
    max_elems = config.max_elems() if max_elems is None else max_elems
    for c in curated_categories():
        if len(c.objects) <= max_objects:
            yield c
    for p in preorder_corpus(min(max_elems, max_objects)):
        yield thin_category(p)


def shape_corpus(max_objects: int = 3) -> List[FinCategory]:
    """Non-empty diagram shapes: thin categories up to iso and the parallel
    pair."""
    shapes = [thin_category(p) for p in preorder_corpus(max_objects)]
    shapes.extend(c for c in curated_categories() if c.name == "||")
    return shapes


def _hom_orders(k: FinCategory, x, y) -> List[FinPreorder]:
    cells = k.hom(x, y)
    _check_bound(len(cells), MAX_HOM_SIZE, "hom-set size")
    if not cells:
        return [FinPreorder([], [])]
    found = []
    for p in preorders(len(cells), up_to_iso=False):
        rename = dict(zip(p.elements, cells))
        found.append(FinPreorder(cells, ((rename[a], rename[b]) for a, b in p.le)))
    return found


def local_orders(base: FinCategory, budget: SearchBudget = None) -> Iterator[PoCategory]:
    """Every locally preordered structure on ``base`` satisfying the
    monotonicity law."""
    budget = ensure_budget(budget)
    pairs = [(x, y) for x in base.objects for y in base.objects]
    choices = [_hom_orders(base, x, y) for x, y in pairs]
    for chosen in itertools.product(*choices):
        budget.tick(what="po-category enumeration")
        order = set()
        for p in chosen:
            order.update(p.le)
        k = PoCategory(base, order)
        if not pocategory_violations(k):
            yield k


def pocategory_corpus(
    max_objects: int = 2, max_hom: int = 3, budget: SearchBudget = None
) -> Iterator[PoCategory]:
    """Locally discrete embeddings of the curated categories, every local
    order on the small ones, the thin 2-categories on three objects when
    ``max_objects`` allows, and the 2-category of ``𝟙`` and ``𝟚``.

    Args:
        max_objects (int): Objects of the categories given local orders.
        max_hom (int): Largest hom-set given a local order.
    """
    _check_bound(max_objects, MAX_POCATEGORY_OBJECTS, "po-category objects")
    _check_bound(max_hom, MAX_HOM_SIZE, "hom-set size")
    budget = ensure_budget(budget)
    seen = set()

    def fresh(k):
        if k in seen:
            return False
        seen.add(k)
        return True

    for c in curated_categories():
        k = locally_discrete(c)
        if fresh(k):
            yield k
    for c in curated_categories():
        if len(c.objects) > max_objects:
            continue
        if any(len(c.hom(x, y)) > max_hom for x in c.objects for y in c.objects):
            continue
        for k in local_orders(c, budget):
            if fresh(k):
                k.name = c.name
                yield k
    if max_objects >= 3:
        for p in preorder_corpus(3, min_elems=3):
            k = locally_discrete(thin_category(p))
            if fresh(k):
                k.name = p.name
                yield k
    k = pos_pocategory({"1": point(), "2": chain2()}, name="Pos{1,2}", budget=budget)
    if fresh(k):
        yield k


def _coequalizer_bases(max_elems: int):
    anti = FinPreorder(["0", "1"], [("0", "0"), ("1", "1")], name="1+1")
    pair = FinPreorder(["p", "q"], [("p", "p"), ("q", "q")], name="{p,q}")
    small = min(max_elems, 2)
    return [
        (chain2(), point(), max_elems),
        (anti, point(), min(max_elems, 3)),
        (vee(), point(), small),
        (wedge(), point(), small),
        (chain2(), pair, small),
    ]


def coequalizer_corpus(max_elems: Optional[int] = None) -> Iterator[LaxCoeqInstance]:
    """Parallel pairs ``(w, a) -> (x, b)`` in lax slices over small preorders.

    The base ``z`` ranges over ``𝟚``, the discrete pair, ``V`` and ``Λ``; the
    source ``w`` is the point, or the discrete pair over ``𝟚``. Every leg
    ``a``, every ``b`` and every unordered pair ``g, h`` with ``b∘g <= a``
    and ``b∘h <= a`` is kept. Only the point over ``𝟚`` reaches
    ``max_elems``; the other bases stop at two or three elements. Over ``Λ``
    some right Kan extensions ``ran_f b`` do not exist.
    """
    max_elems = config.max_elems() if max_elems is None else max_elems
    _check_bound(max_elems, MAX_PREORDER_ELEMS, "preorder size")
    for z, w, n in _coequalizer_bases(max_elems):
        for a in monotone_maps(w, z):
            for x in preorder_corpus(n):
                arrows = list(monotone_maps(w, x))
                for b in monotone_maps(x, z):
                    legal = [g for g in arrows if g.then(b).leq(a)]
                    for i, g in enumerate(legal):
                        for h in legal[i:]:
                            yield LaxCoeqInstance(z, w, a, x, b, g, h)


def corpus_enumerate(kind: str, max_elems: Optional[int] = None, **bounds):
    """Dispatch to the enumeration for ``kind``.

    Raises:
        ValueError: For an unknown kind or ``bounds-too-large``.
    """
    if kind == "preorder":
        return preorder_corpus(max_elems, **bounds)
    if kind == "category":
        return category_corpus(max_elems, **bounds)
    if kind == "pocategory":
        return pocategory_corpus(**bounds)
    raise ValueError(f"Unknown corpus kind {kind!r}.")
