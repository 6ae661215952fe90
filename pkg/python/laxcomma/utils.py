# Copyright © 2024 laxcomma contributors.

from typing import Any, Hashable, Iterable, List


def format_id(x: Hashable) -> str:
    """Render an identifier as text.

    Identifiers built by the constructions are nested tuples (pairs in a
    product, triples in a comma category); they are rendered with parentheses
    and commas so that the output is stable across runs.

    .. code-block:: python

        from laxcomma.utils import format_id

        print(format_id(("0", ("u", "id1"))))
        # (0,(u,id1))
    """
    if isinstance(x, tuple):
        return "(" + ",".join(format_id(y) for y in x) + ")"
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(format_id(y) for y in x)) + "}"
    return str(x)


def ordered(items: Iterable[Hashable]) -> List[Hashable]:
    """Sort identifiers of mixed types by their rendered form."""
    return sorted(items, key=format_id)


def tree_map(fn, tree, *rest, is_leaf=None):
    """Applies ``fn`` to the leaves of the python tree ``tree`` and
    returns a new collection with the results.

    If ``rest`` is provided, every item is assumed to be a superset of ``tree``
    and the corresponding leaves are provided as extra positional arguments to
    ``fn``.

    Sets are traversed in the order of their rendered elements and come back
    as lists, which is what the JSON reports need.

    Args:
        fn (Callable): The function that processes the leaves of the tree
        tree (Any): The main python tree that will be iterated upon
        rest (Tuple[Any]): Extra trees to be iterated together with tree
        is_leaf (Optional[Callable]): An optional callable that returns True if
            the passed object is considered a leaf or False otherwise.

    Returns:
        A python tree with the new values returned by ``fn``.
    """
    if is_leaf is not None and is_leaf(tree):
        return fn(tree, *rest)
    elif isinstance(tree, (list, tuple)):
        TreeType = type(tree)
        return TreeType(
            tree_map(fn, child, *(r[i] for r in rest), is_leaf=is_leaf)
            for i, child in enumerate(tree)
        )
    elif isinstance(tree, dict):
        return {
            k: tree_map(fn, child, *(r[k] for r in rest), is_leaf=is_leaf)
            for k, child in tree.items()
        }
    elif isinstance(tree, (set, frozenset)):
        return [tree_map(fn, child, is_leaf=is_leaf) for child in ordered(tree)]
    else:
        return fn(tree, *rest)


def to_jsonable(tree: Any) -> Any:
    """Convert a report tree to plain JSON values.

    Identifiers that are not JSON scalars are rendered with :func:`format_id`;
    tuples of identifiers become strings rather than arrays so that a pair
    identifier stays a single value.
    """

    def leaf(x):
        if x is None or isinstance(x, (bool, int, float, str)):
            return x
        return format_id(x)

    return tree_map(leaf, tree, is_leaf=lambda x: isinstance(x, tuple))
