# Copyright © 2024 laxcomma contributors.

import os

from laxcomma.errors import SearchBudgetExceeded

DEFAULT_MAX_SEARCH = 10**7
DEFAULT_MAX_ELEMS = 4


def max_search() -> int:
    """The node cap for exhaustive searches, from ``LAXCOMMA_MAX_SEARCH``."""
    value = os.environ.get("LAXCOMMA_MAX_SEARCH")
    if value is None:
        return DEFAULT_MAX_SEARCH
    try:
        limit = int(float(value))
    except ValueError:
        raise ValueError(f"LAXCOMMA_MAX_SEARCH must be a number, got {value!r}.")
    if limit <= 0:
        raise ValueError(f"LAXCOMMA_MAX_SEARCH must be positive, got {limit}.")
    return limit


def max_elems() -> int:
    """The default element bound of the preorder corpus."""
    return int(os.environ.get("LAXCOMMA_MAX_ELEMS", DEFAULT_MAX_ELEMS))


def log_level() -> str:
    return os.environ.get("LAXCOMMA_LOG_LEVEL", "WARNING").upper()


class SearchBudget:
    """Counts the nodes visited by an exhaustive search.

    A budget is shared by all the enumerations that make up one operation, so
    that the cap applies to the operation as a whole.

    Args:
        limit (int, optional): The maximum number of nodes. Default: the value
            of ``LAXCOMMA_MAX_SEARCH`` or ``10**7``.
    """

    def __init__(self, limit: int = None):
        self.limit = max_search() if limit is None else limit
        self.used = 0

    def tick(self, n: int = 1, what: str = "search"):
        self.used += n
        if self.used > self.limit:
            raise SearchBudgetExceeded(self.limit, what)


def ensure_budget(budget: SearchBudget = None) -> SearchBudget:
    return SearchBudget() if budget is None else budget
