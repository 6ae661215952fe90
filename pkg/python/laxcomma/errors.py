# Copyright © 2024 laxcomma contributors.

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence


@dataclass(frozen=True)
class Violation:
    """A single violated law together with the tuple that witnesses it.

    Args:
        kind (str): The name of the law, e.g. ``"associativity-violation"``.
        witness (tuple): The identifiers that exhibit the failure.
        message (str): A human readable description.
    """

    kind: str
    witness: tuple
    message: str = ""

    def __str__(self):
        witness = ", ".join(map(str, self.witness))
        text = f"{self.kind}({witness})"
        return f"{text}: {self.message}" if self.message else text


class ValidationError(ValueError):
    """Raised when raw data fails the laws of the structure it claims to be.

    The exception keeps every violation found by the full scan, not only the
    first one, in :attr:`violations`.
    """

    def __init__(self, what: str, violations: Sequence[Violation], line=None):
        self.what = what
        self.violations: List[Violation] = list(violations)
        self.line: Optional[int] = line
        lines = "\n".join(f"  {v}" for v in self.violations)
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Invalid {what}{where}:\n{lines}")


class ParseError(ValueError):
    """Raised by the presentation parser with the offending line number."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class SearchBudgetExceeded(RuntimeError):
    """Raised when an exhaustive search visits more nodes than allowed."""

    def __init__(self, limit: int, what: Any = "search"):
        self.limit = limit
        super().__init__(
            f"{what} exceeded the search budget of {limit} nodes "
            "(raise LAXCOMMA_MAX_SEARCH to allow more)."
        )
