# Copyright © 2024 laxcomma contributors.

"""Finite category theory: comma objects, lax slices, change of base and
Kan extensions, with exhaustive checks over small corpora."""

from laxcomma.errors import ParseError, SearchBudgetExceeded, ValidationError, Violation
from laxcomma.fincat import (
    FinCategory,
    FinFunctor,
    FinPreorder,
    MonotoneMap,
    NatTrans,
    validate_category,
    validate_functor,
    validate_nat,
)
from laxcomma.parser import load_spec_file, parse_spec_file
from laxcomma.suites import run_suite

__version__ = "0.1.0"
