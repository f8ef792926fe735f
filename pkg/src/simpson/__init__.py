"""Exact decision, classification and explanation of Simpson's paradox for pairs of 2x2 tables."""

from .classify import (
    ClassLabel,
    DefinitionVerdicts,
    Relation,
    SpVerdict,
    case_of,
    class_of,
    coverage_set,
    definition_verdicts,
    relation_triple,
    sp,
)
from .core import (
    NonPositiveEntry,
    NonPositiveScale,
    Quantities,
    Table2x2,
    TablePair,
    aggregate,
    from_counts,
    quantities,
    scale,
    swap_columns,
    swap_rows,
    transpose,
)

__version__ = "0.1.0"
