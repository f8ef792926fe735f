"""Relation triples, the 27 cases, their classes and the competing SP definitions."""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields

from .core import TablePair


class Relation(enum.Enum):
    GT = ">"
    EQ = "="
    LT = "<"

    @property
    def index(self) -> int:
        return _REL_INDEX[self]

    def flipped(self) -> Relation:
        return _FLIP[self]


_REL_INDEX = {Relation.GT: 0, Relation.EQ: 1, Relation.LT: 2}
_FLIP = {Relation.GT: Relation.LT, Relation.EQ: Relation.EQ, Relation.LT: Relation.GT}
_BY_INDEX = (Relation.GT, Relation.EQ, Relation.LT)


def compare(x, y) -> Relation:
    """Exact three-way comparison of two rationals (int or Fraction)."""
    # sign of x - y via integer cross-multiplication; denominators are positive
    diff = x.numerator * y.denominator - y.numerator * x.denominator
    if diff > 0:
        return Relation.GT
    if diff < 0:
        return Relation.LT
    return Relation.EQ


Triple = tuple[Relation, Relation, Relation]


class ClassLabel(enum.Enum):
    ALIGNED = "Aligned"
    WEAK_PARADOX = "Weak paradox"
    PARADOX = "Paradox"
    CLASS0 = "Class-0"
    CLASS1 = "Class-1"
    CLASS2 = "Class-2"
    CLASS3 = "Class-3"
    CLASS4 = "Class-4"
    CLASS5 = "Class-5"
    CLASS6 = "Class-6"


_CLASS_OF_CASE: dict[int, ClassLabel] = {}
for _label, _cases in (
    (ClassLabel.ALIGNED, (1, 27)),
    (ClassLabel.WEAK_PARADOX, (2, 26)),
    (ClassLabel.PARADOX, (3, 25)),
    (ClassLabel.CLASS0, (14,)),
    (ClassLabel.CLASS1, (7, 9, 19, 21)),
    (ClassLabel.CLASS2, (4, 10, 18, 24)),
    (ClassLabel.CLASS3, (5, 11, 17, 23)),
    (ClassLabel.CLASS4, (6, 12, 16, 22)),
    (ClassLabel.CLASS5, (8, 20)),
    (ClassLabel.CLASS6, (13, 15)),
):
    for _case in _cases:
        _CLASS_OF_CASE[_case] = _label


class SpVerdict(enum.Enum):
    NONE = "none"
    SP1 = "SP1"
    SP2 = "SP2"

    def __bool__(self) -> bool:
        return self is not SpVerdict.NONE


def relation_triple(p: TablePair) -> Triple:
    """Compare A1 vs C1, A2 vs C2 and mu vs nu exactly."""
    return (_rate_relation(p.t1), _rate_relation(p.t2), _rate_relation(p.aggregate))


def _rate_relation(t) -> Relation:
    # a/(a+b) vs c/(c+d) with both denominators cleared
    return compare(t.a * t.bottom_total, t.c * t.top_total)


def case_index(triple: Triple) -> int:
    r1, r2, r3 = triple
    return 9 * r1.index + 3 * r2.index + r3.index + 1


def triple_of_case(case: int) -> Triple:
    if not 1 <= case <= 27:
        raise ValueError(f"case must be in 1..27, got {case}")
    i = case - 1
    return (_BY_INDEX[i // 9], _BY_INDEX[(i // 3) % 3], _BY_INDEX[i % 3])


def case_of(p: TablePair) -> int:
    return case_index(relation_triple(p))


def class_of(case: int) -> ClassLabel:
    if case not in _CLASS_OF_CASE:
        raise ValueError(f"case must be in 1..27, got {case}")
    return _CLASS_OF_CASE[case]


def sp_of_triple(triple: Triple) -> SpVerdict:
    r1, r2, r3 = triple
    if r1 is Relation.GT and r2 is Relation.GT and r3 is not Relation.GT:
        return SpVerdict.SP1
    if r1 is Relation.LT and r2 is Relation.LT and r3 is not Relation.LT:
        return SpVerdict.SP2
    return SpVerdict.NONE


def sp(p: TablePair) -> SpVerdict:
    return sp_of_triple(relation_triple(p))


@dataclass(frozen=True)
class DefinitionVerdicts:
    B72: bool
    B72Prime: bool
    ExpB72: bool
    M91: bool
    BNGBB11: bool
    BNGBB11Prime: bool
    ExpBNGBB11: bool
    SP: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFINITION_NAMES = tuple(f.name for f in fields(DefinitionVerdicts))


def verdicts_of_triple(triple: Triple) -> DefinitionVerdicts:
    r1, r2, r3 = triple
    GT, EQ, LT = Relation.GT, Relation.EQ, Relation.LT
    ge1, ge2 = r1 is not LT, r2 is not LT
    le1, le2 = r1 is not GT, r2 is not GT

    b72 = ge1 and ge2 and r3 is LT
    b72p = le1 and le2 and r3 is GT
    m91 = (ge1 and ge2 and r3 is not GT) or (le1 and le2 and r3 is not LT)
    # one of the three comparisons must be strict
    some_strict = triple != (EQ, EQ, EQ)
    bngbb = ge1 and ge2 and r3 is not GT and some_strict
    bngbbp = le1 and le2 and r3 is not LT and some_strict
    return DefinitionVerdicts(
        B72=b72,
        B72Prime=b72p,
        ExpB72=b72 or b72p,
        M91=m91,
        BNGBB11=bngbb,
        BNGBB11Prime=bngbbp,
        ExpBNGBB11=bngbb or bngbbp,
        SP=bool(sp_of_triple(triple)),
    )


def definition_verdicts(p: TablePair) -> DefinitionVerdicts:
    return verdicts_of_triple(relation_triple(p))


def coverage_set(name: str) -> frozenset[int]:
    """Cases whose stored representative satisfies the named definition."""
    from .generate import representative

    if name not in DEFINITION_NAMES:
        raise ValueError(f"unknown definition {name!r}; expected one of {DEFINITION_NAMES}")
    return frozenset(
        case for case in range(1, 28)
        if getattr(definition_verdicts(representative(case)), name)
    )
