"""Odds-ratio characterisations, homogeneity conditions and association checks.

Each checker works on exact rationals and returns either a verdict enum or a
small frozen report carrying the values it compared, so callers can show why
a condition held.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .classify import Relation, SpVerdict, compare
from .core import Table2x2, TablePair


def odds_ratio(t: Table2x2) -> Fraction:
    """Cross-product ratio ad / bc (cached on the table)."""
    return t.odds_ratio


def det_sign(t: Table2x2) -> Relation:
    """Sign of the determinant ad - bc, as a relation against zero."""
    ad, bc = t.cross_products
    return compare(ad - bc, 0)


def sp_of_odds(k1, k2, k_agg) -> SpVerdict:
    r1, r2, r = compare(k1, 1), compare(k2, 1), compare(k_agg, 1)
    if r1 is Relation.GT and r2 is Relation.GT and r is not Relation.GT:
        return SpVerdict.SP1
    if r1 is Relation.LT and r2 is Relation.LT and r is not Relation.LT:
        return SpVerdict.SP2
    return SpVerdict.NONE


def sp_via_odds(p: TablePair) -> SpVerdict:
    return sp_of_odds(odds_ratio(p.t1), odds_ratio(p.t2), odds_ratio(p.aggregate))


@dataclass(frozen=True)
class OddsImplications:
    """The two implications whose conjunction is equivalent to the absence of SP."""

    positive_preserved: bool  # k1 > 1 and k2 > 1  =>  k_agg > 1
    negative_preserved: bool  # k1 < 1 and k2 < 1  =>  k_agg < 1

    @property
    def sp_absent(self) -> bool:
        return self.positive_preserved and self.negative_preserved


def odds_implications(p: TablePair) -> OddsImplications:
    k1, k2, k = odds_ratio(p.t1), odds_ratio(p.t2), odds_ratio(p.aggregate)
    return OddsImplications(
        positive_preserved=not (k1 > 1 and k2 > 1) or k > 1,
        negative_preserved=not (k1 < 1 and k2 < 1) or k < 1,
    )


@dataclass(frozen=True)
class NecessaryConditions:
    a_rates_differ: bool
    c_rates_differ: bool
    margins_differ: bool
    A1: Fraction
    A2: Fraction
    C1: Fraction
    C2: Fraction

    @property
    def all_hold(self) -> bool:
        return self.a_rates_differ and self.c_rates_differ and self.margins_differ


def necessary_conditions(p: TablePair) -> NecessaryConditions:
    """Conditions every SP instance satisfies; failing any one rules SP out."""
    q = p.quantities
    return NecessaryConditions(
        a_rates_differ=q.A1 != q.A2,
        c_rates_differ=q.C1 != q.C2,
        margins_differ=q.alpha1 != q.gamma1 or q.alpha2 != q.gamma2,
        A1=q.A1, A2=q.A2, C1=q.C1, C2=q.C2,
    )


@dataclass(frozen=True)
class MittalReport:
    holds: bool
    which: frozenset[int]
    # (max side, min side) for conditions 1..4
    witnesses: tuple[tuple[Fraction, Fraction], ...]
    # the fourth condition with the mixed subscripts min(a1/c2, a2/c2)
    printed_fourth: bool


def _separated(top, bottom) -> bool:
    """max(top ratios) < min(bottom ratios), each ratio given as (num, den)."""
    return all(n1 * d2 < n2 * d1 for n1, d1 in top for n2, d2 in bottom)


def mittal_conditions(p: TablePair) -> frozenset[int]:
    """Which of the four homogeneity conditions hold (numbered 1-4).

    Ratios are compared by cross-multiplication, which is exact for any
    positive rationals and avoids building fractions in sweeps.
    """
    (a1, b1, c1, d1), (a2, b2, c2, d2) = p.t1.cells, p.t2.cells
    ab, cd = ((a1, b1), (a2, b2)), ((c1, d1), (c2, d2))
    ac, bd = ((a1, c1), (a2, c2)), ((b1, d1), (b2, d2))
    pairs = ((ab, cd), (cd, ab), (ac, bd), (bd, ac))
    return frozenset(i for i, (lo, hi) in enumerate(pairs, start=1) if _separated(lo, hi))


def mittal_homogeneous(p: TablePair) -> MittalReport:
    """Strict homogeneity: one of four max/min separations of cell ratios.

    The fourth condition uses ``min(a1/c1, a2/c2)``, mirroring the third.
    ``printed_fourth`` evaluates the ``min(a1/c2, a2/c2)`` variant for
    comparison only.
    """
    (a1, b1, c1, d1), (a2, b2, c2, d2) = p.t1.cells, p.t2.cells
    ab = (Fraction(a1, b1), Fraction(a2, b2))
    cd = (Fraction(c1, d1), Fraction(c2, d2))
    ac = (Fraction(a1, c1), Fraction(a2, c2))
    bd = (Fraction(b1, d1), Fraction(b2, d2))
    witnesses = (
        (max(ab), min(cd)),
        (max(cd), min(ab)),
        (max(ac), min(bd)),
        (max(bd), min(ac)),
    )
    which = mittal_conditions(p)
    printed_fourth = max(bd) < min(Fraction(a1, c2), Fraction(a2, c2))
    return MittalReport(bool(which), which, witnesses, printed_fourth)


def orh(p: TablePair) -> bool:
    k1, k2, k = odds_ratio(p.t1), odds_ratio(p.t2), odds_ratio(p.aggregate)
    return k1 == k2 == k


def worh(p: TablePair) -> bool:
    k = odds_ratio(p.aggregate)
    return odds_ratio(p.t1) == k or odds_ratio(p.t2) == k


class Association(enum.Enum):
    X_WITH_Y = "X~Y"
    X_WITH_NOT_Y = "X~notY"
    NEITHER = "neither"


_ASSOCIATION = {
    Relation.GT: Association.X_WITH_Y,
    Relation.LT: Association.X_WITH_NOT_Y,
    Relation.EQ: Association.NEITHER,
}


def association_of_odds(k) -> Association:
    return _ASSOCIATION[compare(k, 1)]


def positive_association(t: Table2x2) -> Association:
    """Row/column association; symmetric in rows and columns since it depends on ad/bc only."""
    return association_of_odds(odds_ratio(t))


def sp_via_association(p: TablePair) -> SpVerdict:
    s1 = positive_association(p.t1)
    s2 = positive_association(p.t2)
    whole = positive_association(p.aggregate)
    for direction, verdict in ((Association.X_WITH_Y, SpVerdict.SP1),
                               (Association.X_WITH_NOT_Y, SpVerdict.SP2)):
        if s1 is direction and s2 is direction and whole is not direction:
            return verdict
    return SpVerdict.NONE


@dataclass(frozen=True)
class MarginalTables:
    s1: Table2x2  # M against Y
    s2: Table2x2  # M against X


def marginal_tables(p: TablePair) -> MarginalTables:
    (a1, b1, c1, d1), (a2, b2, c2, d2) = p.t1.cells, p.t2.cells
    return MarginalTables(
        s1=Table2x2(a1 + c1, b1 + d1, a2 + c2, b2 + d2),
        s2=Table2x2(a1 + b1, c1 + d1, a2 + b2, c2 + d2),
    )


class XLink(enum.Enum):
    M_WITH_X = "M~X"
    M_WITH_NOT_X = "M~notX"
    INDEPENDENT = "independent"


class YLink(enum.Enum):
    M_WITH_Y = "M~Y"
    M_WITH_NOT_Y = "M~notY"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class AssociationPattern:
    x_assoc: XLink
    y_assoc: YLink
    kappa_s1: Fraction
    kappa_s2: Fraction


def association_pattern(p: TablePair) -> AssociationPattern:
    m = marginal_tables(p)
    k1, k2 = odds_ratio(m.s1), odds_ratio(m.s2)
    x = {Relation.GT: XLink.M_WITH_X, Relation.LT: XLink.M_WITH_NOT_X,
         Relation.EQ: XLink.INDEPENDENT}[compare(k2, 1)]
    y = {Relation.GT: YLink.M_WITH_Y, Relation.LT: YLink.M_WITH_NOT_Y,
         Relation.EQ: YLink.INDEPENDENT}[compare(k1, 1)]
    return AssociationPattern(x, y, kappa_s1=k1, kappa_s2=k2)


class PatternKind(enum.Enum):
    A = "a"  # M~X and M~Y
    B = "b"  # M~notX and M~notY
    MIXED = "mixed"  # M~X with M~notY, or M~notX with M~Y
    DEGENERATE = "degenerate"  # some marginal odds ratio equals 1


def pattern_kind(pat: AssociationPattern) -> PatternKind:
    if pat.x_assoc is XLink.INDEPENDENT or pat.y_assoc is YLink.INDEPENDENT:
        return PatternKind.DEGENERATE
    if pat.x_assoc is XLink.M_WITH_X and pat.y_assoc is YLink.M_WITH_Y:
        return PatternKind.A
    if pat.x_assoc is XLink.M_WITH_NOT_X and pat.y_assoc is YLink.M_WITH_NOT_Y:
        return PatternKind.B
    return PatternKind.MIXED


class Hypothesis(enum.Enum):
    POSITIVE = "k1>1,k2>1,SP"
    NEGATIVE = "k1<1,k2<1,SP"


@dataclass(frozen=True)
class MarginalPatternDiagnostic:
    """Observed M-association pattern for an SP pair.

    ``hypothesis`` is None unless the pair exhibits SP; the branch records
    whether both sub-population odds ratios exceed 1 or fall below it.
    ``disjunction_holds`` reports whether the pattern is (a) or (b).  Nothing
    here is enforced; it is a record for census purposes.
    """

    hypothesis: Hypothesis | None
    pattern: AssociationPattern
    kind: PatternKind
    disjunction_holds: bool | None


def marginal_pattern_diagnostic(p: TablePair) -> MarginalPatternDiagnostic:
    k1, k2 = odds_ratio(p.t1), odds_ratio(p.t2)
    verdict = sp_of_odds(k1, k2, odds_ratio(p.aggregate))
    hyp = None
    if verdict is SpVerdict.SP1:
        hyp = Hypothesis.POSITIVE
    elif verdict is SpVerdict.SP2:
        hyp = Hypothesis.NEGATIVE
    pat = association_pattern(p)
    kind = pattern_kind(pat)
    holds = None if hyp is None else kind in (PatternKind.A, PatternKind.B)
    return MarginalPatternDiagnostic(hyp, pat, kind, holds)


@dataclass(frozen=True)
class Decomposition:
    w_m_given_x: Fraction
    w_m_given_notx: Fraction
    A1: Fraction
    A2: Fraction
    C1: Fraction
    C2: Fraction
    mu: Fraction
    nu: Fraction

    @property
    def w_notm_given_x(self) -> Fraction:
        return 1 - self.w_m_given_x

    @property
    def w_notm_given_notx(self) -> Fraction:
        return 1 - self.w_m_given_notx


def _mix(x: Fraction, y: Fraction, w_num, w_den) -> Fraction:
    """x w + y (1 - w) for w = w_num / w_den, as a single exact fraction."""
    xn, xd, yn, yd = x.numerator, x.denominator, y.numerator, y.denominator
    return Fraction(xn * yd * w_num + yn * xd * (w_den - w_num), xd * yd * w_den)


def decompose(p: TablePair) -> Decomposition:
    """Write mu and nu as mixtures of the sub-population rates.

    mu = A1 Pr[M|X] + A2 Pr[notM|X], nu = C1 Pr[M|notX] + C2 Pr[notM|notX].
    The returned mu and nu are rebuilt from the weights, not copied.
    """
    q = p.quantities
    x_total = q.alpha1 + q.alpha2
    notx_total = q.gamma1 + q.gamma2
    return Decomposition(
        w_m_given_x=Fraction(q.alpha1, x_total),
        w_m_given_notx=Fraction(q.gamma1, notx_total),
        A1=q.A1, A2=q.A2, C1=q.C1, C2=q.C2,
        mu=_mix(q.A1, q.A2, q.alpha1, x_total),
        nu=_mix(q.C1, q.C2, q.gamma1, notx_total),
    )
