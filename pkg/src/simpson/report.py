"""Full analysis of one pair, rendered as JSON or plain text."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    ClassLabel,
    DefinitionVerdicts,
    Relation,
    SpVerdict,
    case_index,
    class_of,
    definition_verdicts,
    relation_triple,
    sp,
)
from .conditions import (
    AssociationPattern,
    Decomposition,
    MarginalPatternDiagnostic,
    MarginalTables,
    MittalReport,
    NecessaryConditions,
    decompose,
    det_sign,
    marginal_pattern_diagnostic,
    marginal_tables,
    mittal_homogeneous,
    necessary_conditions,
    odds_ratio,
    orh,
    sp_via_association,
    sp_via_odds,
    worh,
)
from .core import CELLS, Quantities, Table2x2, TablePair
from .io import pair_to_json, rational_json


@dataclass(frozen=True)
class AnalysisReport:
    pair: TablePair
    quantities: Quantities
    triple: tuple[Relation, Relation, Relation]
    case: int
    class_label: ClassLabel
    verdict: SpVerdict
    verdict_via_odds: SpVerdict
    verdict_via_association: SpVerdict
    definitions: DefinitionVerdicts
    odds: tuple[Fraction, Fraction, Fraction]
    det_signs: tuple[Relation, Relation, Relation]
    necessary: NecessaryConditions
    mittal: MittalReport
    orh: bool
    worh: bool
    marginals: MarginalTables
    pattern: AssociationPattern
    diagnostic: MarginalPatternDiagnostic
    decomposition: Decomposition

    @property
    def consistent(self) -> bool:
        return self.verdict == self.verdict_via_odds == self.verdict_via_association


def analyze(p: TablePair) -> AnalysisReport:
    triple = relation_triple(p)
    case = case_index(triple)
    tables = (p.t1, p.t2, p.aggregate)
    diag = marginal_pattern_diagnostic(p)
    return AnalysisReport(
        pair=p,
        quantities=p.quantities,
        triple=triple,
        case=case,
        class_label=class_of(case),
        verdict=sp(p),
        verdict_via_odds=sp_via_odds(p),
        verdict_via_association=sp_via_association(p),
        definitions=definition_verdicts(p),
        odds=tuple(odds_ratio(t) for t in tables),
        det_signs=tuple(det_sign(t) for t in tables),
        necessary=necessary_conditions(p),
        mittal=mittal_homogeneous(p),
        orh=orh(p),
        worh=worh(p),
        marginals=marginal_tables(p),
        pattern=diag.pattern,
        diagnostic=diag,
        decomposition=decompose(p),
    )


def _table_json(t: Table2x2) -> dict:
    return {c: rational_json(getattr(t, c)) for c in CELLS}


def to_json(r: AnalysisReport) -> dict:
    q = r.quantities
    d = r.decomposition
    return {
        "input": pair_to_json(r.pair),
        "aggregate": _table_json(r.pair.aggregate),
        "quantities": {
            name: rational_json(getattr(q, name))
            for name in ("alpha1", "alpha2", "gamma1", "gamma2", "A1", "A2", "C1", "C2", "mu", "nu")
        },
        "relations": [rel.value for rel in r.triple],
        "case": r.case,
        "class": r.class_label.value,
        "sp": r.verdict.value,
        "sp_routes": {
            "definition": r.verdict.value,
            "odds_ratio": r.verdict_via_odds.value,
            "association": r.verdict_via_association.value,
        },
        "definitions": r.definitions.as_dict(),
        "odds_ratios": {
            name: rational_json(k) for name, k in zip(("t1", "t2", "aggregate"), r.odds)
        },
        "det_signs": dict(zip(("t1", "t2", "aggregate"), (s.value for s in r.det_signs))),
        "necessary_conditions": {
            "a_rates_differ": r.necessary.a_rates_differ,
            "c_rates_differ": r.necessary.c_rates_differ,
            "margins_differ": r.necessary.margins_differ,
        },
        "homogeneity": {
            "mittal": {
                "holds": r.mittal.holds,
                "which": sorted(r.mittal.which),
                "witnesses": [[rational_json(lo), rational_json(hi)] for lo, hi in r.mittal.witnesses],
                "printed_fourth": r.mittal.printed_fourth,
            },
            "orh": r.orh,
            "worh": r.worh,
        },
        "marginal_tables": {"s1": _table_json(r.marginals.s1), "s2": _table_json(r.marginals.s2)},
        "association_pattern": {
            "x": r.pattern.x_assoc.value,
            "y": r.pattern.y_assoc.value,
            "kappa_s1": rational_json(r.pattern.kappa_s1),
            "kappa_s2": rational_json(r.pattern.kappa_s2),
        },
        "pattern_diagnostic": {
            "hypothesis": r.diagnostic.hypothesis.value if r.diagnostic.hypothesis else None,
            "kind": r.diagnostic.kind.value,
            "disjunction_holds": r.diagnostic.disjunction_holds,
        },
        "decomposition": {
            "w_m_given_x": rational_json(d.w_m_given_x),
            "w_m_given_notx": rational_json(d.w_m_given_notx),
            "mu": rational_json(d.mu),
            "nu": rational_json(d.nu),
        },
        "consistent": r.consistent,
    }


def _fmt(x) -> str:
    q = Fraction(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q} (~{float(q):.6g})"


def to_text(r: AnalysisReport) -> str:
    q = r.quantities
    d = r.decomposition
    p = r.pair
    r1, r2, r3 = (rel.value for rel in r.triple)
    lines = [
        f"T1 = {p.t1}   T2 = {p.t2}   T1+T2 = {p.aggregate}",
        "",
        f"A1 = {_fmt(q.A1)}   C1 = {_fmt(q.C1)}   A1 {r1} C1",
        f"A2 = {_fmt(q.A2)}   C2 = {_fmt(q.C2)}   A2 {r2} C2",
        f"mu = {_fmt(q.mu)}   nu = {_fmt(q.nu)}   mu {r3} nu",
        "",
        f"case {r.case} ({r.class_label.value}); Simpson's paradox: {r.verdict.value}",
        "definitions: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in r.definitions.as_dict().items()),
        "odds ratios: " + ", ".join(
            f"{n}={_fmt(k)}" for n, k in zip(("T1", "T2", "T1+T2"), r.odds)
        ),
        "det signs: " + " ".join(s.value for s in r.det_signs),
        f"SP via odds ratios: {r.verdict_via_odds.value}; via association: {r.verdict_via_association.value}",
        "",
        "necessary conditions: A1!=A2 {}, C1!=C2 {}, margins differ {}".format(
            r.necessary.a_rates_differ, r.necessary.c_rates_differ, r.necessary.margins_differ
        ),
        "homogeneity: Mittal {}{}, ORH {}, WORH {}".format(
            r.mittal.holds,
            f" (conditions {sorted(r.mittal.which)})" if r.mittal.which else "",
            r.orh,
            r.worh,
        ),
        f"marginals: S1 = {r.marginals.s1} (kappa {_fmt(r.pattern.kappa_s1)}), "
        f"S2 = {r.marginals.s2} (kappa {_fmt(r.pattern.kappa_s2)})",
        f"association with M: {r.pattern.x_assoc.value}, {r.pattern.y_assoc.value}"
        + (f"  [{r.diagnostic.kind.value} pattern]" if r.diagnostic.hypothesis else ""),
        f"mixture weights: Pr[M|X] = {_fmt(d.w_m_given_x)}, Pr[M|notX] = {_fmt(d.w_m_given_notx)}",
    ]
    return "\n".join(lines)
