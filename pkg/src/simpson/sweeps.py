"""Named properties checked over streams of pairs, with deterministic parallel merge.

A property check maps a pair to ``(applicable, ok)``: whether its premise
held for the pair and, if so, whether the conclusion did too.  The census
property instead tallies pairs into labelled bins.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .classify import Relation, SpVerdict, case_index, compare, relation_triple, sp, sp_of_triple
from .conditions import (
    association_pattern,
    decompose,
    det_sign,
    marginal_pattern_diagnostic,
    mittal_conditions,
    necessary_conditions,
    odds_implications,
    odds_ratio,
    orh,
    positive_association,
    sp_via_association,
    sp_via_odds,
    worh,
)
from .core import TablePair, scale, swap_rows, transpose
from .generate import enumerate_pairs, pair_count

Check = Callable[[TablePair], "tuple[bool, bool]"]


def _sp_routes_agree(p):
    return True, sp(p) == sp_via_odds(p) == sp_via_association(p)


def _necessary(p):
    if not sp(p):
        return False, True
    return True, necessary_conditions(p).all_hold


def _implications(p):
    return True, (sp(p) is SpVerdict.NONE) == odds_implications(p).sp_absent


def _mittal(p):
    if not mittal_conditions(p):
        return False, True
    return True, not sp(p)


def _worh(p):
    weak = worh(p)
    if orh(p) and not weak:
        return True, False
    if not weak:
        return False, True
    return True, not sp(p)


def _association_symmetry(p):
    for t in (p.t1, p.t2, p.aggregate):
        if positive_association(t) != positive_association(_transpose(t)):
            return True, False
        k = odds_ratio(t)
        expected = Relation.GT if k > 1 else Relation.LT if k < 1 else Relation.EQ
        if det_sign(t) is not expected:
            return True, False
    return True, True


def _marginal_nonunit(p):
    if not sp(p):
        return False, True
    pat = association_pattern(p)
    return True, pat.kappa_s1 != 1 and pat.kappa_s2 != 1


# sweeps reuse the same table objects across many pairs, so per-table
# transforms are memoised here to keep their cached rates
_swap_rows = lru_cache(maxsize=1 << 16)(swap_rows)
_transpose = lru_cache(maxsize=1 << 16)(transpose)
_scale = lru_cache(maxsize=1 << 16)(scale)

_SWAP_SP = {SpVerdict.SP1: SpVerdict.SP2, SpVerdict.SP2: SpVerdict.SP1, SpVerdict.NONE: SpVerdict.NONE}
_SCALES = (Fraction(1, 3), 20)


def _transforms(p):
    triple = relation_triple(p)
    case, verdict = case_index(triple), sp_of_triple(triple)
    rows = relation_triple(p.map(_swap_rows))
    if case_index(rows) != 28 - case or sp_of_triple(rows) is not _SWAP_SP[verdict]:
        return True, False
    r1, r2, r3 = triple
    if relation_triple(p.swapped()) != (r2, r1, r3):
        return True, False
    if sp(p.map(_transpose)) is not verdict:
        return True, False
    for delta in _SCALES:
        if relation_triple(TablePair(_scale(p.t1, delta), _scale(p.t2, delta))) != triple:
            return True, False
    return True, True


def _between(x, u, v):
    # x lies in the closed interval spanned by u and v
    r, s = compare(x, u), compare(x, v)
    return r is Relation.EQ or r is not s


def _decomposition(p):
    q = p.quantities
    d = decompose(p)
    ok = (
        d.mu == q.mu and d.nu == q.nu
        and _between(q.mu, q.A1, q.A2)
        and _between(q.nu, q.C1, q.C2)
    )
    return True, ok


CHECKS: dict[str, Check] = {
    "thm2": _necessary,
    "thm3": _sp_routes_agree,
    "thm4": _implications,
    "thm5": _mittal,
    "thm6": _worh,
    "thm7sym": _association_symmetry,
    "sp-marginal-nonunit": _marginal_nonunit,
    "transforms": _transforms,
    "decomposition": _decomposition,
}
CENSUS = "thm9-pattern-census"
PROPERTY_NAMES = tuple(CHECKS) + (CENSUS,)

DESCRIPTIONS = {
    "thm2": "SP pairs have A1 != A2, C1 != C2 and unequal row margins somewhere",
    "thm3": "rate, odds-ratio and association routes give the same SP verdict",
    "thm4": "no SP exactly when both odds-ratio implications hold",
    "thm5": "strictly homogeneous pairs never show SP",
    "thm6": "weakly odds-ratio-homogeneous pairs never show SP",
    "thm7sym": "association is unchanged by transposition and matches the determinant sign",
    "sp-marginal-nonunit": "SP pairs have both marginal odds ratios different from 1",
    "transforms": "row swap, table swap, transpose and uniform scaling act as predicted",
    "decomposition": "mixture weights rebuild mu and nu exactly, inside the sub-population range",
    CENSUS: "association pattern of M with X and Y among SP pairs",
}


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    applicable: int = 0
    violations: int = 0
    first_index: Optional[int] = None
    first_counterexample: Optional[TablePair] = None
    census: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def merge(self, other: SweepResult) -> SweepResult:
        """Combine two partial results; the earliest counterexample wins."""
        out = SweepResult(
            self.name,
            self.checked + other.checked,
            self.applicable + other.applicable,
            self.violations + other.violations,
            census=self.census + other.census,
        )
        firsts = [r for r in (self, other) if r.first_index is not None]
        if firsts:
            best = min(firsts, key=lambda r: r.first_index)
            out.first_index, out.first_counterexample = best.first_index, best.first_counterexample
        return out


def census_key(p: TablePair) -> Optional[tuple[str, str]]:
    diag = marginal_pattern_diagnostic(p)
    if diag.hypothesis is None:
        return None
    return diag.hypothesis.value, diag.kind.value


def run_property(name: str, pairs: Iterable[TablePair], offset: int = 0) -> SweepResult:
    """Check one named property over ``pairs``; ``offset`` numbers the first pair."""
    if name != CENSUS and name not in CHECKS:
        raise KeyError(f"unknown property {name!r}; choose from {', '.join(PROPERTY_NAMES)}")
    result = SweepResult(name)
    if name == CENSUS:
        for p in pairs:
            result.checked += 1
            key = census_key(p)
            if key is not None:
                result.applicable += 1
                result.census[key] += 1
        return result
    check = CHECKS[name]
    for idx, p in enumerate(pairs, start=offset):
        result.checked += 1
        applicable, ok = check(p)
        result.applicable += applicable
        if not ok:
            result.violations += 1
            if result.first_index is None:
                result.first_index, result.first_counterexample = idx, p
    return result


def _run_chunk(args):
    name, max_entry, start, stop = args
    return run_property(name, enumerate_pairs(max_entry, start, stop), offset=start)


def sweep(name: str, max_entry: int, workers: int = 1) -> SweepResult:
    """Run a property over every pair with cells in [1, max_entry].

    With ``workers > 1`` the index range is cut into equal chunks; merging is
    order-independent so the result matches a single-worker run exactly.
    """
    total = pair_count(max_entry)
    if workers <= 1:
        return run_property(name, enumerate_pairs(max_entry))
    n_chunks = workers * 4
    bounds = [total * i // n_chunks for i in range(n_chunks + 1)]
    tasks = [(name, max_entry, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_chunk, tasks))
    result = SweepResult(name)
    for part in parts:
        result = result.merge(part)
    return result
