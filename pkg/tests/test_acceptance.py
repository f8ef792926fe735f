"""Acceptance criteria, each timed against its budget.

Every test prints one line ``[PASS|FAIL] criterion N ...`` straight to the
terminal.  The exhaustive sweeps use all 4**8 = 65,536 pairs with cells in
[1, 4] plus 100,000 random pairs with cells in [1, 9] (seed 20231016).
"""

import time

import pytest

from simpson.classify import case_of, coverage_set
from simpson.conditions import Hypothesis, PatternKind, XLink, YLink, marginal_pattern_diagnostic
from simpson.core import TablePair, scale
from simpson.generate import (
    FIGURE3,
    LITERATURE_NAMES,
    TOGGLE_CASES,
    enumerate_pairs,
    figure3_example,
    is_monotonic,
    literature_example,
    random_pairs,
    representative,
    toggling_sequence,
)
from simpson.sweeps import CENSUS, run_property

ENUM_MAX = 4
RANDOM_COUNT = 100_000
RANDOM_MAX = 9
SEED = 20231016


@pytest.fixture(scope="module")
def random_sample():
    t0 = time.perf_counter()
    pairs = list(random_pairs(SEED, RANDOM_COUNT, RANDOM_MAX))
    return pairs, time.perf_counter() - t0


@pytest.fixture
def report(capsys):
    lines = []

    def emit(number, ok, elapsed, limit, detail=""):
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        line = f"[{status}] criterion {number:2d}  {elapsed:6.2f}s / {limit:g}s  {detail}"
        lines.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok and within

    return emit


def _sweep(name, sample):
    pairs, gen_time = sample
    t0 = time.perf_counter()
    enum = run_property(name, enumerate_pairs(ENUM_MAX))
    rand = run_property(name, pairs)
    return enum, rand, time.perf_counter() - t0 + gen_time


def _summary(enum, rand):
    return (f"enum {enum.checked} pairs / {enum.violations} violations; "
            f"random {rand.checked} pairs / {rand.violations} violations")


# the printed realising pairs, typed out again apart from the package copy
PRINTED = {
    1: ((3, 1, 1, 1), (3, 1, 1, 1)),
    2: ((3, 1, 6, 3), (5, 7, 1, 4)),
    3: ((5, 3, 10, 10), (1, 19, 1, 20)),
    4: ((3, 1, 1, 1), (2, 2, 3, 3)),
    5: ((2, 8, 1, 5), (4, 4, 3, 3)),
    6: ((2, 1, 3, 2), (3, 3, 1, 1)),
    7: ((10, 5, 3, 5), (1, 2, 1, 1)),
    8: ((2, 1, 1, 3), (1, 5, 1, 1)),
    9: ((3, 2, 1, 1), (1, 5, 3, 2)),
    13: ((2, 2, 3, 3), (1, 2, 2, 4)),
    14: ((2, 2, 3, 3), (2, 2, 2, 2)),
}


def test_criterion_01_realizability(report):
    t0 = time.perf_counter()
    realised = all(case_of(representative(c)) == c for c in range(1, 28))
    verbatim = set(FIGURE3) == set(PRINTED) and all(
        figure3_example(c).t1.cells == PRINTED[c][0] and figure3_example(c).t2.cells == PRINTED[c][1]
        for c in PRINTED
    )
    ok = realised and verbatim
    assert report(1, ok, time.perf_counter() - t0, 1, "27 cases realised, 11 printed pairs verbatim")


def test_criterion_02_definition_coverage(report):
    t0 = time.perf_counter()
    m91 = coverage_set("M91")
    quoted_inclusive = {2, 3, 5, 6, *range(11, 18), 22, 23, 25, 26}
    ok = (
        coverage_set("B72") == {3, 6, 12, 15}
        and coverage_set("BNGBB11") == {2, 3, 5, 6, 11, 12, 15}
        and coverage_set("SP") == {2, 3, 25, 26}
        and m91 == quoted_inclusive
    )
    detail = f"M91 = {sorted(m91)} (13 and 14 included)"
    assert report(2, ok, time.perf_counter() - t0, 1, detail)


def test_criterion_03_sp_routes_agree(report, random_sample):
    enum, rand, elapsed = _sweep("thm3", random_sample)
    ok = enum.passed and rand.passed and enum.checked == 65_536 and rand.checked == RANDOM_COUNT
    assert report(3, ok, elapsed, 10, _summary(enum, rand))


def test_criterion_04_necessary_conditions(report, random_sample):
    enum, rand, elapsed = _sweep("thm2", random_sample)
    ok = enum.passed and rand.passed and enum.applicable == 72
    assert report(4, ok, elapsed, 10, _summary(enum, rand) + f"; SP pairs {enum.applicable}+{rand.applicable}")


def test_criterion_05_sufficiency(report, random_sample):
    e5, r5, t5 = _sweep("thm5", random_sample)
    e6, r6, t6 = _sweep("thm6", random_sample)
    # the sample is generated once, so count its time once
    elapsed = t5 + t6 - random_sample[1]
    ok = all(r.passed for r in (e5, r5, e6, r6))
    detail = (f"Mittal-homogeneous {e5.applicable}+{r5.applicable} pairs, "
              f"WORH {e6.applicable}+{r6.applicable} pairs, "
              f"{e5.violations + r5.violations + e6.violations + r6.violations} with SP")
    assert report(5, ok, elapsed, 10, detail)


def test_criterion_06_marginals_not_independent(report, random_sample):
    enum, rand, elapsed = _sweep("sp-marginal-nonunit", random_sample)
    ok = enum.passed and rand.passed
    assert report(6, ok, elapsed, 10, _summary(enum, rand))


def test_criterion_07_pattern_census(report, random_sample):
    enum, rand, elapsed = _sweep(CENSUS, random_sample)
    t0 = time.perf_counter()
    diag = marginal_pattern_diagnostic(literature_example("blyth1971").pair)
    elapsed += time.perf_counter() - t0
    blyth_ok = (
        diag.hypothesis is Hypothesis.POSITIVE
        and diag.pattern.x_assoc is XLink.M_WITH_X
        and diag.pattern.y_assoc is YLink.M_WITH_NOT_Y
        and diag.kind is PatternKind.MIXED
    )
    census = enum.census + rand.census
    table = ", ".join(f"{h} {k}: {n}" for (h, k), n in sorted(census.items()))
    # the census is a record; only its production and the Blyth regression are checked
    ok = blyth_ok and sum(census.values()) == enum.applicable + rand.applicable > 0
    assert report(7, ok, elapsed, 10, f"Blyth (M~X, M~notY); census {table}")


def test_criterion_08_literature(report):
    t0 = time.perf_counter()
    expected = {"simpson1951": 26, "blyth1971": 3, "gardner1976": 3,
                "lindley_novick1981": 25, "hand1994": 25}
    got = {n: case_of(literature_example(n).pair) for n in LITERATURE_NAMES}
    ok = got == expected
    assert report(8, ok, time.perf_counter() - t0, 1, " ".join(f"{n}->{c}" for n, c in got.items()))


def test_criterion_09_toggling(report):
    t0 = time.perf_counter()
    seq = toggling_sequence(16)
    cases = [case_of(p) for p in seq]
    scaled = all(
        seq[k] == TablePair(scale(seq[k - 4].t1, 20), scale(seq[k - 4].t2, 20))
        for k in range(4, 16)
    )
    ok = bool(is_monotonic(seq)) and cases == [TOGGLE_CASES[k % 4] for k in range(16)] and scaled
    assert report(9, ok, time.perf_counter() - t0, 1, f"cases {cases}")


def test_criterion_10_transforms(report):
    t0 = time.perf_counter()
    enum = run_property("transforms", enumerate_pairs(ENUM_MAX))
    table_swap = all(case_of(representative(c).swapped()) == c + 6 for c in (4, 5, 6))
    ok = enum.passed and enum.checked == 65_536 and table_swap
    assert report(10, ok, time.perf_counter() - t0, 10,
                  f"enum {enum.checked} pairs / {enum.violations} violations")


def test_criterion_11_decomposition(report, random_sample):
    enum, rand, elapsed = _sweep("decomposition", random_sample)
    ok = enum.passed and rand.passed
    assert report(11, ok, elapsed, 10, _summary(enum, rand))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
