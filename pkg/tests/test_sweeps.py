import pytest

from simpson.core import TablePair
from simpson.generate import random_pairs
from simpson.sweeps import CENSUS, CHECKS, PROPERTY_NAMES, SweepResult, run_property, sweep


@pytest.mark.parametrize("name", list(CHECKS))
def test_properties_hold_at_max_entry_3(name):
    r = sweep(name, 3)
    assert r.checked == 3 ** 8
    assert r.passed, r.first_counterexample


def test_thm2_premise_count():
    # the premise is "SP holds", so it applies to exactly the golden SP pairs
    assert sweep("thm2", 3).applicable == 4


def test_census_at_max_entry_3():
    r = sweep(CENSUS, 3)
    assert r.applicable == 4
    assert sum(r.census.values()) == 4


@pytest.mark.parametrize("name", ["thm3", CENSUS])
def test_parallel_matches_serial(name):
    serial = sweep(name, 3)
    parallel = sweep(name, 3, workers=2)
    assert (serial.checked, serial.applicable, serial.violations, serial.census) == \
        (parallel.checked, parallel.applicable, parallel.violations, parallel.census)


def test_first_counterexample_is_earliest():
    def bogus(p):
        return True, p.t1.a != 2

    CHECKS["bogus"] = bogus
    try:
        r = run_property("bogus", random_pairs(1, 500, 3))
    finally:
        del CHECKS["bogus"]
    pairs = list(random_pairs(1, 500, 3))
    first = next(i for i, p in enumerate(pairs) if p.t1.a == 2)
    assert r.first_index == first and r.first_counterexample == pairs[first]


def test_merge_keeps_earliest():
    p = TablePair.from_rows(((1, 1), (1, 1)), ((1, 1), (1, 1)))
    q = TablePair.from_rows(((2, 1), (1, 1)), ((1, 1), (1, 1)))
    a = SweepResult("x", 10, 10, 1, 7, q)
    b = SweepResult("x", 10, 10, 2, 3, p)
    m = a.merge(b)
    assert (m.checked, m.violations, m.first_index, m.first_counterexample) == (20, 3, 3, p)
    assert b.merge(a).first_index == 3


def test_unknown_property():
    with pytest.raises(KeyError):
        run_property("thm99", [])
    assert "thm9-pattern-census" in PROPERTY_NAMES
