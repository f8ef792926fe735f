"""Where table pairs come from.

Worked examples from the literature, one realising pair for each of the 27
cases, the accumulating sequence that toggles between reversal and
alignment, seeded random pairs and the exhaustive small-entry enumerator used
as a brute-force oracle throughout the tests.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterator, Optional, Sequence

from .core import Table2x2, TablePair, scale, swap_rows
from .io import pair_from_json


class UnlistedCase(LookupError):
    pass


class UnknownName(LookupError):
    pass


# Realising pairs printed for cases 1-9, 13 and 14; the rest follow by transforms.
FIGURE3 = {
    1: (((3, 1), (1, 1)), ((3, 1), (1, 1))),
    2: (((3, 1), (6, 3)), ((5, 7), (1, 4))),
    3: (((5, 3), (10, 10)), ((1, 19), (1, 20))),
    4: (((3, 1), (1, 1)), ((2, 2), (3, 3))),
    5: (((2, 8), (1, 5)), ((4, 4), (3, 3))),
    6: (((2, 1), (3, 2)), ((3, 3), (1, 1))),
    7: (((10, 5), (3, 5)), ((1, 2), (1, 1))),
    8: (((2, 1), (1, 3)), ((1, 5), (1, 1))),
    9: (((3, 2), (1, 1)), ((1, 5), (3, 2))),
    13: (((2, 2), (3, 3)), ((1, 2), (2, 4))),
    14: (((2, 2), (3, 3)), ((2, 2), (2, 2))),
}


def figure3_example(case: int) -> TablePair:
    if case not in FIGURE3:
        raise UnlistedCase(
            f"case {case} has no printed example; use representative({case})"
        )
    rows1, rows2 = FIGURE3[case]
    return TablePair.from_rows(rows1, rows2)


@lru_cache(maxsize=None)
def representative(case: int) -> TablePair:
    """A pair realising ``case``.

    Cases 10-12 swap the two tables of cases 4-6; cases 15-27 swap the rows
    of case 28 - case.
    """
    if not 1 <= case <= 27:
        raise ValueError(f"case must be in 1..27, got {case}")
    if case in FIGURE3:
        return figure3_example(case)
    if 10 <= case <= 12:
        return figure3_example(case - 6).swapped()
    return representative(28 - case).map(swap_rows)


@dataclass(frozen=True)
class Context:
    name: str
    roles: dict[str, str] = field(hash=False)
    note: str = ""


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    pair: TablePair
    expected_case: int
    source: str = ""
    contexts: tuple[Context, ...] = ()


LITERATURE_NAMES = ("simpson1951", "blyth1971", "gardner1976", "lindley_novick1981", "hand1994")


@lru_cache(maxsize=None)
def _load_corpus() -> dict[str, CorpusEntry]:
    text = resources.files("simpson").joinpath("data/corpus.json").read_text(encoding="utf-8")
    entries = {}
    for obj in json.loads(text):
        contexts = tuple(
            Context(
                name=c["name"],
                roles={k: v for k, v in c.items() if k not in ("name", "note")},
                note=c.get("note", ""),
            )
            for c in obj.get("contexts", ())
        )
        entries[obj["id"]] = CorpusEntry(
            id=obj["id"],
            pair=pair_from_json(obj),
            expected_case=obj["expected_case"],
            source=obj.get("source", ""),
            contexts=contexts,
        )
    return entries


def literature_example(name: str) -> CorpusEntry:
    corpus = _load_corpus()
    if name not in corpus:
        raise UnknownName(f"unknown example {name!r}; known: {', '.join(corpus)}")
    return corpus[name]


def corpus_entries() -> list[CorpusEntry]:
    """The literature examples followed by the 27 case representatives."""
    entries = [literature_example(n) for n in LITERATURE_NAMES]
    entries += [
        CorpusEntry(id=f"case{c:02d}", pair=representative(c), expected_case=c,
                    source="figure3" if c in FIGURE3 else "derived")
        for c in range(1, 28)
    ]
    return entries


TOGGLE_BASE = (
    TablePair.from_rows(((5, 3), (10, 10)), ((1, 19), (1, 20))),
    TablePair.from_rows(((10, 6), (10, 10)), ((1, 19), (1, 20))),
    TablePair.from_rows(((100, 60), (20, 10)), ((1, 19), (5, 20))),
    TablePair.from_rows(((100, 60), (20, 10)), ((20, 90), (5, 20))),
)
TOGGLE_DELTA = 20
# expected case at k mod 4: reversal, alignment, reversal, alignment
TOGGLE_CASES = (3, 1, 25, 27)


def toggling_sequence(n: int) -> list[TablePair]:
    """First ``n`` terms of a monotone sequence that cycles through cases 3, 1, 25, 27.

    Term k >= 4 is term k - 4 with every cell multiplied by 20.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    seq = list(TOGGLE_BASE[:n])
    for k in range(len(seq), n):
        prev = seq[k - 4]
        seq.append(TablePair(scale(prev.t1, TOGGLE_DELTA), scale(prev.t2, TOGGLE_DELTA)))
    return seq


@dataclass(frozen=True)
class MonotonicityCheck:
    ok: bool
    first_violation: Optional[int] = None  # k such that term k+1 is not >= term k

    def __bool__(self) -> bool:
        return self.ok


def is_monotonic(seq: Sequence[TablePair]) -> MonotonicityCheck:
    for k in range(len(seq) - 1):
        if not seq[k] <= seq[k + 1]:
            return MonotonicityCheck(False, k)
    return MonotonicityCheck(True)


@lru_cache(maxsize=16)
def tables_up_to(max_entry: int) -> tuple[Table2x2, ...]:
    """All tables with integer cells in [1, max_entry], lexicographic in (a, b, c, d)."""
    values = range(1, max_entry + 1)
    return tuple(Table2x2(*cells) for cells in itertools.product(values, repeat=4))


def pair_count(max_entry: int) -> int:
    return max_entry ** 8


def enumerate_pairs(max_entry: int, start: int = 0, stop: Optional[int] = None) -> Iterator[TablePair]:
    """Every pair with integer cells in [1, max_entry], max_entry**8 in all.

    Order is lexicographic in (a1, b1, c1, d1, a2, b2, c2, d2).  ``start`` and
    ``stop`` select an index range so the sweep can be split across workers.
    """
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    tables = tables_up_to(max_entry)
    n = len(tables)
    stop = n * n if stop is None else min(stop, n * n)
    for idx in range(start, stop):
        i, j = divmod(idx, n)
        yield TablePair(tables[i], tables[j])


def random_pairs(seed: int, count: int, max_entry: int) -> Iterator[TablePair]:
    """``count`` pairs from one ``random.Random(seed)`` stream.

    Cells are drawn with ``randint(1, max_entry)`` in the order a1, b1, c1,
    d1, a2, b2, c2, d2.  Mersenne Twister seeding from an int is the same on
    every platform.
    """
    rng = random.Random(seed)
    tables = tables_up_to(max_entry) if max_entry <= 9 else None
    for _ in range(count):
        cells = [rng.randint(1, max_entry) for _ in range(8)]
        if tables is not None:
            # reuse prebuilt tables so their cached rates are shared
            yield TablePair(tables[_table_index(cells[:4], max_entry)],
                            tables[_table_index(cells[4:], max_entry)])
        else:
            yield TablePair(Table2x2(*cells[:4]), Table2x2(*cells[4:]))


def _table_index(cells, max_entry: int) -> int:
    idx = 0
    for v in cells:
        idx = idx * max_entry + (v - 1)
    return idx


def random_pair(seed: int, max_entry: int) -> TablePair:
    return next(random_pairs(seed, 1, max_entry))


def search(predicate: Callable[[TablePair], bool], max_entry: int) -> Optional[TablePair]:
    """First pair in enumeration order satisfying ``predicate``, or None."""
    for p in enumerate_pairs(max_entry):
        if predicate(p):
            return p
    return None
