"""Reading and writing table pairs: JSON objects, two-row CSV and JSON streams."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .core import CELLS, Rational, Table2x2, TablePair, to_rational


class MalformedInput(ValueError):
    pass


def rational_str(x: Rational) -> str:
    return str(x)


def table_to_json(t: Table2x2) -> dict[str, str]:
    return {cell: rational_str(getattr(t, cell)) for cell in CELLS}


def pair_to_json(p: TablePair) -> dict:
    return {"t1": table_to_json(p.t1), "t2": table_to_json(p.t2)}


def _parse_entry(value):
    # ints and strings only; floats would smuggle binary rounding in
    if isinstance(value, float):
        raise MalformedInput(f"float {value!r} not accepted; quote it as a decimal string")
    try:
        return to_rational(value)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(str(exc)) from None


def table_from_json(obj) -> Table2x2:
    if not isinstance(obj, dict):
        raise MalformedInput(f"table must be an object with keys a, b, c, d, got {obj!r}")
    missing = [c for c in CELLS if c not in obj]
    if missing:
        raise MalformedInput(f"table is missing cells {missing}")
    # NonPositiveEntry propagates: it is a data problem, not a format problem
    return Table2x2(*(_parse_entry(obj[c]) for c in CELLS))


def pair_from_json(obj) -> TablePair:
    if not isinstance(obj, dict) or "t1" not in obj or "t2" not in obj:
        raise MalformedInput('pair must be an object with keys "t1" and "t2"')
    return TablePair(table_from_json(obj["t1"]), table_from_json(obj["t2"]))


def pair_from_csv(text: str) -> TablePair:
    """Two rows ``t1,a,b,c,d`` and ``t2,a,b,c,d`` in either order."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(f.strip() for f in r)]
    tables = {}
    for row in rows:
        row = [f.strip() for f in row]
        if len(row) != 5 or row[0] not in ("t1", "t2"):
            raise MalformedInput(f"expected a row 't1,a,b,c,d' or 't2,a,b,c,d', got {row}")
        if row[0] in tables:
            raise MalformedInput(f"duplicate row {row[0]}")
        tables[row[0]] = Table2x2(*(_parse_entry(f) for f in row[1:]))
    if set(tables) != {"t1", "t2"}:
        raise MalformedInput("CSV needs exactly one t1 row and one t2 row")
    return TablePair(tables["t1"], tables["t2"])


def parse_pair(text: str) -> TablePair:
    """Parse a pair from JSON or, failing that, the two-row CSV form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return pair_from_json(obj)
    return pair_from_csv(text)


def parse_stream(text: str) -> list[TablePair]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(obj, list):
        raise MalformedInput("stream file must hold a JSON array of pairs")
    return [pair_from_json(item) for item in obj]


def rational_json(x) -> dict:
    q = Fraction(x)
    return {"num": str(q.numerator), "den": str(q.denominator), "approx": float(q)}


def rational_from_json(obj) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
