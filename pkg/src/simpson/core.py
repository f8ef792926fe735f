"""Exact 2x2 contingency tables, pairs of tables and their derived rates.

Every entry is an exact rational: Python ``int`` for integral counts and
``fractions.Fraction`` otherwise.  Floats are refused at construction so
that equality cases such as ``mu == nu`` stay decidable.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

Rational = Union[int, Fraction]

CELLS = ("a", "b", "c", "d")


class NonPositiveEntry(ValueError):
    """A table cell is zero or negative."""

    def __init__(self, cell: str, value: Rational):
        self.cell = cell
        self.value = value
        super().__init__(f"cell {cell!r} must be strictly positive, got {value}")


class NonPositiveScale(ValueError):
    pass


def to_rational(value) -> Rational:
    """Parse an int, Fraction or exact numeric string ("12", "0.25", "3/7").

    Integral values come back as ``int``.  Floats are rejected: their binary
    expansion is rarely the number the user wrote.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not table entries")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        q = value
    elif isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty string is not a number")
        try:
            q = Fraction(text)
        except ValueError:
            raise ValueError(f"not an exact number: {value!r}") from None
    elif isinstance(value, numbers.Rational):
        q = Fraction(value.numerator, value.denominator)
    else:
        raise TypeError(f"expected int, Fraction or numeric string, got {type(value).__name__}")
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class Table2x2:
    """A 2x2 table laid out as::

        a | b      row X,    columns Y, not-Y
        c | d      row not-X
    """

    a: Rational
    b: Rational
    c: Rational
    d: Rational

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if type(a) is int and type(b) is int and type(c) is int and type(d) is int \
                and a > 0 and b > 0 and c > 0 and d > 0:
            return
        for cell in CELLS:
            raw = getattr(self, cell)
            value = raw if type(raw) is int else to_rational(raw)
            if value <= 0:
                raise NonPositiveEntry(cell, value)
            if value is not raw:
                object.__setattr__(self, cell, value)

    @classmethod
    def from_rows(cls, rows) -> Table2x2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def cells(self) -> tuple[Rational, Rational, Rational, Rational]:
        return (self.a, self.b, self.c, self.d)

    @property
    def rows(self) -> tuple[tuple[Rational, Rational], tuple[Rational, Rational]]:
        return ((self.a, self.b), (self.c, self.d))

    @cached_property
    def top_total(self) -> Rational:
        return self.a + self.b

    @cached_property
    def bottom_total(self) -> Rational:
        return self.c + self.d

    @cached_property
    def top_rate(self) -> Fraction:
        """Pr[Y | X] = a / (a + b)."""
        return Fraction(self.a, self.top_total)

    @cached_property
    def bottom_rate(self) -> Fraction:
        """Pr[Y | not X] = c / (c + d)."""
        return Fraction(self.c, self.bottom_total)

    @cached_property
    def cross_products(self) -> tuple[Rational, Rational]:
        return (self.a * self.d, self.b * self.c)

    @cached_property
    def odds_ratio(self) -> Fraction:
        """Cross-product ratio ad / bc."""
        ad, bc = self.cross_products
        return Fraction(ad, bc)

    def __add__(self, other: Table2x2) -> Table2x2:
        if not isinstance(other, Table2x2):
            return NotImplemented
        return Table2x2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __le__(self, other: Table2x2) -> bool:
        # cellwise order, used for monotone accumulation
        return all(x <= y for x, y in zip(self.cells, other.cells))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def from_counts(a, b, c, d) -> Table2x2:
    return Table2x2(a, b, c, d)


def aggregate(t1: Table2x2, t2: Table2x2) -> Table2x2:
    return t1 + t2


def transpose(t: Table2x2) -> Table2x2:
    return Table2x2(t.a, t.c, t.b, t.d)


def swap_rows(t: Table2x2) -> Table2x2:
    return Table2x2(t.c, t.d, t.a, t.b)


def swap_columns(t: Table2x2) -> Table2x2:
    return Table2x2(t.b, t.a, t.d, t.c)


def scale(t: Table2x2, delta) -> Table2x2:
    delta = to_rational(delta)
    if delta <= 0:
        raise NonPositiveScale(f"scale factor must be positive, got {delta}")
    return Table2x2(*(x * delta for x in t.cells))


@dataclass(frozen=True)
class Quantities:
    alpha1: Rational
    alpha2: Rational
    gamma1: Rational
    gamma2: Rational
    A1: Fraction
    A2: Fraction
    C1: Fraction
    C2: Fraction
    mu: Fraction
    nu: Fraction


@dataclass(frozen=True)
class TablePair:
    """Two sub-population tables; the collapsed table is built on demand."""

    t1: Table2x2
    t2: Table2x2

    @classmethod
    def from_rows(cls, rows1, rows2) -> TablePair:
        return cls(Table2x2.from_rows(rows1), Table2x2.from_rows(rows2))

    @cached_property
    def aggregate(self) -> Table2x2:
        return self.t1 + self.t2

    @cached_property
    def quantities(self) -> Quantities:
        t1, t2, agg = self.t1, self.t2, self.aggregate
        # mu and nu are the row rates of the collapsed table
        return Quantities(
            alpha1=t1.top_total,
            alpha2=t2.top_total,
            gamma1=t1.bottom_total,
            gamma2=t2.bottom_total,
            A1=t1.top_rate,
            A2=t2.top_rate,
            C1=t1.bottom_rate,
            C2=t2.bottom_rate,
            mu=agg.top_rate,
            nu=agg.bottom_rate,
        )

    def map(self, fn) -> TablePair:
        """Apply a table transform to both sub-populations."""
        return TablePair(fn(self.t1), fn(self.t2))

    def swapped(self) -> TablePair:
        return TablePair(self.t2, self.t1)

    @property
    def cells(self) -> tuple[Rational, ...]:
        return self.t1.cells + self.t2.cells

    def __le__(self, other: TablePair) -> bool:
        return self.t1 <= other.t1 and self.t2 <= other.t2

    def __str__(self) -> str:
        return f"T1={self.t1} T2={self.t2}"


def quantities(p: TablePair) -> Quantities:
    return p.quantities
