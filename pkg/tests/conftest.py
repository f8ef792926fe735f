from fractions import Fraction

from hypothesis import settings, strategies as st

from simpson.core import Table2x2, TablePair

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

counts = st.integers(min_value=1, max_value=60)
# positive rationals with small denominators, including integers
rationals = st.builds(Fraction, st.integers(1, 200), st.integers(1, 12))

tables = st.builds(Table2x2, counts, counts, counts, counts)
rational_tables = st.builds(Table2x2, rationals, rationals, rationals, rationals)
pairs = st.builds(TablePair, tables, tables)
rational_pairs = st.builds(TablePair, rational_tables, rational_tables)


def _sp_cells(n):
    # plain-integer search, independent of the package's classifier
    from oracles import sp_sign
    import itertools

    out = []
    for cells in itertools.product(range(1, n + 1), repeat=8):
        if sp_sign(cells):
            out.append(cells)
    return out


_SP5 = None


@st.composite
def sp_pairs(draw):
    """SP pairs: a small SP seed, per-table rescaled, optionally row-swapped."""
    global _SP5
    if _SP5 is None:
        _SP5 = _sp_cells(5)
    cells = list(draw(st.sampled_from(_SP5)))
    k = draw(st.integers(1, 7))
    cells = [x * k for x in cells]
    if draw(st.booleans()):
        # swap rows in both tables: SP1 <-> SP2
        cells = cells[2:4] + cells[0:2] + cells[6:8] + cells[4:6]
    if draw(st.booleans()):
        cells = cells[4:] + cells[:4]
    return TablePair(Table2x2(*cells[:4]), Table2x2(*cells[4:]))
