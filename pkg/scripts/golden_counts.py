"""Count SP pairs among all pairs with cells in [1, N] by plain integer arithmetic.

Used once to freeze the regression constants in tests/test_golden.py.  It
does not use the package: the verdict comes from cross-product signs.

    python scripts/golden_counts.py 3 4 9 --workers 8
"""

import argparse
import itertools
from concurrent.futures import ProcessPoolExecutor


def _sign(x):
    return (x > 0) - (x < 0)


def _tables(n):
    return list(itertools.product(range(1, n + 1), repeat=4))


def _count_block(args):
    n, i = args
    tables = _tables(n)
    a1, b1, c1, d1 = tables[i]
    s1 = _sign(a1 * d1 - b1 * c1)
    counts = [0, 0]
    if s1 == 0:
        return counts
    for a2, b2, c2, d2 in tables:
        s2 = _sign(a2 * d2 - b2 * c2)
        if s2 != s1:
            continue
        s = _sign((a1 + a2) * (d1 + d2) - (b1 + b2) * (c1 + c2))
        if s != s1:
            counts[0 if s1 > 0 else 1] += 1
    return counts


def count_sp(n, workers=1):
    jobs = [(n, i) for i in range(n ** 4)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_count_block, jobs, chunksize=64))
    else:
        parts = [_count_block(j) for j in jobs]
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("max_entry", type=int, nargs="+")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    for n in args.max_entry:
        sp1, sp2 = count_sp(n, args.workers)
        print(f"max_entry={n} pairs={n ** 8} SP1={sp1} SP2={sp2} SP={sp1 + sp2}")


if __name__ == "__main__":
    main()
