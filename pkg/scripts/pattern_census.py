"""Tally the M-association pattern of every SP pair in a sweep.

    python scripts/pattern_census.py --max-entry 4 --random 100000 --seed 20231016
"""

import argparse
import time

from simpson.generate import literature_example, random_pairs
from simpson.conditions import marginal_pattern_diagnostic
from simpson.sweeps import CENSUS, run_property, sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-entry", type=int, default=4)
    ap.add_argument("--random", type=int, default=0)
    ap.add_argument("--random-max-entry", type=int, default=9)
    ap.add_argument("--seed", type=int, default=20231016)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    result = sweep(CENSUS, args.max_entry, workers=args.workers)
    print(f"enumeration, cells in [1, {args.max_entry}]: {result.checked} pairs, "
          f"{result.applicable} with SP ({time.perf_counter() - t0:.1f}s)")
    for (hyp, kind), n in sorted(result.census.items()):
        print(f"  {hyp:14s} {kind:8s} {n}")

    if args.random:
        t0 = time.perf_counter()
        rand = run_property(CENSUS, random_pairs(args.seed, args.random, args.random_max_entry))
        print(f"random, seed {args.seed}, cells in [1, {args.random_max_entry}]: {rand.checked} pairs, "
              f"{rand.applicable} with SP ({time.perf_counter() - t0:.1f}s)")
        for (hyp, kind), n in sorted(rand.census.items()):
            print(f"  {hyp:14s} {kind:8s} {n}")

    print("literature examples:")
    for name in ("simpson1951", "blyth1971", "gardner1976", "lindley_novick1981", "hand1994"):
        d = marginal_pattern_diagnostic(literature_example(name).pair)
        hyp = d.hypothesis.value if d.hypothesis else "-"
        print(f"  {name:20s} {hyp:14s} {d.pattern.x_assoc.value:7s} {d.pattern.y_assoc.value:7s} {d.kind.value}")


if __name__ == "__main__":
    main()
