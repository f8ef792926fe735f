"""Print the accumulating sequence that flips in and out of reversal.

    python scripts/toggling_demo.py 12
"""

import sys

from simpson.classify import case_of, class_of, sp
from simpson.generate import is_monotonic, toggling_sequence


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    seq = toggling_sequence(n)
    for k, p in enumerate(seq):
        case = case_of(p)
        print(f"{k:3d}  {str(p):60s} case {case:2d} {class_of(case).value:13s} SP {sp(p).value}")
    check = is_monotonic(seq)
    print("monotone" if check else f"not monotone at {check.first_violation}")


if __name__ == "__main__":
    main()
