"""Table of graded pairing ranks against the partition formula.

    python scripts/rank_table.py --max-n 5
"""
import argparse
import math
import time

from confpair.lie import rank_of_grade
from confpair.suites import poisson_rank_formula


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'n':>2} {'k':>2} {'parity':<6} {'lie':>5} {'(n-1)!':>7} {'poisson':>8} {'formula':>8} {'sec':>6}")
    for n in range(1, args.max_n + 1):
        for odd in (False, True):
            for k in range(n):
                t0 = time.perf_counter()
                lie = rank_of_grade(n, odd=odd) if k == n - 1 else None
                pois = rank_of_grade(n, k, odd=odd, side="poisson")
                secs = time.perf_counter() - t0
                lie_s = "" if lie is None else str(lie)
                fact = "" if lie is None else str(math.factorial(n - 1))
                print(f"{n:>2} {k:>2} {'odd' if odd else 'even':<6} {lie_s:>5} {fact:>7} "
                      f"{pois:>8} {poisson_rank_formula(n, k):>8} {secs:>6.2f}")


if __name__ == "__main__":
    main()
