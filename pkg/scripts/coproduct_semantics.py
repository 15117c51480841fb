"""Compare two ways of summing the forest coproduct over partition data.

``distinct``: each tensor pair (F1, F2) reached by some valid datum counts
once (the library's coproduct).  ``multiset``: every valid datum contributes
its own term, so pairs reached several times are counted with multiplicity.
Only the first is dual to the diagram product; this script measures how often
the second breaks that duality on random instances.

    python scripts/coproduct_semantics.py --samples 1500 --seed 1
"""
import argparse
import random

from confpair.hopf import coproduct, diagram_product, enumerate_partitions, tensor_pair
from confpair.lincomb import LinComb
from confpair.pairing import pair_extended
from confpair.suites import compat_instance


def multiset_coproduct(f, odd):
    out = LinComb()
    for _, f1, f2, sign in enumerate_partitions(f):
        out.add((f1, f2), sign if odd else 1)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=1500)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'parity':<7}{'samples':>9}{'distinct fails':>16}{'multiset fails':>16}")
    for odd in (False, True):
        bad = {"distinct": 0, "multiset": 0}
        for _ in range(args.samples):
            f, g1, g2 = compat_instance(rng.randint(1, args.max_n), odd, rng)
            lhs = pair_extended(diagram_product(g1, g2), f)
            bad["distinct"] += lhs != tensor_pair(g1, g2, coproduct(f, odd))
            bad["multiset"] += lhs != tensor_pair(g1, g2, multiset_coproduct(f, odd))
        print(f"{'odd' if odd else 'even':<7}{args.samples:>9}{bad['distinct']:>16}{bad['multiset']:>16}")


if __name__ == "__main__":
    main()
