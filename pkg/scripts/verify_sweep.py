"""Run the property suites over several seeds and sizes and tabulate timings.

    python scripts/verify_sweep.py --max-n 3 4 5 --seeds 1 2 3 --samples 100
"""
import argparse

from confpair.suites import VerifyConfig, run_suites


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--samples", type=int, default=100)
    args = ap.parse_args()
    for n in args.max_n:
        for seed in args.seeds:
            results = run_suites(VerifyConfig(max_n=n, samples=args.samples, seed=seed))
            checks = sum(r.checks for r in results)
            fails = sum(len(r.failures) for r in results)
            secs = sum(r.seconds for r in results)
            slow = max(results, key=lambda r: r.seconds)
            print(f"max_n={n} seed={seed}: {checks} checks, {fails} failures, {secs:.1f}s "
                  f"(slowest {slow.name} {slow.seconds:.1f}s)")


if __name__ == "__main__":
    main()
