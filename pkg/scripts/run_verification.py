#!/usr/bin/env python3
"""Run the full identity suite over a sweep of dimensions and seeds.

This is the long-form version of `qch verify all`: it crosses several complex
dimensions with several frame seeds, prints every check, and exits nonzero if
anything fails.
"""

import argparse
import sys

from qch import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--trials", type=int, default=100)
    args = parser.parse_args()

    results = run_suite(args.dims, args.seeds, tol=args.tol, trials=args.trials)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name:<{width}} n={r.n} seed={r.seed} "
              f"defect={r.max_defect:.3e} tol={r.tolerance:.3e} ({r.elapsed * 1e3:.1f} ms)")
    passed = sum(r.passed for r in results)
    print(f"\n{passed}/{len(results)} checks passed over dims={args.dims} seeds={args.seeds}")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
