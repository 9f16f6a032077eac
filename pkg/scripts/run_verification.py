#!/usr/bin/env python3
"""Run the full verification suite and print a timing-annotated summary.

Unlike `spt-kernel verify`, this script times each check individually,
which is handy when tuning the truncation order.
"""

import argparse
import sys
import time

from spt_kernel.verify import CHECKS, run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=100,
                        help="truncation order for every check")
    parser.add_argument("--oracle-bound", type=int, default=20,
                        help="enumeration cross-check bound")
    parser.add_argument("--only", choices=sorted(CHECKS), default=None,
                        help="run a single check")
    args = parser.parse_args()

    failures = 0
    start = time.perf_counter()
    for name in sorted(CHECKS):
        if args.only and name != args.only:
            continue
        t0 = time.perf_counter()
        (report,) = run_all(args.order, oracle_bound=args.oracle_bound,
                            only=name)
        dt = time.perf_counter() - t0
        print(f"{name:<14} {report.status:<5} {dt:7.2f}s")
        if not report.passed:
            failures += 1
            print(f"  first failure: {report.first_failure}")
    print(f"total: {time.perf_counter() - start:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
