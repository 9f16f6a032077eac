#!/usr/bin/env python3
"""Print a human-readable spt-crank table together with derived columns.

For each n up to the requested order this shows the row of SB(z,q) as a
Laurent polynomial in z, its z = 1 total, and the mod-t residue-class
sums used in the congruence refinements.
"""

import argparse
import sys

from spt_kernel.sptcrank import sb_series


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=24)
    parser.add_argument("--t", type=int, default=3, choices=(3, 5),
                        help="modulus for the residue-class sums")
    args = parser.parse_args()

    table = sb_series(args.order)
    header = f"{'n':>4}  {'spt2':>8}  {'mod-' + str(args.t) + ' sums':<24} row"
    print(header)
    print("-" * len(header))
    for n in range(args.order + 1):
        row = table.row(n)
        sums = table.residue_sums(n, args.t)
        print(f"{n:>4}  {table.spt2(n):>8}  {str(sums):<24} {row!r}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
