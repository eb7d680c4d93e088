"""Run the inequality suite and print the table.

Usage: python3 scripts/bounds_report.py [--d-max 4] [--n-max 4] [--k-max 5]
"""

import argparse
import sys
from collections import Counter

from monopath.bounds import render_rows, run_inequality_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--d-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()

    rows = run_inequality_suite(args.d_max, args.n_max, args.k_max,
                                budget=args.budget)
    print(render_rows(rows))
    tally = Counter(r["verdict"] for r in rows)
    print("#", dict(sorted(tally.items())))
    return 1 if tally["FAIL"] else 0


if __name__ == "__main__":
    sys.exit(main())
