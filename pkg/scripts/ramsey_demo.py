"""Exact small Ramsey numbers of monotone paths vs the partition prediction.

For each feasible (k, q, n) the script searches for the exact threshold and
compares it with the matching count: n^q + 1 for graphs, P_{q-1}(n) + 1 for
triple systems, rho_k(n) + 1 for two colors.
"""

import argparse
import sys

from monopath import (
    SearchBudget,
    count_downsets,
    count_rho,
    exact_ramsey,
    GridBox,
)

CASES = [
    (2, 1, 3), (2, 2, 2), (2, 2, 3), (2, 3, 2),
    (3, 1, 2), (3, 2, 2), (3, 3, 2),
    (4, 2, 2), (5, 2, 2),
]


def predicted(k: int, q: int, n: int) -> int | None:
    if k == 2:
        return n**q + 1
    if k == 3:
        return count_downsets(GridBox(n, q)) + 1
    if q == 2:
        return count_rho(k, 2, n) + 1
    return None


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-nodes", type=int, default=10_000_000)
    ap.add_argument("--max-seconds", type=float, default=20.0)
    args = ap.parse_args()

    bad = 0
    print(f"{'k':>2} {'q':>2} {'n':>2} {'search':>10} {'predicted':>10} "
          f"{'nodes':>10} {'secs':>7}")
    for k, q, n in CASES:
        res = exact_ramsey(k, q, n, budget=SearchBudget(
            max_nodes=args.max_nodes, max_seconds=args.max_seconds))
        want = predicted(k, q, n)
        got = res.value if res.status == "exact" else f">={res.lower_bound}"
        mark = ""
        if res.status == "exact" and want is not None:
            mark = "ok" if res.value == want else "MISMATCH"
            bad += mark == "MISMATCH"
        print(f"{k:>2} {q:>2} {n:>2} {str(got):>10} {str(want):>10} "
              f"{res.nodes:>10} {res.seconds:>7.2f}  {mark}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
