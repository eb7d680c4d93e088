"""Print tables of high-dimensional partition counts.

Usage: python3 scripts/partition_tables.py [--d-max 4] [--n-max 5] [--budget B]
"""

import argparse
import sys
import time

from monopath import (
    BudgetExceeded,
    GridBox,
    count_downsets,
    count_rho,
    lnn_rank_sizes,
    macmahon,
    p1_closed,
)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--d-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--budget", type=int, default=20_000_000)
    args = ap.parse_args()

    print("P_d(n) = d-dimensional partitions in the n-box "
          "(= down-sets of [n]^(d+1))")
    header = "d\\n " + "".join(f"{n:>12}" for n in range(1, args.n_max + 1))
    print(header)
    for d in range(1, args.d_max + 1):
        cells = []
        for n in range(1, args.n_max + 1):
            t0 = time.perf_counter()
            try:
                v = count_downsets(GridBox(n, d + 1), budget=args.budget)
                cells.append(f"{v:>12}" if v < 10**11 else f"{v:>12.3e}")
            except BudgetExceeded:
                cells.append(f"{'-':>12}")
            if time.perf_counter() - t0 > 20:
                break
        print(f"{d:<4}" + "".join(cells))
    print()
    for n in range(1, 5):
        assert count_downsets(GridBox(n, 2)) == p1_closed(n)
        assert count_downsets(GridBox(n, 3)) == macmahon(n)
    print("closed forms agree for d=1 (central binomial) and d=2 (MacMahon)")

    print()
    print("rho_k(n): order-k line partitions (N_k(2,n) = rho_k(n) + 1)")
    print("k\\n " + "".join(f"{n:>12}" for n in range(1, args.n_max + 1)))
    for k in range(2, args.k_max + 1):
        cells = []
        for n in range(1, args.n_max + 1):
            try:
                cells.append(f"{count_rho(k, 2, n, budget=args.budget):>12}")
            except BudgetExceeded:
                cells.append(f"{'-':>12}")
        print(f"{k:<4}" + "".join(cells))

    print()
    print("rank sizes of the n x n line-partition lattice (Gaussian binomials)")
    for n in range(1, 6):
        prof = lnn_rank_sizes(n)
        print(f"n={n}: {list(prof.sizes)}  max={prof.max_size}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
