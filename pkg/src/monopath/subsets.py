"""Colexicographic ranking of sorted vertex subsets.

Edges of a complete ordered k-uniform hypergraph are stored in flat arrays
indexed by the colex rank of the edge's sorted vertex tuple,

    rank(t_0 < t_1 < ... < t_{r-1}) = sum_i C(t_i, i+1)

with 0-based vertices.  Colex order sorts subsets primarily by their last
vertex, so a dynamic program that sweeps ranks in increasing order sees
every edge ending at vertex v only after all edges ending below v.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def colex_rank(t: tuple[int, ...]) -> int:
    return sum(comb(v, i + 1) for i, v in enumerate(t))


def binom_table(n: int, r: int) -> list[list[int]]:
    """table[v][i] = C(v, i) for 0 <= v <= n and 0 <= i <= r."""
    return [[comb(v, i) for i in range(r + 1)] for v in range(n + 1)]


def subsets_colex(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All r-subsets of range(n) in colex order (rank order)."""
    if r == 0:
        yield ()
        return
    for last in range(r - 1, n):
        for front in subsets_colex(last, r - 1):
            yield front + (last,)
