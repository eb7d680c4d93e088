"""Edge colorings of ordered complete hypergraphs avoiding long monotone paths.

A monotone path of length L in the complete k-uniform hypergraph on vertices
1 < 2 < ... < N is a sequence x_1 < ... < x_{L+k-1} whose L consecutive
k-windows are all edges; length counts edges.  The colorings built here are
the extremal certificates for the lower bounds on the associated Ramsey
numbers:

* ``color_graph_lower`` (k = 2): vertices are the points of [n]^q in
  lexicographic order; the edge {x, y} with x before y is colored by the
  first coordinate where x is strictly smaller.  A color-i path must raise
  coordinate i at every step, so no color admits a path of length n.

* ``color_3uniform_lower`` (k = 3): vertices are the (q-1)-dimensional
  partition arrays with entries 0..n, sorted lexicographically by flattened
  entries.  For an edge A < B < C let delta(A, B) be the first index where
  A and B differ (likewise delta(B, C)); the edge gets the smallest
  coordinate i where delta(B, C) exceeds delta(A, B), and the extra color q
  when there is none.  Per-coordinate bounds generalize the square case.

* ``color_kuniform_lower`` (k >= 3, d colors): vertices are the order-k
  structures over [n]^d in their universe order.  Reducing an edge's k
  structures by delta pairwise k-2 times leaves two grid points x and y
  with x not containing y; the edge gets the smallest coordinate where x is
  strictly below y.  At k = 3 and d = 2 this reproduces the two-color
  3-uniform rule edge for edge.

Colors are stored 1-based in a flat byte array indexed by the colex rank of
the sorted edge, which gives O(1) lookup and bit-exact files.
"""

from __future__ import annotations

import json
import os
import random
from array import array
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

from .budget import meter
from .subsets import colex_rank, subsets_colex
from .universes import build_universe

ENCODING = "colex-rank-array"


@dataclass
class EdgeColoring:
    """A q-coloring of all k-subsets of range(N), colex-rank indexed."""

    k: int
    q: int
    N: int
    colors: array
    labels: list | None = None
    meta: dict | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.k < 1 or self.q < 1 or self.N < 0:
            raise ValueError("need k >= 1, q >= 1, N >= 0")
        expected = comb(self.N, self.k)
        if len(self.colors) != expected:
            raise ValueError(
                f"expected {expected} colors for N={self.N}, k={self.k}, "
                f"got {len(self.colors)}"
            )
        if any(not 1 <= c <= self.q for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.q}")

    @property
    def num_edges(self) -> int:
        return len(self.colors)

    def color_of(self, edge: tuple[int, ...]) -> int:
        if len(edge) != self.k or any(
            edge[i] >= edge[i + 1] for i in range(self.k - 1)
        ):
            raise ValueError(f"edge must be a sorted {self.k}-tuple, got {edge}")
        if edge[-1] >= self.N or edge[0] < 0:
            raise ValueError(f"edge {edge} out of range for N={self.N}")
        return self.colors[colex_rank(edge)]

    def edges(self):
        """(edge, color) pairs in colex (rank) order."""
        for rank, edge in enumerate(subsets_colex(self.N, self.k)):
            yield edge, self.colors[rank]

    def to_json_dict(self) -> dict:
        out = {
            "k": self.k,
            "q": self.q,
            "N": self.N,
            "encoding": ENCODING,
            "colors": list(self.colors),
        }
        if self.labels is not None:
            out["labels"] = self.labels
        if self.meta is not None:
            out["meta"] = self.meta
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "EdgeColoring":
        try:
            k, q, n_verts = int(data["k"]), int(data["q"]), int(data["N"])
            encoding = data["encoding"]
            colors = data["colors"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed coloring object: {exc}") from exc
        if encoding != ENCODING:
            raise ValueError(f"unknown coloring encoding {encoding!r}")
        try:
            arr = array("B", colors)
        except (TypeError, OverflowError) as exc:
            raise ValueError(f"colors must be small non-negative ints: {exc}") from exc
        return cls(
            k=k,
            q=q,
            N=n_verts,
            colors=arr,
            labels=data.get("labels"),
            meta=data.get("meta"),
        )

    def save(self, path) -> None:
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            json.dump(self.to_json_dict(), fh, separators=(",", ":"))
            fh.write("\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path) -> "EdgeColoring":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path} is not valid JSON: {exc}") from exc
        return cls.from_json_dict(data)


# --- the extremal constructions ------------------------------------------------


def color_graph_lower(q: int, n: int) -> EdgeColoring:
    """The first-rising-coordinate coloring of the complete graph on [n]^q."""
    if q < 1 or n < 1:
        raise ValueError("need q >= 1 and n >= 1")
    verts = sorted(product(range(1, n + 1), repeat=q))
    big = len(verts)
    colors = array("B")
    for j in range(big):
        y = verts[j]
        for i in range(j):
            x = verts[i]
            for t in range(q):
                if x[t] < y[t]:
                    colors.append(t + 1)
                    break
            else:
                raise AssertionError("distinct lex-sorted points must rise somewhere")
    return EdgeColoring(
        k=2,
        q=q,
        N=big,
        colors=colors,
        labels=[list(v) for v in verts],
        meta={"family": "graph", "params": {"q": q, "n": n}},
    )


def _monotone_arrays(shape: tuple[int, ...], bound: int, wm) -> list[tuple[int, ...]]:
    """All weakly decreasing arrays, generated in lex order of flat entries."""
    cells = 1
    for s in shape:
        cells *= s
    strides = []
    acc = 1
    for s in reversed(shape):
        strides.append(acc)
        acc *= s
    strides.reverse()
    coords = list(product(*(range(s) for s in shape)))
    out: list[tuple[int, ...]] = []
    entries = [0] * cells

    def rec(flat: int) -> None:
        if flat == cells:
            wm.charge()
            out.append(tuple(entries))
            return
        cap = bound
        for t, c in enumerate(coords[flat]):
            if c > 0:
                v = entries[flat - strides[t]]
                if v < cap:
                    cap = v
        for v in range(cap + 1):
            entries[flat] = v
            rec(flat + 1)

    rec(0)
    return out


def color_3uniform_lower(
    q: int,
    n: int | None = None,
    *,
    bounds: tuple[int, ...] | None = None,
    budget: int | None = None,
) -> EdgeColoring:
    """The delta-comparison coloring of the complete 3-uniform hypergraph.

    Square case: ``n`` bounds every coordinate.  Rectangular case: ``bounds``
    gives (n_1, ..., n_q) and color i admits no monotone path of length n_i.
    """
    if q < 2:
        raise ValueError("need q >= 2 colors")
    if bounds is None:
        if n is None:
            raise ValueError("give n or bounds")
        bounds = (n,) * q
    elif n is not None:
        raise ValueError("give n or bounds, not both")
    if len(bounds) != q or any(b < 1 for b in bounds):
        raise ValueError(f"bounds must be {q} positive integers, got {bounds}")
    shape, top = tuple(bounds[: q - 1]), bounds[q - 1]
    wm = meter(budget, f"3-uniform coloring with bounds {bounds}")
    verts = _monotone_arrays(shape, top, wm)
    big = len(verts)
    wm.charge(comb(big, 3))

    # first differing flat position for every vertex pair
    def first_diff(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        for pos, (x, y) in enumerate(zip(a, b)):
            if x != y:
                return pos
        raise AssertionError("vertex list has duplicates")

    pd: list[list[int]] = [[first_diff(verts[i], vj) for i in range(j)] for j, vj in enumerate(verts)]
    colors = array("B")
    if q == 2:
        # one index axis: compare scalar positions directly
        for c in range(big):
            pdc = pd[c]
            for b in range(c):
                d_bc = pdc[b]
                pdb = pd[b]
                for a in range(b):
                    colors.append(1 if d_bc > pdb[a] else 2)
    else:
        idx_tuples = list(product(*(range(1, s + 1) for s in shape)))
        for c in range(big):
            pdc = pd[c]
            for b in range(c):
                d_bc = idx_tuples[pdc[b]]
                pdb = pd[b]
                for a in range(b):
                    d_ab = idx_tuples[pdb[a]]
                    for t in range(q - 1):
                        if d_bc[t] > d_ab[t]:
                            colors.append(t + 1)
                            break
                    else:
                        colors.append(q)
    nested = [_nest(shape, v) for v in verts]
    params = {"q": q, "bounds": list(bounds)}
    if bounds == (bounds[0],) * q:
        params["n"] = bounds[0]
    return EdgeColoring(
        k=3, q=q, N=big, colors=colors, labels=nested,
        meta={"family": "3uniform", "params": params},
    )


def _nest(shape: tuple[int, ...], flat: tuple[int, ...]):
    if not shape:
        return flat[0]
    stride = 1
    for s in shape[1:]:
        stride *= s
    return [_nest(shape[1:], flat[i * stride : (i + 1) * stride]) for i in range(shape[0])]


def color_kuniform_lower(
    k: int, n: int, d: int = 2, *, budget: int | None = None
) -> EdgeColoring:
    """The iterated-delta coloring of the complete k-uniform hypergraph.

    Vertices are the order-k structures over [n]^d in universe order; colors
    are the d grid coordinates.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    uni = build_universe(k, d, n, budget=budget)
    big = uni.size
    wm = meter(budget, f"{k}-uniform coloring over [{n}]^{d}")
    colors = array("B")
    if big >= k:
        wm.charge(comb(big, k))
        els = uni.elements
        for edge in subsets_colex(big, k):
            chain = [els[i] for i in edge]
            level = uni
            while len(chain) > 2:
                chain = [level.delta(a, b) for a, b in zip(chain, chain[1:])]
                level = level.parent
            x, y = chain
            if level.k != 2:
                raise AssertionError("delta reduction should end on grid points")
            for t in range(d):
                if x[t] < y[t]:
                    colors.append(t + 1)
                    break
            else:
                raise AssertionError(
                    "delta chain lost non-containment; no rising coordinate"
                )
    return EdgeColoring(
        k=k,
        q=d,
        N=big,
        colors=colors,
        labels=[uni.element_json(el) for el in uni.elements],
        meta={"family": "kuniform", "params": {"k": k, "d": d, "n": n}},
    )


def random_coloring(k: int, q: int, n_vertices: int, seed: int) -> EdgeColoring:
    """A uniformly random q-coloring of all k-subsets, reproducible from seed."""
    if k < 1 or q < 1 or n_vertices < 0:
        raise ValueError("need k >= 1, q >= 1, N >= 0")
    rng = random.Random(seed)
    edges = comb(n_vertices, k)
    colors = array("B", (rng.randint(1, q) for _ in range(edges)))
    return EdgeColoring(
        k=k,
        q=q,
        N=n_vertices,
        colors=colors,
        meta={"family": "random", "params": {"seed": seed}},
    )


# --- transitivity ----------------------------------------------------------------


def is_transitive(coloring: EdgeColoring, *, budget: int | None = None):
    """Check the local consistency of consecutive same-colored edges.

    A coloring is transitive when, for every k+1 ordered vertices whose two
    consecutive k-windows share a color, all other k-subsets of those
    vertices have that color too.  Returns True, or the first violating
    (k+1)-tuple in lexicographic order.
    """
    k, big = coloring.k, coloring.N
    wm = meter(budget, "transitivity scan")
    if big < k + 1:
        return True
    for tup in combinations(range(big), k + 1):
        wm.charge()
        front = coloring.color_of(tup[:k])
        back = coloring.color_of(tup[1:])
        if front != back:
            continue
        for drop in range(1, k):
            sub = tup[:drop] + tup[drop + 1 :]
            if coloring.color_of(sub) != front:
                return tup
    return True


def check_transitivity_witness(coloring: EdgeColoring, tup: tuple[int, ...]) -> bool:
    """Confirm that ``tup`` really violates transitivity for this coloring."""
    k = coloring.k
    if len(tup) != k + 1:
        return False
    front = coloring.color_of(tup[:k])
    back = coloring.color_of(tup[1:])
    if front != back:
        return False
    return any(
        coloring.color_of(tup[:drop] + tup[drop + 1 :]) != front
        for drop in range(1, k)
    )
