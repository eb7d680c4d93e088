"""Longest monochromatic monotone path DP, label vectors, and certificates.

For a q-colored complete k-uniform hypergraph on 0 < 1 < ... < N-1 the
engine computes, per color, the exact maximum length (in edges) of a
monotone path, with an optional witness.  The DP runs over (k-1)-tuples:
the longest color-c path ending with window w satisfies

    L_c(w) = max over color-c edges {t} u w, t < min(w), of 1 + L_c(front)

and processing edges in colex order makes every front value final before it
is read.  A mirrored sweep in reverse colex order yields R_c(w), the
longest color-c path starting with window w, which drives witness
reconstruction: growing the vertex sequence from the front and always
taking the smallest feasible next vertex returns the lexicographically
smallest maximum-length witness.

On top of the DP sit the certificate maps.  The label vector of a window is
C(w) = (1 + L_1(w), ..., 1 + L_q(w)); when no color reaches length n these
land in the grid [n]^q.  Down-set labels extend them to shorter tuples,

    D(t) = union of principal ideals of D((x,) + t) over x < min(t),

ending with one order-k structure per vertex.  If no color reaches length
n, the vertex labels are pairwise distinct, which is the pigeonhole
certificate bounding N; a collision would contradict the DP and the
extraction walk turns it into a path longer than the DP's own maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .budget import meter
from .colorings import EdgeColoring
from .subsets import colex_rank
from .universes import Universe, build_universe


@dataclass(frozen=True)
class MonotonePath:
    """A monochromatic monotone path; length is counted in edges."""

    k: int
    color: int
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < self.k:
            raise ValueError(f"need at least {self.k} vertices, got {self.vertices}")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError(f"vertices must strictly increase, got {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices) - self.k + 1


def validate_path(coloring: EdgeColoring, path: MonotonePath) -> bool:
    """True iff every consecutive k-window of the path has the stated color."""
    if path.k != coloring.k:
        return False
    vs = path.vertices
    if vs[0] < 0 or vs[-1] >= coloring.N:
        return False
    return all(
        coloring.color_of(vs[i : i + path.k]) == path.color
        for i in range(path.length)
    )


@dataclass(frozen=True)
class PathScan:
    """Per-color maxima (and witnesses) of longest_mono."""

    per_color_max: dict[int, int]
    witnesses: dict[int, MonotonePath | None] | None = None

    @property
    def overall_max(self) -> int:
        return max(self.per_color_max.values())


def _forward_tables(coloring: EdgeColoring, wm, want_pred: bool):
    """L_c per window, edges swept in colex order.  Dicts default to 0."""
    q = coloring.q
    vals: list[dict] = [{} for _ in range(q + 1)]
    preds: list[dict] | None = [{} for _ in range(q + 1)] if want_pred else None
    wm.charge(coloring.num_edges)
    for edge, c in coloring.edges():
        front, back = edge[:-1], edge[1:]
        v = vals[c]
        cand = v.get(front, 0) + 1
        if cand > v.get(back, 0):
            v[back] = cand
            if want_pred:
                preds[c][back] = front
    return vals, preds


def _reverse_tables(coloring: EdgeColoring, wm):
    """R_c per window, edges swept in reverse colex order."""
    q = coloring.q
    vals: list[dict] = [{} for _ in range(q + 1)]
    wm.charge(coloring.num_edges)
    for edge, c in reversed(list(coloring.edges())):
        front, back = edge[:-1], edge[1:]
        v = vals[c]
        cand = v.get(back, 0) + 1
        if cand > v.get(front, 0):
            v[front] = cand
    return vals


def _k3_sweeps(coloring: EdgeColoring, wm, want_reverse: bool):
    """Flat-array L (and optionally R) tables for the k = 3 hot path."""
    big, q = coloring.N, coloring.q
    t2 = [v * (v - 1) // 2 for v in range(big + 1)]
    nwin = t2[big] if big else 0
    colors = coloring.colors
    wm.charge(len(colors) * (2 if want_reverse else 1))
    fwd = [None] + [[0] * nwin for _ in range(q)]
    pos = 0
    for c in range(big):
        t2c = t2[c]
        for b in range(c):
            wback = t2c + b
            t2b = t2[b]
            for a in range(b):
                col = colors[pos]
                pos += 1
                v = fwd[col]
                cand = v[t2b + a] + 1
                if cand > v[wback]:
                    v[wback] = cand
    rev = None
    if want_reverse:
        rev = [None] + [[0] * nwin for _ in range(q)]
        pos = len(colors) - 1
        for c in reversed(range(big)):
            t2c = t2[c]
            for b in reversed(range(c)):
                wback = t2c + b
                t2b = t2[b]
                for a in reversed(range(b)):
                    col = colors[pos]
                    pos -= 1
                    v = rev[col]
                    cand = v[wback] + 1
                    wf = t2b + a
                    if cand > v[wf]:
                        v[wf] = cand
    return t2, fwd, rev


def _lexmin_witness_k3(coloring, color, lmax, t2, rvals, wm) -> MonotonePath:
    big = coloring.N
    t3 = [v * (v - 1) * (v - 2) // 6 for v in range(big)]
    colors = coloring.colors
    start = None
    for a in range(big):
        for b in range(a + 1, big):
            if rvals[t2[b] + a] == lmax:
                start = (a, b)
                break
        if start:
            break
    if start is None:
        raise AssertionError("reverse DP lost its maximum")
    a, b = start
    verts = [a, b]
    need = lmax
    while need > 0:
        for v in range(b + 1, big):
            wm.charge()
            if colors[t3[v] + t2[b] + a] == color and rvals[t2[v] + b] == need - 1:
                verts.append(v)
                a, b = b, v
                need -= 1
                break
        else:
            raise AssertionError("reverse DP admits no continuation")
    return MonotonePath(k=3, color=color, vertices=tuple(verts))


def _lexmin_witness(coloring, color, lmax, rvals: dict, wm) -> MonotonePath:
    k, big = coloring.k, coloring.N
    colors = coloring.colors
    start = min(w for w, val in rvals.items() if val == lmax)
    verts = list(start)
    w = start
    need = lmax
    while need > 0:
        for v in range(w[-1] + 1, big):
            wm.charge()
            back = w[1:] + (v,)
            if (
                colors[colex_rank(w + (v,))] == color
                and rvals.get(back, 0) == need - 1
            ):
                verts.append(v)
                w = back
                need -= 1
                break
        else:
            raise AssertionError("reverse DP admits no continuation")
    return MonotonePath(k=k, color=color, vertices=tuple(verts))


def longest_mono(
    coloring: EdgeColoring, *, want_witnesses: bool = True, budget: int | None = None
) -> PathScan:
    """Exact per-color longest monotone path lengths, with lex-least witnesses.

    Witnesses are None for colors with no edge at all (maximum 0: any k-1
    vertices form a trivial path with no edges).
    """
    if coloring.k < 2:
        raise ValueError("paths need k >= 2")
    q = coloring.q
    wm = meter(budget, f"path DP on {coloring.num_edges} edges")
    if coloring.k == 3:
        t2, fwd, rev = _k3_sweeps(coloring, wm, want_reverse=want_witnesses)
        maxima = {c: (max(fwd[c]) if fwd[c] else 0) for c in range(1, q + 1)}
        if not want_witnesses:
            return PathScan(per_color_max=maxima)
        wits = {
            c: (
                _lexmin_witness_k3(coloring, c, maxima[c], t2, rev[c], wm)
                if maxima[c] > 0
                else None
            )
            for c in range(1, q + 1)
        }
        return PathScan(per_color_max=maxima, witnesses=wits)
    fvals, _ = _forward_tables(coloring, wm, want_pred=False)
    maxima = {c: max(fvals[c].values(), default=0) for c in range(1, q + 1)}
    if not want_witnesses:
        return PathScan(per_color_max=maxima)
    rvals = _reverse_tables(coloring, wm)
    wits = {
        c: (
            _lexmin_witness(coloring, c, maxima[c], rvals[c], wm)
            if maxima[c] > 0
            else None
        )
        for c in range(1, q + 1)
    }
    return PathScan(per_color_max=maxima, witnesses=wits)


def label_vectors(
    coloring: EdgeColoring, *, budget: int | None = None
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """C(w) = (1 + L_1(w), ..., 1 + L_q(w)) for every (k-1)-tuple w."""
    if coloring.k < 2:
        raise ValueError("label vectors need k >= 2")
    k, q, big = coloring.k, coloring.q, coloring.N
    wm = meter(budget, f"label vectors on {coloring.num_edges} edges")
    wm.charge(comb(big, k - 1))
    if k == 3:
        t2, fwd, _ = _k3_sweeps(coloring, wm, want_reverse=False)
        return {
            (a, b): tuple(fwd[c][t2[b] + a] + 1 for c in range(1, q + 1))
            for b in range(big)
            for a in range(b)
        }
    fvals, _ = _forward_tables(coloring, wm, want_pred=False)
    return {
        w: tuple(fvals[c].get(w, 0) + 1 for c in range(1, q + 1))
        for w in combinations(range(big), k - 1)
    }


class LabelEscape(ValueError):
    """A label vector left [n]^q: a monochromatic path of length >= n exists."""

    def __init__(self, window: tuple[int, ...], color: int, entry: int, n: int):
        self.window, self.color, self.entry, self.n = window, color, entry, n
        super().__init__(
            f"label entry {entry} > n={n} at window {window}, color {color}: "
            f"a color-{color} monotone path of length >= {n} exists"
        )


def _label_levels(
    coloring: EdgeColoring, n: int, r: int, budget: int | None
) -> dict[int, dict]:
    """Down-set label tables for tuple sizes r..k-1, keyed by size.

    Size k-1 entries are grid points of [n]^q; smaller sizes are bitmasks
    over the next universe down (size j labels live in the order-(k-j+1)
    universe, stored as masks over the order-(k-j) one).
    """
    k, q, big = coloring.k, coloring.q, coloring.N
    if not 1 <= r <= k - 1:
        raise ValueError(f"tuple size must lie in 1..{k - 1}, got {r}")
    if n < 1:
        raise ValueError("need n >= 1")
    base = label_vectors(coloring, budget=budget)
    for w, lab in base.items():
        for c, entry in enumerate(lab, start=1):
            if entry > n:
                raise LabelEscape(w, c, entry, n)
    levels: dict[int, dict] = {k - 1: base}
    if r == k - 1:
        return levels
    wm = meter(budget, "down-set label recursion")
    unis: dict[int, Universe] = {}
    u = build_universe(k - 1, q, n, budget=budget)
    while u is not None:
        unis[u.k] = u
        u = u.parent
    for j in range(k - 2, r - 1, -1):
        lower = unis[k - j]
        pmask = lower.principal_masks()
        upper = levels[j + 1]
        lev: dict[tuple[int, ...], int] = {}
        for t in combinations(range(big), j):
            acc = 0
            for x in range(t[0]):
                wm.charge()
                acc |= pmask[lower.index_of(upper[(x,) + t])]
            lev[t] = acc
        levels[j] = lev
    return levels


def downset_labels(
    coloring: EdgeColoring, n: int, r: int = 1, *, budget: int | None = None
) -> dict:
    """The recursive down-set labels of all r-tuples.

    For r = k-1 the labels are grid points; otherwise each label is the
    bitmask of an order-(k-r+1) structure over the order-(k-r) universe.
    Raises LabelEscape when some color reaches a path of length n, in which
    case no such labels exist.
    """
    return _label_levels(coloring, n, r, budget)[r]


@dataclass(frozen=True)
class Certificate:
    """Outcome of the pigeonhole check for a coloring and target length n.

    status "path": some color has a monotone path of length >= n (witness in
    ``path``).  status "distinct": all maxima are < n and the per-vertex
    labels are pairwise distinct, certifying N <= (universe size).  status
    "collision" cannot occur for a correct DP; it carries the colliding
    vertex pair plus a path exceeding the DP's own maximum as evidence.
    """

    status: str
    path: MonotonePath | None = None
    collision: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.status not in ("path", "distinct", "collision"):
            raise ValueError(f"unknown certificate status {self.status!r}")
        if self.status != "distinct" and self.path is None:
            raise ValueError(f"status {self.status!r} needs a witness path")


def _extract_collision_path(
    coloring: EdgeColoring, levels: dict[int, dict], u: int, v: int, budget: int | None
) -> MonotonePath:
    """Walk a label collision down to a path contradicting the forward DP."""
    k = coloring.k
    wm = meter(budget, "collision walk")
    t = (u, v)
    while len(t) < k:
        j = len(t)
        cur = levels[j][t]
        grid_level = j == k - 1
        found = None
        for x in range(t[0]):
            wm.charge()
            other = levels[j][(x,) + t[:-1]]
            if grid_level:
                ok = all(a <= b for a, b in zip(cur, other))
            else:
                ok = cur & ~other == 0
            if ok:
                found = x
                break
        if found is None:
            raise AssertionError("label collision walk found no containment step")
        t = (found,) + t
    col = coloring.color_of(t)
    fvals, preds = _forward_tables(
        coloring, meter(budget, "collision path rebuild"), want_pred=True
    )
    w = t[:-1]
    seq = list(w)
    length = fvals[col].get(w, 0)
    for _ in range(length):
        w = preds[col][w]
        seq.insert(0, w[0])
    seq.append(t[-1])
    return MonotonePath(k=k, color=col, vertices=tuple(seq))


def injectivity_certificate(
    coloring: EdgeColoring, n: int, *, budget: int | None = None
) -> Certificate:
    """Either a monochromatic path of length >= n, or distinct vertex labels.

    Realizes the pigeonhole argument: when the scan maxima all stay below n,
    the order-k labels of the N vertices are pairwise distinct, so N cannot
    exceed the number of order-k structures.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    scan = longest_mono(coloring, want_witnesses=True, budget=budget)
    for c in sorted(scan.per_color_max):
        if scan.per_color_max[c] >= n:
            return Certificate(status="path", path=scan.witnesses[c])
    levels = _label_levels(coloring, n, 1, budget)
    seen: dict = {}
    for v in range(coloring.N):
        lab = levels[1][(v,)]
        if lab in seen:
            path = _extract_collision_path(coloring, levels, seen[lab], v, budget)
            return Certificate(status="collision", path=path, collision=(seen[lab], v))
        seen[lab] = v
    return Certificate(status="distinct")
