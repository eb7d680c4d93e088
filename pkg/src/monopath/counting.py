"""Exact counting of down-sets, partitions, and related rank statistics.

The number of down-sets of the grid [n]^d equals the number of
(d-1)-dimensional arrays with entries in 0..n that are weakly decreasing
along every axis.  Two closed forms are classical:

    d = 2:  C(2n, n)                     (weakly decreasing sequences)
    d = 3:  prod_{1<=i,j,k<=n} (i+j+k-1)/(i+j+k-2)   (MacMahon's product)

For arbitrary d the count is computed by a frontier dynamic program that
scans the cells of the index box in lexicographic order and memoizes on the
sliding window of the last prod(shape[1:]) entries; every monotonicity
constraint looks back at most that far.  Tiny boxes retain brute-force
subset scans as independent oracles, and antichains are counted by a third
route (independent sets of the comparability graph) so that the down-set /
antichain bijection can be double checked at scale.

Also here: the rank statistic S_n(k, d) counting compositions of k into d
parts from 1..n, rank sizes of the lattice of length-n decreasing sequences
(which follow the Gaussian binomial C(2n, n)_q), and the sizes rho_k of the
recursive down-set universes defined in :mod:`monopath.universes`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, prod

from .budget import WorkMeter, meter
from .grid import GridBox, dominates

# --- closed forms -------------------------------------------------------------


def p1_closed(n: int) -> int:
    """Down-sets of [n]^2: the central binomial coefficient C(2n, n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n)


def p1_rect(a: int, b: int) -> int:
    """Weakly decreasing sequences of length a with entries 0..b: C(a+b, a)."""
    if a < 0 or b < 0:
        raise ValueError("sides must be >= 0")
    return comb(a + b, a)


def macmahon_rect(a: int, b: int, c: int) -> int:
    """MacMahon's box product: plane partitions inside an a x b x c box."""
    if min(a, b, c) < 0:
        raise ValueError("sides must be >= 0")
    value = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                value *= Fraction(i + j + k - 1, i + j + k - 2)
    if value.denominator != 1:
        raise AssertionError("MacMahon product did not reduce to an integer")
    return value.numerator


def macmahon(n: int) -> int:
    """Plane partitions inside the n x n x n box."""
    return macmahon_rect(n, n, n)


# --- frontier dynamic program -------------------------------------------------


def count_box_partitions(
    shape: tuple[int, ...], bound: int, *, budget: int | None = None
) -> int:
    """Arrays over ``shape`` with entries 0..bound, weakly decreasing per axis.

    Cells are scanned in lexicographic index order; the DP state is the
    window of the last prod(shape[1:]) values, which contains every cell a
    monotonicity constraint can reference.  Work is metered per transition.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if any(s < 1 for s in shape):
        raise ValueError(f"shape entries must be >= 1, got {shape}")
    wm = meter(budget, f"partition count in shape {shape} bound {bound}")
    m = len(shape)
    if m == 0:
        return bound + 1
    strides = [prod(shape[t + 1 :]) for t in range(m)]
    window = strides[0]
    states: dict[tuple[int, ...], int] = {(): 1}
    for cell in product(*(range(s) for s in shape)):
        offsets = [strides[t] for t in range(m) if cell[t] > 0]
        nxt: dict[tuple[int, ...], int] = {}
        for win, cnt in states.items():
            filled = len(win)
            cap = bound
            for off in offsets:
                v = win[filled - off]
                if v < cap:
                    cap = v
            for v in range(cap + 1):
                wm.charge()
                nw = win + (v,)
                if len(nw) > window:
                    nw = nw[1:]
                if nw in nxt:
                    nxt[nw] += cnt
                else:
                    # new states dominate memory; bill their window size so
                    # the budget bounds the frontier, not just the time
                    wm.charge(window)
                    nxt[nw] = cnt
        states = nxt
    return sum(states.values())


def count_downsets(box: GridBox, *, budget: int | None = None) -> int:
    """Number of down-sets of [n]^d, via the frontier DP on column heights."""
    return count_box_partitions((box.n,) * (box.d - 1), box.n, budget=budget)


def dedekind(d: int, *, budget: int | None = None) -> int:
    """Down-sets of the Boolean lattice [2]^d (antichain counts of the cube)."""
    return count_downsets(GridBox(2, d), budget=budget)


# --- brute-force oracles ------------------------------------------------------

_EXHAUSTIVE_CAP = 20


def _cover_pred_masks(points: list[tuple[int, ...]]) -> list[int]:
    index = {p: i for i, p in enumerate(points)}
    masks = []
    for p in points:
        pm = 0
        for i, c in enumerate(p):
            if c > 1:
                pm |= 1 << index[p[:i] + (c - 1,) + p[i + 1 :]]
        masks.append(pm)
    return masks


def count_downsets_exhaustive(box: GridBox) -> int:
    """Scan all 2^(n^d) subsets and keep the down-closed ones.  Tiny boxes only."""
    m = box.size
    if m > _EXHAUSTIVE_CAP:
        raise ValueError(f"box has {m} points; exhaustive scan capped at {_EXHAUSTIVE_CAP}")
    masks = _cover_pred_masks(box.points())
    count = 0
    for s in range(1 << m):
        rest = s
        ok = True
        while rest:
            i = (rest & -rest).bit_length() - 1
            if masks[i] & s != masks[i]:
                ok = False
                break
            rest &= rest - 1
        if ok:
            count += 1
    return count


def count_antichains_exhaustive(box: GridBox) -> int:
    """Scan all subsets and keep the pairwise incomparable ones.  Tiny boxes only."""
    m = box.size
    if m > _EXHAUSTIVE_CAP:
        raise ValueError(f"box has {m} points; exhaustive scan capped at {_EXHAUSTIVE_CAP}")
    points = box.points()
    comp = [0] * m
    for i, x in enumerate(points):
        for j, y in enumerate(points):
            if i != j and (dominates(x, y) or dominates(y, x)):
                comp[i] |= 1 << j
    count = 0
    for s in range(1 << m):
        rest = s
        ok = True
        while rest:
            i = (rest & -rest).bit_length() - 1
            if comp[i] & s:
                ok = False
                break
            rest &= rest - 1
        if ok:
            count += 1
    return count


def count_antichains(box: GridBox, *, budget: int | None = None) -> int:
    """Antichains of [n]^d, counted as independent sets of the comparability graph.

    Branch on a vertex of maximum remaining degree (in the set / out of the
    set), memoizing on the mask of still-available vertices.  This shares no
    machinery with the frontier DP, so agreement of the two counts checks the
    down-set / antichain bijection computationally.
    """
    wm = meter(budget, f"antichain count in [{box.n}]^{box.d}")
    points = box.points()
    m = len(points)
    comp = [0] * m
    for i, x in enumerate(points):
        for j in range(i + 1, m):
            y = points[j]
            if dominates(x, y) or dominates(y, x):
                comp[i] |= 1 << j
                comp[j] |= 1 << i
    memo: dict[int, int] = {}

    def count(avail: int) -> int:
        if avail == 0:
            return 1
        cached = memo.get(avail)
        if cached is not None:
            return cached
        wm.charge()
        best, best_deg = -1, -1
        rest = avail
        while rest:
            i = (rest & -rest).bit_length() - 1
            deg = (comp[i] & avail).bit_count()
            if deg > best_deg:
                best, best_deg = i, deg
            rest &= rest - 1
        if best_deg == 0:
            result = 1 << avail.bit_count()
        else:
            without = count(avail & ~(1 << best))
            with_v = count(avail & ~((1 << best) | comp[best]))
            result = without + with_v
        memo[avail] = result
        return result

    return count((1 << m) - 1)


# --- order ideals of an arbitrary finite poset --------------------------------


def count_order_ideals(
    pred_masks: list[int], *, budget: int | None = None, label: str = "order ideals"
) -> int:
    """Down-sets of a poset given by strict-predecessor bitmasks.

    Element indices must form a linear extension: every bit in pred_masks[i]
    is below i.  The DP walks elements in index order and memoizes on the
    membership pattern of the frontier (processed elements that some
    unprocessed element still lies above).
    """
    m = len(pred_masks)
    if m == 0:
        return 1
    wm = meter(budget, label)
    last_use = [-1] * m
    for i, pm in enumerate(pred_masks):
        if pm >> i:
            raise ValueError("pred_masks is not indexed by a linear extension")
        rest = pm
        while rest:
            j = (rest & -rest).bit_length() - 1
            if i > last_use[j]:
                last_use[j] = i
            rest &= rest - 1
    drops_at = [0] * m
    for j, lu in enumerate(last_use):
        drops_at[max(lu, j)] |= 1 << j
    states: dict[int, int] = {0: 1}
    active = 0
    for i in range(m):
        pm = pred_masks[i]
        bit = 1 << i
        active = (active | bit) & ~drops_at[i]
        nxt: dict[int, int] = {}
        for smask, cnt in states.items():
            wm.charge()
            out = smask & active
            if out in nxt:
                nxt[out] += cnt
            else:
                nxt[out] = cnt
            if smask & pm == pm:
                inc = (smask | bit) & active
                if inc in nxt:
                    nxt[inc] += cnt
                else:
                    nxt[inc] = cnt
        states = nxt
    return sum(states.values())


def enumerate_order_ideals(pred_masks: list[int], wm: WorkMeter) -> list[int]:
    """All down-set bitmasks of a poset given by strict-predecessor masks."""
    m = len(pred_masks)
    out: list[int] = []
    # explicit stack: recursion depth would scale with poset size
    stack = [(0, 0)]
    while stack:
        i, cur = stack.pop()
        wm.charge()
        if i == m:
            out.append(cur)
            continue
        if cur & pred_masks[i] == pred_masks[i]:
            stack.append((i + 1, cur | (1 << i)))
        stack.append((i + 1, cur))
    return out


def count_rho(k: int, d: int, n: int, *, budget=None) -> int:
    """Size of the order-k universe over [n]^d.

    Order 2 is the grid itself (n^d structures) and order 3 is its number of
    down-sets, handled by the frontier DP.  For k >= 4 the order-k structures
    are the down-sets of the order-(k-1) universe, so the count materializes
    that universe and counts its order ideals; all stages share one meter.
    """
    if k < 2:
        raise ValueError("order must be >= 2")
    if k == 2:
        return GridBox(n, d).size
    if k == 3:
        return count_downsets(GridBox(n, d), budget=budget)
    from .universes import build_universe

    wm = meter(budget, f"size of order-{k} universe (d={d}, n={n})")
    parent = build_universe(k - 1, d, n, budget=wm)
    return count_order_ideals(
        parent.pred_masks(wm),
        budget=wm,
        label=f"order ideals of order-{k - 1} universe (d={d}, n={n})",
    )


# --- rank statistics ----------------------------------------------------------


@dataclass(frozen=True)
class RankProfile:
    """Counts by rank: sizes[i] structures have rank start + i."""

    start: int
    sizes: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def max_size(self) -> int:
        return max(self.sizes)

    def is_symmetric(self) -> bool:
        return self.sizes == self.sizes[::-1]


def s_profile(n: int, d: int) -> RankProfile:
    """Counts of d-tuples from 1..n by coordinate sum (ranks d..dn)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    ways = [1]
    for _ in range(d):
        nxt = [0] * (len(ways) + n)
        for total, cnt in enumerate(ways):
            if cnt:
                for v in range(1, n + 1):
                    nxt[total + v] += cnt
        ways = nxt
    return RankProfile(d, tuple(ways[d : d * n + 1]))


def s_count(n: int, d: int, k: int) -> int:
    """Solutions of x_1 + ... + x_d = k with every x_i in 1..n."""
    profile = s_profile(n, d)
    if not d <= k <= d * n:
        raise ValueError(f"sum {k} out of range {d}..{d * n}")
    return profile.sizes[k - d]


def middle_max(n: int, d: int) -> tuple[int, int]:
    """(k*, M): the smallest rank attaining the largest count S_n(k, d)."""
    profile = s_profile(n, d)
    best = max(profile.sizes)
    k_star = profile.start + profile.sizes.index(best)
    return k_star, best


def lnn_rank_sizes(n: int) -> RankProfile:
    """Rank sizes of the lattice of decreasing sequences in the n x n box.

    Sequences A_1 >= ... >= A_n with entries 0..n, ranked by sum of entries;
    the generating polynomial is the Gaussian binomial C(2n, n)_q, computed
    by the q-Pascal recurrence.  Enumeration on small n is kept as a test
    oracle.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    # row[r] = coefficient list of C(m, r)_q, built up in m
    row: list[list[int]] = [[1]]
    for m in range(1, 2 * n + 1):
        nxt: list[list[int]] = [[1]]
        top = min(m, n)
        for r in range(1, top + 1):
            left = row[r - 1] if r - 1 < len(row) else None
            right = row[r] if r < len(row) else None
            coeffs = list(left) if left is not None else []
            if right is not None:
                # q^r * C(m-1, r)_q
                shifted = [0] * r + right
                width = max(len(coeffs), len(shifted))
                coeffs = [
                    (coeffs[i] if i < len(coeffs) else 0)
                    + (shifted[i] if i < len(shifted) else 0)
                    for i in range(width)
                ]
            nxt.append(coeffs)
        row = nxt
    sizes = row[n] if n > 0 else [1]
    expected = n * n + 1
    if len(sizes) != expected:
        raise AssertionError("Gaussian binomial has the wrong degree")
    return RankProfile(0, tuple(sizes))


def lnn_max(n: int) -> int:
    """Largest rank size of the lattice of decreasing sequences (middle rank)."""
    return lnn_rank_sizes(n).max_size
