"""The grid poset [n]^d and its down-sets, antichains, and partitions.

Points of the grid are 1-based coordinate tuples ordered coordinatewise:
x precedes y when x_i <= y_i in every coordinate.  A down-set (order ideal)
of the grid is a subset closed under going down in this order.  Down-sets
of [n]^d are in bijection with (d-1)-dimensional arrays of column heights,

    A[i_1, ..., i_{d-1}] = max { s : (i_1, ..., i_{d-1}, s) in S }   (max of
    the empty set is 0),

which take values in 0..n and are weakly decreasing along every axis.
They are also in bijection with antichains, by taking maximal elements one
way and downward closure the other.  Both bijections are implemented here
and are exercised exhaustively by the tests on small boxes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod


def dominates(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    """True iff x_i <= y_i for every coordinate i."""
    if len(x) != len(y):
        raise ValueError(f"point dimensions differ: {len(x)} vs {len(y)}")
    return all(a <= b for a, b in zip(x, y))


@dataclass(frozen=True)
class GridBox:
    """The poset [n]^d of d-tuples with entries in 1..n."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise ValueError(f"box needs n >= 1 and d >= 1, got n={self.n} d={self.d}")

    @property
    def size(self) -> int:
        return self.n**self.d

    def points(self) -> list[tuple[int, ...]]:
        """All points in lexicographic order, coordinate 1 most significant."""
        return list(product(range(1, self.n + 1), repeat=self.d))

    def __contains__(self, p: object) -> bool:
        return (
            isinstance(p, tuple)
            and len(p) == self.d
            and all(isinstance(c, int) and 1 <= c <= self.n for c in p)
        )


def _check_members(box: GridBox, members: frozenset[tuple[int, ...]]) -> None:
    for p in members:
        if p not in box:
            raise ValueError(f"point {p} outside box [{box.n}]^{box.d}")


@dataclass(frozen=True)
class DownSet:
    """A subset of a grid box closed downward under the coordinate order.

    Closure is validated on construction by checking, for every member and
    every coordinate above 1, that the point one step down along that axis
    is also a member; on the graded grid this is equivalent to full
    down-closure.
    """

    box: GridBox
    members: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        _check_members(self.box, members)
        for p in members:
            for i, c in enumerate(p):
                if c > 1:
                    below = p[:i] + (c - 1,) + p[i + 1 :]
                    if below not in members:
                        raise ValueError(
                            f"not a down-set: contains {p} but not {below}"
                        )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: object) -> bool:
        return p in self.members


@dataclass(frozen=True)
class Antichain:
    """A set of pairwise incomparable points of a grid box."""

    box: GridBox
    members: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        _check_members(self.box, members)
        elems = sorted(members)
        for i, x in enumerate(elems):
            for y in elems[i + 1 :]:
                if dominates(x, y) or dominates(y, x):
                    raise ValueError(f"not an antichain: {x} and {y} are comparable")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class HyperPartition:
    """A multidimensional array, weakly decreasing along every axis.

    ``shape`` gives the index box (1-based indices up to shape[t] on axis t),
    ``bound`` the largest allowed entry, and ``entries`` the values flattened
    in lexicographic index order with the first axis most significant.  A
    0-axis partition (shape ``()``) is a single number in 0..bound.

    Comparing two partitions of equal shape by their flattened entry tuples
    is the lexicographic order used throughout: the smaller partition is the
    one with the smaller entry at the first index where they differ.
    """

    shape: tuple[int, ...]
    bound: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError("bound must be >= 0")
        if any(s < 1 for s in self.shape):
            raise ValueError(f"shape entries must be >= 1, got {self.shape}")
        cells = prod(self.shape)
        if len(self.entries) != cells:
            raise ValueError(
                f"expected {cells} entries for shape {self.shape}, "
                f"got {len(self.entries)}"
            )
        if any(not 0 <= e <= self.bound for e in self.entries):
            raise ValueError(f"entries must lie in 0..{self.bound}")
        strides = _strides(self.shape)
        for flat, idx in enumerate(product(*(range(s) for s in self.shape))):
            for t, c in enumerate(idx):
                if c + 1 < self.shape[t]:
                    if self.entries[flat] < self.entries[flat + strides[t]]:
                        raise ValueError(
                            f"entries increase along axis {t + 1} at index {idx}"
                        )

    def entry(self, idx: tuple[int, ...]) -> int:
        """Entry at a 1-based index tuple."""
        if len(idx) != len(self.shape):
            raise ValueError("index dimension mismatch")
        flat = 0
        for t, (c, stride) in enumerate(zip(idx, _strides(self.shape))):
            if not 1 <= c <= self.shape[t]:
                raise ValueError(f"index {idx} outside shape {self.shape}")
            flat += (c - 1) * stride
        return self.entries[flat]

    def to_nested(self):
        """Nested lists in index order; a 0-axis partition is a bare int."""

        def build(axis: int, offset: int):
            if axis == len(self.shape):
                return self.entries[offset]
            stride = _strides(self.shape)[axis]
            return [
                build(axis + 1, offset + i * stride) for i in range(self.shape[axis])
            ]

        return build(0, 0)

    @classmethod
    def from_nested(cls, nested, bound: int) -> "HyperPartition":
        shape: list[int] = []
        node = nested
        while isinstance(node, list):
            if not node:
                raise ValueError("empty axis in nested partition")
            shape.append(len(node))
            node = node[0]
        entries: list[int] = []

        def flatten(node, axis: int) -> None:
            if axis == len(shape):
                if isinstance(node, list):
                    raise ValueError("ragged nested partition")
                entries.append(int(node))
                return
            if not isinstance(node, list) or len(node) != shape[axis]:
                raise ValueError("ragged nested partition")
            for child in node:
                flatten(child, axis + 1)

        flatten(nested, 0)
        return cls(tuple(shape), bound, tuple(entries))


def _strides(shape: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(prod(shape[t + 1 :]) for t in range(len(shape)))


def downset_to_partition(s: DownSet) -> HyperPartition:
    """Column heights of a down-set: the (d-1)-dimensional profile array."""
    box = s.box
    shape = (box.n,) * (box.d - 1)
    heights: dict[tuple[int, ...], int] = {}
    for p in s.members:
        idx = p[:-1]
        if p[-1] > heights.get(idx, 0):
            heights[idx] = p[-1]
    entries = tuple(
        heights.get(idx, 0) for idx in product(range(1, box.n + 1), repeat=box.d - 1)
    )
    return HyperPartition(shape, box.n, entries)


def partition_to_downset(a: HyperPartition) -> DownSet:
    """Inverse of :func:`downset_to_partition`; needs a cubical shape."""
    if any(s != a.bound for s in a.shape):
        raise ValueError(
            f"only partitions with shape ({a.bound},)*k map to a grid box, "
            f"got shape {a.shape} with bound {a.bound}"
        )
    d = len(a.shape) + 1
    n = a.bound
    members = set()
    for idx in product(*(range(1, s + 1) for s in a.shape)):
        for h in range(1, a.entry(idx) + 1):
            members.add(idx + (h,))
    return DownSet(GridBox(n, d), frozenset(members))


def maximal_elements(s: DownSet) -> Antichain:
    """The maximal points of a down-set; its downward closure returns s."""
    members = s.members
    maximal = set()
    for p in members:
        above = (p[:i] + (c + 1,) + p[i + 1 :] for i, c in enumerate(p) if c < s.box.n)
        if not any(q in members for q in above):
            maximal.add(p)
    return Antichain(s.box, frozenset(maximal))


def downset_closure(a: Antichain) -> DownSet:
    """All points lying below some member of the antichain."""
    members = set()
    for p in a.members:
        members.update(product(*(range(1, c + 1) for c in p)))
    return DownSet(a.box, frozenset(members))


# --- canonical text encodings ------------------------------------------------


def downset_to_json(s: DownSet) -> list[list[int]]:
    """Sorted list of 1-based coordinate arrays."""
    return [list(p) for p in sorted(s.members)]


def downset_from_json(data: list[list[int]], box: GridBox) -> DownSet:
    return DownSet(box, frozenset(tuple(p) for p in data))
