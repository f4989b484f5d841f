"""Closed-interval representations of interval graphs."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph


@dataclass(frozen=True)
class IntervalRepresentation:
    """Per-vertex closed intervals ``[left[v], right[v]]`` with rational endpoints."""

    left: tuple[Fraction, ...]
    right: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise ValueError("left and right endpoint lists differ in length")
        for v, (lo, hi) in enumerate(zip(self.left, self.right)):
            if lo > hi:
                raise ValueError(f"interval of vertex {v} has l > r ({lo} > {hi})")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[object, object]]) -> "IntervalRepresentation":
        lefts, rights = [], []
        for lo, hi in pairs:
            lefts.append(_as_fraction(lo))
            rights.append(_as_fraction(hi))
        return cls(tuple(lefts), tuple(rights))

    def __len__(self) -> int:
        return len(self.left)

    def interval(self, v: int) -> tuple[Fraction, Fraction]:
        return self.left[v], self.right[v]

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.left, self.right))

    def restrict(self, vertices: Sequence[int]) -> "IntervalRepresentation":
        return IntervalRepresentation(
            tuple(self.left[v] for v in vertices), tuple(self.right[v] for v in vertices)
        )

    def mirrored(self) -> "IntervalRepresentation":
        """Reflection through 0; same intersection graph, sweep runs the other way."""
        return IntervalRepresentation(tuple(-r for r in self.right), tuple(-l for l in self.left))

    def has_distinct_right_endpoints(self) -> bool:
        return len(set(self.right)) == len(self.right)


def _as_fraction(x: object) -> Fraction:
    if isinstance(x, float):
        # go through repr so 0.1 becomes 1/10 rather than its binary expansion
        return Fraction(repr(x))
    return Fraction(x)


def intervals_intersect(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def intersection_graph(rep: IntervalRepresentation) -> Graph:
    """Direct O(n^2) construction of the graph a representation denotes."""
    pairs = rep.pairs()
    n = len(pairs)
    return Graph(
        n,
        [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if intervals_intersect(pairs[i], pairs[j])
        ],
    )


def _require_cover(g: Graph, rep: IntervalRepresentation) -> None:
    if len(rep) < g.n:
        raise ValueError(f"representation is missing vertex {len(rep)}")
    if len(rep) > g.n:
        raise ValueError(f"representation has {len(rep)} intervals for {g.n} vertices")


def validate_interval_representation(g: Graph, rep: IntervalRepresentation) -> bool:
    """True iff the intersection graph of ``rep`` is exactly ``g``.

    Every edge is checked for overlap, and the number of overlapping pairs is
    counted by a sort-and-bisect sweep; the graphs agree iff both match.
    Runs in O(n log n + m).
    """
    _require_cover(g, rep)
    for u, v in g.edges():
        if not intervals_intersect(rep.interval(u), rep.interval(v)):
            return False
    order = sorted(range(g.n), key=lambda v: rep.left[v])
    lefts = [rep.left[v] for v in order]
    overlapping = 0
    for pos, v in enumerate(order):
        # later-starting intervals that begin no later than v ends
        overlapping += bisect_right(lefts, rep.right[v], lo=pos + 1) - (pos + 1)
    return overlapping == g.m


def canonicalize_representation(rep: IntervalRepresentation) -> IntervalRepresentation:
    """Break ties among right endpoints without changing the intersection graph.

    Within a group of equal right endpoints (ordered by vertex id) the j-th
    interval is extended by ``j * eps / size``, where ``eps`` is half the
    smallest positive gap between distinct endpoint values. No endpoint lies
    strictly inside any extension, so no intersection appears or disappears.
    """
    if rep.has_distinct_right_endpoints():
        return rep
    values = sorted(set(rep.left) | set(rep.right))
    gaps = [b - a for a, b in zip(values, values[1:])]
    eps = min(gaps) / 2 if gaps else Fraction(1)
    groups: dict[Fraction, list[int]] = {}
    for v, r in enumerate(rep.right):
        groups.setdefault(r, []).append(v)
    right = list(rep.right)
    for r, members in groups.items():
        for j, v in enumerate(members):
            right[v] = r + eps * j / len(members)
    return IntervalRepresentation(rep.left, tuple(right))
