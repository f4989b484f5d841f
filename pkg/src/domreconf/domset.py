"""Dominating-set predicates and an exhaustive minimum-dominating-set oracle."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import Graph, check_vertex_set

BRUTEFORCE_MAX_N = 24


def dominator_counts(g: Graph, d: Iterable[int]) -> list[int]:
    """``counts[u] = |N[u] ∩ d|`` for every vertex ``u``."""
    counts = [0] * g.n
    for w in d:
        counts[w] += 1
        for u in g.neighbors(w):
            counts[u] += 1
    return counts


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    d = check_vertex_set(g, d)
    return all(c > 0 for c in dominator_counts(g, d))


def deletable_vertices(g: Graph, d: Iterable[int]) -> frozenset:
    """Members ``w`` of the dominating set ``d`` such that ``d - {w}`` still dominates.

    ``w`` is deletable iff every vertex of ``N[w]`` has at least two dominators,
    so one pass over the counts suffices: O(n + m).
    """
    d = check_vertex_set(g, d)
    counts = dominator_counts(g, d)
    if not all(counts):
        raise ValueError("not a dominating set")
    return frozenset(
        w for w in d if counts[w] >= 2 and all(counts[u] >= 2 for u in g.neighbors(w))
    )


def is_minimal(g: Graph, d: Iterable[int]) -> bool:
    return not deletable_vertices(g, d)


def closed_neighborhood_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.neighbors(v):
            m |= 1 << u
        masks.append(m)
    return masks


def min_dominating_set_bruteforce(g: Graph) -> frozenset:
    """A minimum dominating set, lexicographically smallest among those of its size.

    Subsets are enumerated by increasing cardinality, so the cost is governed by
    the domination number rather than by ``2**n``.
    """
    if g.n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_N}, got {g.n}")
    if g.n == 0:
        return frozenset()
    masks = closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= masks[v]
            if covered == full:
                return frozenset(combo)
    raise AssertionError("V(G) always dominates")


def domination_number(g: Graph) -> int:
    return len(min_dominating_set_bruteforce(g))


def random_minimal_dominating_set(g: Graph, rng) -> frozenset:
    """Start from ``V(G)`` and drop vertices in random order while domination holds."""
    counts = [g.degree(v) + 1 for v in range(g.n)]
    members = [True] * g.n
    order = list(range(g.n))
    rng.shuffle(order)
    for w in order:
        if counts[w] >= 2 and all(counts[u] >= 2 for u in g.neighbors(w)):
            members[w] = False
            counts[w] -= 1
            for u in g.neighbors(w):
                counts[u] -= 1
    return frozenset(v for v in range(g.n) if members[v])
