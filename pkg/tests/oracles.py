"""Slow reference implementations written directly from the definitions.

Nothing here imports the algorithms under test; only ``Graph`` is shared so
instances can be passed around.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations


def closed_nbhd(g, v):
    return {v} | set(g.neighbors(v))


def dominates(g, d):
    covered = set()
    for v in d:
        covered |= closed_nbhd(g, v)
    return covered == set(range(g.n))


def deletable(g, d):
    return {w for w in d if dominates(g, set(d) - {w})}


def domination_number(g):
    for size in range(g.n + 1):
        for c in combinations(range(g.n), size):
            if dominates(g, c):
                return size
    raise AssertionError("unreachable")


def reachable(g, source, target, k, feasible=None):
    """Plain BFS over frozensets; returns the shortest distance or None."""
    feasible = feasible or (lambda s: dominates(g, s))
    source, target = frozenset(source), frozenset(target)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        if s == target:
            return dist[s]
        for v in range(g.n):
            t = s - {v} if v in s else s | {v}
            if len(t) <= k and t not in dist and feasible(t):
                dist[t] = dist[s] + 1
                queue.append(t)
    return None


def is_cover(g, c):
    return all(u in c or v in c for u, v in g.edges())


def has_induced_p4(g):
    for a, b, c, d in permutations(range(g.n), 4):
        if a < d and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
            if not (g.has_edge(a, c) or g.has_edge(b, d) or g.has_edge(a, d)):
                return True
    return False


def overlap_edges(pairs):
    out = set()
    for i, j in combinations(range(len(pairs)), 2):
        (a, b), (c, d) = pairs[i], pairs[j]
        if max(a, c) <= min(b, d):
            out.add((i, j))
    return out


def walk(start, moves):
    """Sets visited by a move list, checking presence rules."""
    cur = set(start)
    sets = [frozenset(cur)]
    for mv in moves:
        if mv.kind.value == "+":
            assert mv.vertex not in cur
            cur.add(mv.vertex)
        else:
            assert mv.vertex in cur
            cur.remove(mv.vertex)
        sets.append(frozenset(cur))
    return sets


def valid_walk(g, start, moves, end, k):
    sets = walk(start, moves)
    return sets[-1] == frozenset(end) and all(len(s) <= k and dominates(g, s) for s in sets)
