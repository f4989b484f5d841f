"""Simple undirected graphs and the structural queries the solvers rely on."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

VertexSet = frozenset  # frozenset[int]; iterate via sorted() where order matters


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Neighbor lists are kept sorted so every traversal is deterministic.
    """

    __slots__ = ("n", "_adj", "_nbr_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._nbr_sets[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self._nbr_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves ``1..leaves``."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph(offset, edges)


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)],
    )


def check_vertex_set(g: Graph, d: Iterable[int]) -> frozenset:
    """Return ``d`` as a frozenset, raising ``ValueError`` on out-of-range ids."""
    d = frozenset(d)
    for v in d:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"vertex {v!r} out of range for n={g.n}")
    return d


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` relabelled ``0..len-1`` in the given order.

    Returns the subgraph and the list mapping local ids back to ``g``'s ids.
    """
    local = {v: i for i, v in enumerate(vertices)}
    edges = [
        (local[u], local[w])
        for u in vertices
        for w in g.neighbors(u)
        if w in local and u < w
    ]
    return Graph(len(vertices), edges), list(vertices)


def connected_components(g: Graph) -> list[frozenset]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        parts.append(frozenset(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring as a 0/1 list, or ``None`` when ``g`` has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_split_partition(g: Graph, clique: Iterable[int], independent: Iterable[int]) -> bool:
    a = sorted(set(clique))
    b = sorted(set(independent))
    if set(a) & set(b) or len(a) + len(b) != g.n:
        return False
    if any(not g.has_edge(u, v) for i, u in enumerate(a) for v in a[i + 1:]):
        return False
    return not any(g.has_edge(u, v) for i, u in enumerate(b) for v in b[i + 1:])


def split_partition(g: Graph) -> tuple[frozenset, frozenset] | None:
    """Clique/independent-set partition of a split graph, or ``None``.

    Uses the Hammer-Simeone degree-sequence characterisation.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    size = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            size = i
    if sum(degs[:size]) != size * (size - 1) + sum(degs[size:]):
        return None
    return frozenset(order[:size]), frozenset(order[size:])
