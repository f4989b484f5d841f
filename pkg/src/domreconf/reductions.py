"""Vertex-cover reconfiguration and the reductions from it to dominating-set
reconfiguration on general, split and bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .scheme import cancel_inverse_pairs
from .graph import Graph, check_vertex_set, is_split_partition, split_partition
from .reconfig import (
    DEFAULT_BUDGET,
    ORACLE_MAX_N,
    DsrInstance,
    Move,
    MoveKind,
    ReconfSequence,
    SearchResult,
    apply,
    bfs_reconfiguration,
    mask_of,
    verify,
)

VCR_DSR = "vcr-dsr"
VCR_SPLIT = "vcr-split"
SPLIT_BIPARTITE = "split-bipartite"
KINDS = (VCR_DSR, VCR_SPLIT, SPLIT_BIPARTITE)


def is_vertex_cover(g: Graph, c: Iterable[int]) -> bool:
    c = frozenset(c)
    return all(u in c or v in c for u, v in g.edges())


@dataclass(frozen=True)
class VcrInstance:
    graph: Graph
    source: frozenset
    target: frozenset
    k: int

    def __post_init__(self):
        g = self.graph
        object.__setattr__(self, "source", check_vertex_set(g, self.source))
        object.__setattr__(self, "target", check_vertex_set(g, self.target))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        for name, c in (("source", self.source), ("target", self.target)):
            if not is_vertex_cover(g, c):
                raise ValueError(f"{name} is not a vertex cover")
            if len(c) > self.k:
                raise ValueError(f"{name} has {len(c)} vertices, more than k={self.k}")


@dataclass(frozen=True)
class Gadget:
    """Provenance of a vertex added by a reduction.

    ``role`` is ``"edge"`` for the vertex standing in for an edge (then
    ``edge`` holds its endpoints in the input graph), or ``"x"`` / ``"y"``
    for the pendant pair of the bipartite reduction.
    """

    role: str
    edge: tuple[int, int] | None = None


@dataclass(frozen=True)
class ReductionMap:
    kind: str
    n0: int  # vertices 0..n0-1 keep their ids from the input graph
    gadgets: dict[int, Gadget] = field(default_factory=dict)
    clique: frozenset | None = None  # clique side of a split output, if any

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown reduction kind {self.kind!r}")
        if any(v < self.n0 for v in self.gadgets):
            raise ValueError("gadget ids must lie above the original range")

    def is_original(self, v: int) -> bool:
        return v < self.n0


def vcr_oracle(inst: VcrInstance, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exhaustive search over vertex covers of size at most ``k``."""
    g = inst.graph
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges()]

    def feasible(state: int) -> bool:
        return all(state & e for e in edge_masks)

    return bfs_reconfiguration(
        g.n, feasible, mask_of(inst.source), mask_of(inst.target), inst.k, budget
    )


def _require_edges(inst: VcrInstance) -> None:
    # a cover never dominates an isolated vertex, so those cannot carry over
    g = inst.graph
    if g.m == 0:
        raise ValueError("graph has no edges; vertex covers do not carry over to domination")
    lonely = [v for v in range(g.n) if g.degree(v) == 0]
    if lonely:
        raise ValueError(f"vertex {lonely[0] + 1} is isolated; drop isolated vertices first")


def reduce_vcr_to_dsr(inst: VcrInstance) -> tuple[DsrInstance, ReductionMap]:
    """Subdivide-and-keep: every edge ``uw`` gets a new vertex adjacent to ``u`` and ``w``."""
    _require_edges(inst)
    g = inst.graph
    edges = list(g.edges())
    gadgets = {}
    for i, (u, w) in enumerate(edges):
        gadgets[g.n + i] = Gadget("edge", (u, w))
    new_edges = edges + [e for v, gd in gadgets.items() for e in ((gd.edge[0], v), (gd.edge[1], v))]
    h = Graph(g.n + len(edges), new_edges)
    out = DsrInstance(h, inst.source, inst.target, inst.k)
    return out, ReductionMap(VCR_DSR, g.n, gadgets)


def reduce_vcr_to_split_dsr(inst: VcrInstance) -> tuple[DsrInstance, ReductionMap]:
    """Original vertices become a clique; each edge becomes an independent vertex
    adjacent to its two endpoints."""
    _require_edges(inst)
    g = inst.graph
    clique = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    gadgets = {g.n + i: Gadget("edge", e) for i, e in enumerate(g.edges())}
    incident = [e for v, gd in gadgets.items() for e in ((gd.edge[0], v), (gd.edge[1], v))]
    h = Graph(g.n + len(gadgets), clique + incident)
    out = DsrInstance(h, inst.source, inst.target, inst.k)
    return out, ReductionMap(VCR_SPLIT, g.n, gadgets, clique=frozenset(range(g.n)))


def reduce_split_to_bipartite_dsr(
    inst: DsrInstance, split: tuple[Iterable[int], Iterable[int]] | None = None
) -> tuple[DsrInstance, ReductionMap]:
    """Drop the clique edges, add a pendant edge ``x - y`` and join ``y`` to the
    whole clique side. Both endpoints must lie in the clique side."""
    g = inst.graph
    if split is None:
        found = split_partition(g)
        if found is None:
            raise ValueError("graph is not a split graph")
        a, b = found
    else:
        a, b = frozenset(split[0]), frozenset(split[1])
        if not is_split_partition(g, a, b):
            raise ValueError("given partition is not a clique/independent split")
    if not (inst.source <= a and inst.target <= a):
        # a different split may still contain both endpoints in its clique side
        raise ValueError("both endpoints must lie inside the clique side")
    x, y = g.n, g.n + 1
    edges = [(u, v) for u, v in g.edges() if not (u in a and v in a)]
    edges.append((x, y))
    edges.extend((v, y) for v in sorted(a))
    h = Graph(g.n + 2, edges)
    out = DsrInstance(h, inst.source | {y}, inst.target | {y}, inst.k + 1)
    gadgets = {x: Gadget("x"), y: Gadget("y")}
    return out, ReductionMap(SPLIT_BIPARTITE, g.n, gadgets, clique=a)


def normalize_sequence(seq: ReconfSequence, rmap: ReductionMap, g: Graph) -> ReconfSequence:
    """Rewrite a sequence on a reduced graph so it only touches original vertices.

    Each edge gadget ``v_uw`` is represented by ``u`` or ``w``; both close
    neighbourhoods contain ``N[v_uw]``, so the projected sets still dominate
    and never grow. An endpoint already present is preferred, otherwise the
    smaller id. Tokens are counted so a vertex leaves the projection only
    when nothing maps to it any more.
    """
    if rmap.kind == SPLIT_BIPARTITE:
        raise ValueError("normalization is not defined for the split-to-bipartite reduction")
    k = max(len(s) for s in apply(seq))
    report = verify(DsrInstance(g, seq.start, seq.final(), max(k, 1)), seq)
    if not report.valid:
        raise ValueError(f"sequence is not valid on the reduced graph: {report}")

    count: dict[int, int] = {}
    assigned: dict[int, int] = {}

    def place(v: int) -> int:
        gd = rmap.gadgets.get(v)
        if gd is None:
            return v
        u, w = gd.edge
        present = [z for z in (u, w) if count.get(z, 0)]
        return min(present) if present else min(u, w)

    def enter(v: int) -> Move | None:
        r = place(v)
        assigned[v] = r
        count[r] = count.get(r, 0) + 1
        return Move.add(r) if count[r] == 1 else None

    def leave(v: int) -> Move | None:
        r = assigned.pop(v)
        count[r] -= 1
        return Move.remove(r) if count[r] == 0 else None

    # originals first so gadgets in the start set can join them
    for v in sorted(seq.start, key=lambda v: (v in rmap.gadgets, v)):
        enter(v)
    start = frozenset(r for r, c in count.items() if c)
    moves = []
    for mv in seq.moves:
        out = enter(mv.vertex) if mv.kind is MoveKind.ADD else leave(mv.vertex)
        if out is not None:
            moves.append(out)
    return ReconfSequence(start, cancel_inverse_pairs(moves))
