"""Canonical dominating sets of connected interval graphs via a left-to-right sweep."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from ..domset import is_dominating
from ..graph import Graph, check_vertex_set, is_connected
from ..intervals import (
    IntervalRepresentation,
    canonicalize_representation,
    validate_interval_representation,
)
from ..reconfig import ReconfSequence
from .cells import cell_transform


@dataclass(frozen=True)
class IntervalLabeling:
    label: tuple[int, ...]
    order: tuple[int, ...]  # label-2 vertices by increasing right endpoint
    rep: IntervalRepresentation  # the tie-free representation the labels refer to

    def vertices_with(self, lab: int) -> frozenset:
        return frozenset(v for v, x in enumerate(self.label) if x == lab)

    @property
    def V1(self) -> frozenset:
        return self.vertices_with(1)

    @property
    def V2(self) -> frozenset:
        return self.vertices_with(2)

    @property
    def V3(self) -> frozenset:
        return self.vertices_with(3)


@dataclass(frozen=True)
class IntervalCells:
    order: tuple[int, ...]
    cells: tuple[frozenset, ...]


def label_interval(g: Graph, rep: IntervalRepresentation) -> IntervalLabeling:
    """Label vertices 1/2/3 in rounds, always starting from the unlabelled
    vertex with the smallest right endpoint.

    Each round's chosen label-2 vertex is never chosen again, so neighbour
    scans total O(n + m) on top of one sort.
    """
    if not validate_interval_representation(g, rep):
        raise ValueError("interval representation does not match the graph")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    rep = canonicalize_representation(rep)
    right = rep.right
    by_right = sorted(range(g.n), key=lambda v: (right[v], v))
    label = [0] * g.n
    for vi in by_right:
        if label[vi]:
            continue
        label[vi] = 1
        vj = max(g.closed_neighborhood(vi), key=lambda u: (right[u], -u))
        label[vj] = 2
        for u in g.neighbors(vj):
            if not label[u]:
                label[u] = 3
    order = tuple(sorted((v for v in range(g.n) if label[v] == 2), key=lambda v: right[v]))
    return IntervalLabeling(tuple(label), order, rep)


def interval_cells(lab: IntervalLabeling, rep: IntervalRepresentation | None = None) -> IntervalCells:
    """Cells cut at the right endpoints of the label-2 vertices.

    Cell ``i`` holds the vertices whose right endpoint lies in
    ``(r(w_{i-1}), r(w_i)]``; the last cell is open to the right.
    """
    rep = lab.rep if rep is None else canonicalize_representation(rep)
    cuts: list[Fraction] = [rep.right[w] for w in lab.order[:-1]]
    members: list[list[int]] = [[] for _ in lab.order]
    for v in range(len(lab.label)):
        members[bisect_left(cuts, rep.right[v])].append(v)
    return IntervalCells(lab.order, tuple(frozenset(m) for m in members))


def transform_interval(g: Graph, cells: IntervalCells, d) -> ReconfSequence:
    """Sequence from the dominating set ``d`` to the label-2 vertices, left to right,
    never exceeding ``|d| + 1`` vertices."""
    d = check_vertex_set(g, d)
    if not is_dominating(g, d):
        raise ValueError("not a dominating set")
    return cell_transform(cells.cells, cells.order, d)


def interval_canonical(g: Graph, rep: IntervalRepresentation) -> frozenset:
    return label_interval(g, rep).V2
