"""Canonical dominating sets of trees via bottom-up 1/2/3 labelling."""

from __future__ import annotations

from dataclasses import dataclass

from ..domset import is_dominating
from ..graph import Graph, check_vertex_set, is_tree
from ..reconfig import ReconfSequence
from .cells import cell_transform


@dataclass(frozen=True)
class TreeLabeling:
    """Labels of a tree rooted at a degree-one vertex.

    Label 2 vertices form the canonical set, label 1 vertices are dominated
    by their parent, label 3 vertices by one of their children.
    """

    root: int
    parent: tuple[int | None, ...]
    label: tuple[int, ...]
    postorder: tuple[int, ...]

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

    def children(self, v: int) -> list[int]:
        return [u for u, p in enumerate(self.parent) if p == v]


@dataclass(frozen=True)
class TreeCells:
    order: tuple[int, ...]  # label-2 vertices in post-order
    cells: tuple[frozenset, ...]

    def cell_index(self) -> dict[int, int]:
        return {v: i for i, cell in enumerate(self.cells) for v in cell}


def default_root(t: Graph) -> int:
    """Smallest-id vertex of degree one (vertex 0 for the one-vertex tree)."""
    if t.n == 1:
        return 0
    return min(v for v in range(t.n) if t.degree(v) == 1)


def label_tree(t: Graph, root: int | None = None) -> TreeLabeling:
    if not is_tree(t):
        raise ValueError("graph is not a tree")
    if root is None:
        root = default_root(t)
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} out of range")
    if t.n == 1:
        return TreeLabeling(root, (None,), (2,), (root,))
    if t.degree(root) != 1:
        raise ValueError(f"root {root} has degree {t.degree(root)}, expected 1")

    parent: list[int | None] = [None] * t.n
    order = []
    # iterative DFS; reversed pre-order with children pushed in reverse is a valid post-order
    seen = [False] * t.n
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in t.neighbors(v):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    order.reverse()

    label = [0] * t.n
    has1 = [False] * t.n
    all3 = [True] * t.n
    for v in order:
        if v == root:
            (child,) = t.neighbors(root)
            label[v] = 3 if label[child] == 2 else 2
            continue
        if t.degree(v) == 1:
            label[v] = 1
        elif all3[v]:
            label[v] = 1
        elif has1[v]:
            label[v] = 2
        else:
            label[v] = 3
        p = parent[v]
        if label[v] == 1:
            has1[p] = True
        if label[v] != 3:
            all3[p] = False
    return TreeLabeling(root, tuple(parent), tuple(label), tuple(order))


def tree_cells(lab: TreeLabeling) -> TreeCells:
    """Partition into cells, one per label-2 vertex in post-order.

    The i-th cell is the subtree of the i-th label-2 vertex minus the earlier
    subtrees, i.e. the vertices whose nearest label-2 ancestor (or self) is
    that vertex; anything left above the last one joins the last cell.
    """
    order = tuple(v for v in lab.postorder if lab.label[v] == 2)
    index = {v: i for i, v in enumerate(order)}
    owner = [len(order) - 1] * len(lab.label)
    for v in reversed(lab.postorder):  # parents before children
        if v in index:
            owner[v] = index[v]
        elif lab.parent[v] is not None:
            owner[v] = owner[lab.parent[v]]
    members: list[list[int]] = [[] for _ in order]
    for v, i in enumerate(owner):
        members[i].append(v)
    return TreeCells(order, tuple(frozenset(m) for m in members))


def transform_tree(t: Graph, cells: TreeCells, d) -> ReconfSequence:
    """Sequence from the dominating set ``d`` to the label-2 vertices.

    Every intermediate set dominates and has at most ``|d| + 1`` vertices;
    each vertex is touched at most once.
    """
    d = check_vertex_set(t, d)
    if not is_dominating(t, d):
        raise ValueError("not a dominating set")
    return cell_transform(cells.cells, cells.order, d)


def tree_canonical(t: Graph) -> frozenset:
    return label_tree(t).V2
