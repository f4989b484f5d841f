"""Cograph recognition by recursive complement-component decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph

LEAF = "leaf"
UNION = "union"
JOIN = "join"


@dataclass(frozen=True)
class Cotree:
    kind: str
    vertex: int | None = None
    children: tuple["Cotree", ...] = ()

    @classmethod
    def leaf(cls, v: int) -> "Cotree":
        return cls(LEAF, v)

    def leaves(self) -> list[int]:
        if self.kind == LEAF:
            return [self.vertex]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def nodes(self) -> Iterator["Cotree"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def is_canonical(self) -> bool:
        for node in self.nodes():
            if node.kind == LEAF:
                continue
            if len(node.children) < 2:
                return False
            if any(c.kind == node.kind for c in node.children):
                return False
        return True

    def __str__(self) -> str:
        return format_cotree(self)


@dataclass(frozen=True)
class NotCograph:
    """Failure value of :func:`cotree_decompose`: an induced path a-b-c-d."""

    witness: tuple[int, int, int, int]

    def __bool__(self) -> bool:
        return False


def evaluate_cotree(ct: Cotree, n: int | None = None) -> Graph:
    """The graph a cotree denotes; ``n`` defaults to one more than the largest leaf."""
    edges = []

    def walk(node: Cotree) -> list[int]:
        if node.kind == LEAF:
            return [node.vertex]
        groups = [walk(c) for c in node.children]
        if node.kind == JOIN:
            for i, gi in enumerate(groups):
                for gj in groups[i + 1:]:
                    edges.extend((u, v) for u in gi for v in gj)
        return [v for grp in groups for v in grp]

    leaves = walk(ct)
    if n is None:
        n = max(leaves) + 1
    return Graph(n, edges)


def _components(g: Graph, vs: list[int], complemented: bool) -> list[list[int]]:
    # Complement BFS scans the unvisited set: each scanned vertex is either removed
    # or a neighbour of u, so the whole pass is O(n + m).
    remaining = set(vs)
    comps = []
    for s in vs:
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        frontier = [s]
        while frontier:
            u = frontier.pop()
            if complemented:
                nbrs = g.neighbor_set(u)
                found = [w for w in remaining if w not in nbrs]
            else:
                found = [w for w in g.neighbors(u) if w in remaining]
            for w in found:
                remaining.discard(w)
                comp.append(w)
                frontier.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _find_p4(g: Graph, vs: list[int]) -> tuple[int, int, int, int]:
    inside = set(vs)
    for b in vs:
        for c in g.neighbors(b):
            if c not in inside:
                continue
            ends_b = [a for a in g.neighbors(b) if a in inside and a != c and not g.has_edge(a, c)]
            if not ends_b:
                continue
            ends_c = [d for d in g.neighbors(c) if d in inside and d != b and not g.has_edge(d, b)]
            for a in ends_b:
                for d in ends_c:
                    if not g.has_edge(a, d):
                        return (a, b, c, d)
    raise AssertionError("connected co-connected graph without induced P4")


def cotree_decompose(g: Graph) -> Cotree | NotCograph:
    """Canonical cotree of ``g`` or a :class:`NotCograph` carrying an induced P4.

    Children of every internal node are ordered by their smallest vertex.
    """
    if g.n == 0:
        raise ValueError("empty graph has no cotree")

    def build(vs: list[int], parent_kind: str | None) -> Cotree | NotCograph:
        if len(vs) == 1:
            return Cotree.leaf(vs[0])
        if parent_kind != UNION:
            parts = _components(g, vs, complemented=False)
            if len(parts) > 1:
                return _node(UNION, parts)
        if parent_kind != JOIN:
            parts = _components(g, vs, complemented=True)
            if len(parts) > 1:
                return _node(JOIN, parts)
        return NotCograph(_find_p4(g, vs))

    def _node(kind: str, parts: list[list[int]]) -> Cotree | NotCograph:
        kids = []
        for p in parts:
            child = build(p, kind)
            if isinstance(child, NotCograph):
                return child
            kids.append(child)
        return Cotree(kind, None, tuple(kids))

    return build(list(range(g.n)), None)


def is_cograph(g: Graph) -> bool:
    return isinstance(cotree_decompose(g), Cotree)


def validate_cotree(g: Graph, ct: Cotree) -> bool:
    leaves = ct.leaves()
    if sorted(leaves) != list(range(g.n)):
        return False
    return evaluate_cotree(ct, g.n) == g


def format_cotree(ct: Cotree) -> str:
    """Compact text form with 1-based leaves, e.g. ``J(U(1,3),U(2,4))``."""
    if ct.kind == LEAF:
        return str(ct.vertex + 1)
    tag = "J" if ct.kind == JOIN else "U"
    return tag + "(" + ",".join(format_cotree(c) for c in ct.children) + ")"


def parse_cotree(text: str) -> Cotree:
    text = "".join(text.split())
    pos = 0

    def parse() -> Cotree:
        nonlocal pos
        if pos >= len(text):
            raise ValueError("unexpected end of cotree expression")
        ch = text[pos]
        if ch in "JU":
            if pos + 1 >= len(text) or text[pos + 1] != "(":
                raise ValueError(f"expected '(' after {ch!r} at offset {pos}")
            pos += 2
            kids = [parse()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                kids.append(parse())
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at offset {pos}")
            pos += 1
            return Cotree(JOIN if ch == "J" else UNION, None, tuple(kids))
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ValueError(f"unexpected {ch!r} at offset {pos}")
        v = int(text[start:pos])
        if v < 1:
            raise ValueError("cotree leaves are 1-based")
        return Cotree.leaf(v - 1)

    ct = parse()
    if pos != len(text):
        raise ValueError(f"trailing characters at offset {pos}")
    return ct
