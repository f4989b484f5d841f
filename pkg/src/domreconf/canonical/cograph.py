"""Canonical dominating sets of connected cographs."""

from __future__ import annotations

from dataclasses import dataclass

from ..cotree import JOIN, Cotree
from ..domset import is_dominating
from ..graph import Graph, check_vertex_set, is_connected
from ..reconfig import Move, ReconfSequence


@dataclass(frozen=True)
class CographCanonical:
    canonical: frozenset
    universal: int | None = None
    # for the two-vertex case: (side of a, side of b) of the top-level join
    split: tuple[frozenset, frozenset] | None = None
    a: int | None = None
    b: int | None = None


def cograph_canonical(g: Graph, ct: Cotree, choice: int = 0) -> CographCanonical:
    """A universal vertex if one exists, otherwise one vertex from each side of
    the root join.

    ``choice=0`` takes the smallest id (on each side); larger values walk
    through the alternatives in a fixed order, see :func:`cograph_choices`.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected; compose components instead")
    universal = [w for w in range(g.n) if g.degree(w) == g.n - 1]
    if universal:
        w = universal[choice % len(universal)]
        return CographCanonical(frozenset([w]), universal=w)
    if ct.kind != JOIN:
        raise ValueError("connected cograph without universal vertex must have a join root")
    side1 = frozenset(ct.children[0].leaves())
    side2 = frozenset(v for c in ct.children[1:] for v in c.leaves())
    s1, s2 = sorted(side1), sorted(side2)
    i, j = divmod(choice % (len(s1) * len(s2)), len(s2))
    a, b = s1[i], s2[j]
    return CographCanonical(frozenset([a, b]), split=(side1, side2), a=a, b=b)


def cograph_choices(g: Graph, ct: Cotree) -> int:
    """Number of distinct canonical sets :func:`cograph_canonical` can return."""
    universal = sum(1 for w in range(g.n) if g.degree(w) == g.n - 1)
    if universal:
        return universal
    side1 = len(ct.children[0].leaves())
    return side1 * (g.n - side1)


def transform_cograph(g: Graph, can: CographCanonical, d) -> ReconfSequence:
    """Sequence from the dominating set ``d`` to the canonical set within ``|d| + 1``."""
    d = check_vertex_set(g, d)
    if not is_dominating(g, d):
        raise ValueError("not a dominating set")
    moves = []
    if can.universal is not None:
        w = can.universal
        if w not in d:
            moves.append(Move.add(w))
        moves.extend(Move.remove(v) for v in sorted(d) if v != w)
        return ReconfSequence(d, tuple(moves))

    side_a, side_b = can.split
    a, b = can.a, can.b
    if len(d & side_a) < len(d & side_b):
        side_a, side_b, a, b = side_b, side_a, b, a
    if len(d) < 2:
        raise ValueError("dominating set smaller than the domination number")

    current = set(d)
    if b not in current:
        moves.append(Move.add(b))
        current.add(b)
    if len(d & side_a) >= 2:
        drop = min(d & (side_a - {a}))
    else:
        rest = d & (side_b - {b})
        drop = min(rest) if rest else None
    if drop is not None:
        moves.append(Move.remove(drop))
        current.discard(drop)
    if a not in current:
        moves.append(Move.add(a))
        current.add(a)
    for v in sorted(d - {a, b}):
        if v in current:
            moves.append(Move.remove(v))
            current.discard(v)
    return ReconfSequence(d, tuple(moves))
