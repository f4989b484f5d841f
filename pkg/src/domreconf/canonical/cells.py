"""Cell-by-cell transformation towards a canonical set."""

from __future__ import annotations

from typing import Sequence

from ..reconfig import Move, ReconfSequence


def cell_transform(
    cells: Sequence[frozenset], representatives: Sequence[int], d: frozenset
) -> ReconfSequence:
    """Walk the cells in order, turning ``d`` into the set of representatives.

    For cell ``i``: add its representative if absent, then remove every other
    member of the current set lying in that cell, in increasing id order.
    """
    current = set(d)
    moves = []
    for cell, rep in zip(cells, representatives):
        if rep not in current:
            moves.append(Move.add(rep))
            current.add(rep)
        for v in sorted(current & cell):
            if v != rep:
                moves.append(Move.remove(v))
                current.discard(v)
    return ReconfSequence(frozenset(d), tuple(moves))
