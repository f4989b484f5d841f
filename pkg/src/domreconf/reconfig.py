"""Reconfiguration sequences under token addition/removal, their verifier, and
an exhaustive breadth-first reachability oracle."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, NamedTuple

from .domset import closed_neighborhood_masks, is_dominating
from .graph import Graph, check_vertex_set

ORACLE_MAX_N = 20
DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    pass


class MoveKind(Enum):
    ADD = "+"
    REMOVE = "-"

    def flipped(self) -> "MoveKind":
        return MoveKind.REMOVE if self is MoveKind.ADD else MoveKind.ADD


class Move(NamedTuple):
    kind: MoveKind
    vertex: int

    @classmethod
    def add(cls, v: int) -> "Move":
        return cls(MoveKind.ADD, v)

    @classmethod
    def remove(cls, v: int) -> "Move":
        return cls(MoveKind.REMOVE, v)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.vertex}"


@dataclass(frozen=True)
class ReconfSequence:
    start: frozenset
    moves: tuple[Move, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "start", frozenset(self.start))
        object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self) -> int:
        return len(self.moves)

    def touches(self) -> dict[int, int]:
        """How many times each touched vertex is added or removed."""
        out: dict[int, int] = {}
        for mv in self.moves:
            out[mv.vertex] = out.get(mv.vertex, 0) + 1
        return out

    def final(self) -> frozenset:
        return final_set(self)

    def then(self, other: "ReconfSequence") -> "ReconfSequence":
        """Concatenate; ``other`` must start where ``self`` ends."""
        if other.start != self.final():
            raise ValueError("sequences do not meet")
        return ReconfSequence(self.start, self.moves + other.moves)


@dataclass(frozen=True)
class DsrInstance:
    """The 4-tuple ``(G, Ds, Dt, k)``; both endpoints must dominate and fit in ``k``."""

    graph: Graph
    source: frozenset
    target: frozenset
    k: int

    def __post_init__(self):
        g = self.graph
        object.__setattr__(self, "source", check_vertex_set(g, self.source))
        object.__setattr__(self, "target", check_vertex_set(g, self.target))
        if self.k < 1:
            raise ValueError(f"threshold k must be positive, got {self.k}")
        if not is_dominating(g, self.source):
            raise ValueError("source is not a dominating set")
        if not is_dominating(g, self.target):
            raise ValueError("target is not a dominating set")
        if self.k < max(len(self.source), len(self.target)):
            raise ValueError(
                f"k={self.k} is below max(|Ds|, |Dt|)="
                f"{max(len(self.source), len(self.target))}"
            )


def _replay(seq: ReconfSequence, visit: Callable[[set], None] | None = None) -> frozenset:
    current = set(seq.start)
    for i, mv in enumerate(seq.moves, start=1):
        if mv.kind is MoveKind.ADD:
            if mv.vertex in current:
                raise ValueError(f"move {i}: vertex {mv.vertex} added twice")
            current.add(mv.vertex)
        else:
            if mv.vertex not in current:
                raise ValueError(f"move {i}: vertex {mv.vertex} removed while absent")
            current.remove(mv.vertex)
        if visit is not None:
            visit(current)
    return frozenset(current)


def apply(seq: ReconfSequence) -> list[frozenset]:
    """All sets ``D0 .. Dl`` visited by ``seq``."""
    out = [seq.start]
    _replay(seq, lambda cur: out.append(frozenset(cur)))
    return out


def final_set(seq: ReconfSequence) -> frozenset:
    """The last set of ``seq``, in time linear in its length."""
    return _replay(seq)


def reverse(seq: ReconfSequence) -> ReconfSequence:
    final = final_set(seq)
    return ReconfSequence(
        final, tuple(Move(mv.kind.flipped(), mv.vertex) for mv in reversed(seq.moves))
    )


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    reason: str | None = None
    index: int | None = None
    max_size: int = 0

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "VALID"
        return f"INVALID {self.reason} at {self.index}"


def verify(inst: DsrInstance, seq: ReconfSequence) -> VerifyReport:
    """Check every condition a reconfiguration sequence must satisfy.

    Domination is recomputed from scratch at each step; reports the first
    failing condition and the index of the offending set.
    """
    g = inst.graph
    if seq.start != inst.source:
        return VerifyReport(False, "START_MISMATCH", 0)
    current = set(seq.start)
    max_size = 0
    for i in range(len(seq.moves) + 1):
        if i > 0:
            mv = seq.moves[i - 1]
            if not 0 <= mv.vertex < g.n:
                return VerifyReport(False, "VERTEX_OUT_OF_RANGE", i, max_size)
            if mv.kind is MoveKind.ADD:
                if mv.vertex in current:
                    return VerifyReport(False, "INVALID_MOVE", i, max_size)
                current.add(mv.vertex)
            else:
                if mv.vertex not in current:
                    return VerifyReport(False, "INVALID_MOVE", i, max_size)
                current.remove(mv.vertex)
        max_size = max(max_size, len(current))
        if not is_dominating(g, current):
            return VerifyReport(False, "NOT_DOMINATING", i, max_size)
        if len(current) > inst.k:
            return VerifyReport(False, "OVER_THRESHOLD", i, max_size)
    if current != inst.target:
        return VerifyReport(False, "END_MISMATCH", len(seq.moves), max_size)
    return VerifyReport(True, max_size=max_size)


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def members_of(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass
class SearchResult:
    reachable: bool
    sequence: ReconfSequence | None
    states_expanded: int = 0

    def __iter__(self):
        # allows ``ok, seq = oracle_reachable(...)``
        return iter((self.reachable, self.sequence))


def bfs_reconfiguration(
    n: int,
    feasible: Callable[[int], bool],
    source: int,
    target: int,
    k: int,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Shortest path between two feasible bit-mask states of size <= k.

    Neighbours are expanded as additions by increasing vertex id, then
    removals by increasing vertex id, so the returned path is deterministic.
    """
    if source == target:
        return SearchResult(True, ReconfSequence(members_of(source)), 0)
    parent = {source: None}
    queue = deque([source])
    expanded = 0
    while queue:
        state = queue.popleft()
        expanded += 1
        size = bin(state).count("1")
        candidates = []
        if size < k:
            candidates.extend(state | (1 << v) for v in range(n) if not state >> v & 1)
        candidates.extend(state & ~(1 << v) for v in range(n) if state >> v & 1)
        for nxt in candidates:
            if nxt in parent or not feasible(nxt):
                continue
            parent[nxt] = state
            if nxt == target:
                return SearchResult(True, _trace(parent, target), expanded)
            if len(parent) > budget:
                raise BudgetExceeded(f"state budget of {budget} exceeded")
            queue.append(nxt)
    return SearchResult(False, None, expanded)


def _trace(parent: dict[int, int | None], target: int) -> ReconfSequence:
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    moves = []
    for a, b in zip(path, path[1:]):
        diff = a ^ b
        v = diff.bit_length() - 1
        moves.append(Move.add(v) if b & diff else Move.remove(v))
    return ReconfSequence(members_of(path[0]), tuple(moves))


def dominating_predicate(g: Graph) -> Callable[[int], bool]:
    masks = closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    cache: dict[int, bool] = {}

    def feasible(state: int) -> bool:
        hit = cache.get(state)
        if hit is None:
            covered = 0
            s, v = state, 0
            while s:
                if s & 1:
                    covered |= masks[v]
                s >>= 1
                v += 1
            hit = cache[state] = covered == full
        return hit

    return feasible


def oracle_reachable(inst: DsrInstance, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exhaustive answer to the instance, with a shortest sequence when reachable."""
    g = inst.graph
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    return bfs_reconfiguration(
        g.n, dominating_predicate(g), mask_of(inst.source), mask_of(inst.target), inst.k, budget
    )
