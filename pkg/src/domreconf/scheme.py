"""Decision and sequence construction for graphs with a canonical dominating set.

A minimum dominating set ``C`` is canonical when every dominating set ``D``
reaches ``C`` without ever exceeding ``|D| + 1`` vertices. On such graphs the
answer depends only on the endpoint sizes and on whether an endpoint of size
exactly ``k`` is minimal, which :func:`decide` checks in linear time.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .canonical.cograph import cograph_canonical, cograph_choices, transform_cograph
from .canonical.interval import interval_cells, label_interval, transform_interval
from .canonical.tree import label_tree, transform_tree, tree_cells
from .cotree import Cotree, cotree_decompose, validate_cotree
from .domset import deletable_vertices, is_dominating, is_minimal
from .graph import Graph, connected_components, induced_subgraph, is_forest
from .intervals import IntervalRepresentation, validate_interval_representation
from .reconfig import DsrInstance, Move, MoveKind, ReconfSequence, reverse

TREE = "tree"
INTERVAL = "interval"
COGRAPH = "cograph"
AUTO = "auto"
GRAPH_CLASSES = (TREE, INTERVAL, COGRAPH, AUTO)


class UnsupportedClass(ValueError):
    pass


class Reason(Enum):
    EQUAL_ENDPOINTS = "EQUAL_ENDPOINTS"
    SLACK_K = "SLACK_K"
    NONMINIMAL_ENDPOINTS = "NONMINIMAL_ENDPOINTS"
    MINIMAL_ENDPOINT_AT_K = "MINIMAL_ENDPOINT_AT_K"


@dataclass(frozen=True)
class Decision:
    answer: bool
    reason: Reason

    def __bool__(self) -> bool:
        return self.answer

    def __str__(self) -> str:
        return f"{'YES' if self.answer else 'NO'} {self.reason.value}"


@dataclass(frozen=True)
class ClassEvidence:
    """What the caller knows about the graph class.

    ``kind="auto"`` classifies each component on its own: tree, then cograph,
    then interval (which needs ``representation``).
    """

    kind: str = AUTO
    representation: IntervalRepresentation | None = None
    cotree: Cotree | None = None

    def __post_init__(self):
        if self.kind not in GRAPH_CLASSES:
            raise ValueError(f"unknown graph class {self.kind!r}")


@dataclass(frozen=True)
class ClassSolver:
    """Canonical set of (part of) a graph and the map ``D -> (D ~> canonical)``."""

    vertices: frozenset
    canonical: frozenset
    transform: Callable[[frozenset], ReconfSequence]


def classify(g: Graph, evidence: ClassEvidence | None = None) -> list[tuple[frozenset, str]]:
    """Validate the evidence and return each component with its class.

    Raises :class:`UnsupportedClass` when some component is not covered.
    """
    ev = evidence or ClassEvidence()
    comps = connected_components(g)
    if ev.kind == TREE:
        if not is_forest(g):
            raise UnsupportedClass("graph is not a forest")
        return [(c, TREE) for c in comps]
    if ev.kind == INTERVAL:
        if ev.representation is None:
            raise UnsupportedClass("interval class needs a representation")
        if not validate_interval_representation(g, ev.representation):
            raise UnsupportedClass("interval representation does not match the graph")
        return [(c, INTERVAL) for c in comps]
    if ev.kind == COGRAPH:
        if ev.cotree is not None:
            if not validate_cotree(g, ev.cotree):
                raise UnsupportedClass("cotree does not evaluate to the graph")
        elif not isinstance(cotree_decompose(g), Cotree):
            raise UnsupportedClass("graph contains an induced P4")
        return [(c, COGRAPH) for c in comps]

    out = []
    for c in comps:
        edges = sum(g.degree(v) for v in c) // 2
        if edges == len(c) - 1:
            out.append((c, TREE))
            continue
        h, _ = induced_subgraph(g, sorted(c))
        if isinstance(cotree_decompose(h), Cotree):
            out.append((c, COGRAPH))
        elif ev.representation is not None and validate_interval_representation(
            h, ev.representation.restrict(sorted(c))
        ):
            out.append((c, INTERVAL))
        else:
            raise UnsupportedClass(
                f"component containing vertex {min(c) + 1} is neither a tree nor a "
                "cograph and no matching interval representation was given"
            )
    return out


def _endpoint_decision(inst: DsrInstance) -> Decision:
    if inst.source == inst.target:
        return Decision(True, Reason.EQUAL_ENDPOINTS)
    top = max(len(inst.source), len(inst.target))
    if inst.k >= top + 1:
        return Decision(True, Reason.SLACK_K)
    for d in (inst.source, inst.target):
        if len(d) == inst.k and is_minimal(inst.graph, d):
            return Decision(False, Reason.MINIMAL_ENDPOINT_AT_K)
    return Decision(True, Reason.NONMINIMAL_ENDPOINTS)


def decide(inst: DsrInstance, evidence: ClassEvidence | None = None) -> Decision:
    """Answer the instance without building any canonical set; O(n + m) for
    trees and interval graphs given their evidence."""
    classify(inst.graph, evidence)
    return _endpoint_decision(inst)


# alternatives tried per component when the default canonical set would make
# some vertex move more than twice
MAX_VARIANTS = 32


def _component_variants(g: Graph, comp: frozenset, cls: str) -> int:
    if len(comp) == 1:
        return 1
    if cls == TREE:
        return sum(1 for v in comp if g.degree(v) == 1)
    if cls == INTERVAL:
        return 2
    h, _ = induced_subgraph(g, sorted(comp))
    return cograph_choices(h, cotree_decompose(h))


def _component_solver(
    g: Graph, comp: frozenset, cls: str, evidence: ClassEvidence, variant: int = 0
) -> ClassSolver:
    vs = sorted(comp)
    if len(vs) == g.n:
        # one component: no relabelling needed
        h, back, local = g, vs, vs
    else:
        h, back = induced_subgraph(g, vs)
        local = {v: i for i, v in enumerate(vs)}
    if cls == TREE:
        root = None
        if variant and h.n > 1:
            root = [v for v in range(h.n) if h.degree(v) == 1][variant]
        cells = tree_cells(label_tree(h, root))
        canonical = frozenset(cells.order)
        run = lambda d: transform_tree(h, cells, d)  # noqa: E731
    elif cls == INTERVAL:
        rep = evidence.representation.restrict(vs)
        if variant:
            rep = rep.mirrored()
        cells = interval_cells(label_interval(h, rep))
        canonical = frozenset(cells.order)
        run = lambda d: transform_interval(h, cells, d)  # noqa: E731
    elif cls == COGRAPH:
        can = cograph_canonical(h, cotree_decompose(h), variant)
        canonical = can.canonical
        run = lambda d: transform_cograph(h, can, d)  # noqa: E731
    else:
        raise UnsupportedClass(cls)

    def transform(d: frozenset) -> ReconfSequence:
        seq = run(frozenset(local[v] for v in d))
        return ReconfSequence(d, tuple(Move(mv.kind, back[mv.vertex]) for mv in seq.moves))

    return ClassSolver(comp, frozenset(back[v] for v in canonical), transform)


def compose_components(parts: Sequence[ClassSolver]) -> ClassSolver:
    """Union of per-component canonical sets; components are transformed one
    after another in the given order."""
    parts = list(parts)
    if len(parts) == 1:
        return parts[0]
    vertices = frozenset().union(*(p.vertices for p in parts))
    canonical = frozenset().union(*(p.canonical for p in parts))

    def transform(d: frozenset) -> ReconfSequence:
        d = frozenset(d)
        moves: list[Move] = []
        for p in parts:
            moves.extend(p.transform(d & p.vertices).moves)
        return ReconfSequence(d, tuple(moves))

    return ClassSolver(vertices, canonical, transform)


def canonical_solver(g: Graph, evidence: ClassEvidence | None = None) -> ClassSolver:
    ev = evidence or ClassEvidence()
    return compose_components(
        [_component_solver(g, comp, cls, ev) for comp, cls in classify(g, ev)]
    )


def _pick_removals(
    canonical: frozenset,
    source: frozenset,
    target: frozenset,
    xs: frozenset | None,
    ys: frozenset | None,
) -> tuple[int | None, int | None] | None:
    """Vertices to drop from the tight endpoints so nothing moves three times.

    Dropping ``x`` from the source touches it once more. That is harmless
    when ``x`` is outside the canonical set (the walk never touches it
    again), or when ``x`` is in the target too and is not the vertex the
    target drops. The target side is symmetric. Returns ``None`` when no
    pair qualifies.
    """

    def options(cands, other):
        if cands is None:
            return [None], False
        free = sorted(cands - canonical)
        if free:
            return free[:1], False
        return sorted(cands & canonical & other)[:2], True

    xo, xshared = options(xs, target)
    yo, yshared = options(ys, source)
    for x in xo:
        for y in yo:
            if xshared and yshared and x == y:
                continue
            return x, y
    return None


def solve(
    inst: DsrInstance, evidence: ClassEvidence | None = None
) -> tuple[Decision, ReconfSequence | None]:
    """Decide the instance and, on YES, build a sequence through a canonical set.

    An endpoint of size exactly ``k`` first drops one deletable vertex so the
    walk towards the canonical set stays within ``k``. The dropped vertices
    and, if needed, the canonical set are chosen so that no vertex moves more
    than twice; :func:`shortcut_detours` is the last resort when no choice
    works.
    """
    g = inst.graph
    ev = evidence or ClassEvidence()
    classes = classify(g, ev)
    decision = _endpoint_decision(inst)
    if not decision.answer:
        return decision, None
    if decision.reason is Reason.EQUAL_ENDPOINTS:
        return decision, ReconfSequence(inst.source)

    src, tgt = inst.source, inst.target
    xs = deletable_vertices(g, src) if len(src) == inst.k else None
    ys = deletable_vertices(g, tgt) if len(tgt) == inst.k else None
    parts = [_component_solver(g, comp, cls, ev) for comp, cls in classes]

    choice = _pick_removals(
        frozenset().union(*(p.canonical for p in parts)), src, tgt, xs, ys
    )
    if choice is None:
        touched = (xs or frozenset()) | (ys or frozenset())
        for i, (comp, cls) in enumerate(classes):
            if not comp & touched:
                continue
            for variant in range(1, min(_component_variants(g, comp, cls), MAX_VARIANTS)):
                trial = list(parts)
                trial[i] = _component_solver(g, comp, cls, ev, variant)
                choice = _pick_removals(
                    frozenset().union(*(p.canonical for p in trial)), src, tgt, xs, ys
                )
                if choice is not None:
                    parts = trial
                    break
            if choice is not None:
                break
    solver = compose_components(parts)
    fallback = choice is None
    if fallback:
        def first(cands):
            return None if cands is None else min(cands - solver.canonical or cands)

        choice = first(xs), first(ys)

    def half(start: frozenset, x: int | None) -> ReconfSequence:
        if x is None:
            return solver.transform(start)
        return ReconfSequence(start, (Move.remove(x),) + solver.transform(start - {x}).moves)

    forward = half(src, choice[0])
    backward = reverse(half(tgt, choice[1]))
    moves = cancel_inverse_pairs(forward.moves + backward.moves)
    if fallback:
        moves = shortcut_detours(g, inst.k, src, moves)
    return decision, ReconfSequence(src, moves)


def shortcut_detours(g: Graph, k: int, start: frozenset, moves: Sequence[Move]) -> tuple[Move, ...]:
    """Greedily jump from each set of the walk to the latest later set that
    differs from it in at most two vertices, bridging with at most two moves.

    Quadratic time in the walk length, linear memory; :func:`solve` only
    calls it when the direct construction would move some vertex three times.
    """

    def bridge(a: set, diff: set) -> tuple[Move, ...] | None:
        added, removed = sorted(diff - a), sorted(diff & a)
        if not (added and removed):
            return tuple(Move.add(v) for v in added) + tuple(Move.remove(v) for v in removed)
        (u,), (w,) = added, removed
        if len(a) + 1 <= k:
            return (Move.add(u), Move.remove(w))
        if is_dominating(g, a - {w}):
            return (Move.remove(w), Move.add(u))
        return None

    out: list[Move] = []
    here = set(start)
    i = 0
    while i < len(moves):
        # diff is the symmetric difference between here and the set after move j
        diff: set[int] = set()
        best, best_moves, best_diff = i + 1, (moves[i],), {moves[i].vertex}
        for j in range(i + 1, len(moves) + 1):
            diff ^= {moves[j - 1].vertex}
            if len(diff) > 2 or j <= best:
                continue
            hop = bridge(here, diff)
            if hop is not None and len(hop) < j - i:
                best, best_moves, best_diff = j, hop, set(diff)
        out.extend(best_moves)
        here ^= best_diff
        i = best
    return cancel_inverse_pairs(out)


def cancel_inverse_pairs(moves: Sequence[Move]) -> tuple[Move, ...]:
    """Drop adjacent ``+v, -v`` / ``-v, +v`` pairs; the sets on either side of
    such a pair are equal, so the shortened walk stays valid."""
    out: list[Move] = []
    for mv in moves:
        if out and out[-1].vertex == mv.vertex and out[-1].kind is not mv.kind:
            out.pop()
        else:
            out.append(mv)
    return tuple(out)
