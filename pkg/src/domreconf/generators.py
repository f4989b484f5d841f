"""Seeded random instances for every supported graph class and for the
vertex-cover reductions."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from heapq import heapify, heappop, heappush

from .cotree import JOIN, UNION, Cotree, evaluate_cotree
from .domset import random_minimal_dominating_set
from .graph import Graph
from .intervals import IntervalRepresentation, intersection_graph
from .reconfig import DsrInstance

CLASSES = ("tree", "interval", "cograph", "general", "vcr")
K_POLICIES = ("tight", "slack", "explicit")


def rng_stream(seed: int, stream: str) -> random.Random:
    """Independent generator keyed by ``(seed, stream)``."""
    digest = hashlib.sha256(f"{seed}:{stream}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@dataclass(frozen=True)
class GenSpec:
    graph_class: str
    n: int
    seed: int = 0
    k_policy: str = "tight"
    k: int | None = None
    # probability of an extra edge per vertex pair (general / vcr)
    density: float = 0.3
    # mean interval length relative to the spacing of left endpoints
    interval_spread: float = 2.5
    # chance that an endpoint is padded beyond a minimal set
    pad_probability: float = 0.5
    connected: bool = True

    def __post_init__(self):
        if self.graph_class not in CLASSES:
            raise ValueError(f"unknown class {self.graph_class!r}")
        if self.k_policy not in K_POLICIES:
            raise ValueError(f"unknown k policy {self.k_policy!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.k_policy == "explicit" and self.k is None:
            raise ValueError("explicit k policy needs k")


@dataclass(frozen=True)
class Generated:
    """A generated instance plus whatever class evidence comes with it."""

    instance: object  # DsrInstance or VcrInstance
    graph_class: str
    representation: IntervalRepresentation | None = None
    cotree: Cotree | None = None


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree decoded from a random Pruefer sequence."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for v in code:
        leaf = heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heappush(leaves, v)
    edges.append((heappop(leaves), heappop(leaves)))
    return Graph(n, edges)


def random_interval_representation(
    n: int, rng: random.Random, spread: float = 2.5, connected: bool = True
) -> IntervalRepresentation:
    """``n`` intervals with pairwise distinct endpoints on an integer grid.

    With ``connected`` each new interval starts before the running maximum
    right endpoint, so the union stays one block.
    """
    scale = 1000
    taken: set[int] = set()

    def fresh(lo: int, hi: int) -> int:
        for _ in range(1000):
            x = rng.randint(lo, hi)
            if x not in taken:
                taken.add(x)
                return x
        raise RuntimeError("could not draw a fresh endpoint")

    pairs = []
    left = 0
    reach = None
    for _ in range(n):
        if reach is None:
            left = fresh(0, scale)
        else:
            step = rng.randint(1, int(scale * 1.5))
            hi = min(left + step, reach - 1) if connected else left + step
            left = fresh(left + 1, max(hi, left + 1))
        length = max(1, int(rng.expovariate(1.0 / (spread * scale))))
        right = fresh(left + length, left + length + scale)
        reach = right if reach is None else max(reach, right)
        pairs.append((left, right))
    rng.shuffle(pairs)
    return IntervalRepresentation.from_pairs((Fraction(a), Fraction(b)) for a, b in pairs)


def random_cotree(n: int, rng: random.Random, root_kind: str = JOIN) -> Cotree:
    """Random canonical cotree with ``n`` leaves labelled by a random permutation."""
    labels = list(range(n))
    rng.shuffle(labels)
    it = iter(labels)

    def build(size: int, kind: str) -> Cotree:
        if size == 1:
            return Cotree.leaf(next(it))
        parts = rng.randint(2, min(size, 4))
        cuts = sorted(rng.sample(range(1, size), parts - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [size])]
        child_kind = UNION if kind == JOIN else JOIN
        return Cotree(kind, None, tuple(build(s, child_kind) for s in sizes))

    return build(n, root_kind)


def random_graph(n: int, rng: random.Random, density: float) -> Graph:
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    )


def random_vertex_cover(g: Graph, rng: random.Random) -> frozenset:
    """A minimal vertex cover from dropping vertices of V(G) in random order."""
    cover = set(range(g.n))
    order = list(range(g.n))
    rng.shuffle(order)
    for v in order:
        if all(u in cover for u in g.neighbors(v)):
            cover.discard(v)
    return frozenset(cover)


def _pad(base: frozenset, n: int, rng: random.Random, probability: float) -> frozenset:
    out = set(base)
    outside = [v for v in range(n) if v not in out]
    while outside and rng.random() < probability:
        out.add(outside.pop(rng.randrange(len(outside))))
    return frozenset(out)


def _threshold(spec: GenSpec, top: int) -> int:
    if spec.k_policy == "tight":
        return max(top, 1)
    if spec.k_policy == "slack":
        return top + 1
    if spec.k < top:
        raise ValueError(f"explicit k={spec.k} is below the endpoint size {top}")
    return spec.k


def generate(spec: GenSpec) -> Generated:
    rep = ct = None
    graph_rng = rng_stream(spec.seed, f"{spec.graph_class}:graph:{spec.n}")
    if spec.graph_class == "tree":
        g = random_tree(spec.n, graph_rng)
    elif spec.graph_class == "interval":
        rep = random_interval_representation(
            spec.n, graph_rng, spec.interval_spread, spec.connected
        )
        g = intersection_graph(rep)
    elif spec.graph_class == "cograph":
        root = JOIN if spec.connected else graph_rng.choice((JOIN, UNION))
        ct = random_cotree(spec.n, graph_rng, root)
        g = evaluate_cotree(ct, spec.n)
    else:
        g = random_graph(spec.n, graph_rng, spec.density)
        if spec.graph_class == "general" and spec.connected:
            tree = random_tree(spec.n, graph_rng)
            g = Graph(spec.n, g.edges() + tree.edges())

    end_rng = rng_stream(spec.seed, f"{spec.graph_class}:endpoints:{spec.n}")
    if spec.graph_class == "vcr":
        from .reductions import VcrInstance

        if spec.n >= 2:
            # isolated vertices would make the reductions undefined
            extra = [
                (v, graph_rng.choice([u for u in range(spec.n) if u != v]))
                for v in range(spec.n)
                if g.degree(v) == 0
            ]
            g = Graph(spec.n, g.edges() + extra)
        covers = [
            _pad(random_vertex_cover(g, end_rng), g.n, end_rng, spec.pad_probability)
            for _ in range(2)
        ]
        k = _threshold(spec, max(len(c) for c in covers))
        return Generated(VcrInstance(g, covers[0], covers[1], k), "vcr")

    ends = [
        _pad(random_minimal_dominating_set(g, end_rng), g.n, end_rng, spec.pad_probability)
        for _ in range(2)
    ]
    k = _threshold(spec, max(len(d) for d in ends))
    inst = DsrInstance(g, ends[0], ends[1], k)
    return Generated(inst, spec.graph_class, representation=rep, cotree=ct)
