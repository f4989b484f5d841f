"""Line-oriented text formats for graphs, instances, sequences and reduction maps.

Vertex ids are 1-based in every file and 0-based in memory. Lines starting
with ``c`` are comments; blank lines are ignored.

Instance file::

    p ds <n> <m>        (or "p vcr" for a vertex-cover instance)
    e <u> <v>
    s <source members>
    t <target members>
    k <threshold>
    i <v> <l> <r>       optional interval representation, one line per vertex
    ct <cotree>         optional cotree, e.g. J(U(1,3),U(2,4))
    a <members>         optional clique side of a split graph
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cotree import Cotree, format_cotree, parse_cotree
from .graph import Graph
from .intervals import IntervalRepresentation
from .reconfig import DsrInstance, Move, ReconfSequence
from .reductions import KINDS, Gadget, ReductionMap, VcrInstance

GRAPH_KINDS = ("ds", "edge", "vcr")


class ParseError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str | bytes) -> Iterable[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        text = text.decode()
    for no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if parts and parts[0] != "c":
            yield no, parts


def _ints(no: int, tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(no, f"expected integers, got {' '.join(tokens)!r}") from None


def _vertex(no: int, v: int, n: int | None) -> int:
    if n is not None and not 1 <= v <= n:
        raise ParseError(no, f"vertex {v} out of range 1..{n}")
    return v - 1


def _number(no: int, token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(no, f"bad number {token!r}") from None


def _format_number(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_set(tag: str, d: Iterable[int]) -> str:
    return " ".join([tag] + [str(v + 1) for v in sorted(d)])


@dataclass
class _Sections:
    kind: str | None = None
    n: int | None = None
    edges: list | None = None
    source: frozenset | None = None
    target: frozenset | None = None
    k: int | None = None
    intervals: dict | None = None
    cotree: Cotree | None = None
    clique: frozenset | None = None


def _read(text: str | bytes, allowed: str) -> _Sections:
    out = _Sections(edges=[])
    for no, parts in _lines(text):
        tag, args = parts[0], parts[1:]
        if tag not in allowed.split():
            raise ParseError(no, f"unexpected line {' '.join(parts)!r}")
        if tag == "p":
            if out.kind is not None:
                raise ParseError(no, "second header line")
            if len(args) != 3 or args[0] not in GRAPH_KINDS:
                raise ParseError(no, "malformed header, expected 'p ds <n> <m>'")
            n, m = _ints(no, args[1:])
            if n < 1 or m < 0:
                raise ParseError(no, "header needs n >= 1 and m >= 0")
            out.kind, out.n = args[0], n
        elif tag == "e":
            if len(args) != 2:
                raise ParseError(no, "edge line needs two vertices")
            u, v = _ints(no, args)
            if u == v:
                raise ParseError(no, f"self-loop at vertex {u}")
            if out.n is None:
                raise ParseError(no, "edge before header")
            out.edges.append((_vertex(no, u, out.n), _vertex(no, v, out.n)))
        elif tag in ("s", "t", "a"):
            vs = [_vertex(no, v, out.n) for v in _ints(no, args)]
            if len(set(vs)) != len(vs):
                raise ParseError(no, "repeated vertex in set")
            field = {"s": "source", "t": "target", "a": "clique"}[tag]
            if getattr(out, field) is not None:
                raise ParseError(no, f"second '{tag}' line")
            setattr(out, field, frozenset(vs))
        elif tag == "k":
            if len(args) != 1:
                raise ParseError(no, "k line needs one integer")
            (out.k,) = _ints(no, args)
        elif tag == "i":
            if len(args) != 3:
                raise ParseError(no, "interval line needs 'i <v> <l> <r>'")
            (v,) = _ints(no, args[:1])
            v = _vertex(no, v, out.n)
            lo, hi = _number(no, args[1]), _number(no, args[2])
            if lo > hi:
                raise ParseError(no, f"interval of vertex {v + 1} has l > r")
            out.intervals = out.intervals or {}
            if v in out.intervals:
                raise ParseError(no, f"second interval for vertex {v + 1}")
            out.intervals[v] = (lo, hi)
        elif tag == "ct":
            try:
                ct = parse_cotree(" ".join(args))
            except ValueError as exc:
                raise ParseError(no, f"bad cotree: {exc}") from None
            out.cotree = ct
    return out


def _graph(sec: _Sections) -> Graph:
    if sec.n is None:
        raise ParseError(None, "missing header line 'p ds <n> <m>'")
    return Graph(sec.n, sec.edges)


def _representation(sec: _Sections) -> IntervalRepresentation | None:
    if sec.intervals is None:
        return None
    missing = [v + 1 for v in range(sec.n) if v not in sec.intervals]
    if missing:
        raise ParseError(None, f"no interval for vertex {missing[0]}")
    return IntervalRepresentation.from_pairs(sec.intervals[v] for v in range(sec.n))


def parse_graph(text: str | bytes) -> Graph:
    return _graph(_read(text, "p e"))


def format_graph(g: Graph, kind: str = "ds") -> str:
    lines = [f"p {kind} {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_intervals(text: str | bytes, n: int | None = None) -> IntervalRepresentation:
    sec = _read(text, "i")
    if sec.intervals is None:
        raise ParseError(None, "no interval lines")
    sec.n = n if n is not None else max(sec.intervals) + 1
    return _representation(sec)


def format_intervals(rep: IntervalRepresentation) -> str:
    return "".join(
        f"i {v + 1} {_format_number(lo)} {_format_number(hi)}\n"
        for v, (lo, hi) in enumerate(rep.pairs())
    )


@dataclass(frozen=True)
class InstanceFile:
    """A parsed instance together with optional class evidence."""

    instance: DsrInstance | VcrInstance
    representation: IntervalRepresentation | None = None
    cotree: Cotree | None = None
    clique: frozenset | None = None

    @property
    def is_vcr(self) -> bool:
        return isinstance(self.instance, VcrInstance)


def parse_instance(text: str | bytes) -> InstanceFile:
    sec = _read(text, "p e s t k i ct a")
    g = _graph(sec)
    for name, value in (("s", sec.source), ("t", sec.target), ("k", sec.k)):
        if value is None:
            raise ParseError(None, f"missing '{name}' line")
    make = VcrInstance if sec.kind == "vcr" else DsrInstance
    try:
        inst = make(g, sec.source, sec.target, sec.k)
    except ValueError as exc:
        raise ParseError(None, str(exc)) from None
    return InstanceFile(inst, _representation(sec), sec.cotree, sec.clique)


def format_instance(
    inst: DsrInstance | VcrInstance,
    representation: IntervalRepresentation | None = None,
    cotree: Cotree | None = None,
    clique: Iterable[int] | None = None,
    comment: str | None = None,
) -> str:
    kind = "vcr" if isinstance(inst, VcrInstance) else "ds"
    out = f"c {comment}\n" if comment else ""
    out += format_graph(inst.graph, kind)
    out += f"{format_set('s', inst.source)}\n{format_set('t', inst.target)}\nk {inst.k}\n"
    if representation is not None:
        out += format_intervals(representation)
    if cotree is not None:
        out += f"ct {format_cotree(cotree)}\n"
    if clique is not None:
        out += format_set("a", clique) + "\n"
    return out


def parse_sequence(text: str | bytes, n: int | None = None) -> ReconfSequence:
    start = None
    moves = []
    for no, parts in _lines(text):
        tag, args = parts[0], parts[1:]
        if tag == "s":
            if start is not None:
                raise ParseError(no, "second 's' line")
            start = frozenset(_vertex(no, v, n) for v in _ints(no, args))
        elif tag in ("+", "-"):
            if start is None:
                raise ParseError(no, "move before the 's' line")
            if len(args) != 1:
                raise ParseError(no, "move line needs one vertex")
            (v,) = _ints(no, args)
            v = _vertex(no, v, n)
            moves.append(Move.add(v) if tag == "+" else Move.remove(v))
        else:
            raise ParseError(no, f"unexpected line {' '.join(parts)!r}")
    if start is None:
        raise ParseError(None, "missing 's' line")
    return ReconfSequence(start, tuple(moves))


def format_sequence(seq: ReconfSequence, comment: str | None = None) -> str:
    out = f"c {comment}\n" if comment else ""
    out += format_set("s", seq.start) + "\n"
    out += "".join(f"{mv.kind.value} {mv.vertex + 1}\n" for mv in seq.moves)
    return out


def parse_map(text: str | bytes) -> ReductionMap:
    kind = n0 = None
    clique = None
    gadgets: dict[int, Gadget] = {}
    for no, parts in _lines(text):
        tag, args = parts[0], parts[1:]
        if tag == "kind" and len(args) == 1 and args[0] in KINDS:
            kind = args[0]
        elif tag == "n0" and len(args) == 1:
            (n0,) = _ints(no, args)
        elif tag == "a":
            clique = frozenset(v - 1 for v in _ints(no, args))
        elif tag == "g" and len(args) >= 2:
            (v,) = _ints(no, args[:1])
            role = args[1]
            if role == "edge" and len(args) == 4:
                u, w = _ints(no, args[2:])
                gadgets[v - 1] = Gadget("edge", (u - 1, w - 1))
            elif role in ("x", "y") and len(args) == 2:
                gadgets[v - 1] = Gadget(role)
            else:
                raise ParseError(no, f"bad gadget line {' '.join(parts)!r}")
        else:
            raise ParseError(no, f"unexpected line {' '.join(parts)!r}")
    if kind is None or n0 is None:
        raise ParseError(None, "map needs 'kind' and 'n0' lines")
    try:
        return ReductionMap(kind, n0, gadgets, clique)
    except ValueError as exc:
        raise ParseError(None, str(exc)) from None


def format_map(rmap: ReductionMap) -> str:
    lines = [f"kind {rmap.kind}", f"n0 {rmap.n0}"]
    if rmap.clique is not None:
        lines.append(format_set("a", rmap.clique))
    for v in sorted(rmap.gadgets):
        gd = rmap.gadgets[v]
        if gd.role == "edge":
            lines.append(f"g {v + 1} edge {gd.edge[0] + 1} {gd.edge[1] + 1}")
        else:
            lines.append(f"g {v + 1} {gd.role}")
    return "\n".join(lines) + "\n"
