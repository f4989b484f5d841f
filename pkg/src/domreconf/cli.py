"""Command-line interface.

Exit status: 0 for YES / valid, 1 for NO / invalid, 2 for any error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .canonical import (
    cograph_canonical,
    interval_cells,
    label_interval,
    label_tree,
    tree_cells,
)
from .cotree import cotree_decompose
from .formats import (
    ParseError,
    format_instance,
    format_map,
    format_sequence,
    format_set,
    parse_instance,
    parse_map,
    parse_sequence,
)
from .generators import K_POLICIES, GenSpec, generate
from .reconfig import DEFAULT_BUDGET, BudgetExceeded, DsrInstance, ReconfSequence, oracle_reachable, verify
from .reductions import (
    SPLIT_BIPARTITE,
    VCR_DSR,
    VCR_SPLIT,
    normalize_sequence,
    reduce_split_to_bipartite_dsr,
    reduce_vcr_to_dsr,
    reduce_vcr_to_split_dsr,
    vcr_oracle,
)
from .scheme import AUTO, GRAPH_CLASSES, ClassEvidence, UnsupportedClass, decide, solve

SCHEMA = 1
ORACLE_REASON = "ORACLE"


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _sequence_json(seq: ReconfSequence) -> dict:
    return {
        "start": [v + 1 for v in sorted(seq.start)],
        "moves": [f"{mv.kind.value}{mv.vertex + 1}" for mv in seq.moves],
    }


def _report(args, answer: bool, reason: str, seq=None, expanded: int = 0, started: float = 0.0) -> int:
    if args.format == "json":
        out = {"schema": SCHEMA, "answer": "YES" if answer else "NO", "reason": reason}
        if seq is not None:
            out["sequence"] = _sequence_json(seq)
        out["stats"] = {
            "states_expanded": expanded,
            "time_ms": round((time.perf_counter() - started) * 1000, 3),
        }
        _write(args.output, json.dumps(out, sort_keys=True) + "\n")
    else:
        line = f"{'YES' if answer else 'NO'} {reason}"
        if seq is not None and getattr(args, "emit_sequence", False):
            _write(args.output, format_sequence(seq, comment=line))
        else:
            _write(args.output, line + "\n")
    return 0 if answer else 1


def _load_dsr(path: str):
    parsed = parse_instance(_read(path))
    if parsed.is_vcr:
        raise CliError("expected a dominating-set instance, got a vertex-cover instance")
    return parsed


def _evidence(args, parsed) -> ClassEvidence:
    return ClassEvidence(args.graph_class, parsed.representation, parsed.cotree)


def _oracle(args, inst: DsrInstance, started: float) -> int:
    res = oracle_reachable(inst, args.budget)
    seq = res.sequence if res.reachable else None
    return _report(args, res.reachable, ORACLE_REASON, seq, res.states_expanded, started)


def cmd_decide(args) -> int:
    started = time.perf_counter()
    parsed = _load_dsr(args.input)
    try:
        d = decide(parsed.instance, _evidence(args, parsed))
    except UnsupportedClass:
        if not args.oracle_fallback:
            raise
        return _oracle(args, parsed.instance, started)
    return _report(args, d.answer, d.reason.value, started=started)


def cmd_solve(args) -> int:
    started = time.perf_counter()
    parsed = _load_dsr(args.input)
    try:
        d, seq = solve(parsed.instance, _evidence(args, parsed))
    except UnsupportedClass:
        if not args.oracle_fallback:
            raise
        return _oracle(args, parsed.instance, started)
    return _report(args, d.answer, d.reason.value, seq, started=started)


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    parsed = parse_instance(_read(args.input))
    if parsed.is_vcr:
        res = vcr_oracle(parsed.instance, args.budget)
        seq = res.sequence if res.reachable else None
        return _report(args, res.reachable, ORACLE_REASON, seq, res.states_expanded, started)
    return _oracle(args, parsed.instance, started)


def cmd_verify(args) -> int:
    started = time.perf_counter()
    parsed = _load_dsr(args.instance)
    inst = parsed.instance
    seq = parse_sequence(_read(args.sequence), inst.graph.n)
    report = verify(inst, seq)
    if args.format == "json":
        return _report(args, report.valid, "VALID" if report.valid else report.reason, started=started)
    _write(args.output, f"{report}\n")
    return 0 if report.valid else 1


def cmd_label(args) -> int:
    parsed = _load_dsr(args.input)
    g = parsed.instance.graph
    kind = args.graph_class
    lines: list[str] = []
    payload: dict = {"schema": SCHEMA, "class": kind}
    if kind in ("tree", "interval"):
        if kind == "tree":
            lab = label_tree(g)
            cells = tree_cells(lab)
        else:
            if parsed.representation is None:
                raise UnsupportedClass("interval labelling needs 'i' lines")
            lab = label_interval(g, parsed.representation)
            cells = interval_cells(lab)
        lines += [f"v {v + 1} {x}" for v, x in enumerate(lab.label)]
        lines += [format_set(f"cell {i + 1}", c) for i, c in enumerate(cells.cells)]
        payload["labels"] = list(lab.label)
        payload["cells"] = [[v + 1 for v in sorted(c)] for c in cells.cells]
        payload["canonical"] = [w + 1 for w in cells.order]
    else:
        ct = parsed.cotree if parsed.cotree is not None else cotree_decompose(g)
        if not ct:
            raise UnsupportedClass(f"graph contains an induced P4: {ct}")
        can = cograph_canonical(g, ct)
        lines.append(format_set("canonical", can.canonical))
        payload["canonical"] = [v + 1 for v in sorted(can.canonical)]
        if can.universal is not None:
            lines.append(f"universal {can.universal + 1}")
            payload["universal"] = can.universal + 1
        else:
            side_a, side_b = (" ".join(str(v + 1) for v in sorted(x)) for x in can.split)
            lines.append(f"split {side_a} | {side_b}")
            payload["split"] = [[v + 1 for v in sorted(s)] for s in can.split]
    if args.format == "json":
        _write(args.output, json.dumps(payload, sort_keys=True) + "\n")
    else:
        _write(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_reduce(args) -> int:
    parsed = parse_instance(_read(args.input))
    clique = None
    if args.kind in (VCR_DSR, VCR_SPLIT):
        if not parsed.is_vcr:
            raise CliError(f"{args.kind} needs a vertex-cover instance ('p vcr' header)")
        make = reduce_vcr_to_dsr if args.kind == VCR_DSR else reduce_vcr_to_split_dsr
        out, rmap = make(parsed.instance)
        clique = rmap.clique
    else:
        if parsed.is_vcr:
            raise CliError(f"{SPLIT_BIPARTITE} needs a dominating-set instance")
        g = parsed.instance.graph
        split = None
        if parsed.clique is not None:
            split = (parsed.clique, frozenset(range(g.n)) - parsed.clique)
        out, rmap = reduce_split_to_bipartite_dsr(parsed.instance, split)
    _write(args.output, format_instance(out, clique=clique, comment=f"reduced by {args.kind}"))
    map_path = args.map
    if map_path is None and args.output not in (None, "-"):
        map_path = args.output + ".map"
    if map_path is not None:
        _write(map_path, format_map(rmap))
    return 0


def cmd_normalize(args) -> int:
    parsed = _load_dsr(args.instance)
    rmap = parse_map(_read(args.map))
    g = parsed.instance.graph
    seq = normalize_sequence(parse_sequence(_read(args.sequence), g.n), rmap, g)
    _write(args.output, format_sequence(seq))
    return 0


def cmd_generate(args) -> int:
    spec = GenSpec(
        args.graph_class,
        args.n,
        seed=args.seed,
        k_policy=args.k_policy,
        k=args.k,
        density=args.density,
        connected=not args.disconnected,
    )
    gen = generate(spec)
    comment = f"generated class={args.graph_class} n={args.n} seed={args.seed} k-policy={args.k_policy}"
    _write(args.output, format_instance(gen.instance, gen.representation, gen.cotree, comment=comment))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="domreconf", description="Dominating set reconfiguration tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, input_arg: bool = True, fmt: bool = True):
        if input_arg:
            sp.add_argument("input", nargs="?", default="-", help="instance file (default: stdin)")
        sp.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=("text", "json"), default="text")

    def solver_flags(sp):
        sp.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default=AUTO)
        sp.add_argument("--oracle-fallback", action="store_true",
                        help="use exhaustive search when the class is not supported")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle state budget")

    sp = sub.add_parser("decide", help="answer an instance")
    common(sp)
    solver_flags(sp)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("solve", help="answer an instance and build a sequence")
    common(sp)
    solver_flags(sp)
    sp.add_argument("--emit-sequence", action="store_true", help="write the sequence file")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", help="exhaustive search (n <= 20)")
    common(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--emit-sequence", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="check a sequence against an instance")
    sp.add_argument("instance")
    sp.add_argument("sequence", nargs="?", default="-")
    common(sp, input_arg=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("label", help="canonical labelling and cells")
    common(sp)
    sp.add_argument("--class", dest="graph_class", choices=("tree", "interval", "cograph"), required=True)
    sp.set_defaults(func=cmd_label)

    sp = sub.add_parser("reduce", help="apply a hardness reduction")
    common(sp, fmt=False)
    sp.add_argument("--kind", choices=(VCR_DSR, VCR_SPLIT, SPLIT_BIPARTITE), required=True)
    sp.add_argument("--map", default=None, help="map sidecar path (default: OUTPUT.map)")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("normalize", help="rewrite a reduced-graph sequence onto original vertices")
    sp.add_argument("instance", help="reduced instance file")
    sp.add_argument("sequence", nargs="?", default="-")
    sp.add_argument("--map", required=True)
    common(sp, input_arg=False, fmt=False)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("generate", help="write a random instance")
    common(sp, input_arg=False, fmt=False)
    sp.add_argument("--class", dest="graph_class",
                    choices=("tree", "interval", "cograph", "general", "vcr"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--k-policy", choices=K_POLICIES, default="tight")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--disconnected", action="store_true",
                    help="allow disconnected interval graphs and cographs")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (CliError, ParseError, UnsupportedClass, BudgetExceeded, ValueError, OSError) as exc:
        msg = " ".join(str(exc).split()) or type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
