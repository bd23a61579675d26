"""Command-line front end.

Exit codes: 0 for positive/pass outcomes, 1 for negative/fail verdicts, 2 for
usage or format errors.  Machine-readable JSON goes to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from carc.arcs import (
    ArcModelError,
    build_model,
    model_from_json,
    model_to_json,
    validate_model,
)
from carc.graph import (
    GraphError,
    RPartiteGraph,
    builtin_example,
    parse_graph,
    random_rpartite,
    serialize_graph,
)
from carc.ordering import CircularOrdering, OrderingError, scan_violations, verify_gtc
from carc.patterns import CatalogError, classify_witness, enumerate_catalog
from carc.rcircular import scan_dump, verify_r_circular
from carc.recognize import RecognitionError, equivalence_harness, recognize
from carc.render import model_to_svg

USAGE_ERROR = 2


class CliError(Exception):
    """Input problem mapped to exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> RPartiteGraph:
    try:
        return parse_graph(_read_text(path))
    except GraphError as exc:
        raise CliError(f"bad graph document {path}: {exc}") from exc


def parse_ordering_arg(text: str, n: int) -> CircularOrdering:
    """Accept "3,1,2" or the range shorthand "1..10"."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            seq = tuple(range(int(lo), int(hi) + 1))
        else:
            seq = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise CliError(f"bad ordering {text!r}: {exc}") from exc
    try:
        order = CircularOrdering(seq)
    except OrderingError as exc:
        raise CliError(str(exc)) from exc
    if order.n != n:
        raise CliError(f"ordering covers {order.n} vertices, graph has {n}")
    return order


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _witness_payload(g, order, witness) -> dict:
    doc = witness.to_dict()
    doc["pattern_id"] = classify_witness(g, order, witness).pattern_id
    return doc


def _cmd_example(args) -> int:
    try:
        g = builtin_example(args.name)
    except GraphError as exc:
        raise CliError(str(exc)) from exc
    sys.stdout.write(serialize_graph(g) + "\n")
    return 0


def _cmd_gen(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",")]
    try:
        g = random_rpartite(args.r, sizes, args.density, args.seed)
    except GraphError as exc:
        raise CliError(str(exc)) from exc
    sys.stdout.write(serialize_graph(g) + "\n")
    return 0


def _cmd_verify_ordering(args) -> int:
    g = _load_graph(args.graph)
    order = parse_ordering_arg(args.ordering, g.n)
    witness = verify_gtc(g, order)
    if witness is None:
        _emit({"pass": True})
        return 0
    _emit({"pass": False, "witness": _witness_payload(g, order, witness)})
    return 1


def _cmd_verify_rcircular(args) -> int:
    g = _load_graph(args.graph)
    order = parse_ordering_arg(args.ordering, g.n)
    if args.dump_scans:
        print(scan_dump(g, order), file=sys.stderr)
    uncovered = verify_r_circular(g, order)
    if uncovered is None:
        _emit({"pass": True})
        return 0
    _emit({"pass": False, "uncovered_edge": list(uncovered)})
    return 1


def _cmd_scan_patterns(args) -> int:
    g = _load_graph(args.graph)
    order = parse_ordering_arg(args.ordering, g.n)
    witnesses = scan_violations(g, order)
    _emit({"violations": [_witness_payload(g, order, w) for w in witnesses]})
    return 0 if not witnesses else 1


def _cmd_build_model(args) -> int:
    g = _load_graph(args.graph)
    order = parse_ordering_arg(args.ordering, g.n)
    sys.stdout.write(model_to_json(build_model(g, order)) + "\n")
    return 0


def _cmd_check_model(args) -> int:
    g = _load_graph(args.graph)
    try:
        model = model_from_json(_read_text(args.model))
        offending = validate_model(g, model)
    except ArcModelError as exc:
        raise CliError(str(exc)) from exc
    if offending is None:
        _emit({"pass": True})
        return 0
    _emit({"pass": False, "offending_pair": list(offending)})
    return 1


def _cmd_catalog(args) -> int:
    try:
        configs = enumerate_catalog(args.colors)
    except CatalogError as exc:
        raise CliError(str(exc)) from exc
    if args.count_only:
        _emit({"count": len(configs)})
    else:
        _emit([cfg.to_dict() for cfg in configs])
    return 0


def _cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    try:
        decision = recognize(g, limit=args.limit, parallel=args.parallel)
    except RecognitionError as exc:
        raise CliError(str(exc)) from exc
    _emit(decision.to_dict())
    return 0 if decision.answer == "yes" else 1


def _cmd_render(args) -> int:
    g = _load_graph(args.graph)
    if args.model:
        try:
            model = model_from_json(_read_text(args.model))
        except ArcModelError as exc:
            raise CliError(str(exc)) from exc
    elif args.ordering:
        model = build_model(g, parse_ordering_arg(args.ordering, g.n))
    else:
        raise CliError("render needs --model or --ordering")
    svg = model_to_svg(g, model)
    try:
        Path(args.out).write_text(svg)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}") from exc
    _emit({"written": args.out, "n_positions": model.n_positions})
    return 0


def _cmd_harness(args) -> int:
    g = _load_graph(args.graph)
    try:
        report = equivalence_harness(g, limit=args.limit, exhaustive=args.exhaustive)
    except RecognitionError as exc:
        raise CliError(str(exc)) from exc
    _emit(report.to_dict())
    return 0 if report.agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carc",
        description="Recognize and certify circular-arc r-partite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("--graph", required=True, help="graph JSON file, or - for stdin")

    def ordering_arg(p):
        p.add_argument(
            "--ordering", required=True, help="comma-separated permutation, or a..b"
        )

    p = sub.add_parser("example", help="emit a built-in example graph")
    p.add_argument("name", choices=["fig1", "fig2"])
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("gen", help="generate a seeded random r-partite graph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sizes", required=True, help="comma-separated per-part sizes")
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify-ordering", help="check the total-circular condition")
    graph_arg(p)
    ordering_arg(p)
    p.set_defaults(func=_cmd_verify_ordering)

    p = sub.add_parser("verify-rcircular", help="check scan coverage of the matrix 1s")
    graph_arg(p)
    ordering_arg(p)
    p.add_argument("--dump-scans", action="store_true", help="print row scans to stderr")
    p.set_defaults(func=_cmd_verify_rcircular)

    p = sub.add_parser("scan-patterns", help="list forbidden quadruples of an ordering")
    graph_arg(p)
    ordering_arg(p)
    p.set_defaults(func=_cmd_scan_patterns)

    p = sub.add_parser("build-model", help="construct the arc model of an ordering")
    graph_arg(p)
    ordering_arg(p)
    p.set_defaults(func=_cmd_build_model)

    p = sub.add_parser("check-model", help="validate a model against a graph")
    graph_arg(p)
    p.add_argument("--model", required=True, help="model JSON file, or - for stdin")
    p.set_defaults(func=_cmd_check_model)

    p = sub.add_parser("catalog", help="enumerate the forbidden-pattern catalog")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("recognize", help="decide membership with a certificate")
    graph_arg(p)
    p.add_argument("--limit", type=int, default=12)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("render", help="write an SVG drawing of a model")
    graph_arg(p)
    p.add_argument("--model", help="model JSON file")
    p.add_argument("--ordering", help="build the model from this ordering")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("harness", help="cross-check all characterizations on one graph")
    graph_arg(p)
    p.add_argument("--limit", type=int, default=8)
    p.add_argument("--exhaustive", action="store_true", help="scan past the first pass")
    p.set_defaults(func=_cmd_harness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except CliError as exc:
        print(f"carc: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (GraphError, OrderingError, ArcModelError, CatalogError) as exc:
        print(f"carc: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:
    sys.exit(main())
