"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch or a rejected recognition,
2 unreadable input, 3 a solver or recognizer precondition failure, 4 a
branch-and-bound budget ran out.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .edgelist import EdgeListError, parse_edge_list, serialize_edge_list, serialize_edge_list_documents
from .enumerate import MAX_ENUM_ORDER, enumerate_trees
from .family import InvalidSpec, TSpec, build_member, recognize_T
from .harness import Theorem, verify, verify_spanning
from .named import b_graphs, c5
from .solvers import Method, ParamKind, SearchBudgetExceeded, SolverError, solve_exact

PARSE_ERROR = 2
PRECONDITION = 3
BUDGET = 4


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def cmd_solve(args) -> int:
    G = _read_graph(args.file)
    try:
        result = solve_exact(G, ParamKind(args.param), Method(args.method), args.budget)
    except SearchBudgetExceeded as exc:
        doc = {"param": args.param, "budget_exhausted": True, "lower": exc.lower, "upper": exc.upper, "nodes": exc.nodes}
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.output)
        return BUDGET
    _emit(json.dumps(result.as_dict(), sort_keys=True) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    report = verify(Theorem(args.theorem), args.max_order, args.parallel, Method(args.method))
    _emit(report.dumps() + "\n", args.output)
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_ENUM_ORDER:
        print(f"error: tree order must be in 1..{MAX_ENUM_ORDER}", file=sys.stderr)
        return PARSE_ERROR
    trees = list(enumerate_trees(args.n))
    _emit(serialize_edge_list_documents(trees), args.output)
    print(f"{len(trees)} trees of order {args.n}", file=sys.stderr)
    return 0


def cmd_family_build(args) -> int:
    try:
        doc = json.loads(Path(args.spec).read_text())
        T, cert = build_member(TSpec.from_json(doc))
    except (json.JSONDecodeError, InvalidSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    edges = serialize_edge_list(T)
    if args.output:
        Path(args.output).write_text(edges)
    out = {"edge_list": edges, "certificate": cert.to_json()}
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_family_recognize(args) -> int:
    T = _read_graph(args.file)
    try:
        cert = recognize_T(T)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION
    if cert is None:
        _emit("reject\n", args.output)
        return 1
    _emit(cert.dumps() + "\n", args.output)
    return 0


def cmd_bgraphs(args) -> int:
    if args.write_dir:
        out = Path(args.write_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, G in enumerate(b_graphs(), start=1):
            (out / f"b{i}.edges").write_text(serialize_edge_list(G))
        (out / "c5.edges").write_text(serialize_edge_list(c5()))
    report = verify(Theorem.BGRAPHS)
    _emit(report.dumps() + "\n", args.output)
    return 0 if report.passed else 1


def cmd_spanning(args) -> int:
    graphs = None
    if args.file:
        graphs = [(args.file, _read_graph(args.file))]
    try:
        report = verify_spanning(graphs, Method(args.method))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION
    _emit(report.dumps() + "\n", args.output)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ntdom", description="Exact neighborhood total domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    params = [k.value for k in ParamKind]
    methods = [m.value for m in Method]

    def common(p):
        p.add_argument("--output", help="write the main output to FILE instead of stdout")

    p = sub.add_parser("solve", help="solve γ, γt or γnt exactly for one graph")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--param", choices=params, default="gamma-nt")
    p.add_argument("--method", choices=methods, default="bnb")
    p.add_argument("--budget", type=float, default=None, help="branch-and-bound time limit in seconds")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="exhaustive theorem check, JSON report on stdout")
    p.add_argument("--theorem", choices=[t.value for t in Theorem], required=True)
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--method", choices=methods, default="bnb")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate-trees", help="all trees of order N as blank-line separated edge lists")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    fam = sub.add_parser("family", help="build or recognize members of the extremal tree family")
    fsub = fam.add_subparsers(dest="family_command", required=True)
    p = fsub.add_parser("build")
    p.add_argument("spec", help="JSON spec document")
    common(p)
    p.set_defaults(func=cmd_family_build)
    p = fsub.add_parser("recognize")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_family_recognize)

    p = sub.add_parser("bgraphs", help="check γnt on the exceptional graphs")
    p.add_argument("--write-dir", help="also write b1..b5.edges and c5.edges here")
    common(p)
    p.set_defaults(func=cmd_bgraphs)

    p = sub.add_parser("spanning-check", help="recognize every spanning tree of B1-B5 or of FILE")
    p.add_argument("file", nargs="?")
    p.add_argument("--method", choices=methods, default="bnb")
    common(p)
    p.set_defaults(func=cmd_spanning)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
