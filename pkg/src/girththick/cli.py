"""Command-line interface.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io
from .construct import construct, k10_decomposition
from .graph import (
    PartiteVertex,
    SimpleGraph,
    make_complete,
    make_complete_tripartite,
    parse_edge,
    plain,
)
from .metrics import lower_bound_theta4_knnn, max_planar_edges, theta4_knnn
from .verify import BudgetExceeded, exact_girth_thickness_small, verify_decomposition


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _girth_int(text: str) -> int:
    value = _positive_int(text)
    if value < 3:
        raise argparse.ArgumentTypeError(f"girth must be >= 3, got {value}")
    return value


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_construct(args: argparse.Namespace) -> int:
    d = construct(args.n)
    meta = {"n": args.n, "theta": theta4_knnn(args.n)}
    sys.stdout.write(io.dumps(d, args.format, girth_min=4, metadata=meta))
    return 0


def cmd_k10(args: argparse.Namespace) -> int:
    sys.stdout.write(io.dumps(k10_decomposition(), args.format, girth_min=4,
                              metadata={"graph": "K10"}))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = io.loads(_read_input(args.input))
    except io.DocumentError as exc:
        raise UsageError(str(exc)) from None
    d = doc.decomposition
    if args.host:
        try:
            d = type(d)(io.parse_host(args.host), d.parts)
        except io.DocumentError as exc:
            raise UsageError(str(exc)) from None
    girth_min = args.girth if args.girth is not None else doc.girth_min
    report = verify_decomposition(d, girth_min)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.summary() + "\n")
    return 0 if report.verdict else 1


def cmd_bound(args: argparse.Namespace) -> int:
    n = args.n
    out: dict[str, object] = {"n": n, "theta": theta4_knnn(n)}
    if n >= 2:
        out["lower_bound"] = lower_bound_theta4_knnn(n)
        out["max_edges_per_part"] = max_planar_edges(3 * n, 4)
    if args.json:
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
        return 0
    sys.stdout.write(f"theta(4, K_{{{n},{n},{n}}}) = {out['theta']}\n")
    if n >= 2:
        sys.stdout.write(f"edge-count lower bound: {out['lower_bound']}\n")
        sys.stdout.write(f"max edges per planar girth-4 part on {3 * n} vertices: "
                         f"{out['max_edges_per_part']}\n")
    else:
        sys.stdout.write("n = 1 is the exception: K_{1,1,1} is a triangle and needs 2 "
                         "parts; the counting bound is not applied\n")
    return 0


def _family_graph(text: str) -> SimpleGraph:
    name, _, arg = text.partition(":")
    if name == "petersen":
        outer = [plain(i) for i in range(1, 6)]
        inner = [plain(i) for i in range(6, 11)]
        es = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
        es += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
        es += [(outer[i], inner[i]) for i in range(5)]
        return SimpleGraph.from_edges(es)
    try:
        k = int(arg)
    except ValueError:
        raise UsageError(f"unrecognised graph {text!r}") from None
    if k < 1:
        raise UsageError(f"graph size must be positive in {text!r}")
    if name == "knnn":
        return make_complete_tripartite(k)
    if name == "k":
        return make_complete(k)
    if name == "cycle":
        if k < 3:
            raise UsageError("a cycle needs at least 3 vertices")
        vs = [plain(i) for i in range(1, k + 1)]
        return SimpleGraph.from_edges((vs[i], vs[(i + 1) % k]) for i in range(k))
    raise UsageError(f"unknown graph family {name!r} (use knnn:N, k:M, cycle:K, petersen)")


def _edge_list_graph(text: str) -> SimpleGraph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return io.loads_json(text).decomposition.host_graph()
        except io.DocumentError as exc:
            raise UsageError(str(exc)) from None
    edges = []
    vertices: set[PartiteVertex] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line == "--":
            continue
        try:
            e = parse_edge(line)
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        edges.append(e)
        vertices.update(e)
    try:
        return SimpleGraph(vertices, edges)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_exact_small(args: argparse.Namespace) -> int:
    if args.graph:
        g = _family_graph(args.graph)
    else:
        g = _edge_list_graph(_read_input(args.input))
    try:
        k = exact_girth_thickness_small(g, args.girth, args.max_parts, edge_budget=args.budget)
    except BudgetExceeded as exc:
        raise UsageError(f"{exc}; the exhaustive oracle is only valid on tiny graphs") from None
    sys.stdout.write(("NotFound" if k is None else str(k)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girththick",
        description="Girth-constrained planar decompositions of K_{n,n,n} and K_10.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the decomposition of K_{n,n,n}")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--format", choices=("json", "dot", "edgelist"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a decomposition document")
    p.add_argument("--input", default="-", help="path or '-' for stdin (default)")
    p.add_argument("--girth", type=_girth_int, default=None,
                   help="minimum girth per part (default: the document's girth_min, else 4)")
    p.add_argument("--host", default=None,
                   help="override host, e.g. complete_tripartite:5 or complete:10")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="print theta(4, K_{n,n,n}) and its counting bound")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("k10", help="emit the stored 3-part decomposition of K_10")
    p.add_argument("--format", choices=("json", "dot", "edgelist"), default="json")
    p.set_defaults(func=cmd_k10)

    p = sub.add_parser("exact-small", help="exhaustive girth-thickness of a tiny graph")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", default="-", help="edge list ('a b' per line) or document")
    src.add_argument("--graph", default=None,
                     help="named graph: knnn:N, k:M, cycle:K or petersen")
    p.add_argument("--girth", type=_girth_int, default=4)
    p.add_argument("--max-parts", type=_positive_int, default=None)
    p.add_argument("--budget", type=_positive_int, default=16, help="edge budget (default 16)")
    p.set_defaults(func=cmd_exact_small)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
