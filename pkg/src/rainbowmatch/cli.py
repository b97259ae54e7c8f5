"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 internal guarantee violation (a
size-delta matching was promised but not produced, or a trace check failed).
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Sequence

from rainbowmatch import bench, generators
from rainbowmatch.generators import GeneratorError, format_latin, parse_latin
from rainbowmatch.graph import (
    ColoredGraph,
    Edge,
    GraphError,
    build_graph,
    format_edge_list,
    matching_problems,
    parse_edge_list,
)
from rainbowmatch.greedy import check_trace, find_rainbow_matching
from rainbowmatch.oracle import (
    DEFAULT_EDGE_CAP,
    CapExceeded,
    has_rainbow_matching_of_size,
    max_rainbow_matching,
)
from rainbowmatch.reduction import ExtensionFailed

EXIT_OK, EXIT_INPUT, EXIT_GUARANTEE = 0, 1, 2


class UsageError(Exception):
    pass


@contextmanager
def _open_in(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


def _load_graph(path: str, square: bool = False) -> ColoredGraph:
    with _open_in(path) as fh:
        if square:
            return generators.latin_to_bipartite(parse_latin(fh))
        return build_graph(parse_edge_list(fh))


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_report(g: ColoredGraph, report, violations) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "delta": report.delta,
        "Delta": g.max_degree(),
        "triangle_free": g.is_triangle_free(),
        "used_triangle_free": report.used_triangle_free,
        "threshold": None if report.threshold_value is None else str(report.threshold_value),
        "guarantee_applies": report.guarantee_applies,
        "guarantee_met": report.guarantee_met,
        "matching": [list(e) for e in report.matching.sorted_by_color()],
        "reduction_steps": [
            {
                "kind": s.kind.value,
                "removed": s.removed,
                "primary": len(s.primary_removed),
                "trimmed": len(s.trimmed),
            }
            for s in report.chain.steps
        ],
        "trace_summary": {
            "k": report.trace.k,
            "h": report.trace.h,
            "violations": [str(v) for v in violations],
        },
        "elapsed_ns": report.elapsed_ns,
    }


def cmd_find(args) -> int:
    g = _load_graph(args.input, args.square)
    try:
        report = find_rainbow_matching(g, args.triangle_free)
    except ExtensionFailed as exc:
        print(f"error: matching extension failed: {exc}", file=sys.stderr)
        return EXIT_GUARANTEE
    violations = [] if args.no_trace_check else check_trace(report.trace, report.core_edge_count)
    if args.json:
        print(json.dumps(run_report(g, report, violations), indent=2))
    else:
        sys.stdout.write(format_edge_list(report.matching.sorted_by_color()))
    if report.guarantee_applies and not report.guarantee_met:
        print(f"error: expected a rainbow matching of size {report.delta}, "
              f"found {len(report.matching)}", file=sys.stderr)
        return EXIT_GUARANTEE
    if violations:
        for v in violations:
            print(f"trace violation: {v}", file=sys.stderr)
        return EXIT_GUARANTEE
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    with _open_in(args.matching) as fh:
        edges = [Edge.of(*t) for t in parse_edge_list(fh)]
    problems = matching_problems(g, edges)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_INPUT
    print(f"ok: rainbow matching of size {len(edges)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.input, args.square)
    if args.k is not None:
        print("yes" if has_rainbow_matching_of_size(g, args.k, args.cap) else "no")
        return EXIT_OK
    res = max_rainbow_matching(g, args.cap)
    print(f"max {res.max_size}")
    sys.stdout.write(format_edge_list(res.witness.sorted_by_color()))
    return EXIT_OK


GEN_ARITY = {"latin-cyclic": 1, "latin-shuffled": 1, "random": 2, "bipartite": 3, "kab": 2}


def cmd_gen(args) -> int:
    p = args.params
    if len(p) != GEN_ARITY[args.kind]:
        raise UsageError(f"{args.kind} takes {GEN_ARITY[args.kind]} integer parameters")
    if args.square and not args.kind.startswith("latin"):
        raise UsageError("--square applies to latin kinds only")
    if args.kind.startswith("latin"):
        square = generators.cyclic_latin(p[0])
        if args.kind == "latin-shuffled":
            square = generators.shuffled_latin(square, args.seed)
        if args.square:
            _write(format_latin(square), args.out)
            return EXIT_OK
        g = generators.latin_to_bipartite(square)
    elif args.kind == "random":
        g = generators.random_properly_colored(p[0], p[1], args.seed)
    elif args.kind == "bipartite":
        g = generators.random_bipartite_colored(p[0], p[1], p[2], args.seed)
    else:
        g = generators.complete_bipartite_colored(p[0], p[1])
    _write(format_edge_list(g.edges()), args.out)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_bench(args) -> int:
    if args.backends:
        for row in bench.compare_backends(reps=args.reps, seed=args.seed):
            print(f"{row['kernel']:7s} {row['backend']:7s} {row['median_ns'] / 1e6:10.3f} ms")
        return EXIT_OK
    if not args.deltas or not args.sizes:
        raise UsageError("--deltas and --sizes must be non-empty")
    try:
        rows, ratios = bench.scaling_run(args.deltas, args.sizes, args.reps, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.csv_out:
        with open(args.csv_out, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(rows, fh)
    else:
        bench.write_csv(rows, sys.stdout)
    for r in ratios:
        print(f"delta={r.delta} n={r.n}->{2 * r.n}: ratio {r.ratio:.2f} {r.verdict}",
              file=sys.stderr)
    short = [r for r in rows if r.matching_size != r.delta]
    return EXIT_GUARANTEE if short else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowmatch",
        description="Rainbow matchings of size min-degree in properly edge-colored graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", help="find a rainbow matching of size delta(G)")
    p.add_argument("input", help="edge-list file ('-' for stdin)")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    p.add_argument("--triangle-free", action="store_true",
                   help="use the sharper degree rule when the graph is triangle-free")
    p.add_argument("--no-trace-check", action="store_true")
    p.add_argument("--square", action="store_true", help="input is a Latin square")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", help="check that a matching file is a rainbow matching")
    p.add_argument("graph")
    p.add_argument("matching")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact maximum rainbow matching (small graphs)")
    p.add_argument("input")
    p.add_argument("--k", type=int, help="only decide whether size k is reachable")
    p.add_argument("--cap", type=int, default=DEFAULT_EDGE_CAP, help="maximum edge count")
    p.add_argument("--square", action="store_true", help="input is a Latin square")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=sorted(GEN_ARITY))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--square", action="store_true", help="write the Latin square itself")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="runtime scaling benchmark")
    p.add_argument("--deltas", type=_int_list, default=[])
    p.add_argument("--sizes", type=_int_list, default=[])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv-out")
    p.add_argument("--backends", action="store_true",
                   help="compare compiled and plain-Python kernels instead")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphError, GeneratorError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
