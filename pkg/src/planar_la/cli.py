"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 engine failure,
3 parse or usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from typing import Optional, Sequence

from .bounded import ReductionTrace
from .errors import EdgeSetMismatch, EngineFailure, InvalidParams, ParseError
from .fileio import format_coloring, format_graph, parse_coloring, parse_graph
from .generate import gen_planar
from .solver import check_k, default_k, pick_engine, solve
from .verify import verify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ENGINE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is our engine-failure code
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.input))
    delta = g.max_degree()
    engine = pick_engine(delta, args.engine)
    k = default_k(delta, engine) if args.k is None else args.k
    check_k(delta, k, engine)
    trace = ReductionTrace() if args.trace else None
    t0 = time.perf_counter()
    col = solve(g, k, engine, trace_out=trace)
    elapsed = time.perf_counter() - t0
    out = format_coloring(col)
    if args.output:
        _write(args.output, out)
    # keep stdout a clean coloring file when no -o is given
    report = sys.stderr if not args.output else sys.stdout
    if not args.output:
        _write(None, out)
    print(
        f"n={g.n} m={g.edge_count} delta={delta} k={k} engine={engine} "
        f"colors_used={col.colors_used()} time={elapsed:.3f}s",
        file=report,
    )
    if trace is not None:
        print(trace.dump(), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    k, assignment = parse_coloring(_read(args.coloring))
    edges = g.edge_set()
    extra = sorted(set(assignment) - edges)
    missing = sorted(edges - set(assignment))
    if extra or missing:
        parts = []
        if extra:
            parts.append(f"{len(extra)} colored edges absent from the graph, first {extra[0]}")
        if missing:
            parts.append(f"{len(missing)} graph edges without a color, first {missing[0]}")
        raise EdgeSetMismatch("; ".join(parts))
    report = verify(g, assignment, k)
    print(report.summary())
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_gen(args) -> int:
    g = gen_planar(args.n, args.delta, args.seed)
    _write(args.output, format_graph(g))
    return EXIT_OK


def bench_row(n: int, delta: int, seed: int) -> dict:
    g = gen_planar(n, delta, seed)
    t0 = time.perf_counter()
    col = solve(g)
    elapsed = time.perf_counter() - t0
    report = verify(g, col)
    return {
        "n": n,
        "m": g.edge_count,
        "time": elapsed,
        # microseconds per n log2 n
        "ratio": elapsed / (n * math.log2(n)) * 1e6,
        "verified": report.valid,
    }


def format_bench_row(row: dict) -> str:
    return (
        f"n={row['n']:<8d} m={row['m']:<8d} time={row['time']:8.3f}s "
        f"ratio={row['ratio']:.4f} verified: {str(row['verified']).lower()}"
    )


def cmd_bench(args) -> int:
    ok = True
    for n in args.sizes:
        row = bench_row(n, args.delta, args.seed)
        print(format_bench_row(row), flush=True)
        ok = ok and row["verified"]
    return EXIT_OK if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planar-la", description="Linear arboricity of planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="color a graph file with few linear forests")
    s.add_argument("input", help="graph file, or - for stdin")
    s.add_argument("-o", "--output", help="coloring file (default: stdout)")
    s.add_argument("--k", type=int, help="number of colors to use")
    s.add_argument("--engine", choices=("auto", "bounded", "high"), default="auto")
    s.add_argument("--trace", action="store_true", help="dump the reduction log to stderr")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a coloring against a graph")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="generate a random planar graph")
    g.add_argument("n", type=int)
    g.add_argument("--delta", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time generate + solve + verify per size")
    b.add_argument("--sizes", type=int, nargs="+", required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--delta", type=int, default=10)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineFailure as exc:
        print(f"engine failure: {exc}", file=sys.stderr)
        if exc.diagnostic:
            print(exc.diagnostic, file=sys.stderr)
        return EXIT_ENGINE
    except (ParseError, EdgeSetMismatch, InvalidParams, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
