"""Command-line entry point: ``lotvg {gen,transform,stream,bench,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 I/O or parse error.
"""
from __future__ import annotations

import argparse
import contextlib
import io as _stdio
import os
import sys

from .bench import BenchConfig, run_benchmark, verify_equivalence
from .core import Window
from .criteria import basic_build, parse_criterion
from .exceptions import ConfigError, SeriesParseError, VisibilityGraphError
from .generators import GeneratorSpec, generate, parse_kind
from .io import SeriesFile, iter_values, read_series_csv, write_edge_list, write_timings_csv
from .offline import BootstrapChoice, dc_build, lt_build_hvg
from .online import OnlineState, parse_algorithm

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@contextlib.contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


@contextlib.contextmanager
def _input(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            yield fh


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _column(text: str):
    return int(text) if text.lstrip("-").isdigit() else text


def _series_sources(tokens: str, length: int, seed: int) -> list:
    sources = []
    for token in (t.strip() for t in tokens.split(",")):
        if not token:
            continue
        if os.path.exists(token) or token.endswith(".csv") or os.sep in token:
            sources.append(SeriesFile(token))
            continue
        kind, _, seed_text = token.partition(":")
        try:
            spec = GeneratorSpec(parse_kind(kind), length, int(seed_text) if seed_text else seed)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        sources.append(spec)
    return sources


def cmd_gen(args) -> int:
    values = generate(GeneratorSpec(parse_kind(args.kind), args.length, args.seed))
    with _output(args.out) as fh:
        fh.write("".join(f"{v!r}\n" for v in values))
    return EXIT_OK


def _read_input_series(args) -> list[float]:
    column = args.value_col
    with _input(args.input) as fh:
        if column is None:
            # second column by default; single-column files use their only column
            lines = fh.read()
            first = next((ln for ln in lines.splitlines() if ln.strip()), "")
            column = 1 if "," in first else 0
            fh = _stdio.StringIO(lines)
        return read_series_csv(SeriesFile(
            fh, value_column=column, has_header=not args.no_header,
            order="newest-first" if args.newest_first else "oldest-first"))


def cmd_transform(args) -> int:
    kind = parse_criterion(args.criterion)
    if args.algo == "lt" and args.criterion != "hvg":
        raise UsageError("--algo lt only supports --criterion hvg")
    values = _read_input_series(args)
    start = 0
    if args.tail is not None:
        if args.tail < 1:
            raise UsageError("--tail must be >= 1")
        start = max(len(values) - args.tail, 0)
        values = values[start:]
    window = Window.from_values(values, start=start)
    if args.algo == "basic":
        graph = basic_build(window, kind)
    elif args.algo == "dc":
        graph = dc_build(window, kind)
    else:
        graph = lt_build_hvg(window)
    with _output(args.out) as fh:
        write_edge_list(graph, fh)
    return EXIT_OK


def cmd_stream(args) -> int:
    algorithm = parse_algorithm(args.algo)
    choice = BootstrapChoice(args.bootstrap) if args.bootstrap else None
    if args.window < 1:
        raise UsageError("--window must be >= 1")
    window = Window(args.window)
    state = None
    with _input(args.input) as src, _output(args.out) as out:
        for value in iter_values(src):
            if state is None:
                window.append(value)
                if window.full:
                    state = OnlineState.init(window, algorithm, choice)
                    if args.emit_deltas:
                        out.write("".join(f"+ {i} {j}\n" for i, j in state.edges()))
                continue
            delta = state.advance(value)
            if args.emit_deltas:
                out.write(f"- {delta.removed_node}\n")
                out.write("".join(f"+ {i} {j}\n" for i, j in delta.added_edges))
        if state is None:
            raise UsageError(
                f"input ended after {len(window)} value(s); window needs {args.window}")
        if not args.emit_deltas:
            write_edge_list(state.graph, out)
    return EXIT_OK


def _config(args, **extra) -> BenchConfig:
    return BenchConfig(
        algorithms=args.algos,
        series=_series_sources(args.series, args.length, args.seed),
        windows=args.windows,
        iterations=args.iterations,
        stride=args.stride,
        **extra,
    )


def cmd_bench(args) -> int:
    config = _config(args, repeats=args.repeats, measure=args.measure,
                     include_bootstrap=args.include_bootstrap, parallel=args.parallel)
    records = run_benchmark(config)
    with _output(args.out) as fh:
        write_timings_csv(records, fh)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_equivalence(_config(args, repeats=1))
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lotvg", description="Sliding-window natural/horizontal visibility graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a synthetic series, one value per line")
    p.add_argument("--kind", required=True,
                   choices=["uniform", "normal", "exponential", "conway", "walk"])
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--seed", type=int, default=1024)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", help="build one graph from a series file")
    p.add_argument("--algo", required=True, choices=["basic", "dc", "lt"])
    p.add_argument("--criterion", required=True, choices=["nvg", "hvg"])
    p.add_argument("--input", required=True)
    p.add_argument("--value-col", type=_column, default=None,
                   help="column name or 0-based position (default: second column)")
    p.add_argument("--no-header", action="store_true")
    p.add_argument("--newest-first", action="store_true")
    p.add_argument("--tail", type=int, default=None,
                   help="keep only the last N values, indexed by file position")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("stream", help="maintain a graph over a sliding window of stdin/file values")
    p.add_argument("--algo", required=True, choices=["lot-nvg", "lot-hvg", "lot-hvg-msopt"])
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--input", default="-")
    p.add_argument("--out", default="-")
    p.add_argument("--bootstrap", choices=["dc", "lt", "basic"], default=None)
    emit = p.add_mutually_exclusive_group()
    emit.add_argument("--emit-deltas", action="store_true")
    emit.add_argument("--emit-final", action="store_true")
    p.set_defaults(func=cmd_stream)

    for name, helptext in (("bench", "time algorithms in the moving-window protocol"),
                           ("verify", "check algorithms against the pairwise oracle")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--algos", required=True)
        p.add_argument("--series", required=True,
                       help="comma list of generator kinds (kind or kind:seed) or CSV paths")
        p.add_argument("--windows", type=_int_list, required=True)
        p.add_argument("--iterations", type=int, default=100)
        p.add_argument("--stride", type=int, default=1)
        p.add_argument("--length", type=int, default=10000)
        p.add_argument("--seed", type=int, default=1024)
        if name == "bench":
            p.add_argument("--repeats", type=int, default=5)
            p.add_argument("--measure", choices=["mean", "total"], default="mean")
            p.add_argument("--include-bootstrap", action="store_true")
            p.add_argument("--parallel", action="store_true")
            p.add_argument("--out", required=True)
            p.set_defaults(func=cmd_bench)
        else:
            p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OSError, SeriesParseError) as exc:
        print(f"lotvg: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ConfigError, VisibilityGraphError, ValueError) as exc:
        print(f"lotvg: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
