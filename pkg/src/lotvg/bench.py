"""Moving-window benchmark and equivalence harness.

Offline algorithms rebuild the graph of every window from scratch; online
algorithms bootstrap the first window and then advance one tick at a time.
Only builder/advance calls sit inside the timed region.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .core import VisibilityGraph, Window
from .criteria import CriterionKind, basic_build
from .exceptions import ConfigError
from .generators import GeneratorSpec, generate
from .io import SeriesFile, TimingRecord, read_series_csv
from .offline import dc_build, lt_build_hvg
from .online import OnlineAlgorithm, OnlineState

__all__ = [
    "OFFLINE_ALGORITHMS",
    "ONLINE_ALGORITHMS",
    "BenchConfig",
    "NamedSeries",
    "Counterexample",
    "ConfigResult",
    "EquivalenceReport",
    "parse_algorithms",
    "run_benchmark",
    "verify_equivalence",
]

OFFLINE_ALGORITHMS: dict[str, tuple[CriterionKind, Callable[[Window], VisibilityGraph]]] = {
    "Basic-NVG": (CriterionKind.NATURAL, lambda w: basic_build(w, CriterionKind.NATURAL)),
    "Basic-HVG": (CriterionKind.HORIZONTAL, lambda w: basic_build(w, CriterionKind.HORIZONTAL)),
    "DC-NVG": (CriterionKind.NATURAL, lambda w: dc_build(w, CriterionKind.NATURAL)),
    "DC-HVG": (CriterionKind.HORIZONTAL, lambda w: dc_build(w, CriterionKind.HORIZONTAL)),
    "LT": (CriterionKind.HORIZONTAL, lt_build_hvg),
}

ONLINE_ALGORITHMS: dict[str, OnlineAlgorithm] = {
    "LOT-NVG": OnlineAlgorithm.LOT_NVG,
    "LOT-HVG": OnlineAlgorithm.LOT_HVG,
    "LOT-HVG-MSopt": OnlineAlgorithm.LOT_HVG_MSOPT,
}

_GROUPS = {
    "basic": ["Basic-NVG", "Basic-HVG"],
    "dc": ["DC-NVG", "DC-HVG"],
    "lot": list(ONLINE_ALGORITHMS),
    "all": list(OFFLINE_ALGORITHMS) + list(ONLINE_ALGORITHMS),
}

DEFAULT_WINDOWS_SYNTHETIC = (10, 50, 100, 250, 500, 750, 1000, 1500, 2000)
DEFAULT_WINDOWS_REAL = (10, 50, 100)

# flipped on while a measured region is running; instrumentation hooks read it
timing_active = False


def parse_algorithms(names: "str | Sequence[str]") -> list[str]:
    """Resolve case-insensitive names and group aliases to canonical names."""
    if isinstance(names, str):
        names = [n for n in names.split(",") if n.strip()]
    lookup = {k.lower(): k for k in list(OFFLINE_ALGORITHMS) + list(ONLINE_ALGORITHMS)}
    lookup["lot-hvg_msopt"] = "LOT-HVG-MSopt"
    out: list[str] = []
    for raw in names:
        key = raw.strip().lower()
        resolved = _GROUPS.get(key) or ([lookup[key]] if key in lookup else None)
        if resolved is None:
            raise ConfigError(f"unknown algorithm {raw!r}")
        out.extend(a for a in resolved if a not in out)
    if not out:
        raise ConfigError("no algorithms selected")
    return out


@dataclass(frozen=True)
class NamedSeries:
    name: str
    values: tuple[float, ...]


SeriesSource = Union[NamedSeries, GeneratorSpec, SeriesFile, tuple]


def _resolve_series(src: SeriesSource) -> NamedSeries:
    if isinstance(src, NamedSeries):
        return src
    if isinstance(src, GeneratorSpec):
        return NamedSeries(src.name, tuple(generate(src)))
    if isinstance(src, SeriesFile):
        name = os.path.splitext(os.path.basename(os.fspath(src.path)))[0]
        return NamedSeries(name, tuple(read_series_csv(src)))
    name, values = src
    return NamedSeries(str(name), tuple(float(v) for v in values))


@dataclass
class BenchConfig:
    algorithms: Sequence[str]
    series: Sequence[SeriesSource]
    windows: Sequence[int]
    iterations: int = 100
    repeats: int = 5
    stride: int = 1
    measure: str = "mean"
    include_bootstrap: bool = False
    parallel: bool = False

    def __post_init__(self):
        self.algorithms = parse_algorithms(self.algorithms)
        self.series = [_resolve_series(s) for s in self.series]
        self.windows = [int(n) for n in self.windows]
        self.validate()

    def validate(self) -> None:
        if self.measure not in ("mean", "total"):
            raise ConfigError(f"measure must be 'mean' or 'total', got {self.measure!r}")
        if self.repeats < 1:
            raise ConfigError("repeats must be >= 1")
        if self.iterations < 1:
            raise ConfigError("iterations must be >= 1")
        if self.stride < 1:
            raise ConfigError("stride must be >= 1")
        if not self.series:
            raise ConfigError("no series configured")
        if not self.windows:
            raise ConfigError("no window sizes configured")
        need = self.iterations * self.stride
        for n in self.windows:
            if n < 1:
                raise ConfigError(f"window size must be >= 1, got {n}")
            for s in self.series:
                if n > len(s.values) - need:
                    raise ConfigError(
                        f"series {s.name!r} has {len(s.values)} values; window {n} with "
                        f"{self.iterations} iterations x stride {self.stride} needs {n + need}")

    def jobs(self) -> list[tuple[str, NamedSeries, int]]:
        return [(a, s, n) for a in self.algorithms for s in self.series for n in self.windows]


def _time_offline(algorithm: str, values: Sequence[float], n: int, iterations: int,
                  stride: int) -> float:
    global timing_active
    build = OFFLINE_ALGORITHMS[algorithm][1]
    elapsed = 0
    for m in range(1, iterations + 1):
        lo = m * stride
        window = Window.from_values(values[lo:lo + n], start=lo)
        timing_active = True
        t0 = time.perf_counter_ns()
        build(window)
        elapsed += time.perf_counter_ns() - t0
        timing_active = False
    return elapsed * 1e-9


def _time_online(algorithm: str, values: Sequence[float], n: int, iterations: int,
                 stride: int, include_bootstrap: bool) -> float:
    global timing_active
    algo = ONLINE_ALGORITHMS[algorithm]
    first = Window.from_values(values[:n])
    feed = values[n:n + iterations * stride]
    timing_active = True
    t0 = time.perf_counter_ns()
    state = OnlineState.init(first, algo)
    if not include_bootstrap:
        t0 = time.perf_counter_ns()
    advance = state.advance
    for v in feed:
        advance(v)
    elapsed = time.perf_counter_ns() - t0
    timing_active = False
    return elapsed * 1e-9


def _run_job(job, config: BenchConfig) -> list[TimingRecord]:
    algorithm, series, n = job
    records = []
    for r in range(1, config.repeats + 1):
        if algorithm in ONLINE_ALGORITHMS:
            total = _time_online(algorithm, series.values, n, config.iterations,
                                 config.stride, config.include_bootstrap)
        else:
            total = _time_offline(algorithm, series.values, n, config.iterations, config.stride)
        seconds = total / config.iterations if config.measure == "mean" else total
        records.append(TimingRecord(algorithm, series.name, n, r, config.measure, seconds))
    return records


def run_benchmark(config: BenchConfig) -> list[TimingRecord]:
    """Time every (algorithm, series, window) combination ``repeats`` times."""
    jobs = config.jobs()
    if config.parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            chunks = list(pool.map(_run_job, jobs, [config] * len(jobs)))
    else:
        chunks = [_run_job(job, config) for job in jobs]
    return [rec for chunk in chunks for rec in chunk]


@dataclass
class Counterexample:
    start: int
    values: list[float]
    missing: list[tuple[int, int]]
    extra: list[tuple[int, int]]

    def describe(self) -> str:
        return (f"window [{self.start}, {self.start + len(self.values)}) values={self.values}\n"
                f"  missing edges (in oracle only): {self.missing}\n"
                f"  extra edges (in algorithm only): {self.extra}")


@dataclass
class ConfigResult:
    algorithm: str
    series: str
    window: int
    windows_checked: int = 0
    failure: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


@dataclass
class EquivalenceReport:
    results: list[ConfigResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[ConfigResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.algorithm} {r.series} N={r.window} "
                         f"({r.windows_checked} windows)")
            if r.failure is not None:
                lines.append("  " + r.failure.describe())
        return "\n".join(lines)


def _compare(graph: VisibilityGraph, oracle: VisibilityGraph, window: Window) -> Counterexample | None:
    got, want = graph.edge_set(), oracle.edge_set()
    if got == want and set(graph.adjacency) == set(oracle.adjacency):
        return None
    return Counterexample(window.start, window.values(), sorted(want - got), sorted(got - want))


def verify_equivalence(config: BenchConfig,
                       on_window: Callable[[str, Window, VisibilityGraph], None] | None = None,
                       ) -> EquivalenceReport:
    """Replay every configuration and compare each window with the oracle.

    Stops a configuration at its first mismatching window.  ``on_window`` is
    called with every checked (algorithm, window, graph) triple, which lets
    callers run extra structural checks on the same replay.
    """
    report = EquivalenceReport()
    steps = config.iterations * config.stride
    for series in config.series:
        values = series.values
        for n in config.windows:
            oracle_cache: dict[tuple[CriterionKind, int], VisibilityGraph] = {}

            def oracle(kind: CriterionKind, window: Window) -> VisibilityGraph:
                key = (kind, window.start)
                if key not in oracle_cache:
                    oracle_cache[key] = basic_build(window, kind)
                return oracle_cache[key]

            for algorithm in config.algorithms:
                result = ConfigResult(algorithm, series.name, n)
                report.results.append(result)
                if algorithm in ONLINE_ALGORITHMS:
                    state = OnlineState.init(Window.from_values(values[:n]),
                                             ONLINE_ALGORITHMS[algorithm])
                    kind = state.criterion
                    for step in range(steps + 1):
                        if step:
                            state.advance(values[n + step - 1])
                        result.windows_checked += 1
                        if on_window is not None:
                            on_window(algorithm, state.window, state.graph)
                        bad = _compare(state.graph, oracle(kind, state.window), state.window)
                        if bad is not None:
                            result.failure = bad
                            break
                else:
                    kind, build = OFFLINE_ALGORITHMS[algorithm]
                    for lo in range(0, steps + 1, config.stride):
                        window = Window.from_values(values[lo:lo + n], start=lo)
                        graph = build(window)
                        result.windows_checked += 1
                        if on_window is not None:
                            on_window(algorithm, window, graph)
                        bad = _compare(graph, oracle(kind, window), window)
                        if bad is not None:
                            result.failure = bad
                            break
    return report
