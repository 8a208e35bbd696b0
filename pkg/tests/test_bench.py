import pytest

import lotvg.bench as bench
from lotvg.bench import BenchConfig, NamedSeries, parse_algorithms, run_benchmark, verify_equivalence
from lotvg.core import VisibilityGraph
from lotvg.exceptions import ConfigError
from lotvg.generators import GeneratorSpec
from lotvg.online import OnlineState


def _cfg(**kw):
    base = dict(algorithms="lot", series=[GeneratorSpec("uniform", 400, 1)], windows=[10],
                iterations=20, repeats=2)
    base.update(kw)
    return BenchConfig(**base)


def test_parse_algorithms():
    assert parse_algorithms("basic,lt") == ["Basic-NVG", "Basic-HVG", "LT"]
    assert parse_algorithms(["LOT-HVG_MSopt", "lot-nvg"]) == ["LOT-HVG-MSopt", "LOT-NVG"]
    with pytest.raises(ConfigError):
        parse_algorithms("sc")


def test_single_basic_record():
    recs = run_benchmark(_cfg(algorithms="Basic-NVG", windows=[10], iterations=1, repeats=1))
    assert len(recs) == 1
    assert recs[0].seconds > 0 and recs[0].window == 10 and recs[0].measure == "mean"


def test_record_keys_deterministic():
    cfg = _cfg(algorithms="all", windows=[5, 10], repeats=3, iterations=5,
               series=[GeneratorSpec("walk", 100, 2), NamedSeries("tiny", tuple(range(40)))])
    keys = [(r.algorithm, r.series, r.window, r.repeat) for r in run_benchmark(cfg)]
    again = [(r.algorithm, r.series, r.window, r.repeat) for r in run_benchmark(cfg)]
    assert keys == again
    assert len(keys) == 8 * 2 * 2 * 3


def test_total_measure_and_bootstrap_flag():
    mean = run_benchmark(_cfg(algorithms="LOT-NVG", repeats=1, measure="mean"))[0]
    total = run_benchmark(_cfg(algorithms="LOT-NVG", repeats=1, measure="total",
                               include_bootstrap=True))[0]
    assert total.measure == "total" and mean.measure == "mean"
    assert total.seconds > 0


def test_parallel_matches_sequential_keys():
    cfg = _cfg(algorithms="lot", windows=[5, 10], repeats=1, parallel=True)
    recs = run_benchmark(cfg)
    assert [(r.algorithm, r.window) for r in recs] == [
        (a, n) for a in ("LOT-NVG", "LOT-HVG", "LOT-HVG-MSopt") for n in (5, 10)]


@pytest.mark.parametrize("kw", [
    dict(windows=[395]),
    dict(repeats=0),
    dict(iterations=0),
    dict(stride=0),
    dict(measure="median"),
    dict(windows=[0]),
])
def test_config_errors(kw):
    with pytest.raises(ConfigError):
        _cfg(**kw)


def test_timed_region_excludes_serialization(monkeypatch):
    calls = []
    orig = VisibilityGraph.edges

    def spy(self):
        calls.append(bench.timing_active)
        return orig(self)

    monkeypatch.setattr(VisibilityGraph, "edges", spy)
    monkeypatch.setattr(VisibilityGraph, "edge_set", lambda self: (_ for _ in ()).throw(
        AssertionError("oracle comparison inside benchmark")))
    run_benchmark(_cfg(algorithms="all", iterations=5, repeats=1))
    assert not any(calls)
    assert bench.timing_active is False


def test_verify_passes_and_counts():
    cfg = _cfg(algorithms="all", windows=[1, 8], iterations=30, stride=2,
               series=[GeneratorSpec("conway", 200), GeneratorSpec("normal", 200, 4)])
    report = verify_equivalence(cfg)
    assert report.passed
    # online variants are checked after every tick, offline ones once per slide
    for r in report.results:
        assert r.windows_checked == (61 if r.algorithm.startswith("LOT") else 31)


def test_verify_n1_trivial():
    report = verify_equivalence(_cfg(windows=[1], iterations=50))
    assert report.passed
    assert "PASS" in report.summary()


def test_verify_catches_corrupted_updater(monkeypatch):
    def broken_update_hvg(self, new):
        # same walk as the real updater but the running maximum is never folded
        t, v = self._admit(new)
        win = self.window
        added = []
        for i in range(t - 1, win.start - 1, -1):
            si = win._buf[i % win.capacity]
            if min(si, v) > float("-inf"):
                self.graph.adjacency[t].add(i)
                self.graph.adjacency[i].add(t)
                added.append((i, t))
            if si >= v:
                break
        return added

    monkeypatch.setattr(OnlineState, "update_hvg", broken_update_hvg)
    report = verify_equivalence(_cfg(algorithms="LOT-HVG", windows=[10], iterations=50))
    assert not report.passed
    bad = report.failures[0].failure
    assert bad.extra and not bad.missing
    assert len(bad.values) == 10
    assert "extra edges" in report.summary()
