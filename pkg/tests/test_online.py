import pytest

from _bruteforce import brute_edges
from conftest import KINDS, series
from lotvg.core import Sample, Window
from lotvg.criteria import basic_build
from lotvg.exceptions import DomainError, StreamGapError, WarmupIncompleteError
from lotvg.online import OnlineAlgorithm, OnlineState


def _state(values, algorithm, capacity):
    """State holding ``values`` in a window of ``capacity`` (not necessarily full)."""
    algorithm = OnlineAlgorithm(algorithm)
    w = Window.from_values(values, capacity=capacity)
    g = basic_build(w, algorithm.criterion)
    st = OnlineState(w, g, algorithm)
    if algorithm is OnlineAlgorithm.LOT_HVG_MSOPT:
        # rebuild the stack via a throwaway full-window init
        st._stack = OnlineState.init(Window.from_values(values), algorithm)._stack
    return st


def test_init_examples():
    st = OnlineState.init(Window.from_values([1, 2, 4]), "lot-nvg")
    assert st.edges() == [(0, 1), (0, 2), (1, 2)]
    st = OnlineState.init(Window.from_values([3, 1, 2]), "lot-hvg-msopt")
    assert st.edges() == [(0, 1), (0, 2), (1, 2)]
    assert st.stack == [0, 2]
    st = OnlineState.init(Window.from_values([8.5]), "lot-hvg-msopt")
    assert st.edges() == [] and st.stack == [0]


def test_init_requires_full_window():
    w = Window(4)
    w.append(1.0)
    with pytest.raises(WarmupIncompleteError):
        OnlineState.init(w, "lot-nvg")


def test_eliminate_examples():
    st = OnlineState.init(Window.from_values([3, 1, 2, 4]), "lot-nvg")
    assert st.graph.edge_count == 6
    assert st.eliminate_oldest() == 0
    assert st.edges() == [(1, 2), (1, 3), (2, 3)]
    assert st.graph.edge_set() == brute_edges([1, 2, 4], "nvg", start=1)

    st = OnlineState.init(Window.from_values([3, 1, 2]), "lot-hvg-msopt")
    st.eliminate_oldest()
    assert st.stack == [2]

    st = OnlineState.init(Window.from_values([1, 3, 2]), "lot-hvg-msopt")
    assert st.stack == [1, 2]
    st.eliminate_oldest()
    assert st.stack == [1, 2]

    with pytest.raises(WarmupIncompleteError):
        st.eliminate_oldest()


def test_update_nvg_examples():
    st = _state([1, 2, 4], "lot-nvg", capacity=4)
    assert st.update_nvg(Sample(3, 3.0)) == [(2, 3)]
    assert st.graph.edge_set() == brute_edges([1, 2, 4, 3], "nvg")

    st = _state([5], "lot-nvg", capacity=2)
    assert st.update_nvg(Sample(1, 1.0)) == [(0, 1)]

    # collinear: strict inequality blocks both far ticks
    st = _state([4, 3, 2], "lot-nvg", capacity=4)
    assert st.update_nvg(Sample(3, 1.0)) == [(2, 3)]
    assert brute_edges([4, 3, 2, 1], "nvg") == {(0, 1), (1, 2), (2, 3)}


def test_update_hvg_examples():
    st = _state([3, 1, 2], "lot-hvg", capacity=4)
    assert sorted(st.update_hvg(Sample(3, 4.0))) == [(0, 3), (2, 3)]
    assert st.graph.edge_set() == brute_edges([3, 1, 2, 4], "hvg")

    st = _state([9, 1], "lot-hvg", capacity=3)
    assert sorted(st.update_hvg(Sample(2, 2.0))) == [(0, 2), (1, 2)]

    st = _state([5, 5], "lot-hvg", capacity=3)
    assert st.update_hvg(Sample(2, 5.0)) == [(1, 2)]
    assert st.counters.comparisons == 1  # stopped at the equal neighbour


def test_update_msopt_examples():
    st = _state([3, 1, 2], "lot-hvg-msopt", capacity=4)
    assert st.stack == [0, 2]
    assert sorted(st.update_hvg_msopt(Sample(3, 4.0))) == [(0, 3), (2, 3)]
    assert st.stack == [3]

    st = _state([5], "lot-hvg-msopt", capacity=2)
    assert st.update_hvg_msopt(Sample(1, 5.0)) == [(0, 1)]
    assert st.stack == [1]

    st = OnlineState.init(Window.from_values([2.0]), "lot-hvg-msopt")
    st.eliminate_oldest()
    assert st.stack == []
    assert st.update_hvg_msopt(Sample(1, 7.0)) == []
    assert st.stack == [1]


def test_advance_examples():
    st = OnlineState.init(Window.from_values([3, 1, 2]), "lot-hvg")
    delta = st.advance(4)
    assert delta.removed_node == 0 and delta.added_node == 3
    assert delta.added_edges == ((2, 3),)
    assert st.edges() == [(1, 2), (2, 3)]

    st = OnlineState.init(Window.from_values([1, 2, 4]), "lot-nvg")
    st.advance(3)
    # chord (1,2)->(3,3) is 2.5 at k=2, below the sample 4, so (1,3) is not an edge
    assert st.edges() == [(1, 2), (2, 3)]
    assert st.graph.edge_set() == brute_edges([2, 4, 3], "nvg", start=1)


def test_advance_errors():
    st = OnlineState.init(Window.from_values([1.0, 2.0]), "lot-nvg")
    with pytest.raises(DomainError):
        st.advance(float("inf"))
    assert st.window.full and st.window.start == 0  # rejected before any mutation
    st.eliminate_oldest()
    with pytest.raises(WarmupIncompleteError):
        st.advance(1.0)
    with pytest.raises(StreamGapError):
        st.update_nvg(Sample(5, 1.0))


@pytest.mark.parametrize("algorithm", list(OnlineAlgorithm))
@pytest.mark.parametrize("gen", KINDS)
@pytest.mark.parametrize("n", [1, 2, 7, 30])
def test_master_invariant(algorithm, gen, n):
    s = series(gen, n + 120, seed=5)
    st = OnlineState.init(Window.from_values(s[:n]), algorithm)
    for v in s[n:]:
        st.advance(v)
        assert set(st.graph.adjacency) == set(st.window.indices())
        assert st.edges() == basic_build(st.window, st.criterion).edges()


def test_master_invariant_on_ties_against_exact_oracle(rng):
    s = [float(rng.randint(0, 3)) for _ in range(400)]
    for algorithm in OnlineAlgorithm:
        n = 9
        st = OnlineState.init(Window.from_values(s[:n]), algorithm)
        kind = st.criterion.value
        for t, v in enumerate(s[n:], start=n):
            st.advance(v)
            assert st.graph.edge_set() == brute_edges(s[t - n + 1:t + 1], kind, start=t - n + 1)


@pytest.mark.parametrize("gen", KINDS)
def test_msopt_matches_plain_hvg(gen):
    s = series(gen, 1500, seed=11)
    n = 40
    a = OnlineState.init(Window.from_values(s[:n]), "lot-hvg")
    b = OnlineState.init(Window.from_values(s[:n]), "lot-hvg-msopt")
    for v in s[n:]:
        da, db = a.advance(v), b.advance(v)
        assert da.removed_node == db.removed_node
        assert sorted(da.added_edges) == sorted(db.added_edges)
        stack = b.stack
        values = [b.window[i] for i in stack]
        assert stack == sorted(stack) and len(stack) <= n
        assert all(x > y for x, y in zip(values, values[1:]))


@pytest.mark.parametrize("n", [1, 2, 10, 100])
def test_nvg_counters_linear(n):
    s = series("walk", n + 200, seed=2)
    st = OnlineState.init(Window.from_values(s[:n]), "lot-nvg")
    for v in s[n:]:
        c0, m0 = st.counters.comparisons, st.graph.mutations
        st.advance(v)
        assert st.counters.comparisons - c0 == n - 1
        assert st.graph.mutations - m0 <= 2 * n


def test_msopt_stack_work_amortized():
    n = 50
    s = series("exponential", n + 3000, seed=3)
    st = OnlineState.init(Window.from_values(s[:n]), "lot-hvg-msopt")
    st.counters.reset()
    for m, v in enumerate(s[n:], start=1):
        st.advance(v)
        assert st.counters.pushes + st.counters.pops <= 2 * m + n


def test_hvg_walk_is_bounded_by_window():
    n = 25
    s = series("uniform", n + 300, seed=4)
    st = OnlineState.init(Window.from_values(s[:n]), "lot-hvg")
    for v in s[n:]:
        c0 = st.counters.comparisons
        st.advance(v)
        assert st.counters.comparisons - c0 <= n - 1
