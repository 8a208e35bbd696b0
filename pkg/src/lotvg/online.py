"""Streaming maintenance of a sliding-window visibility graph.

Each :meth:`OnlineState.advance` evicts the oldest tick from the graph in
O(degree) and then links the newest tick to the rest of the window with a
single right-to-left traversal, so one step costs O(N) in the worst case.
"""
from __future__ import annotations

import enum
import math
from collections import deque

from .core import Counters, GraphDelta, Sample, VisibilityGraph, Window
from .criteria import CriterionKind
from .exceptions import DomainError, StreamGapError, WarmupIncompleteError
from .offline import BootstrapChoice, bootstrap, stack_insert

__all__ = ["OnlineAlgorithm", "OnlineState", "parse_algorithm"]

_NEG_INF = float("-inf")


class OnlineAlgorithm(enum.Enum):
    LOT_NVG = "lot-nvg"
    LOT_HVG = "lot-hvg"
    LOT_HVG_MSOPT = "lot-hvg-msopt"

    @property
    def criterion(self) -> CriterionKind:
        if self is OnlineAlgorithm.LOT_NVG:
            return CriterionKind.NATURAL
        return CriterionKind.HORIZONTAL


def parse_algorithm(name: "OnlineAlgorithm | str") -> OnlineAlgorithm:
    if isinstance(name, OnlineAlgorithm):
        return name
    key = str(name).lower().replace("_", "-")
    for algo in OnlineAlgorithm:
        if algo.value == key:
            return algo
    raise ValueError(f"unknown online algorithm {name!r}")


class OnlineState:
    """Window, graph and (for the stack variant) monotonic stack of one stream.

    Use :meth:`init` with a full first window, then :meth:`advance` once per
    arriving value.  The graph always equals the from-scratch visibility
    graph of the current window.
    """

    def __init__(self, window: Window, graph: VisibilityGraph,
                 algorithm: "OnlineAlgorithm | str",
                 stack: "deque[tuple[int, float]] | None" = None):
        self.window = window
        self.graph = graph
        self.algorithm = parse_algorithm(algorithm)
        self.counters = Counters()
        if self.algorithm is OnlineAlgorithm.LOT_HVG_MSOPT:
            self._stack = stack if stack is not None else deque()
        else:
            self._stack = None
        self._update = {
            OnlineAlgorithm.LOT_NVG: self.update_nvg,
            OnlineAlgorithm.LOT_HVG: self.update_hvg,
            OnlineAlgorithm.LOT_HVG_MSOPT: self.update_hvg_msopt,
        }[self.algorithm]

    @classmethod
    def init(cls, first_window: Window, algorithm: "OnlineAlgorithm | str",
             choice: BootstrapChoice | None = None) -> "OnlineState":
        algorithm = parse_algorithm(algorithm)
        if not first_window.full:
            raise WarmupIncompleteError(
                f"first window holds {len(first_window)} of {first_window.capacity} samples")
        window = first_window.copy()
        graph = bootstrap(window, algorithm.criterion, choice)
        stack = None
        if algorithm is OnlineAlgorithm.LOT_HVG_MSOPT:
            stack = deque()
            for t, v in zip(window.indices(), window.values()):
                stack_insert(stack, t, v)
        return cls(window, graph, algorithm, stack)

    @property
    def criterion(self) -> CriterionKind:
        return self.algorithm.criterion

    @property
    def capacity(self) -> int:
        return self.window.capacity

    @property
    def stack(self) -> list[int] | None:
        """Indices on the monotonic stack, bottom first (stack variant only)."""
        if self._stack is None:
            return None
        return [t for t, _ in self._stack]

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def eliminate_oldest(self) -> int:
        """Evict the oldest tick from window, graph and stack; return its index."""
        if not self.window.full:
            raise WarmupIncompleteError("eliminate_oldest requires a full window")
        evicted = self.window.popleft().index
        self.graph.remove_node(evicted)
        stack = self._stack
        if stack and stack[0][0] == evicted:
            stack.popleft()
            self.counters.pops += 1
        return evicted

    def _admit(self, sample: Sample) -> tuple[int, float]:
        t, v = int(sample.index), float(sample.value)
        if not math.isfinite(v):
            raise DomainError(f"non-finite sample value {v!r}")
        expected = self.window.stop
        if t != expected:
            raise StreamGapError(f"expected index {expected}, got {t}")
        self.window.append(v)
        self.graph.add_node(t)
        return t, v

    def update_nvg(self, new: Sample) -> list[tuple[int, int]]:
        """Link ``new`` to every earlier window tick it naturally sees.

        Walking left from the newest tick, the last accepted tick ``p`` holds
        the minimum slope towards ``new``; tick ``i`` is visible iff ``p``
        lies strictly below the chord ``i -> new``.
        """
        t, v = self._admit(new)
        win = self.window
        buf, cap = win._buf, win.capacity
        adj = self.graph.adjacency
        nb_t = adj[t]
        added = []
        p = -1
        sp = 0.0
        for i in range(t - 1, win.start - 1, -1):
            si = buf[i % cap]
            if p < 0 or (sp - si) * (t - i) < (v - si) * (p - i):
                nb_t.add(i)
                adj[i].add(t)
                added.append((i, t))
                p, sp = i, si
        self.counters.comparisons += t - win.start
        self.graph.mutations += len(added)
        return added

    def update_hvg(self, new: Sample) -> list[tuple[int, int]]:
        """Link ``new`` by walking left with a running maximum.

        Stops at the first tick at least as tall as ``new``: nothing behind
        it can be seen past it.
        """
        t, v = self._admit(new)
        win = self.window
        buf, cap = win._buf, win.capacity
        adj = self.graph.adjacency
        nb_t = adj[t]
        added = []
        top = _NEG_INF
        comparisons = 0
        for i in range(t - 1, win.start - 1, -1):
            si = buf[i % cap]
            comparisons += 1
            if (si if si < v else v) > top:
                nb_t.add(i)
                adj[i].add(t)
                added.append((i, t))
            if si > top:
                top = si
            if si >= v:
                break
        self.counters.comparisons += comparisons
        self.graph.mutations += len(added)
        return added

    def update_hvg_msopt(self, new: Sample) -> list[tuple[int, int]]:
        """Link ``new`` using the monotonic stack instead of a full walk."""
        t, v = self._admit(new)
        adj = self.graph.adjacency
        nb_t = adj[t]
        added = []
        for i in stack_insert(self._stack, t, v, self.counters):
            nb_t.add(i)
            adj[i].add(t)
            added.append((i, t))
        self.graph.mutations += len(added)
        return added

    def update(self, new: Sample) -> list[tuple[int, int]]:
        return self._update(new)

    def advance(self, new_value: float) -> GraphDelta:
        """Slide the window by one tick and return what changed."""
        if not self.window.full:
            raise WarmupIncompleteError("advance requires a warmed-up state")
        new_value = float(new_value)
        if not math.isfinite(new_value):
            raise DomainError(f"non-finite sample value {new_value!r}")
        removed = self.eliminate_oldest()
        t = self.window.stop
        added = self._update(Sample(t, new_value))
        return GraphDelta(removed, t, tuple(added))

    def __repr__(self) -> str:
        return (f"OnlineState(algorithm={self.algorithm.value!r}, "
                f"window=[{self.window.start}, {self.window.stop}), graph={self.graph!r})")
