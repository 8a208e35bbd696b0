"""Graph and window value types shared by every builder.

Nodes are keyed by absolute stream position (a plain ``int``), never by an
offset inside the current window, so evicting the oldest tick never re-keys
the survivors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .exceptions import (
    DomainError,
    EmptyInputError,
    SelfLoopError,
    UnknownNodeError,
    WarmupIncompleteError,
)

__all__ = [
    "Sample",
    "Window",
    "VisibilityGraph",
    "GraphDelta",
    "Counters",
    "add_edge",
    "remove_node",
    "edges_sorted",
    "as_window",
]


class Sample(NamedTuple):
    index: int
    value: float


@dataclass
class Counters:
    """Work tallies used to check the complexity claims.

    ``comparisons`` counts visibility tests, ``pushes``/``pops`` count
    monotonic-stack operations.  Graph mutations are tallied on the graph
    itself (:attr:`VisibilityGraph.mutations`).
    """

    comparisons: int = 0
    pushes: int = 0
    pops: int = 0

    def reset(self) -> None:
        self.comparisons = self.pushes = self.pops = 0


class Window:
    """The most recent ``capacity`` samples of a stream, stored in a ring.

    The value at absolute index ``i`` lives in slot ``i % capacity``; because
    indices are contiguous that slot is unique among live samples, and the
    tick entering after an eviction reuses the evicted tick's slot.
    """

    __slots__ = ("capacity", "start", "_length", "_buf")

    def __init__(self, capacity: int, start: int = 0):
        if capacity < 1:
            raise ValueError(f"window capacity must be >= 1, got {capacity}")
        if start < 0:
            raise ValueError(f"start index must be >= 0, got {start}")
        self.capacity = int(capacity)
        self.start = int(start)
        self._length = 0
        self._buf = [0.0] * self.capacity

    @classmethod
    def from_values(cls, values: Iterable[float], start: int = 0,
                    capacity: int | None = None) -> "Window":
        values = list(values)
        win = cls(capacity if capacity is not None else max(len(values), 1), start)
        for v in values:
            win.append(v)
        return win

    def __len__(self) -> int:
        return self._length

    @property
    def full(self) -> bool:
        return self._length == self.capacity

    @property
    def stop(self) -> int:
        """One past the newest index."""
        return self.start + self._length

    @property
    def latest(self) -> int:
        if not self._length:
            raise EmptyInputError("window is empty")
        return self.start + self._length - 1

    def indices(self) -> range:
        return range(self.start, self.start + self._length)

    def value(self, index: int) -> float:
        if not self.start <= index < self.start + self._length:
            raise UnknownNodeError(index)
        return self._buf[index % self.capacity]

    __getitem__ = value

    def values(self) -> list[float]:
        cap, buf = self.capacity, self._buf
        return [buf[i % cap] for i in self.indices()]

    @property
    def samples(self) -> list[Sample]:
        return [Sample(i, v) for i, v in zip(self.indices(), self.values())]

    def __iter__(self) -> Iterator[Sample]:
        return iter(self.samples)

    def append(self, value: float) -> int:
        """Add the next tick; returns its absolute index."""
        if self._length == self.capacity:
            raise WarmupIncompleteError("window is full; evict before appending")
        value = float(value)
        if not math.isfinite(value):
            raise DomainError(f"non-finite sample value {value!r}")
        index = self.start + self._length
        self._buf[index % self.capacity] = value
        self._length += 1
        return index

    def popleft(self) -> Sample:
        if not self._length:
            raise EmptyInputError("window is empty")
        out = Sample(self.start, self._buf[self.start % self.capacity])
        self.start += 1
        self._length -= 1
        return out

    def copy(self) -> "Window":
        return Window.from_values(self.values(), self.start, self.capacity)

    def __repr__(self) -> str:
        return (f"Window(capacity={self.capacity}, start={self.start}, "
                f"values={self.values()!r})")


def as_window(series: "Window | Sequence[float]") -> Window:
    """Coerce a plain sequence to a window whose first index is 0."""
    if isinstance(series, Window):
        return series
    return Window.from_values(series)


class VisibilityGraph:
    """Undirected simple graph stored as ``{node: set(neighbours)}``.

    ``mutations`` counts touched adjacency entries (one per neighbour-set
    discard, one per key insertion or deletion, one per added edge).
    """

    __slots__ = ("adjacency", "mutations")

    def __init__(self, nodes: Iterable[int] = ()):
        self.adjacency: dict[int, set[int]] = {int(n): set() for n in nodes}
        self.mutations = 0

    @classmethod
    def from_edges(cls, nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> "VisibilityGraph":
        g = cls(nodes)
        for i, j in edges:
            g.add_edge(i, j)
        return g

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency.values()) // 2

    def nodes(self) -> list[int]:
        return sorted(self.adjacency)

    def neighbors(self, i: int) -> set[int]:
        try:
            return self.adjacency[i]
        except KeyError:
            raise UnknownNodeError(i) from None

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def __contains__(self, i: object) -> bool:
        return i in self.adjacency

    def has_edge(self, i: int, j: int) -> bool:
        nb = self.adjacency.get(i)
        return nb is not None and j in nb

    def add_node(self, i: int) -> None:
        if i not in self.adjacency:
            self.adjacency[i] = set()
            self.mutations += 1

    def add_edge(self, i: int, j: int) -> None:
        if i == j:
            raise SelfLoopError(f"self-loop on node {i}")
        adj = self.adjacency
        if i not in adj:
            raise UnknownNodeError(i)
        if j not in adj:
            raise UnknownNodeError(j)
        adj[i].add(j)
        adj[j].add(i)
        self.mutations += 1

    def remove_node(self, i: int) -> None:
        """Drop ``i`` and its incident edges in O(degree(i))."""
        try:
            neighbours = self.adjacency.pop(i)
        except KeyError:
            raise UnknownNodeError(i) from None
        adj = self.adjacency
        for j in neighbours:
            adj[j].discard(i)
        self.mutations += len(neighbours) + 1

    def edges(self) -> list[tuple[int, int]]:
        """Each undirected edge once as ``(i, j)`` with ``i < j``, sorted."""
        return sorted((i, j) for i, nb in self.adjacency.items() for j in nb if i < j)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i, nb in self.adjacency.items() for j in nb if i < j}

    def copy(self) -> "VisibilityGraph":
        g = VisibilityGraph()
        g.adjacency = {i: set(nb) for i, nb in self.adjacency.items()}
        return g

    def check_invariants(self) -> None:
        """Raise AssertionError if symmetry, loop-freedom or closure is broken."""
        adj = self.adjacency
        for i, nb in adj.items():
            assert i not in nb, f"self-loop at {i}"
            for j in nb:
                assert j in adj, f"neighbour {j} of {i} is not a node"
                assert i in adj[j], f"asymmetric edge {i}->{j}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VisibilityGraph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __repr__(self) -> str:
        return f"VisibilityGraph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class GraphDelta:
    """Change produced by one streaming step."""

    removed_node: int | None
    added_node: int
    added_edges: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        for e in self.added_edges:
            if self.added_node not in e:
                raise ValueError(f"edge {e} does not touch added node {self.added_node}")


def add_edge(g: VisibilityGraph, i: int, j: int) -> VisibilityGraph:
    g.add_edge(i, j)
    return g


def remove_node(g: VisibilityGraph, i: int) -> VisibilityGraph:
    g.remove_node(i)
    return g


def edges_sorted(g: VisibilityGraph) -> list[tuple[int, int]]:
    return g.edges()
