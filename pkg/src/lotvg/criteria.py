"""Visibility predicates and the quadratic reference builder.

Both predicates use strict inequalities and no tolerance: a sample exactly on
the chord (natural) or exactly level with an endpoint (horizontal) blocks the
line of sight.  The natural test is evaluated in cross-multiplied form,

    (s_k - s_i) * (j - i) < (s_j - s_i) * (k - i),

which avoids a division in the inner loop.
"""
from __future__ import annotations

import enum
from typing import Sequence

from .core import VisibilityGraph, Window, as_window
from .exceptions import EmptyInputError, IndexRangeError, OrderingError

__all__ = [
    "CriterionKind",
    "natural_visible",
    "horizontal_visible",
    "basic_build",
    "parse_criterion",
]


class CriterionKind(enum.Enum):
    NATURAL = "nvg"
    HORIZONTAL = "hvg"


_ALIASES = {
    "nvg": CriterionKind.NATURAL,
    "natural": CriterionKind.NATURAL,
    "hvg": CriterionKind.HORIZONTAL,
    "horizontal": CriterionKind.HORIZONTAL,
}


def parse_criterion(kind: "CriterionKind | str") -> CriterionKind:
    if isinstance(kind, CriterionKind):
        return kind
    try:
        return _ALIASES[str(kind).lower()]
    except KeyError:
        raise ValueError(f"unknown visibility criterion {kind!r}") from None


def _check_pair(series, i: int, j: int) -> None:
    if i >= j:
        raise OrderingError(f"expected i < j, got i={i}, j={j}")
    if isinstance(series, Window):
        lo, hi = series.start, series.stop
    else:
        lo, hi = 0, len(series)
    if i < lo or j >= hi:
        raise IndexRangeError(f"pair ({i}, {j}) outside series range [{lo}, {hi})")


def natural_visible(series: "Window | Sequence[float]", i: int, j: int) -> bool:
    """True iff every sample strictly between ``i`` and ``j`` lies below their chord."""
    _check_pair(series, i, j)
    si, sj = series[i], series[j]
    span, rise = j - i, sj - si
    for k in range(i + 1, j):
        if not (series[k] - si) * span < rise * (k - i):
            return False
    return True


def horizontal_visible(series: "Window | Sequence[float]", i: int, j: int) -> bool:
    """True iff every sample strictly between ``i`` and ``j`` is below both endpoints."""
    _check_pair(series, i, j)
    level = min(series[i], series[j])
    for k in range(i + 1, j):
        if not series[k] < level:
            return False
    return True


def basic_build(window: "Window | Sequence[float]", kind: "CriterionKind | str") -> VisibilityGraph:
    """Build the graph by testing every pair independently.

    This is the ground truth every faster builder is compared against; it
    shares no state between pairs, so its cost is O(N^2) pairs times the
    length of each blocked-or-clear scan.
    """
    kind = parse_criterion(kind)
    window = as_window(window)
    if not len(window):
        raise EmptyInputError("cannot build a graph from an empty window")
    s = window.values()
    n, off = len(s), window.start
    g = VisibilityGraph(window.indices())
    adj = g.adjacency
    natural = kind is CriterionKind.NATURAL
    for i in range(n):
        si = s[i]
        for j in range(i + 1, n):
            sj = s[j]
            if natural:
                span, rise = j - i, sj - si
                for k in range(i + 1, j):
                    if not (s[k] - si) * span < rise * (k - i):
                        break
                else:
                    adj[i + off].add(j + off)
                    adj[j + off].add(i + off)
            else:
                level = si if si < sj else sj
                for k in range(i + 1, j):
                    if not s[k] < level:
                        break
                else:
                    adj[i + off].add(j + off)
                    adj[j + off].add(i + off)
    return g
