"""From-scratch builders: divide and conquer, and the monotonic-stack HVG pass.

These bootstrap the first window of a stream and double as the offline
baselines in the benchmark harness.
"""
from __future__ import annotations

import enum
from typing import MutableSequence, Sequence

from .core import Counters, VisibilityGraph, Window, as_window
from .criteria import CriterionKind, basic_build, parse_criterion
from .exceptions import EmptyInputError, InvalidChoiceError, WarmupIncompleteError

__all__ = [
    "BootstrapChoice",
    "dc_build",
    "lt_build_hvg",
    "bootstrap",
    "stack_insert",
    "default_choice",
]


class BootstrapChoice(enum.Enum):
    DIVIDE_AND_CONQUER = "dc"
    MONOTONIC_STACK = "lt"
    BASIC_ORACLE = "basic"


def default_choice(kind: CriterionKind) -> BootstrapChoice:
    if kind is CriterionKind.HORIZONTAL:
        return BootstrapChoice.MONOTONIC_STACK
    return BootstrapChoice.DIVIDE_AND_CONQUER


def stack_insert(stack: MutableSequence[tuple[int, float]], t: int, v: float,
                 counters: Counters | None = None) -> list[int]:
    """Push tick ``(t, v)`` onto a strictly decreasing stack.

    Returns the indices horizontally visible from ``t`` among the ticks that
    were on the stack, newest first.  Lower entries are popped, a taller one
    is visible but stays, an equal one is visible and popped because it
    blocks everything behind it.
    """
    found = []
    pops = 0
    while stack and stack[-1][1] < v:
        found.append(stack.pop()[0])
        pops += 1
    if stack:
        top, top_v = stack[-1]
        found.append(top)
        if top_v == v:
            stack.pop()
            pops += 1
    stack.append((t, v))
    if counters is not None:
        counters.pops += pops
        counters.pushes += 1
    return found


def lt_build_hvg(window: "Window | Sequence[float]", counters: Counters | None = None) -> VisibilityGraph:
    """Horizontal visibility graph in one left-to-right monotonic-stack pass."""
    window = as_window(window)
    if not len(window):
        raise EmptyInputError("cannot build a graph from an empty window")
    g = VisibilityGraph(window.indices())
    adj = g.adjacency
    stack: list[tuple[int, float]] = []
    for t, v in zip(window.indices(), window.values()):
        nb = adj[t]
        for i in stack_insert(stack, t, v, counters):
            nb.add(i)
            adj[i].add(t)
    return g


def dc_build(window: "Window | Sequence[float]", kind: "CriterionKind | str",
             counters: Counters | None = None) -> VisibilityGraph:
    """Divide and conquer around the range maximum.

    Each range is split at its leftmost maximum ``h``; ``h`` is linked to the
    nodes of the range it can see via one sweep to each side, and the two
    sub-ranges are pushed onto an explicit work stack.  No edge can cross
    ``h`` because ``h`` is at least as tall as anything in its range.
    """
    kind = parse_criterion(kind)
    window = as_window(window)
    if not len(window):
        raise EmptyInputError("cannot build a graph from an empty window")
    s = window.values()
    off = window.start
    g = VisibilityGraph(window.indices())
    adj = g.adjacency
    natural = kind is CriterionKind.NATURAL
    comparisons = 0

    work = [(0, len(s) - 1)]
    while work:
        lo, hi = work.pop()
        if lo >= hi:
            continue
        h = lo
        sh = s[lo]
        for m in range(lo + 1, hi + 1):
            if s[m] > sh:
                h, sh = m, s[m]
        nb_h = adj[h + off]

        if natural:
            # leftward: k sees h iff slope(k,h) is below every slope seen so far
            p = -1
            for k in range(h - 1, lo - 1, -1):
                comparisons += 1
                sk = s[k]
                if p < 0 or (s[p] - sk) * (h - k) < (sh - sk) * (p - k):
                    nb_h.add(k + off)
                    adj[k + off].add(h + off)
                    p = k
            # rightward: h sees k iff slope(h,k) exceeds every slope seen so far
            p = -1
            for k in range(h + 1, hi + 1):
                comparisons += 1
                sk = s[k]
                if p < 0 or (s[p] - sh) * (k - h) < (sk - sh) * (p - h):
                    nb_h.add(k + off)
                    adj[k + off].add(h + off)
                    p = k
        else:
            top = float("-inf")
            for k in range(h - 1, lo - 1, -1):
                comparisons += 1
                sk = s[k]
                if sk > top:
                    nb_h.add(k + off)
                    adj[k + off].add(h + off)
                    top = sk
            top = float("-inf")
            for k in range(h + 1, hi + 1):
                comparisons += 1
                sk = s[k]
                if sk > top:
                    nb_h.add(k + off)
                    adj[k + off].add(h + off)
                    top = sk
                    if sk >= sh:
                        break

        work.append((h + 1, hi))
        work.append((lo, h - 1))

    if counters is not None:
        counters.comparisons += comparisons
    return g


def bootstrap(window: Window, kind: "CriterionKind | str",
              choice: BootstrapChoice | None = None) -> VisibilityGraph:
    """Build the first full window with an offline algorithm.

    ``choice=None`` picks divide and conquer for natural visibility and the
    monotonic stack for horizontal visibility.
    """
    kind = parse_criterion(kind)
    if not window.full:
        raise WarmupIncompleteError(
            f"window holds {len(window)} of {window.capacity} samples")
    if choice is None:
        choice = default_choice(kind)
    if choice is BootstrapChoice.MONOTONIC_STACK:
        if kind is not CriterionKind.HORIZONTAL:
            raise InvalidChoiceError("the monotonic-stack builder only supports horizontal visibility")
        return lt_build_hvg(window)
    if choice is BootstrapChoice.DIVIDE_AND_CONQUER:
        return dc_build(window, kind)
    if choice is BootstrapChoice.BASIC_ORACLE:
        return basic_build(window, kind)
    raise InvalidChoiceError(f"unknown bootstrap choice {choice!r}")
