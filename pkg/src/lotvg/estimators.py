"""scikit-learn compatible wrappers.

:class:`VisibilityGraphTransformer` maps fixed-length windows to graphs (or
degree vectors, so it can sit inside a ``Pipeline``).
:class:`OnlineVisibilityGraph` keeps one sliding-window graph up to date as
values arrive through ``partial_fit`` or ``update``.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import GraphDelta, VisibilityGraph, Window
from .criteria import CriterionKind, basic_build, parse_criterion
from .offline import BootstrapChoice, dc_build, lt_build_hvg
from .online import OnlineState, parse_algorithm
from .validation import check_series, check_window_size, check_windows

__all__ = ["VisibilityGraphTransformer", "OnlineVisibilityGraph"]

_METHODS = ("basic", "dc", "lt")
_OUTPUTS = ("degree", "graph", "edges")


class VisibilityGraphTransformer(TransformerMixin, BaseEstimator):
    """Offline visibility graph of each row of ``X``.

    Parameters
    ----------
    criterion : {"nvg", "hvg"}
        Natural or horizontal visibility.
    method : {"dc", "basic", "lt"}
        Builder; ``"lt"`` requires ``criterion="hvg"``.
    output : {"degree", "graph", "edges"}
        ``"degree"`` returns an int array of shape (n_windows, window_size);
        the other two return one :class:`VisibilityGraph` or sorted edge list
        per row.
    """

    def __init__(self, criterion="nvg", method="dc", output="degree"):
        self.criterion = criterion
        self.method = method
        self.output = output

    def _validate_params(self):
        kind = parse_criterion(self.criterion)
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got {self.method!r}")
        if self.method == "lt" and kind is not CriterionKind.HORIZONTAL:
            raise ValueError("method='lt' only supports criterion='hvg'")
        if self.output not in _OUTPUTS:
            raise ValueError(f"output must be one of {_OUTPUTS}, got {self.output!r}")
        return kind

    def fit(self, X, y=None):
        self._validate_params()
        X = check_windows(X)
        self.n_features_in_ = X.shape[1]
        return self

    def _build(self, row: np.ndarray, kind: CriterionKind) -> VisibilityGraph:
        window = Window.from_values(row.tolist())
        if self.method == "dc":
            return dc_build(window, kind)
        if self.method == "lt":
            return lt_build_hvg(window)
        return basic_build(window, kind)

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        kind = self._validate_params()
        X = check_windows(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} columns, fitted with {self.n_features_in_}")
        graphs = [self._build(row, kind) for row in X]
        if self.output == "graph":
            return graphs
        if self.output == "edges":
            return [g.edges() for g in graphs]
        out = np.zeros(X.shape, dtype=np.int64)
        for r, g in enumerate(graphs):
            for node, nb in g.adjacency.items():
                out[r, node] = len(nb)
        return out


class OnlineVisibilityGraph(BaseEstimator):
    """Sliding-window visibility graph maintained one tick at a time.

    The first ``window_size`` values warm the window up; after that every
    value evicts the oldest tick and links the new one.
    """

    def __init__(self, window_size=100, algorithm="lot-nvg", bootstrap=None):
        self.window_size = window_size
        self.algorithm = algorithm
        self.bootstrap = bootstrap

    def _reset(self):
        n = check_window_size(self.window_size)
        self.algorithm_ = parse_algorithm(self.algorithm)
        self._choice = None if self.bootstrap is None else BootstrapChoice(self.bootstrap)
        self._warmup = Window(n)
        self.state_ = None
        self.n_seen_ = 0

    def fit(self, X, y=None):
        """Start a new stream from ``X`` (a 1-D sequence of values)."""
        self._reset()
        return self.partial_fit(X)

    def partial_fit(self, X, y=None):
        """Feed more values into the current stream."""
        if not hasattr(self, "state_"):
            self._reset()
        for v in check_series(X):
            self.update(float(v))
        return self

    def update(self, value: float) -> GraphDelta | None:
        """Feed one value; returns the change once warmed up, else ``None``."""
        if not hasattr(self, "state_"):
            self._reset()
        self.n_seen_ += 1
        if self.state_ is None:
            index = self._warmup.append(value)
            if self._warmup.full:
                self.state_ = OnlineState.init(self._warmup, self.algorithm_, self._choice)
                return GraphDelta(None, index, tuple(
                    e for e in self.state_.edges() if index in e))
            return None
        return self.state_.advance(value)

    def transform(self, X):
        """Stream ``X`` and return, per value, the number of edges it gained.

        Values consumed during warm-up report -1.
        """
        check_is_fitted(self, "state_")
        out = []
        for v in check_series(X):
            delta = self.update(float(v))
            out.append(-1 if delta is None else len(delta.added_edges))
        return np.asarray(out, dtype=np.int64)

    @property
    def is_warm(self) -> bool:
        return getattr(self, "state_", None) is not None

    @property
    def graph_(self) -> VisibilityGraph:
        check_is_fitted(self, "state_")
        if self.state_ is None:
            raise AttributeError("window is still warming up")
        return self.state_.graph

    @property
    def window_(self) -> Window:
        check_is_fitted(self, "state_")
        return self._warmup if self.state_ is None else self.state_.window

    def edges(self) -> list[tuple[int, int]]:
        return self.graph_.edges()

    def degrees(self) -> np.ndarray:
        """Degree of each window tick, oldest first."""
        g = self.graph_
        return np.array([len(g.adjacency[i]) for i in self.state_.window.indices()],
                        dtype=np.int64)
