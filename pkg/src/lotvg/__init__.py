"""Linear-time online natural and horizontal visibility graphs."""
from .core import (
    Counters,
    GraphDelta,
    Sample,
    VisibilityGraph,
    Window,
    add_edge,
    edges_sorted,
    remove_node,
)
from .criteria import CriterionKind, basic_build, horizontal_visible, natural_visible
from .estimators import OnlineVisibilityGraph, VisibilityGraphTransformer
from .exceptions import *  # noqa: F401,F403
from .generators import GeneratorKind, GeneratorSpec, generate
from .offline import BootstrapChoice, bootstrap, dc_build, lt_build_hvg
from .online import OnlineAlgorithm, OnlineState

__version__ = "0.1.0"

__all__ = [
    "Counters",
    "GraphDelta",
    "Sample",
    "VisibilityGraph",
    "Window",
    "add_edge",
    "edges_sorted",
    "remove_node",
    "CriterionKind",
    "basic_build",
    "horizontal_visible",
    "natural_visible",
    "OnlineVisibilityGraph",
    "VisibilityGraphTransformer",
    "GeneratorKind",
    "GeneratorSpec",
    "generate",
    "BootstrapChoice",
    "bootstrap",
    "dc_build",
    "lt_build_hvg",
    "OnlineAlgorithm",
    "OnlineState",
]
