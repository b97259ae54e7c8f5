"""Rainbow matchings of size min-degree in properly edge-colored graphs."""

from rainbowmatch.graph import (
    ColoredGraph,
    Edge,
    Matching,
    build_graph,
    verify_matching,
)
from rainbowmatch.greedy import (
    PipelineReport,
    check_trace,
    find_rainbow_matching,
    greedy_matching,
    threshold,
)
from rainbowmatch.oracle import has_transversal, max_rainbow_matching
from rainbowmatch.reduction import extend, reduce, trim

__all__ = [
    "ColoredGraph",
    "Edge",
    "Matching",
    "PipelineReport",
    "build_graph",
    "check_trace",
    "extend",
    "find_rainbow_matching",
    "greedy_matching",
    "has_transversal",
    "max_rainbow_matching",
    "reduce",
    "threshold",
    "trim",
    "verify_matching",
]
