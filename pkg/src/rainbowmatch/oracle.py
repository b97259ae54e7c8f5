"""Exact maximum rainbow matching for small graphs, and Latin transversals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from rainbowmatch import kernels
from rainbowmatch.generators import LatinSquare, latin_to_bipartite
from rainbowmatch.graph import ColoredGraph, Edge, Matching, verify_matching

DEFAULT_EDGE_CAP = 40


class CapExceeded(ValueError):
    def __init__(self, m: int, cap: int):
        super().__init__(f"graph has {m} edges, oracle cap is {cap}")
        self.m = m
        self.cap = cap


@dataclass(frozen=True)
class OracleResult:
    max_size: int
    witness: Matching
    nodes_explored: int


def _search(g: ColoredGraph, need: int, edge_cap: int) -> OracleResult:
    if g.m > edge_cap:
        raise CapExceeded(g.m, edge_cap)
    eu, ev, ec, ids, colors = g.edge_arrays()
    best, picked, nodes = kernels.max_rainbow(eu, ev, ec, len(ids), len(colors), need)
    witness = Matching(
        tuple(Edge.of(ids[eu[e]], ids[ev[e]], colors[ec[e]]) for e in picked)
    )
    return OracleResult(int(best), witness, int(nodes))


def max_rainbow_matching(g: ColoredGraph, edge_cap: int = DEFAULT_EDGE_CAP) -> OracleResult:
    """Maximum rainbow matching by branch and bound over edges in (u, v) order."""
    return _search(g, 0, edge_cap)


def has_rainbow_matching_of_size(g: ColoredGraph, k: int,
                                 edge_cap: int = DEFAULT_EDGE_CAP) -> bool:
    if k <= 0:
        return True
    return _search(g, k, edge_cap).max_size >= k


def has_transversal(square: LatinSquare, edge_cap: int = DEFAULT_EDGE_CAP) -> bool:
    return has_rainbow_matching_of_size(latin_to_bipartite(square), square.n, edge_cap)


def naive_max_rainbow_matching(g: ColoredGraph, edge_cap: int = 12) -> int:
    """Largest rainbow matching by trying every edge subset, largest first."""
    if g.m > edge_cap:
        raise CapExceeded(g.m, edge_cap)
    edges = g.edges()
    for size in range(len(edges), 0, -1):
        for subset in combinations(edges, size):
            if verify_matching(g, subset):
                return size
    return 0
