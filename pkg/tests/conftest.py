import pytest

from rainbowmatch.graph import ColoredGraph, Edge, Matching, build_graph

K4_EDGES = [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)]


@pytest.fixture
def k4() -> ColoredGraph:
    """K_4 with its unique proper 3-edge-coloring (perfect matchings as classes)."""
    return build_graph(K4_EDGES)


def reference_greedy(g: ColoredGraph) -> tuple[Matching, list[dict]]:
    """Greedy matcher written directly against ColoredGraph.delete_step.

    Independent of the array kernel; used to cross-check it.
    """
    g = g.copy()
    matching = Matching()
    records = []
    while g.m:
        color, size = g.smallest_color_class()
        best = min(
            g.color_class(color),
            key=lambda e: (g.degree(e.u) + g.degree(e.v), e.u, e.v),
        )
        degree_sum = g.degree(best.u) + g.degree(best.v)
        removed = g.delete_step(best)
        same = sum(1 for e in removed if e.color == color and e != best)
        matching = matching.add(best)
        records.append(
            dict(color=color, size=size, edge=best, degree_sum=degree_sum,
                 removed=len(removed), same=same)
        )
    return matching, records


def sorted_edges(edges) -> list[Edge]:
    return sorted(Edge.of(*e) for e in edges)
