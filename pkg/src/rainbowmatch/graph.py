"""Properly edge-colored simple graphs.

Vertex ids given by callers are arbitrary non-negative integers below 2**32.
Internally they are compacted to dense indices in increasing id order, so the
ordering of edges by (min endpoint, max endpoint) is the same in both spaces.
Everything public speaks original ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, TextIO

import numpy as np

MAX_VERTEX_ID = 2**32 - 1


class GraphError(ValueError):
    """Base class for invalid graph input or queries."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class ImproperColoring(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    pass


class UnknownColor(GraphError, KeyError):
    pass


class UnknownEdge(GraphError, KeyError):
    pass


class EmptyGraph(GraphError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Edge(NamedTuple):
    """An edge ``u - v`` of a given color, normalized so that ``u < v``."""

    u: int
    v: int
    color: int

    @classmethod
    def of(cls, u: int, v: int, color: int) -> Edge:
        return cls(u, v, color) if u <= v else cls(v, u, color)

    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


def edge_order(e: Edge) -> tuple[int, int]:
    return (e.u, e.v)


@dataclass(frozen=True)
class Matching:
    """Edges claimed to be pairwise vertex-disjoint with distinct colors."""

    edges: tuple[Edge, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in (e.u, e.v)}

    def colors(self) -> set[int]:
        return {e.color for e in self.edges}

    def add(self, e: Edge) -> Matching:
        return Matching(self.edges + (e,))

    def sorted_by_color(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (e.color, e.u, e.v))


class ColoredGraph:
    """A mutable simple graph with a proper edge coloring.

    Per vertex we keep two maps, neighbor -> color and color -> neighbor;
    per color the set of edges carrying it. All three index the same edges.
    Deletions return the removed edges so callers can log and replay them.
    """

    def __init__(self, vertex_ids: Iterable[int] = ()):
        ids = sorted(set(vertex_ids))
        for x in ids:
            _check_id(x)
        self._ids: list[int] = ids
        self._index: dict[int, int] = {x: i for i, x in enumerate(ids)}
        self._alive: list[bool] = [True] * len(ids)
        self._n = len(ids)
        self._nbr: list[dict[int, int]] = [{} for _ in ids]
        self._by_color: list[dict[int, int]] = [{} for _ in ids]
        self._classes: dict[int, set[tuple[int, int]]] = {}
        self._m = 0

    # -- construction -------------------------------------------------------

    def copy(self) -> ColoredGraph:
        g = ColoredGraph.__new__(ColoredGraph)
        g._ids = self._ids
        g._index = self._index
        g._alive = list(self._alive)
        g._n = self._n
        g._nbr = [dict(d) for d in self._nbr]
        g._by_color = [dict(d) for d in self._by_color]
        g._classes = {c: set(s) for c, s in self._classes.items()}
        g._m = self._m
        return g

    def _add(self, a: int, b: int, color: int) -> None:
        """Insert an edge between dense indices ``a`` and ``b``."""
        if a == b:
            raise SelfLoop(f"self-loop at vertex {self._ids[a]}")
        if b in self._nbr[a]:
            raise DuplicateEdge(
                f"duplicate edge {self._ids[min(a, b)]}-{self._ids[max(a, b)]}"
            )
        for x in (a, b):
            other = self._by_color[x].get(color)
            if other is not None:
                raise ImproperColoring(
                    f"color {color} used twice at vertex {self._ids[x]} "
                    f"(edges to {self._ids[other]} and "
                    f"{self._ids[b if x == a else a]})"
                )
        self._nbr[a][b] = color
        self._nbr[b][a] = color
        self._by_color[a][color] = b
        self._by_color[b][color] = a
        self._classes.setdefault(color, set()).add((min(a, b), max(a, b)))
        self._m += 1

    def _remove(self, a: int, b: int) -> Edge:
        color = self._nbr[a].pop(b)
        del self._nbr[b][a]
        del self._by_color[a][color]
        del self._by_color[b][color]
        cls = self._classes[color]
        cls.discard((min(a, b), max(a, b)))
        if not cls:
            del self._classes[color]
        self._m -= 1
        return self._edge(a, b, color)

    def _edge(self, a: int, b: int, color: int) -> Edge:
        return Edge.of(self._ids[a], self._ids[b], color)

    def _dense(self, v: int) -> int:
        i = self._index.get(v)
        if i is None or not self._alive[i]:
            raise UnknownVertex(f"unknown vertex {v}")
        return i

    # -- queries ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def __contains__(self, v: int) -> bool:
        i = self._index.get(v)
        return i is not None and self._alive[i]

    def vertices(self) -> list[int]:
        return [x for i, x in enumerate(self._ids) if self._alive[i]]

    def edges(self) -> list[Edge]:
        """All edges in (min endpoint, max endpoint) order."""
        out = []
        for a in range(len(self._ids)):
            if not self._alive[a]:
                continue
            for b, c in self._nbr[a].items():
                if a < b:
                    out.append((a, b, c))
        out.sort()
        return [self._edge(a, b, c) for a, b, c in out]

    def colors(self) -> list[int]:
        return sorted(self._classes)

    def color_class(self, color: int) -> list[Edge]:
        if color not in self._classes:
            raise UnknownColor(f"unknown color {color}")
        return [self._edge(a, b, color) for a, b in sorted(self._classes[color])]

    def class_sizes(self) -> dict[int, int]:
        return {c: len(s) for c, s in self._classes.items()}

    def has_edge(self, u: int, v: int) -> bool:
        if u not in self or v not in self:
            return False
        return self._index[v] in self._nbr[self._index[u]]

    def edge_color(self, u: int, v: int) -> int:
        a, b = self._dense(u), self._dense(v)
        if b not in self._nbr[a]:
            raise UnknownEdge(f"no edge {u}-{v}")
        return self._nbr[a][b]

    def incident(self, v: int) -> list[Edge]:
        a = self._dense(v)
        return sorted(
            (self._edge(a, b, c) for b, c in self._nbr[a].items()), key=edge_order
        )

    def neighbors(self, v: int) -> list[int]:
        a = self._dense(v)
        return sorted(self._ids[b] for b in self._nbr[a])

    def degree(self, v: int) -> int:
        return len(self._nbr[self._dense(v)])

    def color_degree(self, v: int) -> int:
        a = self._dense(v)
        return len(set(self._nbr[a].values()))

    def degrees(self) -> dict[int, int]:
        return {
            x: len(self._nbr[i]) for i, x in enumerate(self._ids) if self._alive[i]
        }

    def min_degree(self) -> int:
        return min(
            (len(d) for d, ok in zip(self._nbr, self._alive) if ok), default=0
        )

    def max_degree(self) -> int:
        return max(
            (len(d) for d, ok in zip(self._nbr, self._alive) if ok), default=0
        )

    def max_degree_vertex(self) -> int:
        """A vertex of maximum degree, smallest id on ties."""
        if self._n == 0:
            raise EmptyGraph("graph has no vertices")
        best, best_deg = -1, -1
        for i, ok in enumerate(self._alive):
            if ok and len(self._nbr[i]) > best_deg:
                best, best_deg = i, len(self._nbr[i])
        return self._ids[best]

    def smallest_color_class(self) -> tuple[int, int]:
        if not self._classes:
            raise EmptyGraph("graph has no edges")
        return min(((c, len(s)) for c, s in self._classes.items()),
                   key=lambda t: (t[1], t[0]))

    def largest_color_class(self) -> tuple[int, int]:
        if not self._classes:
            raise EmptyGraph("graph has no edges")
        return min(((c, len(s)) for c, s in self._classes.items()),
                   key=lambda t: (-t[1], t[0]))

    def is_triangle_free(self) -> bool:
        for a, nbrs in enumerate(self._nbr):
            if not self._alive[a]:
                continue
            for b in nbrs:
                if b <= a:
                    continue
                small, large = (nbrs, self._nbr[b])
                if len(small) > len(large):
                    small, large = large, small
                if any(w in large for w in small if w != a and w != b):
                    return False
        return True

    # -- deletions ----------------------------------------------------------

    def delete_edge(self, e: Edge) -> Edge:
        a, b = self._dense(e.u), self._dense(e.v)
        if self._nbr[a].get(b) != e.color:
            raise UnknownEdge(f"no edge {e.u}-{e.v} of color {e.color}")
        return self._remove(a, b)

    def delete_vertex(self, v: int) -> list[Edge]:
        """Remove ``v`` and its incident edges; return the removed edges."""
        a = self._dense(v)
        removed = [self._remove(a, b) for b in sorted(self._nbr[a])]
        self._alive[a] = False
        self._n -= 1
        return removed

    def delete_color_class(self, color: int) -> list[Edge]:
        if color not in self._classes:
            raise UnknownColor(f"unknown color {color}")
        return [self._remove(a, b) for a, b in sorted(self._classes[color])]

    def delete_step(self, e: Edge) -> list[Edge]:
        """Remove ``e``, every edge touching its endpoints, and its color class.

        The returned list starts with ``e`` itself, then the other edges at
        ``e.u`` and ``e.v``, then the rest of ``e``'s color class.
        """
        a, b = self._dense(e.u), self._dense(e.v)
        if self._nbr[a].get(b) != e.color:
            raise UnknownEdge(f"no edge {e.u}-{e.v} of color {e.color}")
        removed = [self._remove(a, b)]
        for x in (a, b):
            removed.extend(self._remove(x, y) for y in sorted(self._nbr[x]))
        if e.color in self._classes:
            removed.extend(
                self._remove(p, q) for p, q in sorted(self._classes[e.color])
            )
        return removed

    # -- replay -------------------------------------------------------------

    def restore_vertex(self, v: int) -> None:
        """Bring back a previously deleted vertex (without edges)."""
        i = self._index.get(v)
        if i is None:
            raise UnknownVertex(f"vertex {v} was never part of this graph")
        if not self._alive[i]:
            self._alive[i] = True
            self._n += 1

    def add_edges(self, edges: Iterable[Edge]) -> None:
        """Re-insert edges between existing vertices, checking all invariants."""
        for e in edges:
            self._add(self._dense(e.u), self._dense(e.v), e.color)

    # -- dense views for kernels --------------------------------------------

    def dense_edges(self) -> tuple[list[tuple[int, int, int]], list[int]]:
        """Edges as (a, b, color) on dense indices, sorted; plus the id map."""
        out = [
            (a, b, c)
            for a in range(len(self._ids))
            if self._alive[a]
            for b, c in self._nbr[a].items()
            if a < b
        ]
        out.sort()
        return out, self._ids

    def edge_arrays(self):
        """``(eu, ev, ec, ids, colors)`` for the kernels.

        ``eu``/``ev`` are dense endpoints sorted by (u, v); ``ec`` indexes
        ``colors``, the sorted distinct colors; ``ids`` maps dense -> original.
        """
        dense, ids = self.dense_edges()
        colors = sorted(self._classes)
        cidx = {c: i for i, c in enumerate(colors)}
        m = len(dense)
        eu = np.fromiter((a for a, _, _ in dense), np.int64, m)
        ev = np.fromiter((b for _, b, _ in dense), np.int64, m)
        ec = np.fromiter((cidx[c] for _, _, c in dense), np.int64, m)
        return eu, ev, ec, ids, colors

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m})"


def _check_id(x: int) -> None:
    if not isinstance(x, int) or x < 0 or x > MAX_VERTEX_ID:
        raise GraphError(f"vertex id {x!r} is not an integer in [0, 2**32)")


def build_graph(
    edges: Iterable[tuple[int, int, int]], vertices: Iterable[int] = ()
) -> ColoredGraph:
    """Build and validate a properly edge-colored simple graph.

    Args:
        edges: ``(u, v, color)`` triples; endpoint order is irrelevant.
        vertices: extra vertex ids, for isolated vertices.

    Raises:
        SelfLoop, DuplicateEdge, ImproperColoring: on invalid input.
    """
    edges = [tuple(e) for e in edges]
    for u, v, c in edges:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not isinstance(c, int) or c < 0:
            raise GraphError(f"color {c!r} is not a non-negative integer")
    g = ColoredGraph([x for u, v, _ in edges for x in (u, v)] + list(vertices))
    for u, v, c in edges:
        g._add(g._index[u], g._index[v], c)
    return g


def degree(g: ColoredGraph, v: int) -> int:
    return g.degree(v)


def color_degree(g: ColoredGraph, v: int) -> int:
    return g.color_degree(v)


def min_degree(g: ColoredGraph) -> int:
    return g.min_degree()


def max_degree(g: ColoredGraph) -> int:
    return g.max_degree()


def smallest_color_class(g: ColoredGraph) -> tuple[int, int]:
    return g.smallest_color_class()


def is_triangle_free(g: ColoredGraph) -> bool:
    return g.is_triangle_free()


def matching_problems(g: ColoredGraph, m: Matching | Iterable[Edge]) -> list[str]:
    """Describe why ``m`` is not a rainbow matching of ``g`` (empty if it is)."""
    problems = []
    seen_vertex: dict[int, Edge] = {}
    seen_color: dict[int, Edge] = {}
    for e in m:
        e = Edge.of(*e)
        if not g.has_edge(e.u, e.v) or g.edge_color(e.u, e.v) != e.color:
            problems.append(f"unknown edge {e.u} {e.v} {e.color}")
        for x in (e.u, e.v):
            if x in seen_vertex:
                problems.append(
                    f"shared vertex {x} between {_fmt(seen_vertex[x])} and {_fmt(e)}"
                )
            seen_vertex[x] = e
        if e.color in seen_color:
            problems.append(
                f"duplicate color {e.color} on {_fmt(seen_color[e.color])} and {_fmt(e)}"
            )
        seen_color[e.color] = e
    return problems


def verify_matching(g: ColoredGraph, m: Matching | Iterable[Edge]) -> bool:
    return not matching_problems(g, m)


def _fmt(e: Edge) -> str:
    return f"({e.u} {e.v} {e.color})"


# -- edge-list text format ----------------------------------------------------


def parse_edge_list(stream: TextIO | Iterable[str]) -> list[tuple[int, int, int]]:
    """Parse ``u v c`` lines. Blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 3:
            raise EdgeListParseError(lineno, f"expected 3 integers, got {len(parts)} fields")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer field in {text!r}") from None
        if min(u, v, c) < 0:
            raise EdgeListParseError(lineno, "negative value")
        if max(u, v) > MAX_VERTEX_ID:
            raise EdgeListParseError(lineno, "vertex id exceeds 2**32 - 1")
        out.append((u, v, c))
    return out


def read_graph(stream: TextIO | Iterable[str]) -> ColoredGraph:
    return build_graph(parse_edge_list(stream))


def format_edge_list(edges: Iterable[Edge | tuple[int, int, int]]) -> str:
    return "".join(f"{u} {v} {c}\n" for u, v, c in edges)
