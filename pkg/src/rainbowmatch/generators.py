"""Seeded instance factories and the Latin-square text format.

All randomness comes from SplitMix64 so instances can be reproduced exactly in
any language: bounded draws use rejection ("debiased modulo"), shuffles are
Fisher-Yates from the last index down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from rainbowmatch.graph import ColoredGraph, build_graph

MASK64 = (1 << 64) - 1


class GeneratorError(ValueError):
    pass


class ZeroOrder(GeneratorError):
    pass


class InfeasibleDegree(GeneratorError):
    pass


class LatinParseError(GeneratorError):
    pass


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> list[int]:
        p = list(range(n))
        self.shuffle(p)
        return p


# -- Latin squares -------------------------------------------------------------


@dataclass(frozen=True)
class LatinSquare:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        problem = latin_problem(self.n, self.cells)
        if problem:
            raise GeneratorError(problem)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> LatinSquare:
        cells = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(cells), cells)


def latin_problem(n: int, cells: Sequence[Sequence[int]]) -> str | None:
    """Return a description of the first Latin-property violation, or None."""
    if len(cells) != n:
        return f"expected {n} rows, got {len(cells)}"
    for i, row in enumerate(cells):
        if len(row) != n:
            return f"row {i}: expected {n} entries, got {len(row)}"
        seen: dict[int, int] = {}
        for j, s in enumerate(row):
            if not 0 <= s < n:
                return f"row {i}, column {j}: symbol {s} outside [0, {n})"
            if s in seen:
                return f"row {i}, column {j}: symbol {s} repeats column {seen[s]}"
            seen[s] = j
    for j in range(n):
        seen = {}
        for i in range(n):
            s = cells[i][j]
            if s in seen:
                return f"row {i}, column {j}: symbol {s} repeats row {seen[s]}"
            seen[s] = i
    return None


def cyclic_latin(n: int) -> LatinSquare:
    if n < 1:
        raise ZeroOrder("Latin square order must be at least 1")
    return LatinSquare(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def shuffled_latin(square: LatinSquare, seed: int) -> LatinSquare:
    """Permute rows, then columns, then symbols, with one seeded stream."""
    rng = SplitMix64(seed)
    n = square.n
    rows = rng.permutation(n)
    cols = rng.permutation(n)
    syms = rng.permutation(n)
    return LatinSquare(
        n,
        tuple(
            tuple(syms[square.cells[rows[i]][cols[j]]] for j in range(n))
            for i in range(n)
        ),
    )


def latin_to_bipartite(square: LatinSquare) -> ColoredGraph:
    """Rows become vertices ``0..n-1``, columns ``n..2n-1``; cell = color."""
    n = square.n
    return build_graph(
        (i, n + j, square.cells[i][j]) for i in range(n) for j in range(n)
    )


def parse_latin(stream: TextIO | Iterable[str]) -> LatinSquare:
    lines = []
    for lineno, line in enumerate(stream, start=1):
        text = line.split("#", 1)[0].strip()
        if text:
            lines.append((lineno, text))
    if not lines:
        raise LatinParseError("empty Latin-square file")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise LatinParseError(f"line {lineno}: expected the order n, got {head!r}") from None
    if n < 1:
        raise LatinParseError(f"line {lineno}: order must be at least 1")
    body = lines[1:]
    if len(body) != n:
        raise LatinParseError(f"expected {n} rows after the order line, got {len(body)}")
    rows = []
    for lineno, text in body:
        try:
            rows.append(tuple(int(x) for x in text.split()))
        except ValueError:
            raise LatinParseError(f"line {lineno}: non-integer entry") from None
    problem = latin_problem(n, rows)
    if problem:
        raise LatinParseError(problem)
    return LatinSquare(n, tuple(rows))


def format_latin(square: LatinSquare) -> str:
    rows = "".join(" ".join(map(str, r)) + "\n" for r in square.cells)
    return f"{square.n}\n{rows}"


# -- colored graphs ------------------------------------------------------------


def complete_bipartite_colored(a: int, b: int) -> ColoredGraph:
    """K_{a,b} on ``0..a-1`` and ``a..a+b-1`` with color ``(i + j) mod max(a, b)``."""
    if a < 1 or b < 1:
        raise GeneratorError("both sides need at least one vertex")
    k = max(a, b)
    return build_graph((i, a + j, (i + j) % k) for i in range(a) for j in range(b))


def greedy_edge_coloring(pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Color edges in (min, max) order with the smallest color free at both ends."""
    used: dict[int, set[int]] = {}
    out = []
    for u, v in sorted((min(p), max(p)) for p in pairs):
        at_u = used.setdefault(u, set())
        at_v = used.setdefault(v, set())
        c = 0
        while c in at_u or c in at_v:
            c += 1
        at_u.add(c)
        at_v.add(c)
        out.append((u, v, c))
    return out


def _augment(adj: list[set[int]], order: Iterable[int], candidates, delta: int,
             rng: SplitMix64) -> None:
    for v in order:
        while len(adj[v]) < delta:
            pool = [w for w in candidates(v) if w != v and w not in adj[v]]
            w = pool[rng.below(len(pool))]
            adj[v].add(w)
            adj[w].add(v)


def _pairs(adj: list[set[int]]) -> list[tuple[int, int]]:
    return [(v, w) for v in range(len(adj)) for w in adj[v] if v < w]


def random_properly_colored(n: int, delta: int, seed: int) -> ColoredGraph:
    """Random graph on ``0..n-1`` with minimum degree at least ``delta``.

    Vertices are visited in order; a deficient vertex is joined to uniformly
    chosen non-neighbors until its degree reaches ``delta``. Edges are then
    greedily colored.
    """
    if delta < 1:
        raise InfeasibleDegree("delta must be at least 1")
    if delta >= n:
        raise InfeasibleDegree(f"minimum degree {delta} impossible on {n} vertices")
    rng = SplitMix64(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    everyone = range(n)
    _augment(adj, range(n), lambda v: everyone, delta, rng)
    return build_graph(greedy_edge_coloring(_pairs(adj)))


def random_bipartite_colored(na: int, nb: int, delta: int, seed: int) -> ColoredGraph:
    """Random bipartite graph, sides ``0..na-1`` and ``na..na+nb-1``.

    Same augmentation as :func:`random_properly_colored`, drawing partners from
    the opposite side only, so the result is triangle-free.
    """
    if delta < 1:
        raise InfeasibleDegree("delta must be at least 1")
    if delta > min(na, nb):
        raise InfeasibleDegree(f"minimum degree {delta} impossible with sides {na}, {nb}")
    rng = SplitMix64(seed)
    adj: list[set[int]] = [set() for _ in range(na + nb)]
    left, right = range(na), range(na, na + nb)
    _augment(adj, range(na + nb), lambda v: right if v < na else left, delta, rng)
    return build_graph(greedy_edge_coloring(_pairs(adj)))


def split_sides(n: int) -> tuple[int, int]:
    """Near-even split of ``n`` vertices into two sides, smaller side first."""
    return n // 2, n - n // 2
