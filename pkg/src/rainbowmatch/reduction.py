"""Preprocessing: trimming, vertex and color-class removals, and matching extension.

``reduce`` peels off a maximum-degree vertex while it has too many colors at
it, or a color class while it is too large, lowering the degree target by one
each time. A rainbow matching of the final core is then grown back one edge
per step by ``extend``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Iterator

from rainbowmatch.graph import ColoredGraph, Edge, GraphError, Matching, edge_order

log = logging.getLogger(__name__)


class TargetExceedsMinDegree(GraphError):
    pass


class ExtensionFailed(RuntimeError):
    """No extending edge exists; a violated precondition or a bug."""


class StepKind(str, enum.Enum):
    VERTEX = "vertex"
    COLOR = "color"


@dataclass
class ReductionStep:
    kind: StepKind
    removed: int  # vertex id for VERTEX, color for COLOR
    primary_removed: list[Edge]
    trimmed: list[Edge]
    target_before: int

    @property
    def removed_vertex(self) -> int | None:
        return self.removed if self.kind is StepKind.VERTEX else None

    @property
    def removed_color(self) -> int | None:
        return self.removed if self.kind is StepKind.COLOR else None


@dataclass
class ReductionChain:
    steps: list[ReductionStep]
    core: ColoredGraph
    core_target: int
    initial_trimmed: list[Edge]
    initial_target: int
    triangle_free_rule: bool = False
    # levels at which min degree ended above the target (graph without edges)
    slack_levels: list[int] = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        counts = {k.value: 0 for k in StepKind}
        for s in self.steps:
            counts[s.kind.value] += 1
        return counts

    def replay(self) -> Iterator[tuple[ReductionStep, ColoredGraph]]:
        """Walk the chain backwards, yielding each step with the graph it started from.

        One graph is rebuilt in place, so each yielded graph is only valid
        until the next iteration.
        """
        g = self.core.copy()
        for step in reversed(self.steps):
            _undo(g, step)
            yield step, g

    def reconstruct(self) -> ColoredGraph:
        """The input graph, rebuilt from the core and the removal logs."""
        g = self.core.copy()
        for step in reversed(self.steps):
            _undo(g, step)
        g.add_edges(self.initial_trimmed)
        return g


def _undo(g: ColoredGraph, step: ReductionStep) -> None:
    g.add_edges(step.trimmed)
    if step.kind is StepKind.VERTEX:
        g.restore_vertex(step.removed)
    g.add_edges(step.primary_removed)


def trim(g: ColoredGraph, target: int) -> list[Edge]:
    """Delete edges whose endpoints both have degree above ``target``.

    Edges are visited in (min endpoint, max endpoint) order, and the pass is
    repeated until it deletes nothing. Afterwards every edge has an endpoint of
    degree exactly ``target``.
    """
    if g.n and g.min_degree() < target:
        raise TargetExceedsMinDegree(
            f"minimum degree {g.min_degree()} is below target {target}"
        )
    removed: list[Edge] = []
    while True:
        before = len(removed)
        for e in g.edges():
            if g.degree(e.u) > target and g.degree(e.v) > target:
                removed.append(g.delete_edge(e))
        if len(removed) == before:
            return removed


def degree_cap(target: int, triangle_free: bool) -> int:
    return 2 * target - 2 if triangle_free else 3 * target - 3


def class_cap(target: int) -> int:
    return 2 * target - 2


def reduce(g: ColoredGraph, triangle_free_rule: bool = False) -> ReductionChain:
    """Build the reduction chain of ``g``; ``g`` itself is not modified.

    The triangle-free degree cap is used only when requested and the graph
    really is triangle-free.
    """
    work = g.copy()
    target = work.min_degree()
    tf = triangle_free_rule and work.is_triangle_free()
    initial = trim(work, target)
    start = target
    steps: list[ReductionStep] = []
    slack: list[int] = []
    while target > 0:
        if work.max_degree() > degree_cap(target, tf):
            v = work.max_degree_vertex()
            primary = work.delete_vertex(v)
            kind, removed = StepKind.VERTEX, v
        else:
            color, size = (work.largest_color_class() if work.m else (None, 0))
            if size <= class_cap(target):
                break
            primary = work.delete_color_class(color)
            kind, removed = StepKind.COLOR, color
        trimmed = trim(work, target - 1)
        steps.append(ReductionStep(kind, removed, primary, trimmed, target))
        target -= 1
        if work.n and work.min_degree() > target:
            # Only possible once no edges are left.
            slack.append(target)
            log.info("min degree %d exceeds target %d after step %d",
                     work.min_degree(), target, len(steps))
    return ReductionChain(steps, work, target, initial, start, tf, slack)


def extend(m: Matching, step: ReductionStep, graph_at_step: ColoredGraph | None = None
           ) -> Matching:
    """Add one edge removed by ``step`` to ``m``, keeping it a rainbow matching.

    Candidates are the edges at the removed vertex (distinct colors, more than
    the covered vertices plus used colors can block) or the edges of the
    removed class (pairwise disjoint, more than the covered vertices can
    touch). With ``graph_at_step`` given, candidates are read from it;
    otherwise from the step's own log.
    """
    if len(m) != step.target_before - 1:
        raise ExtensionFailed(
            f"matching has {len(m)} edges, expected {step.target_before - 1}"
        )
    if graph_at_step is not None:
        if step.kind is StepKind.VERTEX:
            candidates = graph_at_step.incident(step.removed)
        else:
            candidates = graph_at_step.color_class(step.removed)
    else:
        candidates = sorted(step.primary_removed, key=edge_order)
    covered = m.vertices()
    used = m.colors()
    for e in candidates:
        if e.u not in covered and e.v not in covered and e.color not in used:
            return m.add(e)
    raise ExtensionFailed(
        f"no free edge at {step.kind.value} {step.removed} "
        f"({len(candidates)} candidates, {len(covered)} covered vertices, "
        f"{len(used)} used colors)"
    )
