"""Greedy rainbow matching on the reduced core, the full pipeline, and traces.

The greedy loop repeatedly takes a smallest color class, picks the edge of
that class whose endpoints have the smallest current degree sum, keeps it, and
deletes its endpoints' edges together with the rest of its class. Each step
is recorded so the counting argument behind the order thresholds can be
checked on real runs (``check_trace``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from rainbowmatch import kernels
from rainbowmatch.graph import ColoredGraph, Edge, Matching
from rainbowmatch.reduction import ReductionChain, extend, reduce


class ZeroDelta(ValueError):
    pass


def threshold(delta: int, triangle_free: bool = False) -> Fraction:
    """Order above which a size-``delta`` rainbow matching is guaranteed.

    ``13/2 d - 23/2 + 41/(8d)`` in general, ``49/8 d - 21/2 + 9/(2d)`` for
    triangle-free graphs.
    """
    if delta < 1:
        raise ZeroDelta("threshold is defined for minimum degree >= 1")
    d = Fraction(delta)
    if triangle_free:
        return Fraction(49, 8) * d - Fraction(21, 2) + Fraction(9, 2) / d
    return Fraction(13, 2) * d - Fraction(23, 2) + Fraction(41, 8) / d


def min_order(delta: int, triangle_free: bool = False) -> int:
    """Smallest integer order strictly above :func:`threshold`."""
    t = threshold(delta, triangle_free)
    return int(t) + 1  # floor + 1; thresholds are positive


@dataclass(frozen=True)
class GreedyStepRecord:
    index: int  # 1-based
    chosen_color: int
    class_size: int  # smallest class size c_i when the step starts
    edge: Edge
    degree_sum: int
    mu: int  # max(0, degree_sum - 2 * target)
    removed_total: int
    same_color_removed: int  # g_i: other edges of the chosen color


@dataclass
class GreedyTrace:
    target: int
    steps: list[GreedyStepRecord]
    uncovered: frozenset[int] = frozenset()
    # f_i: chosen-color edges deleted at step i with both ends left uncovered
    uncovered_same_color: list[int] = field(default_factory=list)
    # last step that wiped out a color absent from the matching (0 if none)
    h: int = 0
    removals: list[list[Edge]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Violation:
    check: str
    step: int | None
    detail: str

    def __str__(self) -> str:
        where = f" at step {self.step}" if self.step is not None else ""
        return f"{self.check}{where}: {self.detail}"


def greedy_matching(core: ColoredGraph, target: int) -> tuple[Matching, GreedyTrace]:
    """Run the greedy matcher on ``core``, which is left untouched.

    ``target`` only enters the recorded ``mu`` values; the matching itself
    does not depend on it.
    """
    eu, ev, ec, ids, colors = core.edge_arrays()
    n = len(ids)
    (k, chosen, chosen_color, c_sizes, deg_sums,
     removed_total, same, removed_at) = kernels.greedy(eu, ev, ec, n, len(colors))

    def edge(e: int) -> Edge:
        return Edge.of(ids[eu[e]], ids[ev[e]], colors[ec[e]])

    matching = Matching(tuple(edge(int(e)) for e in chosen))
    steps = [
        GreedyStepRecord(
            index=i + 1,
            chosen_color=colors[chosen_color[i]],
            class_size=int(c_sizes[i]),
            edge=matching.edges[i],
            degree_sum=int(deg_sums[i]),
            mu=max(0, int(deg_sums[i]) - 2 * target),
            removed_total=int(removed_total[i]),
            same_color_removed=int(same[i]),
        )
        for i in range(k)
    ]
    trace = GreedyTrace(target, steps)

    # Post-hoc bookkeeping that depends on the final matching.
    removals: list[list[Edge]] = [[] for _ in range(k)]
    for e in np.argsort(removed_at, kind="stable"):
        removals[removed_at[e]].append(edge(int(e)))
    trace.removals = removals

    covered = matching.vertices()
    trace.uncovered = frozenset(v for v in core.vertices() if v not in covered)
    trace.uncovered_same_color = [
        sum(
            1
            for f in removals[i]
            if f.color == rec.chosen_color and f != rec.edge
            and f.u in trace.uncovered and f.v in trace.uncovered
        )
        for i, rec in enumerate(steps)
    ]
    in_matching = np.zeros(len(colors), np.bool_)
    in_matching[chosen_color] = True
    last_removal = np.full(len(colors), -1, np.int64)
    np.maximum.at(last_removal, ec, removed_at)
    wiped = last_removal[~in_matching]
    trace.h = int(wiped.max()) + 1 if wiped.size else 0
    return matching, trace


def check_trace(trace: GreedyTrace, core_edge_count: int) -> list[Violation]:
    """Check a greedy trace against the step inequalities of the analysis.

    Named checks:

    ``class-size-drop``      smallest class shrinks by at most 2 per step
    ``same-color-count``     g_i <= c_i - 1
    ``uncovered-same-color`` f_i <= g_i
    ``mu-definition``        mu_i = max(0, degree_sum_i - 2 target)
    ``mu-bound``             mu_i >= 0 and, for target >= 2, mu_i <= 2 target - 3
    ``removal-bound``        removed_i <= 2 target + mu_i + g_i - 1
    ``edge-conservation``    all removals add up to the core's edge count
    ``late-degree-sum``      steps after h: degree_sum_i <= 2 (k - i + 1), which
                             is <= 2 (target - 1) whenever k < target
    """
    out: list[Violation] = []
    t = trace.target
    steps = trace.steps
    k = len(steps)
    f = trace.uncovered_same_color or [0] * k
    for prev, cur in zip(steps, steps[1:]):
        if cur.class_size + 2 < prev.class_size:
            out.append(Violation("class-size-drop", cur.index,
                                 f"c={cur.class_size} after c={prev.class_size}"))
    for rec, f_i in zip(steps, f):
        i = rec.index
        g_i = rec.same_color_removed
        if g_i > rec.class_size - 1:
            out.append(Violation("same-color-count", i, f"g={g_i} > c-1={rec.class_size - 1}"))
        if f_i > g_i:
            out.append(Violation("uncovered-same-color", i, f"f={f_i} > g={g_i}"))
        if rec.mu != max(0, rec.degree_sum - 2 * t):
            out.append(Violation("mu-definition", i,
                                 f"mu={rec.mu} but degree sum {rec.degree_sum}, target {t}"))
        if rec.mu < 0 or (t >= 2 and rec.mu > 2 * t - 3):
            out.append(Violation("mu-bound", i, f"mu={rec.mu} outside [0, {2 * t - 3}]"))
        bound = 2 * t + rec.mu + g_i - 1
        if rec.removed_total > bound:
            out.append(Violation("removal-bound", i,
                                 f"removed {rec.removed_total} > {bound}"))
        if i > trace.h and rec.degree_sum > 2 * (k - i + 1):
            out.append(Violation("late-degree-sum", i,
                                 f"degree sum {rec.degree_sum} > {2 * (k - i + 1)}"))
    total = sum(r.removed_total for r in steps)
    if total != core_edge_count:
        out.append(Violation("edge-conservation", None,
                             f"removed {total} edges, core has {core_edge_count}"))
    return out


@dataclass
class PipelineReport:
    matching: Matching
    delta: int
    n: int
    guarantee_applies: bool  # order above the threshold (or delta == 0)
    guarantee_met: bool  # applies and a size-delta matching was produced
    threshold_value: Fraction | None
    used_triangle_free: bool
    chain: ReductionChain
    trace: GreedyTrace
    core_edge_count: int
    elapsed_ns: int = 0

    @property
    def chain_summary(self) -> dict[str, int]:
        return self.chain.summary()

    @property
    def reached_delta(self) -> bool:
        return len(self.matching) == self.delta


def find_rainbow_matching(g: ColoredGraph, use_triangle_free: bool = False) -> PipelineReport:
    """Reduce, match the core greedily, and extend back up the chain.

    Below the order threshold the result may fall short of the minimum
    degree; the best matching found is returned with ``guarantee_met`` False.
    """
    start = time.perf_counter_ns()
    delta = g.min_degree()
    chain = reduce(g, use_triangle_free)
    tf = chain.triangle_free_rule
    thr = threshold(delta, tf) if delta >= 1 else None
    applies = thr is None or g.n > thr

    core_m = chain.core.m
    matching, trace = greedy_matching(chain.core, chain.core_target)
    if len(matching) >= chain.core_target:
        matching = Matching(matching.edges[: chain.core_target])
        for step, at_step in chain.replay():
            matching = extend(matching, step, at_step)
    return PipelineReport(
        matching=matching,
        delta=delta,
        n=g.n,
        guarantee_applies=applies,
        guarantee_met=applies and len(matching) == delta,
        threshold_value=thr,
        used_triangle_free=tf,
        chain=chain,
        trace=trace,
        core_edge_count=core_m,
        elapsed_ns=time.perf_counter_ns() - start,
    )
