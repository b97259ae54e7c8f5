"""Runtime scaling of the pipeline, and numba-vs-fallback kernel timings."""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, TextIO

from rainbowmatch import kernels
from rainbowmatch.generators import SplitMix64, latin_to_bipartite, cyclic_latin, \
    random_properly_colored
from rainbowmatch.greedy import find_rainbow_matching, threshold

CSV_FIELDS = ("delta", "n", "m", "reps", "median_ns", "matching_size")
RATIO_LIMIT = 5.0


@dataclass(frozen=True)
class BenchRow:
    delta: int
    n: int
    m: int
    reps: int
    median_ns: int
    matching_size: int


@dataclass(frozen=True)
class DoublingRatio:
    delta: int
    n: int  # the smaller order; ratio is time(2n) / time(n)
    ratio: float

    @property
    def verdict(self) -> str:
        return "PASS" if self.ratio <= RATIO_LIMIT else "WARN"


def scaling_run(deltas: Iterable[int], sizes: Iterable[int], reps: int = 5,
                seed: int = 0) -> tuple[list[BenchRow], list[DoublingRatio]]:
    """Time ``find_rainbow_matching`` on seeded random graphs over a grid.

    Instance generation is outside the timed region. ``matching_size`` is the
    smallest size seen across reps, so a single short run shows up.
    """
    deltas, sizes = list(deltas), sorted(set(sizes))
    if not deltas or not sizes:
        raise ValueError("empty benchmark grid")
    if reps < 3:
        raise ValueError("need at least 3 reps for a median")
    for d in deltas:
        for n in sizes:
            if n <= threshold(d):
                raise ValueError(f"n={n} is not above the threshold for delta={d}")
    rng = SplitMix64(seed)
    rows = []
    for d in deltas:
        for n in sizes:
            times, ms, sizes_found = [], [], []
            for _ in range(reps):
                g = random_properly_colored(n, d, rng.next_u64())
                t0 = time.perf_counter_ns()
                report = find_rainbow_matching(g)
                times.append(time.perf_counter_ns() - t0)
                ms.append(g.m)
                sizes_found.append(len(report.matching))
            rows.append(BenchRow(d, n, statistics.median_low(ms), reps,
                                 int(statistics.median(times)), min(sizes_found)))
    return rows, doubling_ratios(rows)


def doubling_ratios(rows: list[BenchRow]) -> list[DoublingRatio]:
    by_cell = {(r.delta, r.n): r for r in rows}
    out = []
    for (d, n), r in sorted(by_cell.items()):
        big = by_cell.get((d, 2 * n))
        if big is not None:
            out.append(DoublingRatio(d, n, big.median_ns / max(r.median_ns, 1)))
    return out


def write_csv(rows: Iterable[BenchRow], stream: TextIO) -> None:
    w = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(asdict(r))


def _median_ns(fn: Callable[[], object], reps: int) -> int:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def compare_backends(n: int = 200, delta: int = 6, latin_order: int = 6, reps: int = 5,
                     seed: int = 0) -> list[dict]:
    """Median kernel times for the compiled and the plain-Python paths.

    Compiled kernels are warmed up once before timing. Returns one dict per
    (kernel, backend) with keys ``kernel``, ``backend``, ``median_ns``.
    """
    g = random_properly_colored(n, delta, seed)
    eu, ev, ec, ids, colors = g.edge_arrays()
    greedy_args = (eu, ev, ec, len(ids), len(colors))
    lg = latin_to_bipartite(cyclic_latin(latin_order))
    leu, lev, lec, lids, lcolors = lg.edge_arrays()
    oracle_args = (leu, lev, lec, len(lids), len(lcolors), 0)

    cases = [("greedy", "python", kernels.greedy_py, greedy_args),
             ("oracle", "python", kernels.max_rainbow_py, oracle_args)]
    if kernels.greedy_jit is not None:
        cases += [("greedy", "numba", kernels.greedy_jit, greedy_args),
                  ("oracle", "numba", kernels.max_rainbow_jit, oracle_args)]
    out = []
    for name, backend, fn, args in cases:
        fn(*args)
        out.append({"kernel": name, "backend": backend,
                    "median_ns": _median_ns(lambda: fn(*args), reps)})
    return out
