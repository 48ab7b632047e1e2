"""Runs (maximal periodic substrings) from the Lyndon array.

Every run that is lexicographically decreasing under some order has a root:
the leftmost position inside its first period whose longest Lyndon word is
exactly one period long. Walking over all candidate roots with their left and
right extensions therefore yields every decreasing run once. A second pass
under the opposite order collects the increasing ones.
"""

from __future__ import annotations

import time
from collections.abc import Sized
from dataclasses import dataclass
from enum import Enum

import numba
import numpy as np

from .lce_engine import compute_tables
from .text_core import ComparisonCounter, OrderSpec, Text, sym_cmp


class Direction(str, Enum):
    DECREASING = "dec"
    INCREASING = "inc"


@dataclass(frozen=True, order=True)
class Run:
    """Run ``S[start..end]`` (1-based, inclusive) with shortest period ``period``.

    ``root`` is the root position under the order of the pass that found the
    run; ``direction`` compares ``S_start`` with ``S_{start+period}``.
    """

    start: int
    end: int
    period: int
    root: int
    direction: Direction

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.start, self.end, self.period

    @property
    def length(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class RunStats:
    n: int
    run_count: int
    runs_per_100n: float
    comparisons: int
    throughput: float  # bytes per second

    @property
    def mibps(self) -> float:
        return self.throughput / (1 << 20)


@dataclass(frozen=True, eq=False)
class RunArrays:
    """Column-wise runs, sorted by (start, end, period).

    ``direction`` is ``1`` for decreasing and ``-1`` for increasing runs;
    ``pass_id`` is ``0`` for the pass under the base order, ``1`` for the
    reversed pass.
    """

    start: np.ndarray
    end: np.ndarray
    period: np.ndarray
    root: np.ndarray
    direction: np.ndarray
    pass_id: np.ndarray

    def __len__(self):
        return len(self.start)

    def to_runs(self) -> list[Run]:
        dirs = {1: Direction.DECREASING, -1: Direction.INCREASING}
        return [
            Run(int(a), int(b), int(p), int(r), dirs[int(c)])
            for a, b, p, r, c in zip(
                self.start, self.end, self.period, self.root, self.direction
            )
        ]


@numba.njit(cache=True)
def _decreasing_runs_kernel(n, nss, rl, ll):
    starts = np.empty(n, dtype=np.int32)
    ends = np.empty(n, dtype=np.int32)
    periods = np.empty(n, dtype=np.int32)
    roots = np.empty(n, dtype=np.int32)
    m = 0
    for i0 in range(1, n + 1):
        if nss[i0] == n + 1:
            continue
        p = nss[i0] - i0
        left = ll[i0]
        if left <= p:
            i = i0 - left + 1
            j = nss[i0] + rl[i0] - 1
            if j - i + 1 >= 2 * p:
                starts[m] = i
                ends[m] = j
                periods[m] = p
                roots[m] = i0
                m += 1
    return starts[:m], ends[:m], periods[:m], roots[:m]


@numba.njit(cache=True)
def _classify_kernel(r, n, starts, ends, periods):
    # For a run, S_i and S_{i+p} agree up to end; the next symbol pair decides.
    out = np.empty(len(starts), dtype=np.int8)
    cmps = 0
    for k in range(len(starts)):
        j = ends[k]
        if j == n:
            out[k] = 1
        else:
            cmps += 1
            out[k] = 1 if sym_cmp(r, j + 1 - periods[k], j + 1) > 0 else -1
    return out, cmps


def _padded(values: np.ndarray) -> np.ndarray:
    out = np.zeros(len(values) + 2, dtype=np.int32)
    out[1:-1] = values
    return out


def decreasing_runs(text: Text, nss, lce, order: OrderSpec | None = None) -> list[Run]:
    """Runs that decrease under ``order``, given its NSS array and LCE tables.

    ``direction`` is always derived by comparing suffixes under the natural
    order, so under a non-natural ``order`` some runs may be tagged increasing.
    """
    arrays = _decreasing_arrays(text, nss, lce)
    dirs, _ = _classify_kernel(text.ranked(OrderSpec.natural()), text.n, *arrays[:3])
    return sorted(
        Run(int(a), int(b), int(p), int(r),
            Direction.DECREASING if c > 0 else Direction.INCREASING)
        for a, b, p, r, c in zip(*arrays, dirs)
    )


def _decreasing_arrays(text: Text, nss, lce):
    return _decreasing_runs_kernel(
        text.n, nss.padded(), _padded(lce.rlce), _padded(lce.llce)
    )


def compute_runs(
    text: Text, order: OrderSpec | None = None, counter: ComparisonCounter | None = None
) -> RunArrays:
    """All runs of ``text`` as sorted columns (the fast path behind ``all_runs``)."""
    order = order or OrderSpec.natural()
    counter = counter if counter is not None else ComparisonCounter()
    cols = []
    for pass_id, pass_order in enumerate((order, order.reverse())):
        nss, lce = compute_tables(text, pass_order, counter)
        found = _decreasing_arrays(text, nss, lce)
        if pass_id:
            # A run ending at n decreases under every order (S_{i+p} is a
            # proper prefix of S_i); the first pass already has it.
            keep = found[1] < text.n
            found = tuple(col[keep] for col in found)
        cols.append(found + (np.full(len(found[0]), pass_id, dtype=np.int8),))
    start, end, period, root, pass_ids = (np.concatenate(c) for c in zip(*cols))
    direction, cmps = _classify_kernel(text.ranked(order), text.n, start, end, period)
    counter.add(cmps)
    perm = np.lexsort((period, end, start))
    return RunArrays(
        start[perm], end[perm], period[perm], root[perm], direction[perm], pass_ids[perm]
    )


def all_runs(
    text: Text, order: OrderSpec | None = None, counter: ComparisonCounter | None = None
) -> list[Run]:
    """Every run of ``text`` once, sorted by (start, end, period)."""
    return compute_runs(text, order, counter).to_runs()


def classify_run(text: Text, run: Run, order: OrderSpec | None = None) -> Direction:
    """Decreasing iff ``S_start`` is larger than ``S_{start+period}``."""
    dirs, _ = _classify_kernel(
        text.ranked(order or OrderSpec.natural()),
        text.n,
        np.array([run.start], dtype=np.int32),
        np.array([run.end], dtype=np.int32),
        np.array([run.period], dtype=np.int32),
    )
    return Direction.DECREASING if dirs[0] > 0 else Direction.INCREASING


def run_stats(
    text: Text, runs: Sized | int, counter: ComparisonCounter | None, elapsed: float
) -> RunStats:
    n = text.n
    count = runs if isinstance(runs, int) else len(runs)
    return RunStats(
        n=n,
        run_count=count,
        runs_per_100n=100.0 * count / n if n else 0.0,
        comparisons=counter.count if counter is not None else 0,
        throughput=n / elapsed if n and elapsed > 0 else 0.0,
    )


def timed_runs(text: Text, order: OrderSpec | None = None) -> tuple[RunArrays, RunStats]:
    """Compute all runs and the statistics line the CLI reports."""
    counter = ComparisonCounter()
    t0 = time.perf_counter()
    arrays = compute_runs(text, order, counter)
    elapsed = time.perf_counter() - t0
    return arrays, run_stats(text, len(arrays), counter, elapsed)
