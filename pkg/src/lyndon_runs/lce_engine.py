"""Batch longest-common-extension tables for the pairs ``(i, nss[i])``.

Both passes keep a frontier: the furthest text position already inspected.
A value is either copied from an earlier pair at distance ``d`` or computed by
skipping the part known to match and scanning only past the frontier, so
every text position is paid for at most once per direction.

The engine answers exactly this batch of pairs; it is not a general LCE
structure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .nss_lyndon import (
    NssArray,
    check_nss_structure,
    compute_nss_interleaved,
)
from .text_core import ComparisonCounter, ContractViolation, OrderSpec, Text, scan_left, scan_right


@dataclass(frozen=True)
class RlceFrontier:
    """Final state of the right-extension pass (``x_right = j_prime + lcp``)."""

    j_prime: int
    d: int
    x_right: int
    copies: int
    scans: int
    comparisons: int


@dataclass(frozen=True)
class LlceFrontier:
    """Final state of the left-extension pass (``x_left = i_prime - lcs``)."""

    i_prime: int
    d: int
    x_left: int
    copies: int
    scans: int
    comparisons: int


@dataclass(frozen=True, eq=False)
class LceTables:
    """``rlce[k]`` and ``llce[k]`` belong to position ``k + 1``; ``-1`` = undefined."""

    rlce: np.ndarray
    llce: np.ndarray

    def at(self, i: int) -> tuple[int, int]:
        return int(self.rlce[i - 1]), int(self.llce[i - 1])


@numba.njit(cache=True)
def _pairs_by_right_index(nss, n):
    # Counting sort keyed on nss[i]: right index increasing, left index decreasing.
    start = np.zeros(n + 3, dtype=np.int32)
    for i in range(1, n + 1):
        if nss[i] <= n:
            start[nss[i] + 1] += 1
    for j in range(1, n + 3):
        start[j] += start[j - 1]
    m = start[n + 1]
    bucket = np.empty(m, dtype=np.int32)
    fill = start.copy()
    for i in range(1, n + 1):
        j = nss[i]
        if j <= n:
            bucket[fill[j]] = i
            fill[j] += 1
    lefts = np.empty(m, dtype=np.int32)
    k = 0
    for j in range(2, n + 1):
        for t in range(start[j + 1] - 1, start[j] - 1, -1):
            lefts[k] = bucket[t]
            k += 1
    return lefts


@numba.njit(cache=True)
def _rlce_kernel(r, n, nss):
    rl = np.full(n + 2, -1, dtype=np.int32)
    lefts = _pairs_by_right_index(nss, n)
    jp = 0
    x = 1
    d = 0
    cmps = 0
    copies = 0
    scans = 0
    for t in range(len(lefts)):
        i = lefts[t]
        j = nss[i]
        if jp < i and j < x and nss[i - d] == j - d and j + rl[i - d] < x:
            rl[i] = rl[i - d]
            copies += 1
        else:
            k = max(x, j) - j
            ell, _, c = scan_right(r, n, i + k, j + k)
            cmps += c
            scans += 1
            rl[i] = k + ell
            jp = j
            x = j + rl[i]
            d = j - i
    return rl, jp, d, x, copies, scans, cmps


@numba.njit(cache=True)
def _llce_kernel(r, n, nss, check):
    ll = np.full(n + 2, -1, dtype=np.int32)
    ip = 0
    x = n
    d = 0
    cmps = 0
    copies = 0
    scans = 0
    violation = 0
    for i in range(n, 0, -1):
        j = nss[i]
        if j == n + 1:
            continue
        if x < i and i < ip and i - ll[i + d] > x:
            if check and nss[i + d] != j + d:
                violation = i
            ll[i] = ll[i + d]
            copies += 1
        else:
            k = i - min(x, i)
            ell, c = scan_left(r, i - k, j - k)
            cmps += c
            scans += 1
            ll[i] = k + ell
            ip = i
            x = i - ll[i]
            d = j - i
    return ll, ip, d, x, copies, scans, cmps, violation


def _validate(text: Text, nss: NssArray, order: OrderSpec) -> None:
    if nss.n != text.n:
        raise ContractViolation(f"NSS array has length {nss.n}, text has {text.n}")
    check_nss_structure(nss)
    fresh, _ = compute_nss_interleaved(text, order)
    if fresh != nss:
        raise ContractViolation("NSS array does not belong to this text and order")


def rlce_pass(
    text: Text, nss: NssArray, order: OrderSpec, counter: ComparisonCounter, debug: bool = False
) -> tuple[np.ndarray, RlceFrontier]:
    if debug:
        _validate(text, nss, order)
    rl, jp, d, x, copies, scans, cmps = _rlce_kernel(text.ranked(order), text.n, nss.padded())
    counter.add(cmps)
    return rl[1:-1], RlceFrontier(int(jp), int(d), int(x), int(copies), int(scans), int(cmps))


def llce_pass(
    text: Text, nss: NssArray, order: OrderSpec, counter: ComparisonCounter, debug: bool = False
) -> tuple[np.ndarray, LlceFrontier]:
    if debug:
        _validate(text, nss, order)
    ll, ip, d, x, copies, scans, cmps, violation = _llce_kernel(
        text.ranked(order), text.n, nss.padded(), debug
    )
    if violation:
        raise AssertionError(f"left-extension copy at {violation} without matching NSS edge")
    counter.add(cmps)
    return ll[1:-1], LlceFrontier(int(ip), int(d), int(x), int(copies), int(scans), int(cmps))


def compute_all_rlce(
    text: Text,
    nss: NssArray,
    order: OrderSpec | None = None,
    counter: ComparisonCounter | None = None,
    debug: bool = False,
) -> np.ndarray:
    """``rlce[i] = lcp(S_i, S_nss[i])`` for all ``i`` with ``nss[i] <= n``."""
    return rlce_pass(text, nss, order or OrderSpec.natural(), counter or ComparisonCounter(), debug)[0]


def compute_all_llce(
    text: Text,
    nss: NssArray,
    order: OrderSpec | None = None,
    counter: ComparisonCounter | None = None,
    debug: bool = False,
) -> np.ndarray:
    """``llce[i] = lcs(S[1..i], S[1..nss[i]])`` for all ``i`` with ``nss[i] <= n``."""
    return llce_pass(text, nss, order or OrderSpec.natural(), counter or ComparisonCounter(), debug)[0]


def compute_tables(
    text: Text, order: OrderSpec | None = None, counter: ComparisonCounter | None = None
) -> tuple[NssArray, LceTables]:
    """NSS array and both extension tables for one alphabet order."""
    order = order or OrderSpec.natural()
    counter = counter if counter is not None else ComparisonCounter()
    nss, rl = compute_nss_interleaved(text, order, counter)
    ll = compute_all_llce(text, nss, order, counter)
    return nss, LceTables(rl, ll)

