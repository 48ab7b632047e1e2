"""Next-smaller-suffix (Lyndon) array construction.

``compute_nss_interleaved`` runs the classic stack scan: for each ``j`` it
pops every open position ``i`` whose suffix is larger than ``S_j``. Every pop
is a pair ``(i, nss[i])`` and pops arrive with ``j`` increasing and ``i``
decreasing, so the common-prefix length found while deciding a pop is exactly
the R-LCE value of that pair. Those lengths are reused instead of rescanned:

* stack neighbours: after popping ``p`` the next stack entry ``s`` is the
  previous smaller suffix of ``p``, and both ``lcp(s, p)`` and ``lcp(p, j)``
  are on record. Unequal values settle ``S_s`` versus ``S_j`` for free; equal
  values give a lower bound.
* mirror copies: the comparison that reached furthest right, say
  ``(i', j')`` with common prefix ending at ``x``, says ``S[i'..) `` and
  ``S[j'..x)`` agree. A pair inside ``[j', x)`` behaves like its shifted twin
  inside ``[i', ...)`` if that twin was compared before and its mismatch lies
  left of ``x``; otherwise the twin still bounds the prefix from below.

Only inferences that hold for every comparison are used, whether the stack
entry ends up popped or survives; there is no proof of a linear bound for
this combination, which is why the test-suite measures comparison counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .text_core import ComparisonCounter, ContractViolation, OrderSpec, Text, scan_right

INDEX_DTYPE = np.int32
UNDEFINED = -1


@dataclass(frozen=True, eq=False)
class NssArray:
    """Next-smaller-suffix indices; ``values[k]`` belongs to position ``k + 1``."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, i: int) -> int:
        """nss of the 1-based position ``i``."""
        if not 1 <= i <= self.n:
            raise ContractViolation(f"position {i} outside [1, {self.n}]")
        return int(self.values[i - 1])

    def tolist(self) -> list[int]:
        return self.values.tolist()

    def padded(self) -> np.ndarray:
        return pad(self.values)

    def __eq__(self, other):
        if isinstance(other, NssArray):
            return np.array_equal(self.values, other.values)
        if isinstance(other, (list, tuple)):
            return self.tolist() == list(other)
        return NotImplemented

    def __repr__(self):
        return f"NssArray({self.tolist() if self.n <= 32 else f'n={self.n}'})"


def pad(values: np.ndarray) -> np.ndarray:
    out = np.zeros(len(values) + 2, dtype=INDEX_DTYPE)
    out[1:-1] = values
    return out


@dataclass(frozen=True)
class InterleavedStats:
    comparisons: int
    pops: int
    scans: int
    inferred: int


@numba.njit(cache=True)
def _nss_interleaved_kernel(r, n):
    nss = np.zeros(n + 2, dtype=np.int32)
    pss = np.zeros(n + 2, dtype=np.int32)
    rl = np.full(n + 2, -1, dtype=np.int32)
    sl = np.zeros(n + 2, dtype=np.int32)
    stack = np.empty(n + 1, dtype=np.int32)
    top = 0
    # frontier: (ip, jp) is the comparison whose common prefix reached x
    ip = 0
    jp = 0
    x = 1
    cmps = 0
    pops = 0
    scans = 0
    inferred = 0
    for j in range(1, n + 1):
        prev = 0
        while top > 0:
            i = stack[top - 1]
            known = False
            lower = 0
            ell = 0
            c = 0
            if prev != 0 and pss[prev] == i:
                a = sl[prev]
                b = rl[prev]
                if a < b:
                    ell = a
                    c = -1
                    known = True
                elif a > b:
                    ell = b
                    c = 1
                    known = True
                else:
                    lower = b
            if not known and jp != 0 and i >= jp and j < x:
                d = jp - ip
                i2 = i - d
                j2 = j - d
                twin = -1
                tc = 0
                if nss[i2] == j2:
                    twin = rl[i2]
                    tc = 1
                elif pss[j2] == i2:
                    twin = sl[j2]
                    tc = -1
                if twin >= 0:
                    if j + twin < x:
                        ell = twin
                        c = tc
                        known = True
                    elif x - j > lower:
                        lower = x - j
            if known:
                inferred += 1
            else:
                ell, c, k = scan_right(r, n, i + lower, j + lower)
                ell += lower
                cmps += k
                scans += 1
                if j + ell > x:
                    ip = i
                    jp = j
                    x = j + ell
            if c > 0:
                nss[i] = j
                rl[i] = ell
                top -= 1
                prev = i
                pops += 1
            else:
                pss[j] = i
                sl[j] = ell
                break
        stack[top] = j
        top += 1
    for t in range(top):
        nss[stack[t]] = n + 1
    return nss, rl, cmps, pops, scans, inferred


def compute_nss_interleaved(
    text: Text,
    order: OrderSpec | None = None,
    counter: ComparisonCounter | None = None,
    stats: list | None = None,
) -> tuple[NssArray, np.ndarray]:
    """NSS array plus ``rlce[i] = lcp(S_i, S_nss[i])`` in one left-to-right scan.

    ``rlce`` has length ``n`` with ``-1`` where ``nss[i] = n + 1``. If a list
    is passed as ``stats`` an :class:`InterleavedStats` is appended to it.
    """
    order = order or OrderSpec.natural()
    nss, rl, cmps, pops, scans, inferred = _nss_interleaved_kernel(text.ranked(order), text.n)
    if counter is not None:
        counter.add(cmps)
    if stats is not None:
        stats.append(InterleavedStats(int(cmps), int(pops), int(scans), int(inferred)))
    return NssArray(nss[1:-1]), rl[1:-1]


def compute_nss_two_phase(
    text: Text, order: OrderSpec | None = None, counter: ComparisonCounter | None = None
) -> tuple[NssArray, np.ndarray]:
    """Reference pipeline: brute-force NSS, then the standalone R-LCE pass.

    Limited to oracle-sized inputs; meant for differential testing only.
    """
    from .lce_engine import compute_all_rlce
    from .oracle import oracle_nss

    order = order or OrderSpec.natural()
    nss = NssArray(np.array(oracle_nss(text, order), dtype=INDEX_DTYPE))
    rl = compute_all_rlce(text, nss, order, counter or ComparisonCounter())
    return nss, rl


def lyndon_lengths(nss: NssArray) -> np.ndarray:
    """Length of the longest Lyndon word starting at each position."""
    return nss.values - np.arange(1, nss.n + 1, dtype=INDEX_DTYPE)


@numba.njit(cache=True)
def _laminar_violation(nss, n):
    # Valid NSS arrays nest: nss[i] is reached from i + 1 by following nss.
    for i in range(n, 0, -1):
        target = nss[i]
        if target <= i or target > n + 1:
            return i
        y = i + 1
        while y < target:
            y = nss[y]
        if y != target:
            return i
    return 0


def check_nss_structure(nss: NssArray) -> None:
    """Raise unless every entry is in ``(i, n + 1]`` and the intervals nest."""
    bad = _laminar_violation(nss.padded(), nss.n)
    if bad:
        raise ContractViolation(f"invalid NSS array at position {bad}")
