"""Byte texts over a general ordered alphabet.

The only operation the algorithms may perform on symbols is an order test.
An :class:`OrderSpec` turns bytes into ranks, and every comparison in the
package goes through the helpers defined here, either the Python-level
functions (1-based public indices) or the numba kernels ``sym_cmp``,
``scan_right`` and ``scan_left`` that operate on padded rank arrays.

Padded arrays: position ``x`` of the text lives at slot ``x`` (1-based), slots
``0`` and ``n + 1`` hold a filler value that is never read by a comparison.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import Sequence

import numba
import numpy as np

ALPHABET_SIZE = 256


class ContractViolation(ValueError):
    """An argument broke a documented precondition."""


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class OrderSpec:
    """A total order on byte values.

    ``mode`` is ``"natural"``, ``"reversed"`` or ``"permutation"``; for the
    latter, ``permutation[b]`` is the rank of byte ``b`` and the table must be
    a bijection on ``0..255``.
    """

    mode: str = "natural"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.mode not in ("natural", "reversed", "permutation"):
            raise ContractViolation(f"unknown order mode {self.mode!r}")
        if self.mode == "permutation":
            perm = self.permutation
            if perm is None or len(perm) != ALPHABET_SIZE:
                raise ContractViolation("permutation order needs 256 ranks")
            if sorted(perm) != list(range(ALPHABET_SIZE)):
                raise ContractViolation("permutation ranks must be a bijection on 0..255")
            object.__setattr__(self, "permutation", tuple(int(r) for r in perm))
        elif self.permutation is not None:
            raise ContractViolation(f"{self.mode} order takes no permutation table")

    @classmethod
    def natural(cls) -> OrderSpec:
        return cls("natural")

    @classmethod
    def reversed_order(cls) -> OrderSpec:
        return cls("reversed")

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> OrderSpec:
        return cls("permutation", tuple(ranks))

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> OrderSpec:
        """Read a 256-line rank file; line ``b`` holds the rank of byte ``b``."""
        with open(path, encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        try:
            ranks = [int(ln) for ln in lines]
        except ValueError as exc:
            raise ContractViolation(f"{path}: rank file must contain integers") from exc
        return cls.from_ranks(ranks)

    @classmethod
    def parse(cls, spec: str) -> OrderSpec:
        """Parse a command-line order: ``natural``, ``reversed`` or ``perm:<file>``."""
        if spec == "natural":
            return cls.natural()
        if spec == "reversed":
            return cls.reversed_order()
        if spec.startswith("perm:"):
            return cls.from_file(spec[5:])
        raise ContractViolation(f"unknown order {spec!r}")

    def reverse(self) -> OrderSpec:
        """The opposite order (used by the increasing-runs pass)."""
        if self.mode == "natural":
            return OrderSpec.reversed_order()
        if self.mode == "reversed":
            return OrderSpec.natural()
        return OrderSpec.from_ranks([ALPHABET_SIZE - 1 - r for r in self.permutation])

    @cached_property
    def ranks(self) -> np.ndarray:
        if self.mode == "natural":
            table = np.arange(ALPHABET_SIZE, dtype=np.uint8)
        elif self.mode == "reversed":
            table = np.arange(ALPHABET_SIZE - 1, -1, -1, dtype=np.uint8)
        else:
            table = np.array(self.permutation, dtype=np.uint8)
        table.setflags(write=False)
        return table


class ComparisonCounter:
    """Running tally of symbol comparisons. Never decreases."""

    __slots__ = ("count",)

    def __init__(self, count: int = 0):
        if count < 0:
            raise ContractViolation("counter cannot start negative")
        self.count = int(count)

    def add(self, k: int) -> None:
        if k < 0:
            raise ContractViolation("comparison count increments must be non-negative")
        self.count += int(k)

    def __repr__(self):
        return f"ComparisonCounter({self.count})"


@dataclass(frozen=True)
class Text:
    """Immutable byte string. ``n`` is its length; the empty text is valid."""

    symbols: bytes
    _padded: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        data = bytes(self.symbols)
        object.__setattr__(self, "symbols", data)
        padded = np.zeros(len(data) + 2, dtype=np.uint8)
        padded[1:-1] = np.frombuffer(data, dtype=np.uint8)
        padded.setflags(write=False)
        object.__setattr__(self, "_padded", padded)

    @classmethod
    def from_str(cls, s: str) -> Text:
        return cls(s.encode("latin-1"))

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> Text:
        with open(path, "rb") as fh:
            return cls(fh.read())

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def padded(self) -> np.ndarray:
        """Read-only uint8 array with the text at slots ``1..n``."""
        return self._padded

    def ranked(self, order: OrderSpec) -> np.ndarray:
        """Padded array of symbol ranks under ``order``."""
        return order.ranks[self._padded]


def _check_position(text: Text, x: int, lo: int, hi: int, what: str) -> None:
    if not lo <= x <= hi:
        raise ContractViolation(f"{what}={x} outside [{lo}, {hi}] for text of length {text.n}")


# -- kernels -----------------------------------------------------------------
# Kernels take a padded rank array ``r`` (see Text.ranked). Equal ranks mean
# equal symbols because every OrderSpec is a bijection.


@numba.njit(cache=True, inline="always")
def sym_cmp(r, a, b):
    """-1, 0 or 1 for the order of positions ``a`` and ``b``."""
    if r[a] < r[b]:
        return -1
    if r[a] > r[b]:
        return 1
    return 0


@numba.njit(cache=True)
def scan_right(r, n, i, j):
    """Longest common prefix of suffixes ``i`` and ``j`` (``n + 1`` = empty).

    Returns ``(length, order, comparisons)`` where ``order`` compares the
    whole suffixes ``S_i`` and ``S_j``.
    """
    ell = 0
    cmps = 0
    while i + ell <= n and j + ell <= n:
        cmps += 1
        c = sym_cmp(r, i + ell, j + ell)
        if c != 0:
            return ell, c, cmps
        ell += 1
    # one suffix ran out; the shorter one is its proper prefix, hence smaller
    if i + ell <= n:
        return ell, 1, cmps
    if j + ell <= n:
        return ell, -1, cmps
    return ell, 0, cmps


@numba.njit(cache=True)
def scan_left(r, i, j):
    """Longest common suffix of prefixes ``S[1..i]`` and ``S[1..j]`` (0 = empty).

    Returns ``(length, comparisons)``.
    """
    ell = 0
    cmps = 0
    while i - ell >= 1 and j - ell >= 1:
        cmps += 1
        if sym_cmp(r, i - ell, j - ell) != 0:
            break
        ell += 1
    return ell, cmps


# -- public operations --------------------------------------------------------


def compare_symbols(
    text: Text, a: int, b: int, order: OrderSpec, counter: ComparisonCounter
) -> Ordering:
    """Order of ``text[a]`` versus ``text[b]`` (1-based) under ``order``."""
    _check_position(text, a, 1, text.n, "a")
    _check_position(text, b, 1, text.n, "b")
    ranks = order.ranks
    counter.add(1)
    ra = ranks[text.symbols[a - 1]]
    rb = ranks[text.symbols[b - 1]]
    return Ordering.LT if ra < rb else Ordering.GT if ra > rb else Ordering.EQ


def naive_scan_rlce(
    text: Text, i: int, j: int, order: OrderSpec, counter: ComparisonCounter
) -> int:
    """Length of the common prefix of suffixes ``S_i`` and ``S_j``.

    Uses ``ell + 1`` comparisons, or ``ell`` if a suffix end is reached.
    """
    _check_position(text, i, 1, text.n + 1, "i")
    _check_position(text, j, 1, text.n + 1, "j")
    ell, _, cmps = scan_right(text.ranked(order), text.n, i, j)
    counter.add(cmps)
    return int(ell)


def naive_scan_llce(
    text: Text, i: int, j: int, order: OrderSpec, counter: ComparisonCounter
) -> int:
    """Length of the common suffix of prefixes ``S[1..i]`` and ``S[1..j]``."""
    _check_position(text, i, 0, text.n, "i")
    _check_position(text, j, 0, text.n, "j")
    ell, cmps = scan_left(text.ranked(order), i, j)
    counter.add(cmps)
    return int(ell)
