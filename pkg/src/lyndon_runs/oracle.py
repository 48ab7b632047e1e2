"""Slow reference implementations used as test referees.

Nothing here touches the numba kernels or the production tables. Symbols are
mapped to their ranks with ``bytes.translate`` so that plain ``bytes``
comparison coincides with the requested order.
"""

from __future__ import annotations

from .runs_enum import Direction, Run
from .text_core import ContractViolation, OrderSpec, Text

MAX_ORACLE_N = 4096


class OracleLimitError(ContractViolation):
    """Input too long for a quadratic or cubic reference computation."""


def _guard(text: Text, limit: int = MAX_ORACLE_N) -> None:
    if text.n > limit:
        raise OracleLimitError(f"oracle refuses n={text.n} > {limit}")


def _in_order(text: Text, order: OrderSpec) -> bytes:
    return text.symbols.translate(bytes(order.ranks.tolist()))


def oracle_nss(text: Text, order: OrderSpec | None = None) -> list[int]:
    """nss[i] = least j > i with S_j smaller than S_i, or n + 1 (1-based)."""
    _guard(text)
    s = _in_order(text, order or OrderSpec.natural())
    n = len(s)
    out = []
    for i in range(n):
        j = i + 1
        while j < n and not s[j:] < s[i:]:
            j += 1
        out.append(j + 1)
    return out


def oracle_lce(text: Text, i: int, j: int, side: str) -> int:
    """Right: common prefix of S_i, S_j. Left: common suffix of S[1..i], S[1..j]."""
    _guard(text)
    s = text.symbols
    if side == "right":
        a, b = s[i - 1:], s[j - 1:]
        ell = 0
        while ell < min(len(a), len(b)) and a[ell] == b[ell]:
            ell += 1
        return ell
    if side == "left":
        a, b = s[:i], s[:j]
        ell = 0
        while ell < min(len(a), len(b)) and a[len(a) - 1 - ell] == b[len(b) - 1 - ell]:
            ell += 1
        return ell
    raise ContractViolation(f"side must be 'left' or 'right', not {side!r}")


def minimal_period(text: Text, i: int, j: int) -> int:
    """Smallest p >= 1 with S[x] = S[x + p] for all x in [i, j - p]."""
    if not 1 <= i <= j <= text.n:
        raise ContractViolation(f"need 1 <= i <= j <= n, got i={i}, j={j}")
    w = text.symbols[i - 1:j]
    for p in range(1, len(w)):
        if w[p:] == w[:-p]:
            return p
    return len(w)


def is_lyndon(text: Text, i: int, j: int, order: OrderSpec | None = None) -> bool:
    """Strictly smaller than every non-trivial cyclic shift."""
    if not 1 <= i <= j <= text.n:
        raise ContractViolation(f"need 1 <= i <= j <= n, got i={i}, j={j}")
    w = _in_order(text, order or OrderSpec.natural())[i - 1:j]
    return all(w < w[k:] + w[:k] for k in range(1, len(w)))


def is_lyndon_by_suffixes(text: Text, i: int, j: int, order: OrderSpec | None = None) -> bool:
    """Alternative characterisation: smaller than each of its proper suffixes."""
    if not 1 <= i <= j <= text.n:
        raise ContractViolation(f"need 1 <= i <= j <= n, got i={i}, j={j}")
    w = _in_order(text, order or OrderSpec.natural())[i - 1:j]
    return all(w < w[k:] for k in range(1, len(w)))


def _least_rotation(w: bytes) -> int:
    return min(range(len(w)), key=lambda k: w[k:] + w[:k])


def oracle_run_triples(text: Text) -> list[tuple[int, int, int]]:
    """All runs as sorted ``(start, end, period)`` triples.

    For each candidate period p, every maximal stretch of positions x with
    S[x] = S[x + p] spans a maximal p-periodic substring; it is a run when it
    covers two periods and p is its shortest period.
    """
    _guard(text)
    s = text.symbols
    n = len(s)
    found = []
    for p in range(1, n // 2 + 1):
        x = 0
        while x + p < n:
            if s[x] != s[x + p]:
                x += 1
                continue
            y = x
            while y + p < n and s[y] == s[y + p]:
                y += 1
            # 0-based: S[x .. y + p - 1] has period p and cannot be extended
            i, j = x + 1, y + p
            if j - i + 1 >= 2 * p and minimal_period(text, i, j) == p:
                found.append((i, j, p))
            x = y + 1
    return sorted(found)


def label_runs(
    text: Text, triples: list[tuple[int, int, int]], order: OrderSpec | None = None
) -> list[Run]:
    """Attach direction and root under ``order`` to run triples.

    ``direction`` compares S_i with S_{i+p}; ``root`` is the start of the
    least rotation of the period, taken in the order under which the run
    decreases.
    """
    order = order or OrderSpec.natural()
    fwd = _in_order(text, order)
    bwd = _in_order(text, order.reverse())
    out = []
    for i, j, p in triples:
        decreasing = fwd[i - 1:] > fwd[i - 1 + p:]
        ranked = fwd if decreasing else bwd
        root = i + _least_rotation(ranked[i - 1:i - 1 + p])
        out.append(Run(i, j, p, root, Direction.DECREASING if decreasing else Direction.INCREASING))
    return out


def oracle_runs(text: Text, order: OrderSpec | None = None) -> list[Run]:
    """All runs with direction and root under ``order``, sorted by (start, end, period)."""
    return label_runs(text, oracle_run_triples(text), order)
