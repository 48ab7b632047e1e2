import functools

from lyndon_runs.oracle import minimal_period, oracle_lce, oracle_nss
from lyndon_runs.text_core import Text

# 35 symbols; run <5, 31, 7> with root 8 and nss[8] = 15
WORKED = b"aaaa" + b"abcabab" * 3 + b"abcaba" + b"aaaa"

_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


def criterion(number: int, title: str):
    """Record a PASS/FAIL line for an acceptance test, printed at session end."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                _ACCEPTANCE[number] = ("FAIL", title, f"{type(exc).__name__}: {exc}".splitlines()[0])
                raise
            _ACCEPTANCE[number] = ("PASS", title, detail or "")

        return run

    return wrap


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, detail = _ACCEPTANCE[number]
        line = f"[{status}] {number}. {title}"
        terminalreporter.write_line(f"{line} -- {detail}" if detail else line)


def oracle_tables(text: Text, order=None):
    """Brute-force nss, rlce, llce lists (rlce/llce = -1 where nss = n + 1)."""
    nss = oracle_nss(text, order)
    rl, ll = [], []
    for i, j in enumerate(nss, start=1):
        if j == text.n + 1:
            rl.append(-1)
            ll.append(-1)
        else:
            rl.append(oracle_lce(text, i, j, "right"))
            ll.append(oracle_lce(text, i, j, "left"))
    return nss, rl, ll


def literal_runs(s: bytes) -> set[tuple[int, int, int]]:
    """Runs by enumerating every substring (cubic; tiny inputs only)."""
    text = Text(s)
    n = len(s)
    out = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = minimal_period(text, i, j)
            if j - i + 1 < 2 * p:
                continue
            if i > 1 and minimal_period(text, i - 1, j) == p:
                continue
            if j < n and minimal_period(text, i, j + 1) == p:
                continue
            out.add((i, j, p))
    return out
