"""Command-line front end.

    lyndon-runs runs   [INPUT] [--stats] [--direction] [--order ORDER]
    lyndon-runs nss    [INPUT] [--order ORDER]
    lyndon-runs verify [INPUT] [--max-oracle-n N]
    lyndon-runs gen    --family F [--k K] [--len N] [--sigma S] [--seed X] [-o OUT]
    lyndon-runs bench  [PATH ...] [--repeat R] [--family F --k K ...]

INPUT is a file path or ``-`` (default) for standard input, read as raw bytes.
Output is tab-separated ASCII with 1-based inclusive coordinates.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass

import numba
import numpy as np

from . import gen
from .lce_engine import compute_all_llce
from .nss_lyndon import compute_nss_interleaved, lyndon_lengths
from .oracle import MAX_ORACLE_N, oracle_lce, oracle_nss, oracle_runs
from .runs_enum import compute_runs, run_stats
from .text_core import ComparisonCounter, ContractViolation, OrderSpec, Text

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@numba.njit(cache=True)
def _tsv_kernel(rows, dirs, with_dir):
    m, k = rows.shape
    out = np.empty(m * (k * 11 + 5) + 1, dtype=np.uint8)
    digits = np.empty(20, dtype=np.uint8)
    pos = 0
    for a in range(m):
        for b in range(k):
            v = rows[a, b]
            nd = 0
            while True:
                digits[nd] = 48 + v % 10
                nd += 1
                v //= 10
                if v == 0:
                    break
            for t in range(nd - 1, -1, -1):
                out[pos] = digits[t]
                pos += 1
            out[pos] = 9 if b + 1 < k or with_dir else 10
            pos += 1
        if with_dir:
            # "dec" or "inc"
            if dirs[a] > 0:
                out[pos] = 100
                out[pos + 1] = 101
                out[pos + 2] = 99
            else:
                out[pos] = 105
                out[pos + 1] = 110
                out[pos + 2] = 99
            out[pos + 3] = 10
            pos += 4
    return out[:pos]


def format_tsv(columns: list[np.ndarray], directions: np.ndarray | None = None) -> bytes:
    """Rows of non-negative integers as ``a<TAB>b...<LF>``, optional dec/inc column."""
    m = len(columns[0]) if columns else 0
    if m == 0:
        return b""
    rows = np.ascontiguousarray(np.column_stack(columns).astype(np.int64))
    dirs = directions if directions is not None else np.zeros(m, dtype=np.int8)
    return _tsv_kernel(rows, dirs.astype(np.int8), directions is not None).tobytes()


def read_input(path: str | None) -> Text:
    if path is None or path == "-":
        return Text(sys.stdin.buffer.read())
    return Text.from_file(path)


def _tenths(value: float) -> str:
    """Truncate to one decimal place."""
    t = int(value * 10 + 1e-9)
    return f"{t // 10}.{t % 10}"


def _runs_per_100n(count: int, n: int) -> str:
    if n == 0:
        return "0.0"
    t = 1000 * count // n
    return f"{t // 10}.{t % 10}"


def stats_line(stats) -> str:
    return (
        f"n={stats.n} runs={stats.run_count} "
        f"runs_per_100n={_runs_per_100n(stats.run_count, stats.n)} "
        f"comparisons={stats.comparisons} mibps={_tenths(stats.mibps)}"
    )


# -- commands -----------------------------------------------------------------


def cmd_runs(args) -> int:
    text = read_input(args.input)
    order = OrderSpec.parse(args.order)
    counter = ComparisonCounter()
    t0 = time.perf_counter()
    runs = compute_runs(text, order, counter)
    elapsed = time.perf_counter() - t0
    out = format_tsv(
        [runs.start, runs.end, runs.period], runs.direction if args.direction else None
    )
    sys.stdout.buffer.write(out)
    sys.stdout.buffer.flush()
    if args.stats:
        print(stats_line(run_stats(text, len(runs), counter, elapsed)), file=sys.stderr)
    return EXIT_OK


def cmd_nss(args) -> int:
    text = read_input(args.input)
    order = OrderSpec.parse(args.order)
    nss, _ = compute_nss_interleaved(text, order)
    positions = np.arange(1, text.n + 1)
    sys.stdout.buffer.write(format_tsv([positions, nss.values, lyndon_lengths(nss)]))
    return EXIT_OK


@dataclass(frozen=True)
class Mismatch:
    kind: str
    order: str
    position: int
    expected: object
    actual: object

    def line(self) -> str:
        return f"{self.kind}\t{self.order}\t{self.position}\texpected={self.expected}\tactual={self.actual}"


def verify_text(text: Text) -> list[Mismatch]:
    """Compare production NSS, R-LCE, L-LCE and runs with the oracles."""
    diffs = []
    for name, order in (("natural", OrderSpec.natural()), ("reversed", OrderSpec.reversed_order())):
        nss, rl = compute_nss_interleaved(text, order)
        ll = compute_all_llce(text, nss, order)
        want = oracle_nss(text, order)
        got = nss.tolist()
        for i in range(1, text.n + 1):
            if got[i - 1] != want[i - 1]:
                diffs.append(Mismatch("nss", name, i, want[i - 1], got[i - 1]))
                continue
            j = want[i - 1]
            if j == text.n + 1:
                continue
            exp_r, exp_l = oracle_lce(text, i, j, "right"), oracle_lce(text, i, j, "left")
            if rl[i - 1] != exp_r:
                diffs.append(Mismatch("rlce", name, i, exp_r, int(rl[i - 1])))
            if ll[i - 1] != exp_l:
                diffs.append(Mismatch("llce", name, i, exp_l, int(ll[i - 1])))
    got_runs = compute_runs(text).to_runs()
    want_runs = oracle_runs(text)
    for run in sorted(set(want_runs) - set(got_runs)):
        diffs.append(Mismatch("run", "missing", run.start, run, None))
    for run in sorted(set(got_runs) - set(want_runs)):
        diffs.append(Mismatch("run", "extra", run.start, None, run))
    return diffs


def cmd_verify(args) -> int:
    text = read_input(args.input)
    cap = min(args.max_oracle_n, MAX_ORACLE_N)
    if text.n > cap:
        print(f"verify: input has {text.n} symbols, limit is {cap}", file=sys.stderr)
        return EXIT_USAGE
    diffs = verify_text(text)
    for diff in diffs:
        print(diff.line())
    if diffs:
        print(f"verify: {len(diffs)} mismatches", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _spec_from_args(args) -> gen.GenSpec:
    return gen.GenSpec(
        family=args.family,
        k=args.k,
        length=args.len,
        sigma=args.sigma,
        seed=args.seed,
        literal=(args.root or "").encode("latin-1"),
    )


def cmd_gen(args) -> int:
    text = gen.generate(_spec_from_args(args))
    if args.output and args.output != "-":
        with open(args.output, "wb") as fh:
            fh.write(text.symbols)
    else:
        sys.stdout.buffer.write(text.symbols)
    return EXIT_OK


def bench_text(text: Text, repeat: int, order: OrderSpec) -> tuple[int, int, float]:
    """Returns (run count, comparisons, median seconds) over ``repeat`` timings."""
    timings = []
    count = cmps = 0
    for _ in range(repeat):
        counter = ComparisonCounter()
        t0 = time.perf_counter()
        count = len(compute_runs(text, order, counter))
        timings.append(time.perf_counter() - t0)
        cmps = counter.count
    return count, cmps, statistics.median(timings)


def cmd_bench(args) -> int:
    if args.repeat < 1:
        print("bench: --repeat must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    order = OrderSpec.parse(args.order)
    inputs = [(path, None) for path in args.paths]
    if args.family:
        spec = _spec_from_args(args)
        inputs.append((f"{spec.family}(k={spec.k},len={spec.length})", spec))
    if not inputs:
        print("bench: no inputs", file=sys.stderr)
        return EXIT_USAGE
    print("text\tn\truns/100n\tMiB/s\tcmp/n")
    failed = 0
    for name, spec in inputs:
        try:
            text = gen.generate(spec) if spec else Text.from_file(name)
            count, cmps, seconds = bench_text(text, args.repeat, order)
        except (OSError, ContractViolation) as exc:
            print(f"bench: {name}: {exc}", file=sys.stderr)
            failed += 1
            continue
        n = text.n
        mibps = n / seconds / (1 << 20) if seconds > 0 else 0.0
        per_n = cmps / n if n else 0.0
        print(f"{name}\t{n}\t{_runs_per_100n(count, n)}\t{_tenths(mibps)}\t{_tenths(per_n)}")
        sys.stdout.flush()
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lyndon-runs", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")

    def add_order(p):
        p.add_argument("--order", default="natural", help="natural | reversed | perm:<file>")

    def add_gen_flags(p, required):
        p.add_argument("--family", choices=gen.FAMILIES, required=required)
        p.add_argument("--k", type=int, default=0, help="order of the Fibonacci/Thue-Morse word")
        p.add_argument("--len", type=int, default=None, help="length (truncates word families)")
        p.add_argument("--sigma", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--root", default=None, help="period for 'periodic', text for 'literal'")

    p = sub.add_parser("runs", help="print all runs as start, end, period")
    add_input(p)
    add_order(p)
    p.add_argument("--stats", action="store_true", help="summary line on stderr")
    p.add_argument("--direction", action="store_true", help="add a dec/inc column")
    p.set_defaults(func=cmd_runs)

    p = sub.add_parser("nss", help="print i, nss[i], Lyndon length")
    add_input(p)
    add_order(p)
    p.set_defaults(func=cmd_nss)

    p = sub.add_parser("verify", help="check against the brute-force oracles")
    add_input(p)
    p.add_argument("--max-oracle-n", type=int, default=MAX_ORACLE_N)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated text as raw bytes")
    add_gen_flags(p, required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="throughput table (median of --repeat timings)")
    p.add_argument("paths", nargs="*")
    p.add_argument("--repeat", type=int, default=5)
    add_order(p)
    add_gen_flags(p, required=False)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"lyndon-runs: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContractViolation as exc:
        print(f"lyndon-runs: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
