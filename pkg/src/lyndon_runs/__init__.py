"""All runs of a byte string in linear time over a general ordered alphabet."""

from .gen import enumerate_all, gen_fibonacci, gen_random, gen_thue_morse
from .lce_engine import LceTables, compute_all_llce, compute_all_rlce, compute_tables
from .nss_lyndon import NssArray, compute_nss_interleaved, compute_nss_two_phase, lyndon_lengths
from .runs_enum import Direction, Run, RunStats, all_runs, classify_run, compute_runs, decreasing_runs, run_stats
from .text_core import ComparisonCounter, ContractViolation, OrderSpec, Ordering, Text

__all__ = [
    "ComparisonCounter",
    "ContractViolation",
    "Direction",
    "LceTables",
    "NssArray",
    "OrderSpec",
    "Ordering",
    "Run",
    "RunStats",
    "Text",
    "all_runs",
    "classify_run",
    "compute_all_llce",
    "compute_all_rlce",
    "compute_nss_interleaved",
    "compute_nss_two_phase",
    "compute_runs",
    "compute_tables",
    "decreasing_runs",
    "enumerate_all",
    "gen_fibonacci",
    "gen_random",
    "gen_thue_morse",
    "lyndon_lengths",
    "run_stats",
]
