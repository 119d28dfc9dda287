from specmatch.modes import ExperimentMode

from .checks import InstantCheck, PriorityGuarantee
from .exhaustive import MAX_PROFILES, profile_space, run_exhaustive
from .monte_carlo import (
    DEFAULT_INSTANTS,
    DEFAULT_SEED,
    run_monte_carlo,
    run_shard,
    shard_ranges,
)
from .report import from_csv, from_json, render, to_csv, to_json, write_report
from .solve import check_mode, solve
from .stats import AllocationStats, StatsReport, StatsRow, merge

__all__ = [
    "AllocationStats",
    "DEFAULT_INSTANTS",
    "DEFAULT_SEED",
    "ExperimentMode",
    "InstantCheck",
    "MAX_PROFILES",
    "PriorityGuarantee",
    "StatsReport",
    "StatsRow",
    "check_mode",
    "from_csv",
    "from_json",
    "merge",
    "profile_space",
    "render",
    "run_exhaustive",
    "run_monte_carlo",
    "run_shard",
    "shard_ranges",
    "solve",
    "to_csv",
    "to_json",
    "write_report",
]
