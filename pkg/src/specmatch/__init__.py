__version__ = "0.1.0"

from .core import (
    MarketInstance,
    Matching,
    PreferenceList,
    SpectrumProvider,
    SpectrumUser,
    da_one_to_one,
    enumerate_stable_matchings,
    find_blocking_pairs,
    gale_shapley_many_to_one,
    is_stable,
    rank_of_match,
)
from .modes import ExperimentMode
from .scenario import ScenarioTemplate, builtin_scenarios, instantiate, load_scenario
from .simulation import AllocationStats, StatsReport, merge, run_exhaustive, run_monte_carlo

__all__ = [
    "AllocationStats",
    "ExperimentMode",
    "MarketInstance",
    "Matching",
    "PreferenceList",
    "ScenarioTemplate",
    "SpectrumProvider",
    "SpectrumUser",
    "StatsReport",
    "builtin_scenarios",
    "da_one_to_one",
    "enumerate_stable_matchings",
    "find_blocking_pairs",
    "gale_shapley_many_to_one",
    "instantiate",
    "is_stable",
    "load_scenario",
    "merge",
    "rank_of_match",
    "run_exhaustive",
    "run_monte_carlo",
]
