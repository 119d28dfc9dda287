from .agents import AgentId, PreferenceList, Side, SpectrumProvider, SpectrumUser, sp, su
from .deferred_acceptance import (
    UNLISTED,
    DeferredAcceptanceRun,
    ProposalState,
    Schedule,
    da_one_to_one,
    gale_shapley_many_to_one,
    propose_by_index,
    provider_rank_table,
    run_deferred_acceptance,
)
from .enumeration import enumerate_stable_matchings, is_su_optimal
from .market import MarketInstance, validate_instance
from .matching import UNMATCHED, Matching, Unmatched
from .stability import find_blocking_pairs, is_stable, rank_of_match, rank_or_sentinel

__all__ = [
    "AgentId",
    "DeferredAcceptanceRun",
    "MarketInstance",
    "Matching",
    "PreferenceList",
    "ProposalState",
    "Schedule",
    "Side",
    "SpectrumProvider",
    "SpectrumUser",
    "UNLISTED",
    "UNMATCHED",
    "Unmatched",
    "da_one_to_one",
    "enumerate_stable_matchings",
    "find_blocking_pairs",
    "gale_shapley_many_to_one",
    "is_stable",
    "is_su_optimal",
    "propose_by_index",
    "provider_rank_table",
    "rank_of_match",
    "rank_or_sentinel",
    "run_deferred_acceptance",
    "sp",
    "su",
    "validate_instance",
]
