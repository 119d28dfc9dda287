import pytest
from hypothesis import given, settings
from strategies import markets

from specmatch.core import (
    MarketInstance,
    Matching,
    da_one_to_one,
    enumerate_stable_matchings,
    find_blocking_pairs,
    gale_shapley_many_to_one,
    is_stable,
    is_su_optimal,
    rank_of_match,
    rank_or_sentinel,
    sp,
    su,
)
from specmatch.core.enumeration import MAX_CANDIDATES, candidate_count
from specmatch.errors import (
    InconsistentMatching,
    InstanceTooLarge,
    MatchNotInPreferenceList,
    UnknownAgentId,
)


def test_deferred_acceptance_output_has_no_blocking_pair(table2_instance):
    assert find_blocking_pairs(table2_instance, da_one_to_one(table2_instance)) == []


def test_rotated_matching_is_blocked(table2_instance):
    matching = Matching.from_pairs([(su(2), sp(0)), (su(0), sp(1)), (su(1), sp(2))])
    blocking = find_blocking_pairs(table2_instance, matching)
    assert (su(0), sp(0)) in blocking
    assert not is_stable(table2_instance, matching)


def test_empty_matching_is_blocked(table2_instance):
    assert find_blocking_pairs(table2_instance, Matching())


def test_unlisted_user_does_not_block():
    instance = MarketInstance.build({"A": ["SU2"]}, {"SU1": ["A"], "SU2": []})
    assert find_blocking_pairs(instance, Matching()) == []


def test_free_slot_blocks(table3_fixed_quota2):
    # A holds only SU2 but has room for SU1, who prefers A.
    matching = Matching.from_pairs(
        [(su(0), sp(1)), (su(1), sp(0)), (su(2), sp(1)), (su(3), sp(2))]
    )
    assert (su(0), sp(0)) in find_blocking_pairs(table3_fixed_quota2, matching)


def test_inconsistent_matching_is_reported(table2_instance):
    with pytest.raises(InconsistentMatching):
        find_blocking_pairs(table2_instance, Matching.from_pairs([(su(0), sp(0)), (su(1), sp(0))]))


def test_rank_of_match_errors(eq4_instance):
    with pytest.raises(UnknownAgentId):
        rank_of_match(su(9), Matching(), eq4_instance)
    with pytest.raises(UnknownAgentId):
        rank_of_match(sp(0), Matching(), eq4_instance)
    partial = MarketInstance.build({"A": ["SU1"], "B": ["SU1"]}, {"SU1": ["A"]})
    with pytest.raises(MatchNotInPreferenceList):
        rank_of_match(su(0), Matching.from_pairs([(su(0), sp(1))]), partial)


def test_rank_or_sentinel(eq4_instance):
    matching = da_one_to_one(eq4_instance)
    assert rank_or_sentinel(su(1), matching, eq4_instance) == 3
    assert rank_or_sentinel(su(3), matching, eq4_instance) == 4


def test_single_pair_has_one_stable_matching():
    instance = MarketInstance.build({"A": ["SU1"]}, {"SU1": ["A"]})
    assert enumerate_stable_matchings(instance) == {Matching.from_pairs([(su(0), sp(0))])}


def test_aligned_instance_contains_identity():
    instance = MarketInstance.build(
        {"A": ["SU1", "SU2", "SU3"], "B": ["SU2", "SU3", "SU1"], "C": ["SU3", "SU1", "SU2"]},
        {"SU1": ["A", "C", "B"], "SU2": ["B", "A", "C"], "SU3": ["C", "B", "A"]},
    )
    identity = Matching.from_pairs([(su(0), sp(0)), (su(1), sp(1)), (su(2), sp(2))])
    assert identity in enumerate_stable_matchings(instance)


def test_symmetric_providers_cross_check():
    instance = MarketInstance.build(
        {"A": ["SU1", "SU2", "SU3"], "B": ["SU2", "SU3", "SU1"], "C": ["SU3", "SU1", "SU2"]},
        {"SU1": ["A", "B", "C"], "SU2": ["B", "A", "C"], "SU3": ["C", "B", "A"]},
    )
    stable = enumerate_stable_matchings(instance)
    matching = da_one_to_one(instance)
    assert matching in stable
    assert is_su_optimal(instance, matching, stable)


def test_enumeration_guard():
    names = [f"SU{n}" for n in range(1, 9)]
    providers = {chr(ord("A") + m): names for m in range(8)}
    users = {name: list(providers) for name in names}
    instance = MarketInstance.build(providers, users)
    assert candidate_count(instance) == 9**8 > MAX_CANDIDATES
    with pytest.raises(InstanceTooLarge):
        enumerate_stable_matchings(instance)


def test_enumeration_counts_only_mutually_acceptable_pairs():
    instance = MarketInstance.build({"A": ["SU1"], "B": []}, {"SU1": ["A", "B"], "SU2": ["A"]})
    assert candidate_count(instance) == 2


@given(markets(max_users=4, max_providers=4, max_quota=1, complete=True, min_size=2))
@settings(max_examples=1000, deadline=None)
def test_deferred_acceptance_is_user_optimal(instance):
    stable = enumerate_stable_matchings(instance)
    matching = da_one_to_one(instance)
    assert stable
    assert matching in stable
    assert is_su_optimal(instance, matching, stable)


@given(markets(max_users=4, max_providers=4))
@settings(max_examples=500, deadline=None)
def test_deferred_acceptance_is_user_optimal_with_quotas_and_partial_lists(instance):
    one = enumerate_stable_matchings(instance, one_to_one=True)
    many = enumerate_stable_matchings(instance)
    assert da_one_to_one(instance) in one
    assert is_su_optimal(instance, da_one_to_one(instance), one)
    matching = gale_shapley_many_to_one(instance)
    assert matching in many
    assert is_su_optimal(instance, matching, many)
