from hypothesis import given, settings
from strategies import markets

from specmatch.core import (
    MarketInstance,
    Matching,
    Schedule,
    da_one_to_one,
    gale_shapley_many_to_one,
    is_stable,
    propose_by_index,
    provider_rank_table,
    rank_of_match,
    run_deferred_acceptance,
    sp,
    su,
)
from specmatch.core.events import Exhausted, Hold, Propose, Reject, RoundEnd
from specmatch.core.matching import UNMATCHED


def test_licensee_example(eq4_instance):
    matching = da_one_to_one(eq4_instance)
    assert matching == Matching.from_pairs([(su(0), sp(0)), (su(2), sp(1)), (su(1), sp(2))])
    assert matching.provider_of(su(3)) is None


def test_licensee_example_ranks(eq4_instance):
    matching = da_one_to_one(eq4_instance)
    assert rank_of_match(su(0), matching, eq4_instance) == 1
    assert rank_of_match(su(1), matching, eq4_instance) == 3
    assert rank_of_match(su(2), matching, eq4_instance) == 1
    assert rank_of_match(su(3), matching, eq4_instance) is UNMATCHED


def test_licensee_example_event_stream(eq4_instance):
    events = []
    run = run_deferred_acceptance(eq4_instance, one_to_one=True, observer=events.append)

    first_round = [e for e in events if isinstance(e, Propose) and e.round == 1]
    assert [(e.user, e.provider) for e in first_round] == [
        (su(0), sp(0)),
        (su(1), sp(1)),
        (su(2), sp(1)),
        (su(3), sp(0)),
    ]
    assert Reject(1, sp(0), su(3), released=False) in events
    assert Reject(1, sp(1), su(1), released=False) in events
    # C gives up SU4 once SU2 asks.
    assert Reject(3, sp(2), su(3), released=True) in events
    assert Hold(3, sp(2), (su(1),)) in events
    assert events[-2] == Exhausted(5, su(3))
    assert events[-1] == RoundEnd(5, run.proposals)
    assert run.rounds == 5
    assert run.proposals == 8


def test_single_pair():
    instance = MarketInstance.build({"A": ["SU1"]}, {"SU1": ["A"]})
    assert da_one_to_one(instance) == Matching.from_pairs([(su(0), sp(0))])


def test_aligned_instance_gives_identity():
    instance = MarketInstance.build(
        {"A": ["SU1", "SU2", "SU3"], "B": ["SU2", "SU3", "SU1"], "C": ["SU3", "SU1", "SU2"]},
        {"SU1": ["A", "C", "B"], "SU2": ["B", "A", "C"], "SU3": ["C", "B", "A"]},
    )
    assert da_one_to_one(instance) == Matching.from_pairs(
        [(su(0), sp(0)), (su(1), sp(1)), (su(2), sp(2))]
    )


def test_providers_reject_unlisted_users():
    instance = MarketInstance.build({"A": ["SU2"]}, {"SU1": ["A"], "SU2": []})
    run = run_deferred_acceptance(instance)
    assert run.matching == Matching()
    assert run.proposals == 1


def test_quota_two_everywhere(table3_fixed_quota2):
    matching = gale_shapley_many_to_one(table3_fixed_quota2)
    assert matching.users_of(sp(0)) == {su(0), su(3)}
    assert matching.users_of(sp(1)) == {su(1), su(2)}
    assert all(matching.provider_of(user.id) is not None for user in table3_fixed_quota2.users)


def test_quota_ignored_by_one_to_one(table3_fixed_quota2):
    matching = da_one_to_one(table3_fixed_quota2)
    assert all(len(users) <= 1 for users in matching.sp_to_sus.values())
    assert is_stable(table3_fixed_quota2, matching, one_to_one=True)


def test_single_provider_with_room_for_everyone():
    instance = MarketInstance.build(
        {"A": ["SU3", "SU1", "SU2"]},
        {"SU1": ["A"], "SU2": ["A"], "SU3": ["A"]},
        quotas={"A": 3},
    )
    matching = gale_shapley_many_to_one(instance)
    assert matching.users_of(sp(0)) == {su(0), su(1), su(2)}


def test_deterministic(eq4_instance):
    assert da_one_to_one(eq4_instance) == da_one_to_one(eq4_instance)


@given(markets())
@settings(max_examples=2000, deadline=None)
def test_outputs_are_stable(instance):
    one = da_one_to_one(instance)
    many = gale_shapley_many_to_one(instance)
    assert is_stable(instance, one, one_to_one=True)
    assert is_stable(instance, many)


@given(markets(max_quota=1))
@settings(max_examples=1500, deadline=None)
def test_unit_quotas_reduce_to_one_to_one(instance):
    assert gale_shapley_many_to_one(instance) == da_one_to_one(instance)


@given(markets())
@settings(max_examples=1500, deadline=None)
def test_one_to_one_ignores_quotas(instance):
    assert da_one_to_one(instance) == da_one_to_one(instance.as_one_to_one())


@given(markets())
@settings(max_examples=2000, deadline=None)
def test_schedule_does_not_change_outcome(instance):
    for one_to_one in (True, False):
        rounds = run_deferred_acceptance(instance, one_to_one=one_to_one)
        sequential = run_deferred_acceptance(
            instance, one_to_one=one_to_one, schedule=Schedule.SEQUENTIAL
        )
        assert rounds.matching == sequential.matching


@given(markets())
@settings(max_examples=1500, deadline=None)
def test_proposals_bounded(instance):
    users, providers = instance.shape
    for schedule in Schedule:
        run = run_deferred_acceptance(instance, schedule=schedule)
        assert run.proposals <= users * providers


@given(markets())
@settings(max_examples=1500, deadline=None)
def test_outputs_respect_quotas_and_lists(instance):
    matching = gale_shapley_many_to_one(instance)
    matching.check(instance)
    for user, provider in matching.pairs:
        assert provider in instance.user(user).prefs
        assert user in instance.provider(provider).prefs


@given(markets())
@settings(max_examples=500, deadline=None)
def test_rejections_only_grow_and_holds_fit(instance):
    rejected: dict = {}
    quotas = instance.quotas

    def observe(event):
        match event:
            case Reject(provider=provider, user=user):
                assert provider not in rejected.setdefault(user, set())
                rejected[user].add(provider)
            case Hold(provider=provider, users=users):
                assert len(users) <= quotas[provider]
                ranks = [instance.provider(provider).prefs.rank_of(u) for u in users]
                assert ranks == sorted(ranks)

    run_deferred_acceptance(instance, observer=observe)


def _index_matching(instance, one_to_one):
    user_lists = [[p.index for p in user.prefs] for user in instance.users]
    quotas = [1 if one_to_one else p.quota for p in instance.providers]
    positions = propose_by_index(
        user_lists, provider_rank_table(instance.providers, len(instance.users)), quotas
    )
    return Matching.from_pairs(
        (su(i), sp(prefs[position]))
        for i, (prefs, position) in enumerate(zip(user_lists, positions))
        if position < len(prefs)
    )


def test_index_kernel_on_licensee_example(eq4_instance):
    user_lists = [[p.index for p in user.prefs] for user in eq4_instance.users]
    ranks = provider_rank_table(eq4_instance.providers, 4)
    assert ranks[0] == [0, 1, 3, 2]
    # SU4 exhausts its three providers.
    assert propose_by_index(user_lists, ranks, [1, 1, 1]) == [0, 2, 0, 3]


@given(markets())
@settings(max_examples=2000, deadline=None)
def test_index_kernel_agrees_with_deferred_acceptance(instance):
    assert _index_matching(instance, True) == da_one_to_one(instance)
    assert _index_matching(instance, False) == gale_shapley_many_to_one(instance)
