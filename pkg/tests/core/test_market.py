import pytest

from specmatch.core import (
    AgentId,
    MarketInstance,
    PreferenceList,
    Side,
    SpectrumProvider,
    SpectrumUser,
    sp,
    su,
    validate_instance,
)
from specmatch.errors import DuplicateInPreference, EmptySide, UnknownAgentId, ZeroQuota


def test_agent_labels():
    assert sp(0).label == "A"
    assert sp(2).label == "C"
    assert su(0).label == "SU1"
    assert str(su(3)) == "SU4"
    assert Side.SP.opposite is Side.SU


def test_agent_ids_order_and_equality():
    assert sp(0) == AgentId(Side.SP, 0)
    assert sp(0) != su(0)
    assert sorted([sp(2), sp(0), sp(1)]) == [sp(0), sp(1), sp(2)]
    with pytest.raises(ValueError):
        su(-1)


def test_preference_list_ranks():
    prefs = PreferenceList.of([sp(1), sp(0)])
    assert prefs.rank_of(sp(1)) == 1
    assert prefs.rank_of(sp(0)) == 2
    assert prefs.rank_of(sp(2)) is None
    assert sp(0) in prefs and sp(2) not in prefs
    assert str(prefs) == "(B, A)"


def test_preference_list_prefers_treats_unranked_as_worst():
    prefs = PreferenceList.of([su(0), su(1)])
    assert prefs.prefers(su(0), su(1))
    assert not prefs.prefers(su(1), su(0))
    assert prefs.prefers(su(1), su(2))
    assert prefs.prefers(su(1), None)
    assert not prefs.prefers(su(2), None)


def test_build_resolves_names(table2_instance):
    assert table2_instance.shape == (3, 3)
    assert table2_instance.provider(sp(1)).name == "B"
    assert table2_instance.user(su(2)).prefs.ranked == (sp(1), sp(2), sp(0))
    assert table2_instance.quotas == {sp(0): 1, sp(1): 1, sp(2): 1}


def test_build_rejects_unknown_names():
    with pytest.raises(UnknownAgentId):
        MarketInstance.build({"A": ["SU1"]}, {"SU1": ["D"]})


def test_table2_instance_is_valid(table2_instance):
    assert validate_instance(table2_instance) is table2_instance


def test_duplicate_in_provider_list():
    instance = MarketInstance.build(
        {"A": ["SU1", "SU1", "SU2"]}, {"SU1": ["A"], "SU2": ["A"]}
    )
    with pytest.raises(DuplicateInPreference):
        validate_instance(instance)


def test_unknown_provider_in_user_list():
    providers = (SpectrumProvider(sp(0), PreferenceList.of([su(0)])),)
    users = (SpectrumUser(su(0), PreferenceList.of([sp(3)])),)
    with pytest.raises(UnknownAgentId):
        validate_instance(MarketInstance(providers, users))


def test_wrong_side_in_list():
    providers = (SpectrumProvider(sp(0), PreferenceList.of([sp(0)])),)
    users = (SpectrumUser(su(0), PreferenceList.of([sp(0)])),)
    with pytest.raises(UnknownAgentId):
        validate_instance(MarketInstance(providers, users))


def test_misplaced_ids():
    providers = (SpectrumProvider(sp(1), PreferenceList()),)
    users = (SpectrumUser(su(0), PreferenceList()),)
    with pytest.raises(UnknownAgentId):
        validate_instance(MarketInstance(providers, users))


def test_zero_quota():
    instance = MarketInstance.build({"A": ["SU1"]}, {"SU1": ["A"]}, quotas={"A": 0})
    with pytest.raises(ZeroQuota):
        validate_instance(instance)


@pytest.mark.parametrize(
    "providers, users",
    [({}, {"SU1": []}), ({"A": []}, {})],
)
def test_empty_side(providers, users):
    with pytest.raises(EmptySide):
        validate_instance(MarketInstance.build(providers, users))


def test_as_one_to_one_drops_quotas(table3_fixed_quota2):
    single = table3_fixed_quota2.as_one_to_one()
    assert all(provider.quota == 1 for provider in single.providers)
    assert single.users == table3_fixed_quota2.users
    assert single.as_one_to_one() is single


def test_with_user_prefs(table2_instance):
    reversed_lists = [PreferenceList(tuple(reversed(u.prefs.ranked))) for u in table2_instance.users]
    changed = table2_instance.with_user_prefs(reversed_lists)
    assert changed.providers == table2_instance.providers
    assert changed.users[0].prefs.ranked == (sp(2), sp(1), sp(0))
    assert changed.users[0].name == "SU1"


def test_name_of_falls_back_to_label(table2_instance):
    assert table2_instance.name_of(sp(0)) == "A"
    assert table2_instance.name_of(su(7)) == "SU8"


def test_agents_default_to_their_label():
    provider = SpectrumProvider(sp(1), PreferenceList.of([su(0)]))
    user = SpectrumUser(su(2), PreferenceList.of([sp(1)]))
    named = SpectrumUser(su(2), PreferenceList.of([sp(1)]), name="campus")
    assert (provider.name, user.name, named.name) == ("B", "SU3", "campus")
