import json

import pytest

from specmatch.core import sp, su
from specmatch.errors import ScenarioFormatError, UnknownLabel
from specmatch.modes import ExperimentMode
from specmatch.scenario import (
    UniformRandom,
    builtin_scenarios,
    dumps_scenario,
    get_builtin,
    load_scenario,
    loads_scenario,
    move_to_position,
    resolve_scenario,
    save_scenario,
)


def provider_lists(template):
    return {p.name: tuple(u.label for u in p.prefs) for p in template.providers}


def test_labels():
    assert set(builtin_scenarios()) == {
        "table2-1to1",
        "table2-spB-variant",
        "eq4-cbrs",
        "eq4-cbrs-random",
        "table3-1to1",
        "table3-quota2-all",
        "table3-quotaA2",
        "fig8-sweep-4",
        "fig8-sweep-3",
        "fig8-sweep-2",
    }


def test_symmetric_market():
    template = get_builtin("table2-1to1")
    assert provider_lists(template) == {
        "A": ("SU1", "SU2", "SU3"),
        "B": ("SU2", "SU3", "SU1"),
        "C": ("SU3", "SU1", "SU2"),
    }
    assert all(p.quota == 1 for p in template.providers)
    assert all(isinstance(u.policy, UniformRandom) for u in template.users)
    assert template.mode is ExperimentMode.ONE_TO_ONE_DA


def test_favoured_variant_changes_only_b():
    variant = provider_lists(get_builtin("table2-spB-variant"))
    assert variant["B"] == ("SU1", "SU3", "SU2")
    assert variant["A"] == provider_lists(get_builtin("table2-1to1"))["A"]


def test_quota_scenarios():
    assert [p.quota for p in get_builtin("table3-quotaA2").providers] == [2, 1, 1]
    assert [p.quota for p in get_builtin("table3-quota2-all").providers] == [2, 2, 2]
    assert get_builtin("table3-quotaA2").mode is ExperimentMode.MANY_TO_ONE_GS


def test_licensee_scenario(eq4_instance):
    assert provider_lists(get_builtin("eq4-cbrs")) == {
        "A": ("SU1", "SU2", "SU4", "SU3"),
        "B": ("SU3", "SU4", "SU1", "SU2"),
        "C": ("SU1", "SU3", "SU2", "SU4"),
    }
    assert eq4_instance.user(su(3)).prefs.ranked == (sp(0), sp(2), sp(1))
    assert provider_lists(get_builtin("eq4-cbrs-random")) == provider_lists(
        get_builtin("eq4-cbrs")
    )


@pytest.mark.parametrize("position", [4, 3, 2])
def test_sweep_moves_su2_in_c(position):
    lists = provider_lists(get_builtin(f"fig8-sweep-{position}"))
    assert lists["C"].index("SU2") == position - 1
    assert [u for u in lists["C"] if u != "SU2"] == ["SU3", "SU4", "SU1"]
    assert lists["A"] == ("SU1", "SU2", "SU3", "SU4")


def test_move_to_position():
    assert move_to_position((3, 4, 1, 2), user=2, position=2) == (3, 2, 4, 1)
    assert move_to_position((3, 4, 1, 2), user=2, position=4) == (3, 4, 1, 2)


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        get_builtin("table9")


@pytest.mark.parametrize("label", sorted(builtin_scenarios()))
def test_builtins_survive_files(label, tmp_path):
    template = get_builtin(label)
    path = tmp_path / f"{label}.json"
    save_scenario(template, path)
    assert load_scenario(path) == template


def test_resolve_prefers_builtin_then_file(tmp_path):
    assert resolve_scenario("eq4-cbrs") is get_builtin("eq4-cbrs")
    path = tmp_path / "mine.json"
    save_scenario(get_builtin("table2-1to1"), path)
    assert resolve_scenario(str(path)).label == "table2-1to1"
    with pytest.raises(UnknownLabel):
        resolve_scenario(str(tmp_path / "missing.json"))


def test_mode_is_optional():
    document = json.loads(dumps_scenario(get_builtin("eq4-cbrs")))
    del document["mode"]
    assert loads_scenario(json.dumps(document)).mode is None


@pytest.mark.parametrize(
    "change",
    [
        lambda d: d.update(extra=1),
        lambda d: d["providers"][0].update(colour="red"),
        lambda d: d["users"][0].update(policy="greedy"),
        lambda d: d["users"][0].update(policy="uniform-random"),
        lambda d: d["providers"][0].update(prefs=["SU1", "SU9"]),
        lambda d: d["providers"][0].update(prefs=["SU1", "SU1"]),
        lambda d: d["providers"][0].update(quota=0),
        lambda d: d["providers"][0].update(quota="2"),
        lambda d: d.update(mode="auction"),
        lambda d: d["users"].append(dict(d["users"][0])),
        lambda d: d.update(providers=[]),
    ],
)
def test_malformed_files_are_rejected(change):
    document = json.loads(dumps_scenario(get_builtin("eq4-cbrs")))
    change(document)
    with pytest.raises(ScenarioFormatError):
        loads_scenario(json.dumps(document))


def test_invalid_json():
    with pytest.raises(ScenarioFormatError):
        loads_scenario("{not json")
