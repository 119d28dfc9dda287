import numpy as np
import pytest

from specmatch.core import PreferenceList, rank_of_match, sp, su
from specmatch.errors import GuaranteeViolation, UnsupportedMode
from specmatch.modes import ExperimentMode
from specmatch.scenario import (
    Fixed,
    RandomStream,
    ScenarioTemplate,
    UserTemplate,
    get_builtin,
    instantiate,
)
from specmatch.simulation import (
    AllocationStats,
    PriorityGuarantee,
    merge,
    run_exhaustive,
    run_monte_carlo,
    run_shard,
    shard_ranges,
    solve,
)
from specmatch.time import Stopwatch

ONE = ExperimentMode.ONE_TO_ONE_DA
MANY = ExperimentMode.MANY_TO_ONE_GS
UNCOORDINATED = ExperimentMode.UNCOORDINATED


def test_shard_ranges_cover_every_instant():
    assert shard_ranges(10, 3) == [range(0, 4), range(4, 7), range(7, 10)]
    assert shard_ranges(2, 5) == [range(0, 1), range(1, 2)]
    with pytest.raises(ValueError):
        shard_ranges(10, 0)


def test_fixed_scenario_repeats_one_outcome():
    stats = run_monte_carlo(get_builtin("eq4-cbrs"), ONE, 50, 7)
    assert stats.instants == 50
    assert stats.counts[0].tolist() == [50, 0, 0]
    assert stats.counts[1].tolist() == [0, 0, 50]
    assert stats.counts[2].tolist() == [50, 0, 0]
    assert stats.unmatched.tolist() == [0, 0, 0, 50]


def test_same_seed_same_statistics():
    template = get_builtin("table3-quotaA2")
    assert run_monte_carlo(template, MANY, 300, 42) == run_monte_carlo(template, MANY, 300, 42)


def test_sharding_does_not_change_statistics():
    template = get_builtin("table2-1to1")
    serial = run_monte_carlo(template, ONE, 1000, 9)
    assert run_monte_carlo(template, ONE, 1000, 9, shards=7) == serial
    assert run_monte_carlo(template, ONE, 1000, 9, workers=2) == serial


def test_merged_halves_equal_the_full_run():
    template = get_builtin("table3-1to1")
    first = run_shard(template, ONE, range(0, 500), 3)
    second = run_shard(template, ONE, range(500, 1000), 3)
    assert merge(first, second) == run_monte_carlo(template, ONE, 1000, 3, shards=2)


def test_rejects_bad_arguments():
    template = get_builtin("table2-1to1")
    with pytest.raises(ValueError):
        run_monte_carlo(template, ONE, 0, 7)
    with pytest.raises(ValueError):
        run_monte_carlo(template, ONE, 10, 7, workers=0)


def test_uncoordinated_needs_complete_lists():
    providers = get_builtin("table2-1to1").providers
    users = tuple(
        UserTemplate(su(n), Fixed(PreferenceList.of([sp(n)]))) for n in range(3)
    )
    template = ScenarioTemplate("partial", providers, users)
    with pytest.raises(UnsupportedMode):
        run_monte_carlo(template, ExperimentMode.UNCOORDINATED, 10, 7)


def test_statistics_are_normalized():
    stats = run_monte_carlo(get_builtin("table3-quotaA2"), MANY, 500, 1)
    assert stats.is_normalized()
    assert isinstance(stats, AllocationStats)


@pytest.mark.slow
@pytest.mark.parametrize(
    "label, mode",
    [
        ("table2-1to1", ONE),
        ("table2-spB-variant", ONE),
        ("table3-1to1", ONE),
        ("table3-quota2-all", MANY),
        ("table3-quotaA2", MANY),
    ],
)
def test_estimates_converge_to_exact_values(label, mode):
    template = get_builtin(label)
    exact = run_exhaustive(template, mode)
    estimate = run_monte_carlo(template, mode, 100_000, 7)
    assert np.abs(estimate.success - exact.success).max() <= 0.01
    assert np.abs(estimate.unmatched_share - exact.unmatched_share).max() <= 0.01


@pytest.mark.slow
def test_uncoordinated_first_choice_is_one_third():
    stats = run_monte_carlo(get_builtin("table2-1to1"), ExperimentMode.UNCOORDINATED, 100_000, 7)
    assert abs(stats.success[0, 0] - 1 / 3) <= 0.01


@pytest.mark.parametrize(
    "label, mode",
    [
        ("table2-1to1", ONE),
        ("eq4-cbrs-random", ONE),
        ("table3-quotaA2", MANY),
        ("table3-1to1", UNCOORDINATED),
        ("table3-quota2-all", UNCOORDINATED),
    ],
)
def test_shard_matches_instance_by_instance_solving(label, mode):
    template = get_builtin(label)
    expected = AllocationStats.zeros(*template.shape)
    for t in range(300):
        stream = RandomStream(11, t)
        instance = instantiate(template, stream)
        matching = solve(instance, mode, stream)
        expected.record(rank_of_match(user.id, matching, instance) for user in instance.users)
    assert run_shard(template, mode, range(300), 11) == expected


def test_chunk_boundaries_do_not_change_statistics():
    template = get_builtin("table3-1to1")
    whole = run_shard(template, ONE, range(0, 9000), 5)
    parts = [run_shard(template, ONE, range(a, b), 5) for a, b in [(0, 4095), (4095, 9000)]]
    assert merge(*parts) == whole


@pytest.mark.parametrize("workers", [1, 2])
def test_priority_guarantee_holds_for_quota_scenario(workers):
    template = get_builtin("table3-quotaA2")
    checked = run_monte_carlo(
        template, MANY, 2000, 7, workers=workers, check=PriorityGuarantee("A")
    )
    assert checked == run_monte_carlo(template, MANY, 2000, 7)


@pytest.mark.parametrize("workers", [1, 2])
def test_violated_check_stops_the_run(workers):
    # One-to-one matching leaves A a single slot, so its top two users collide.
    with pytest.raises(GuaranteeViolation):
        run_monte_carlo(
            get_builtin("table3-quotaA2"),
            ONE,
            2000,
            7,
            workers=workers,
            check=PriorityGuarantee("A"),
        )


@pytest.mark.slow
def test_hundred_thousand_instants_in_five_seconds():
    with Stopwatch() as watch:
        stats = run_monte_carlo(get_builtin("table2-1to1"), ONE, 100_000, 7)
    assert stats.instants == 100_000
    assert watch.elapsed < 5
