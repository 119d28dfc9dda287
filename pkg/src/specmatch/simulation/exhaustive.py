"""Exact statistics by enumerating every user-preference profile."""

import math
from itertools import permutations, product
from typing import Optional

from specmatch.core.agents import PreferenceList
from specmatch.core.stability import rank_of_match
from specmatch.errors import ProfileSpaceTooLarge, UnsupportedMode
from specmatch.logger import log
from specmatch.modes import ExperimentMode
from specmatch.scenario.template import ScenarioTemplate
from specmatch.simulation.checks import InstantCheck
from specmatch.simulation.solve import check_mode, solve
from specmatch.simulation.stats import AllocationStats

MAX_PROFILES = 10**7
"""Largest profile space enumerated before giving up."""


def profile_space(template: ScenarioTemplate) -> int:
    """Number of equally likely preference profiles: (M!)^(random users)."""
    return math.factorial(len(template.providers)) ** len(template.random_users)


def run_exhaustive(
    template: ScenarioTemplate,
    mode: ExperimentMode,
    *,
    check: Optional[InstantCheck] = None,
) -> AllocationStats:
    """Exact matching success over every user-preference profile.

    Each random user's list ranges over all M! orders and every profile has
    the same weight, as under uniform randomization. The uncoordinated
    baseline is averaged analytically instead.

    Args:
        template: The scenario to enumerate.
        mode: The matcher used for every profile.
        check: Optional check called for every profile with its index.

    Returns:
        Integer tallies whose instant count is the number of profiles.

    Raises:
        ProfileSpaceTooLarge: If there are more than MAX_PROFILES profiles.
        UnsupportedMode: For an uncoordinated baseline without a closed form.
    """
    template.validate()
    check_mode(template, mode)
    if mode is ExperimentMode.UNCOORDINATED:
        return _uncoordinated_exact(template)

    size = profile_space(template)
    if size > MAX_PROFILES:
        raise ProfileSpaceTooLarge(
            f"Scenario '{template.label}' has {size} preference profiles, "
            f"more than the limit of {MAX_PROFILES}"
        )
    log.debug(f"Enumerating {size} preference profiles of '{template.label}' ({mode})")

    providers = [provider.id for provider in template.providers]
    orders = [PreferenceList(tuple(order)) for order in permutations(providers)]
    stats = AllocationStats.zeros(*template.shape)
    stats.parts = 1

    for index, profile in enumerate(product(orders, repeat=len(template.random_users))):
        instance = template.realize(profile)
        matching = solve(instance, mode)
        if check is not None:
            check(index, instance, matching)
        stats.record(rank_of_match(user.id, matching, instance) for user in instance.users)

    return stats


def _uncoordinated_exact(template: ScenarioTemplate) -> AllocationStats:
    # A uniform injective assignment matches each user with probability
    # min(N, M)/N to a uniform provider, whose rank is uniform on a complete
    # list: S[n, i] = min(N, M)/(N*M). Tallied over N*M equally likely outcomes.
    if any(provider.quota > 1 for provider in template.providers):
        raise UnsupportedMode(
            "The quota-based uncoordinated baseline has no exact form; use Monte Carlo"
        )
    users, providers = template.shape
    matched = min(users, providers)
    stats = AllocationStats.zeros(users, providers)
    stats.counts[:, :] = matched
    stats.unmatched[:] = users * providers - providers * matched
    stats.instants = users * providers
    stats.parts = 1
    return stats
