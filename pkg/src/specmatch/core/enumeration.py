"""Brute-force enumeration of stable matchings for small markets."""

import math
from collections import Counter
from itertools import product
from typing import Iterable, Iterator, Optional

from specmatch.core.agents import AgentId
from specmatch.core.market import MarketInstance, validate_instance
from specmatch.core.matching import Matching
from specmatch.core.stability import is_stable, rank_or_sentinel
from specmatch.errors import InstanceTooLarge
from specmatch.logger import log

MAX_CANDIDATES = 10**7
"""Largest number of candidate matchings enumerated before giving up."""


def _options(instance: MarketInstance) -> list[list[Optional[AgentId]]]:
    # Only mutually acceptable pairs; a matching with an unlisted partner is
    # never individually rational.
    options: list[list[Optional[AgentId]]] = []
    for user in instance.users:
        acceptable = [
            provider_id
            for provider_id in user.prefs
            if user.id in instance.providers[provider_id.index].prefs
        ]
        options.append([None, *acceptable])
    return options


def candidate_count(instance: MarketInstance) -> int:
    """Number of assignments the enumeration would visit."""
    return math.prod(len(choices) for choices in _options(instance))


def iter_matchings(
    instance: MarketInstance, *, one_to_one: bool = False
) -> Iterator[Matching]:
    """Yield every quota-respecting matching of mutually acceptable pairs.

    Raises:
        InstanceTooLarge: If there are more than MAX_CANDIDATES assignments.
    """
    options = _options(instance)
    count = math.prod(len(choices) for choices in options)
    if count > MAX_CANDIDATES:
        raise InstanceTooLarge(
            f"{count} candidate matchings exceed the limit of {MAX_CANDIDATES}"
        )
    log.debug(f"Enumerating {count} candidate matchings")

    quotas = {
        provider.id: 1 if one_to_one else provider.quota for provider in instance.providers
    }
    for assignment in product(*options):
        load = Counter(provider for provider in assignment if provider is not None)
        if any(held > quotas[provider] for provider, held in load.items()):
            continue
        yield Matching.from_pairs(
            (user.id, provider)
            for user, provider in zip(instance.users, assignment)
            if provider is not None
        )


def enumerate_stable_matchings(
    instance: MarketInstance, *, one_to_one: bool = False
) -> set[Matching]:
    """Every stable matching of a small instance, found by exhaustive search.

    Args:
        instance: The market to search.
        one_to_one: Treat every quota as 1.

    Returns:
        The set of stable matchings. Never empty for a valid instance.

    Raises:
        InstanceTooLarge: If there are more than MAX_CANDIDATES assignments.
    """
    validate_instance(instance)
    return {
        matching
        for matching in iter_matchings(instance, one_to_one=one_to_one)
        if is_stable(instance, matching, one_to_one=one_to_one)
    }


def is_su_optimal(
    instance: MarketInstance, matching: Matching, stable: Iterable[Matching]
) -> bool:
    """Check that every user does at least as well as in any other stable matching.

    Unmatched counts as rank L+1 for a user with a list of length L.
    """
    ranks = {user.id: rank_or_sentinel(user.id, matching, instance) for user in instance.users}
    return all(
        ranks[user.id] <= rank_or_sentinel(user.id, other, instance)
        for other in stable
        for user in instance.users
    )
