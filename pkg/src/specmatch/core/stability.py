from specmatch.core.agents import AgentId, Side
from specmatch.core.market import MarketInstance
from specmatch.core.matching import UNMATCHED, Matching, Unmatched
from specmatch.errors import MatchNotInPreferenceList, UnknownAgentId


def find_blocking_pairs(
    instance: MarketInstance, matching: Matching, *, one_to_one: bool = False
) -> list[tuple[AgentId, AgentId]]:
    """Find every (user, provider) pair that blocks a matching.

    A pair (n, m) with n not matched to m blocks when n prefers m to its
    current provider (or n is unmatched and lists m), n is on m's list, and
    m either has a free slot or prefers n to one of the users it holds.

    Args:
        instance: The market the matching belongs to.
        matching: The matching to check.
        one_to_one: Treat every quota as 1.

    Returns:
        The blocking pairs, ordered by user then by the user's preference.
        An empty list means the matching is stable.

    Raises:
        InconsistentMatching: If the matching breaks its own invariants.
    """
    matching.check(instance, one_to_one=one_to_one)
    held = matching.sp_to_sus
    blocking: list[tuple[AgentId, AgentId]] = []

    for user in instance.users:
        current = matching.provider_of(user.id)
        for provider_id in user.prefs:
            if provider_id == current:
                break
            provider = instance.providers[provider_id.index]
            if user.id not in provider.prefs:
                continue
            holding = held.get(provider_id, frozenset())
            quota = 1 if one_to_one else provider.quota
            if len(holding) < quota or any(
                provider.prefs.prefers(user.id, other) for other in holding
            ):
                blocking.append((user.id, provider_id))

    return blocking


def is_stable(
    instance: MarketInstance, matching: Matching, *, one_to_one: bool = False
) -> bool:
    """Check that a matching has no blocking pair.

    Raises:
        InconsistentMatching: If the matching breaks its own invariants.
    """
    return not find_blocking_pairs(instance, matching, one_to_one=one_to_one)


def rank_of_match(
    user: AgentId, matching: Matching, instance: MarketInstance
) -> int | Unmatched:
    """The 1-based rank of a user's provider in the user's own list.

    Args:
        user: The user to look up.
        matching: The matching to read.
        instance: The market holding the user's preferences.

    Returns:
        The rank, or UNMATCHED if the user has no provider.

    Raises:
        UnknownAgentId: If the user is not part of the instance.
        MatchNotInPreferenceList: If the user's provider is not on its list.
    """
    if user.side is not Side.SU or not instance.contains(user):
        raise UnknownAgentId(f"No user {user!r} in the instance")
    provider = matching.provider_of(user)
    if provider is None:
        return UNMATCHED
    rank = instance.users[user.index].prefs.rank_of(provider)
    if rank is None:
        raise MatchNotInPreferenceList(
            f"{user.label} is matched to {provider.label}, which is not on its list"
        )
    return rank


def rank_or_sentinel(user: AgentId, matching: Matching, instance: MarketInstance) -> int:
    """Like `rank_of_match`, with UNMATCHED mapped to L+1 for comparisons."""
    rank = rank_of_match(user, matching, instance)
    if rank is UNMATCHED:
        return len(instance.users[user.index].prefs) + 1
    return rank
