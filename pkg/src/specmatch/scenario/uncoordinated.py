from typing import Sequence

from specmatch.core.agents import sp, su
from specmatch.core.market import MarketInstance
from specmatch.core.matching import Matching
from specmatch.scenario.stream import RandomStream, StreamPurpose

NO_PROVIDER = -1


def assignment_width(users: int, providers: int) -> int:
    """Uniform draws one random assignment consumes."""
    return max(users, providers) + users


def _order(draws: Sequence[float], size: int) -> list[int]:
    return sorted(range(size), key=draws.__getitem__)


def assign_indices(
    draws: Sequence[float], users: int, quotas: Sequence[int], *, respect_quotas: bool
) -> list[int]:
    """Random assignment of users to provider indices.

    Args:
        draws: `assignment_width(users, len(quotas))` uniforms in [0, 1).
        users: Number of users.
        quotas: Per provider quota, only read by the quota variant.
        respect_quotas: Use the quota-based variant.

    Returns:
        Per user, the provider index it was given or NO_PROVIDER.
    """
    providers = len(quotas)
    held = [NO_PROVIDER] * users

    if not respect_quotas:
        if users <= providers:
            for i, j in enumerate(_order(draws, providers)[:users]):
                held[i] = j
        else:
            for j, i in enumerate(_order(draws, users)[:providers]):
                held[i] = j
        return held

    residual = list(quotas)
    choices = draws[max(users, providers) :]
    for turn, user in enumerate(_order(draws, users)):
        open_slots = [j for j, free in enumerate(residual) if free > 0]
        if not open_slots:
            break
        j = open_slots[int(choices[turn] * len(open_slots))]
        residual[j] -= 1
        held[user] = j
    return held


def uncoordinated_match(
    instance: MarketInstance, stream: RandomStream, *, respect_quotas: bool = False
) -> Matching:
    """Preference-blind random assignment baseline.

    Without quotas, a uniformly random injective assignment of min(N, M)
    users to providers is drawn. With quotas, users in uniformly random order
    each take a uniformly random provider that still has a free slot, until
    users or slots run out.

    Args:
        instance: The market; preferences are ignored.
        stream: The instant's randomness (assignment substream).
        respect_quotas: Use the quota-based variant.

    Returns:
        The random matching.
    """
    users, providers = instance.shape
    draws = stream.uniforms(StreamPurpose.ASSIGNMENT, assignment_width(users, providers))
    held = assign_indices(
        draws.tolist(),
        users,
        [provider.quota for provider in instance.providers],
        respect_quotas=respect_quotas,
    )
    return Matching.from_pairs((su(i), sp(j)) for i, j in enumerate(held) if j != NO_PROVIDER)
