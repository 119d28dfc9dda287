from dataclasses import dataclass
from typing import Callable

from specmatch.core.market import MarketInstance
from specmatch.core.matching import Matching
from specmatch.errors import GuaranteeViolation, UnknownAgentId

InstantCheck = Callable[[int, MarketInstance, Matching], None]
"""Called with (instant index, instance, matching) after every solved instant."""


@dataclass(frozen=True)
class PriorityGuarantee:
    """A provider's top q_m users always get it when they rank it first.

    With user-proposing deferred acceptance, a user among the first q_m of
    provider m's list can never be displaced from m, so requesting m first
    must end in a match with m.

    Args:
        provider: Name of the provider to watch.
    """

    provider: str

    def __call__(self, instant: int, instance: MarketInstance, matching: Matching) -> None:
        provider = next((p for p in instance.providers if p.name == self.provider), None)
        if provider is None:
            raise UnknownAgentId(f"No provider named '{self.provider}' in the instance")
        for user_id in provider.prefs.ranked[: provider.quota]:
            user = instance.users[user_id.index]
            if user.prefs.ranked[:1] != (provider.id,):
                continue
            if matching.provider_of(user_id) != provider.id:
                raise GuaranteeViolation(
                    f"Instant {instant}: {user.name} ranks {provider.name} first and is "
                    f"among its top {provider.quota}, but was matched to "
                    f"{matching.provider_of(user_id)}"
                )
