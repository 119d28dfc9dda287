from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Optional

from specmatch.core.agents import AgentId, Side
from specmatch.core.market import MarketInstance
from specmatch.errors import InconsistentMatching


class Unmatched(Enum):
    """Sentinel rank for a user without a provider."""

    UNMATCHED = "unmatched"

    def __str__(self) -> str:
        return self.value


UNMATCHED = Unmatched.UNMATCHED


@dataclass(frozen=True)
class Matching:
    """An assignment of users to providers.

    The matching is stored as a set of (user, provider) pairs so that two
    matchings compare equal exactly when they pair the same agents. Both
    directional views are derived from the pairs.

    Args:
        pairs: The matched (user id, provider id) pairs.
    """

    pairs: frozenset[tuple[AgentId, AgentId]] = frozenset()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[AgentId, AgentId]]) -> "Matching":
        """Build a matching from (user, provider) pairs."""
        return cls(frozenset(pairs))

    @classmethod
    def from_maps(
        cls,
        su_to_sp: Mapping[AgentId, AgentId],
        sp_to_sus: Mapping[AgentId, Iterable[AgentId]],
    ) -> "Matching":
        """Build a matching from both directional maps.

        Raises:
            InconsistentMatching: If the two maps disagree.
        """
        forward = {(user, provider) for user, provider in su_to_sp.items()}
        backward = {
            (user, provider) for provider, users in sp_to_sus.items() for user in users
        }
        if forward != backward:
            raise InconsistentMatching(
                f"Directional maps disagree on {sorted(forward ^ backward)}"
            )
        return cls(frozenset(forward))

    @cached_property
    def su_to_sp(self) -> dict[AgentId, AgentId]:
        """Partial map from user to its provider."""
        return {user: provider for user, provider in self.pairs}

    @property
    def sp_to_sus(self) -> dict[AgentId, frozenset[AgentId]]:
        """Map from each matched provider to its users."""
        grouped: dict[AgentId, set[AgentId]] = defaultdict(set)
        for user, provider in self.pairs:
            grouped[provider].add(user)
        return {provider: frozenset(users) for provider, users in grouped.items()}

    def provider_of(self, user: AgentId) -> Optional[AgentId]:
        """The provider a user is matched to, or None."""
        return self.su_to_sp.get(user)

    def users_of(self, provider: AgentId) -> frozenset[AgentId]:
        """The users a provider is matched to (possibly empty)."""
        return frozenset(user for user, matched in self.pairs if matched == provider)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        ordered = sorted(self.pairs, key=lambda pair: (pair[1].index, pair[0].index))
        return "{" + ", ".join(f"{p.label}–{u.label}" for u, p in ordered) + "}"

    def check(self, instance: MarketInstance, one_to_one: bool = False) -> None:
        """Check the consistency and quota invariants against an instance.

        Args:
            instance: The market the matching belongs to.
            one_to_one: Treat every quota as 1.

        Raises:
            InconsistentMatching: If a user has two providers, an id is unknown
                or misplaced, or a provider exceeds its quota.
        """
        seen_users: set[AgentId] = set()
        for user, provider in self.pairs:
            if user.side is not Side.SU or provider.side is not Side.SP:
                raise InconsistentMatching(f"Pair ({user!r}, {provider!r}) has wrong sides")
            if not instance.contains(user) or not instance.contains(provider):
                raise InconsistentMatching(f"Pair ({user!r}, {provider!r}) is not in the market")
            if user in seen_users:
                raise InconsistentMatching(f"{user.label} is matched to more than one provider")
            seen_users.add(user)

        for provider, users in self.sp_to_sus.items():
            quota = 1 if one_to_one else instance.provider(provider).quota
            if len(users) > quota:
                raise InconsistentMatching(
                    f"{provider.label} holds {len(users)} users, quota is {quota}"
                )

    def describe(self, instance: MarketInstance) -> str:
        """Human-readable matching using the instance's agent names."""
        parts = []
        for provider in instance.providers:
            users = sorted(self.users_of(provider.id))
            for user in users:
                parts.append(f"{provider.name}–{instance.name_of(user)}")
        unmatched = [
            user.name for user in instance.users if self.provider_of(user.id) is None
        ]
        text = "{" + ", ".join(parts) + "}"
        if unmatched:
            text += " unmatched: " + ", ".join(unmatched)
        return text
