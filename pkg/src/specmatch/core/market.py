from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from specmatch.core.agents import (
    AgentId,
    PreferenceList,
    Side,
    SpectrumProvider,
    SpectrumUser,
    sp,
    su,
)
from specmatch.errors import (
    DuplicateInPreference,
    EmptySide,
    UnknownAgentId,
    ZeroQuota,
)


@dataclass(frozen=True)
class MarketInstance:
    """The full input to one allocation instant.

    Args:
        providers: The spectrum providers, provider i has id `sp(i)`.
        users: The spectrum users, user i has id `su(i)`.
    """

    providers: tuple[SpectrumProvider, ...]
    users: tuple[SpectrumUser, ...]

    @classmethod
    def build(
        cls,
        provider_prefs: Mapping[str, Sequence[str]],
        user_prefs: Mapping[str, Sequence[str]],
        quotas: Mapping[str, int] | None = None,
    ) -> "MarketInstance":
        """Build an instance from agent names.

        Agents are indexed in mapping order. Preference entries are resolved
        by name against the opposite side; unknown names raise.

        Args:
            provider_prefs: Provider name to ranked user names.
            user_prefs: User name to ranked provider names.
            quotas: Optional provider name to quota. Missing entries default to 1.

        Returns:
            The market instance (not yet validated).

        Raises:
            UnknownAgentId: If a preference entry names no agent.

        Example:
            ```python
            MarketInstance.build(
                {"A": ["SU1", "SU2"]},
                {"SU1": ["A"], "SU2": ["A"]},
                quotas={"A": 2},
            )
            ```
        """
        quotas = quotas or {}
        provider_ids = {name: sp(i) for i, name in enumerate(provider_prefs)}
        user_ids = {name: su(i) for i, name in enumerate(user_prefs)}

        def resolve(names: Sequence[str], lookup: dict[str, AgentId]) -> PreferenceList:
            try:
                return PreferenceList.of(lookup[name] for name in names)
            except KeyError as e:
                raise UnknownAgentId(f"Unknown agent '{e.args[0]}'") from e

        providers = tuple(
            SpectrumProvider(
                id=provider_ids[name],
                prefs=resolve(prefs, user_ids),
                quota=quotas.get(name, 1),
                name=name,
            )
            for name, prefs in provider_prefs.items()
        )
        users = tuple(
            SpectrumUser(id=user_ids[name], prefs=resolve(prefs, provider_ids), name=name)
            for name, prefs in user_prefs.items()
        )
        return cls(providers, users)

    @property
    def shape(self) -> tuple[int, int]:
        """The market shape as (N users, M providers)."""
        return len(self.users), len(self.providers)

    def provider(self, agent: AgentId) -> SpectrumProvider:
        """Get a provider by id.

        Raises:
            UnknownAgentId: If no provider has this id.
        """
        if agent.side is not Side.SP or not 0 <= agent.index < len(self.providers):
            raise UnknownAgentId(f"No provider {agent!r} in the instance")
        return self.providers[agent.index]

    def user(self, agent: AgentId) -> SpectrumUser:
        """Get a user by id.

        Raises:
            UnknownAgentId: If no user has this id.
        """
        if agent.side is not Side.SU or not 0 <= agent.index < len(self.users):
            raise UnknownAgentId(f"No user {agent!r} in the instance")
        return self.users[agent.index]

    def contains(self, agent: AgentId) -> bool:
        """Check whether an agent id exists in the instance."""
        size = len(self.providers) if agent.side is Side.SP else len(self.users)
        return 0 <= agent.index < size

    def name_of(self, agent: AgentId) -> str:
        """Display name of an agent, falling back to its canonical label."""
        if not self.contains(agent):
            return agent.label
        if agent.side is Side.SP:
            return self.providers[agent.index].name
        return self.users[agent.index].name

    @cached_property
    def quotas(self) -> dict[AgentId, int]:
        """Provider id to quota."""
        return {provider.id: provider.quota for provider in self.providers}

    def as_one_to_one(self) -> "MarketInstance":
        """A copy of this instance with every quota set to 1."""
        if all(provider.quota == 1 for provider in self.providers):
            return self
        return replace(
            self,
            providers=tuple(replace(p, quota=1) for p in self.providers),
        )

    def with_user_prefs(self, prefs: Iterable[PreferenceList]) -> "MarketInstance":
        """A copy of this instance with new user preference lists, in user order."""
        users = tuple(
            replace(user, prefs=user_prefs) for user, user_prefs in zip(self.users, prefs)
        )
        return MarketInstance(self.providers, users)


def _check_preferences(
    owner: str, prefs: PreferenceList, side: Side, instance: MarketInstance
) -> None:
    seen: set[AgentId] = set()
    for agent in prefs:
        if agent in seen:
            raise DuplicateInPreference(f"P({owner}) lists {agent.label} more than once")
        seen.add(agent)
        if agent.side is not side or not instance.contains(agent):
            raise UnknownAgentId(f"P({owner}) refers to unknown agent {agent!r}")


def validate_instance(instance: MarketInstance) -> MarketInstance:
    """Check every invariant of a market instance.

    Args:
        instance: The instance to check.

    Returns:
        The instance unchanged.

    Raises:
        EmptySide: If there are no providers or no users.
        ZeroQuota: If a provider has a quota below 1.
        DuplicateInPreference: If a preference list is not strict.
        UnknownAgentId: If an id is out of place or refers to no agent.
    """
    if not instance.providers:
        raise EmptySide("The market has no spectrum providers")
    if not instance.users:
        raise EmptySide("The market has no spectrum users")

    for index, provider in enumerate(instance.providers):
        if provider.id != sp(index):
            raise UnknownAgentId(
                f"Provider at position {index} has id {provider.id!r}, expected {sp(index)!r}"
            )
        if provider.quota < 1:
            raise ZeroQuota(f"Provider {provider.name} has quota {provider.quota}")
        _check_preferences(provider.name, provider.prefs, Side.SU, instance)

    for index, user in enumerate(instance.users):
        if user.id != su(index):
            raise UnknownAgentId(
                f"User at position {index} has id {user.id!r}, expected {su(index)!r}"
            )
        _check_preferences(user.name, user.prefs, Side.SP, instance)

    return instance
