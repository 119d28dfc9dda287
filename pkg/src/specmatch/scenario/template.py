from dataclasses import dataclass
from typing import Optional, Sequence

from specmatch.core.agents import AgentId, PreferenceList, SpectrumProvider, SpectrumUser
from specmatch.core.market import MarketInstance, validate_instance
from specmatch.errors import UnsupportedMode
from specmatch.modes import ExperimentMode
from specmatch.scenario.policy import Fixed, PreferencePolicy, UniformRandom
from specmatch.scenario.stream import RandomStream


@dataclass(frozen=True)
class UserTemplate:
    """A user slot of a scenario with the policy producing its preferences.

    Args:
        id: The user id (side SU).
        policy: Fixed list or uniformly random complete list.
        name: Display name. Defaults to the canonical label of the id.
    """

    id: AgentId
    policy: PreferencePolicy
    name: str = ""

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", self.id.label)


@dataclass(frozen=True)
class ScenarioTemplate:
    """A market skeleton whose user preferences are produced per instant.

    Provider preferences and quotas never change between instants.

    Args:
        label: Scenario name.
        providers: The providers, with fixed preferences and quotas.
        users: The user slots.
        mode: The experiment mode the scenario is meant for, if any.
    """

    label: str
    providers: tuple[SpectrumProvider, ...]
    users: tuple[UserTemplate, ...]
    mode: Optional[ExperimentMode] = None

    @property
    def shape(self) -> tuple[int, int]:
        """The market shape as (N users, M providers)."""
        return len(self.users), len(self.providers)

    @property
    def random_users(self) -> tuple[int, ...]:
        """Indices of the users with a UniformRandom policy."""
        return tuple(
            index
            for index, user in enumerate(self.users)
            if isinstance(user.policy, UniformRandom)
        )

    @property
    def is_deterministic(self) -> bool:
        """Whether every user has a Fixed policy."""
        return not self.random_users

    @property
    def complete_user_lists(self) -> bool:
        """Whether every user ranks every provider at every instant."""
        return all(
            isinstance(user.policy, UniformRandom)
            or len(user.policy.prefs) == len(self.providers)
            for user in self.users
        )

    def realize(self, random_prefs: Sequence[PreferenceList] = ()) -> MarketInstance:
        """Build the instance for one draw of the random users' lists.

        Args:
            random_prefs: One list per random user, in `random_users` order.

        Returns:
            The market instance.
        """
        if len(random_prefs) != len(self.random_users):
            raise ValueError(
                f"Expected {len(self.random_users)} random lists, got {len(random_prefs)}"
            )
        drawn = iter(random_prefs)
        users = []
        for user in self.users:
            match user.policy:
                case Fixed(prefs=prefs):
                    users.append(SpectrumUser(user.id, prefs, user.name))
                case UniformRandom():
                    users.append(SpectrumUser(user.id, next(drawn), user.name))
        return MarketInstance(self.providers, tuple(users))

    def validate(self) -> "ScenarioTemplate":
        """Validate the template as a market.

        Random users are checked with a complete list standing in for the draw.

        Returns:
            The template unchanged.

        Raises:
            InstanceError: If the skeleton violates an instance invariant.
        """
        complete = PreferenceList.of(provider.id for provider in self.providers)
        validate_instance(self.realize([complete] * len(self.random_users)))
        return self

    def fixed_instance(self) -> MarketInstance:
        """The single instance of an all-Fixed scenario.

        Raises:
            UnsupportedMode: If some user draws random preferences.
        """
        if not self.is_deterministic:
            raise UnsupportedMode(f"Scenario '{self.label}' has randomized users")
        return self.realize()


def instantiate(
    template: ScenarioTemplate, stream: RandomStream, *, validate: bool = True
) -> MarketInstance:
    """Draw the market instance of one allocation instant.

    Random users get a fresh uniform permutation of all providers from the
    instant's substream. Fixed users and the provider side are copied.

    Args:
        template: The scenario to draw from.
        stream: The instant's randomness.
        validate: Validate the template first.

    Returns:
        The instance, identical for identical (template, seed, instant).
    """
    if validate:
        template.validate()

    random_count = len(template.random_users)
    if random_count == 0:
        return template.realize()

    providers = [provider.id for provider in template.providers]
    orders = stream.permutations(random_count, len(providers)).tolist()
    draws = [PreferenceList(tuple(providers[j] for j in order)) for order in orders]
    return template.realize(draws)


def template_from_instance(
    instance: MarketInstance, label: str, mode: Optional[ExperimentMode] = None
) -> ScenarioTemplate:
    """Wrap a market instance as an all-Fixed scenario."""
    users = tuple(
        UserTemplate(user.id, Fixed(user.prefs), user.name) for user in instance.users
    )
    return ScenarioTemplate(label, instance.providers, users, mode)
