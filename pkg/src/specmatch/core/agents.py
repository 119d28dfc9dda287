from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Optional


class Side(Enum):
    """The two sides of the spectrum market."""

    SP = "SP"
    """Spectrum providers: operators leasing surplus licensed spectrum."""
    SU = "SU"
    """Spectrum users: operators requesting spectrum slices."""

    @property
    def opposite(self) -> "Side":
        """The side this side ranks in its preference lists."""
        return Side.SU if self is Side.SP else Side.SP


@dataclass(frozen=True, order=True)
class AgentId:
    """Identifies one agent of the market.

    Args:
        side: Which side of the market the agent is on.
        index: Zero-based position of the agent within its side.
    """

    side: Side
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"Agent index must be non-negative, got {self.index}")

    @property
    def label(self) -> str:
        """Canonical display label: "A", "B", ... for providers, "SU1", ... for users."""
        if self.side is Side.SP:
            return chr(ord("A") + self.index) if self.index < 26 else f"SP{self.index + 1}"
        return f"SU{self.index + 1}"

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"AgentId({self.side.value}, {self.index})"


def sp(index: int) -> AgentId:
    """Shorthand for the provider id at the given index."""
    return AgentId(Side.SP, index)


def su(index: int) -> AgentId:
    """Shorthand for the user id at the given index."""
    return AgentId(Side.SU, index)


@dataclass(frozen=True)
class PreferenceList:
    """A strict, possibly partial ranking of agents, highest preference first.

    Duplicates are not rejected here; `validate_instance` reports them.

    Args:
        ranked: The ranked agent ids.
    """

    ranked: tuple[AgentId, ...] = ()

    @classmethod
    def of(cls, agents: Iterable[AgentId]) -> "PreferenceList":
        """Build a preference list from any iterable of agent ids."""
        return cls(tuple(agents))

    @cached_property
    def _ranks(self) -> dict[AgentId, int]:
        ranks: dict[AgentId, int] = {}
        for position, agent in enumerate(self.ranked, start=1):
            ranks.setdefault(agent, position)
        return ranks

    def rank_of(self, agent: AgentId) -> Optional[int]:
        """Get the 1-based rank of an agent.

        Args:
            agent: The agent to look up.

        Returns:
            The rank of the agent, or None if the agent is not ranked.
        """
        return self._ranks.get(agent)

    def prefers(self, a: AgentId, b: Optional[AgentId]) -> bool:
        """Check whether `a` is strictly preferred to `b`.

        Unranked agents and None (no partner) are worse than every ranked agent.
        """
        rank_a = self.rank_of(a)
        if rank_a is None:
            return False
        rank_b = self.rank_of(b) if b is not None else None
        return rank_b is None or rank_a < rank_b

    def __contains__(self, agent: object) -> bool:
        return agent in self._ranks

    def __iter__(self) -> Iterator[AgentId]:
        return iter(self.ranked)

    def __len__(self) -> int:
        return len(self.ranked)

    def __getitem__(self, position: int) -> AgentId:
        return self.ranked[position]

    def __str__(self) -> str:
        return "(" + ", ".join(agent.label for agent in self.ranked) + ")"


def _default_name(agent: "SpectrumProvider | SpectrumUser") -> None:
    if not agent.name:
        object.__setattr__(agent, "name", agent.id.label)


@dataclass(frozen=True)
class SpectrumProvider:
    """A spectrum provider network offering slices at each allocation instant.

    Args:
        id: The provider id (side SP).
        prefs: The provider's ranking of users.
        quota: Maximum number of users served in one instant.
        name: Display name. Defaults to the canonical label of the id.
    """

    id: AgentId
    prefs: PreferenceList
    quota: int = 1
    name: str = ""

    def __post_init__(self):
        _default_name(self)


@dataclass(frozen=True)
class SpectrumUser:
    """A spectrum user network requesting one slice per allocation instant.

    Args:
        id: The user id (side SU).
        prefs: The user's ranking of providers.
        name: Display name. Defaults to the canonical label of the id.
    """

    id: AgentId
    prefs: PreferenceList
    name: str = ""

    def __post_init__(self):
        _default_name(self)
