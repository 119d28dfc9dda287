from dataclasses import dataclass
from typing import Callable

from specmatch.core.agents import AgentId


class Event:
    """Base class for all proposal events."""


@dataclass(frozen=True)
class Propose(Event):
    """A user requests a slice from a provider.

    Args:
        round: The proposal round, starting at 1.
        user: The requesting user.
        provider: The provider receiving the request.
    """

    round: int
    user: AgentId
    provider: AgentId


@dataclass(frozen=True)
class Hold(Event):
    """A provider holds its currently best acceptable requests."""

    round: int
    provider: AgentId
    users: tuple[AgentId, ...]
    """Held users, ordered by the provider's preference."""


@dataclass(frozen=True)
class Reject(Event):
    """A provider rejects a user, either on arrival or by releasing it."""

    round: int
    provider: AgentId
    user: AgentId
    released: bool = False
    """Whether the user had been held before and was displaced."""


@dataclass(frozen=True)
class Exhausted(Event):
    """A user has been rejected by every provider on its list."""

    round: int
    user: AgentId


@dataclass(frozen=True)
class RoundEnd(Event):
    """All requests of a round have been answered."""

    round: int
    proposals: int
    """Total requests made so far."""


Observer = Callable[[Event], None]
"""Receives every event of a deferred-acceptance run, in order."""
