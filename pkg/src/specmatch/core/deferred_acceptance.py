"""User-proposing deferred acceptance for one-to-one and quota markets."""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from specmatch.core.agents import AgentId, SpectrumProvider, SpectrumUser
from specmatch.core.events import Exhausted, Hold, Observer, Propose, Reject, RoundEnd
from specmatch.core.market import MarketInstance, validate_instance
from specmatch.core.matching import Matching

UNLISTED = -1
"""Rank of a user a provider does not list."""


class Schedule(Enum):
    """Order in which free users make their requests."""

    ROUNDS = "rounds"
    """Every free user requests simultaneously, then providers answer."""
    SEQUENTIAL = "sequential"
    """One free user requests at a time, first in first out."""


@dataclass
class ProposalState:
    """Bookkeeping of one deferred-acceptance run.

    Args:
        rejected: Per user, the providers that rejected it.
        held: Per provider, the held users ordered by the provider's preference.
        cursor: Per user, the position in its list where the next request starts.
    """

    rejected: dict[AgentId, set[AgentId]] = field(default_factory=dict)
    held: dict[AgentId, list[AgentId]] = field(default_factory=dict)
    cursor: dict[AgentId, int] = field(default_factory=dict)

    @classmethod
    def initial(cls, instance: MarketInstance) -> "ProposalState":
        """Everyone unmatched, nobody rejected."""
        return cls(
            rejected={user.id: set() for user in instance.users},
            held={provider.id: [] for provider in instance.providers},
            cursor={user.id: 0 for user in instance.users},
        )

    def next_choice(self, user: SpectrumUser) -> Optional[AgentId]:
        """The most preferred provider that has not rejected the user yet.

        Returns:
            The provider id, or None once the user's list is exhausted.
        """
        prefs = user.prefs
        rejected = self.rejected[user.id]
        position = self.cursor[user.id]
        while position < len(prefs) and prefs[position] in rejected:
            position += 1
        self.cursor[user.id] = position
        return prefs[position] if position < len(prefs) else None

    def consider(
        self, provider: SpectrumProvider, newcomers: list[AgentId], quota: int
    ) -> list[tuple[AgentId, bool]]:
        """Let a provider answer a batch of requests.

        Users absent from the provider's list are rejected on arrival. The
        rest join the held users; the provider keeps its `quota` best and
        releases the others.

        Args:
            provider: The provider answering.
            newcomers: Users requesting this provider now.
            quota: How many users the provider may hold.

        Returns:
            The rejected users, each with a flag telling whether it was
            released from the held set.
        """
        prefs = provider.prefs
        previously_held = self.held[provider.id]
        rejected: list[tuple[AgentId, bool]] = []

        pool = list(previously_held)
        for user in newcomers:
            if user in prefs:
                pool.append(user)
            else:
                rejected.append((user, False))

        pool.sort(key=prefs.rank_of)
        self.held[provider.id] = pool[:quota]
        for user in pool[quota:]:
            rejected.append((user, user in previously_held))

        for user, _ in rejected:
            self.rejected[user].add(provider.id)
        return rejected

    def matching(self) -> Matching:
        """The matching formed by the currently held requests."""
        return Matching.from_pairs(
            (user, provider) for provider, users in self.held.items() for user in users
        )


@dataclass(frozen=True)
class DeferredAcceptanceRun:
    """Outcome of one deferred-acceptance run."""

    matching: Matching
    proposals: int
    """Number of requests made. Never exceeds N·M."""
    rounds: int
    """Number of request rounds (requests, for the sequential schedule)."""
    state: ProposalState


def _notify(observer: Optional[Observer], event) -> None:
    if observer is not None:
        observer(event)


def run_deferred_acceptance(
    instance: MarketInstance,
    *,
    one_to_one: bool = False,
    schedule: Schedule = Schedule.ROUNDS,
    observer: Optional[Observer] = None,
    validate: bool = True,
) -> DeferredAcceptanceRun:
    """Run user-proposing deferred acceptance.

    Args:
        instance: The market to solve.
        one_to_one: Ignore quotas and let every provider hold one user.
        schedule: How free users take turns requesting.
        observer: Receives a Propose/Hold/Reject/Exhausted/RoundEnd event stream.
        validate: Validate the instance first. Callers that built the
            instance from an already validated template may skip this.

    Returns:
        The matching together with proposal counters and the final state.
    """
    if validate:
        validate_instance(instance)

    state = ProposalState.initial(instance)
    quotas = {
        provider.id: 1 if one_to_one else provider.quota for provider in instance.providers
    }

    match schedule:
        case Schedule.ROUNDS:
            proposals, rounds = _run_rounds(instance, state, quotas, observer)
        case Schedule.SEQUENTIAL:
            proposals, rounds = _run_sequential(instance, state, quotas, observer)
        case _:
            raise ValueError(f"Unknown schedule: {schedule}")

    return DeferredAcceptanceRun(state.matching(), proposals, rounds, state)


def _run_rounds(
    instance: MarketInstance,
    state: ProposalState,
    quotas: dict[AgentId, int],
    observer: Optional[Observer],
) -> tuple[int, int]:
    free = [user.id for user in instance.users]
    proposals = 0
    rounds = 0

    while free:
        rounds += 1
        offers: dict[AgentId, list[AgentId]] = {}
        for user_id in free:
            choice = state.next_choice(instance.users[user_id.index])
            if choice is None:
                _notify(observer, Exhausted(rounds, user_id))
                continue
            proposals += 1
            _notify(observer, Propose(rounds, user_id, choice))
            offers.setdefault(choice, []).append(user_id)

        free = []
        for provider_id in sorted(offers):
            provider = instance.providers[provider_id.index]
            for user_id, released in state.consider(
                provider, offers[provider_id], quotas[provider_id]
            ):
                _notify(observer, Reject(rounds, provider_id, user_id, released))
                free.append(user_id)
            _notify(observer, Hold(rounds, provider_id, tuple(state.held[provider_id])))

        free.sort()
        _notify(observer, RoundEnd(rounds, proposals))

    return proposals, rounds


def _run_sequential(
    instance: MarketInstance,
    state: ProposalState,
    quotas: dict[AgentId, int],
    observer: Optional[Observer],
) -> tuple[int, int]:
    queue = deque(user.id for user in instance.users)
    proposals = 0

    while queue:
        user_id = queue.popleft()
        choice = state.next_choice(instance.users[user_id.index])
        if choice is None:
            _notify(observer, Exhausted(proposals, user_id))
            continue
        proposals += 1
        _notify(observer, Propose(proposals, user_id, choice))
        provider = instance.providers[choice.index]
        for rejected, released in state.consider(provider, [user_id], quotas[choice]):
            _notify(observer, Reject(proposals, choice, rejected, released))
            queue.append(rejected)
        _notify(observer, Hold(proposals, choice, tuple(state.held[choice])))

    return proposals, proposals


def da_one_to_one(
    instance: MarketInstance,
    *,
    observer: Optional[Observer] = None,
    validate: bool = True,
) -> Matching:
    """User-optimal stable one-to-one matching.

    Quotas are ignored; every provider holds at most one user. Users that
    exhaust their lists stay unmatched.

    Args:
        instance: The market to solve.
        observer: Optional receiver of the proposal event stream.
        validate: Validate the instance first.

    Returns:
        The stable matching preferred by every user over any other stable matching.

    Example:
        ```python
        matching = da_one_to_one(builtin_scenarios()["eq4-cbrs"].fixed_instance())
        # {A–SU1, B–SU3, C–SU2}, SU4 unmatched
        ```
    """
    return run_deferred_acceptance(
        instance, one_to_one=True, observer=observer, validate=validate
    ).matching


def gale_shapley_many_to_one(
    instance: MarketInstance,
    *,
    observer: Optional[Observer] = None,
    validate: bool = True,
) -> Matching:
    """User-optimal stable many-to-one matching.

    Provider m holds up to q_m users. With every quota equal to 1 the result
    is identical to `da_one_to_one`.

    Args:
        instance: The market to solve.
        observer: Optional receiver of the proposal event stream.
        validate: Validate the instance first.

    Returns:
        A stable matching respecting every provider's quota.
    """
    return run_deferred_acceptance(
        instance, one_to_one=False, observer=observer, validate=validate
    ).matching


def propose_by_index(
    user_lists: Sequence[Sequence[int]],
    provider_ranks: Sequence[Sequence[int]],
    quotas: Sequence[int],
) -> list[int]:
    """User-proposing deferred acceptance on plain indices.

    Free users request one at a time. The outcome is the same user-optimal
    stable matching `run_deferred_acceptance` finds, without building ids,
    events or a Matching.

    Args:
        user_lists: Per user, provider indices best first.
        provider_ranks: provider_ranks[j][i] is the position of user i in
            provider j's list, or UNLISTED.
        quotas: Per provider, how many users it may hold.

    Returns:
        Per user, the position in its own list of the provider holding it,
        or the list's length if the user ends unmatched.
    """
    cursor = [0] * len(user_lists)
    held: list[list[int]] = [[] for _ in quotas]
    free = list(range(len(user_lists) - 1, -1, -1))

    while free:
        user = free.pop()
        prefs = user_lists[user]
        while cursor[user] < len(prefs):
            provider = prefs[cursor[user]]
            ranks = provider_ranks[provider]
            rank = ranks[user]
            if rank != UNLISTED:
                pool = held[provider]
                if len(pool) < quotas[provider]:
                    pool.append(user)
                    break
                worst = max(pool, key=ranks.__getitem__)
                if ranks[worst] > rank:
                    pool.remove(worst)
                    pool.append(user)
                    cursor[worst] += 1
                    free.append(worst)
                    break
            cursor[user] += 1
    return cursor


def provider_rank_table(
    providers: Sequence[SpectrumProvider], users: int
) -> list[list[int]]:
    """The `provider_ranks` argument of `propose_by_index`."""
    table = []
    for provider in providers:
        ranks = [UNLISTED] * users
        for position, user in enumerate(provider.prefs.ranked):
            ranks[user.index] = position
        table.append(ranks)
    return table
