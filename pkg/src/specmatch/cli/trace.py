"""Readable proposal logs in request/hold/reject vocabulary."""

from dataclasses import dataclass, field

from specmatch.core.deferred_acceptance import DeferredAcceptanceRun, run_deferred_acceptance
from specmatch.core.events import Event, Exhausted, Hold, Propose, Reject, RoundEnd
from specmatch.core.market import MarketInstance


@dataclass
class TraceRecorder:
    """Observer that turns proposal events into log lines."""

    instance: MarketInstance
    lines: list[str] = field(default_factory=list)
    _round: int = 0

    def __call__(self, event: Event) -> None:
        name = self.instance.name_of
        round_number = getattr(event, "round", self._round)
        if round_number != self._round and not isinstance(event, RoundEnd):
            self._round = round_number
            self.lines.append(f"Round {round_number}:")

        match event:
            case Propose(user=user, provider=provider):
                self.lines.append(f"  {name(user)} requests {name(provider)}")
            case Reject(provider=provider, user=user, released=True):
                self.lines.append(f"  {name(provider)} releases {name(user)}")
            case Reject(provider=provider, user=user):
                self.lines.append(f"  {name(provider)} rejects {name(user)}")
            case Hold(provider=provider, users=users):
                self.lines.append(f"  {name(provider)} holds {_names(self.instance, users)}")
            case Exhausted(user=user):
                self.lines.append(f"  {name(user)} exhausted list")
            case RoundEnd():
                pass


def _names(instance: MarketInstance, agents) -> str:
    return ", ".join(instance.name_of(agent) for agent in agents) or "nobody"


def summary(instance: MarketInstance, run: DeferredAcceptanceRun) -> str:
    """Final line: who each provider holds and which users exhausted their lists."""
    parts = [
        f"{provider.name} holds {_names(instance, run.state.held[provider.id])}"
        for provider in instance.providers
    ]
    parts += [
        f"{user.name} exhausted list"
        for user in instance.users
        if run.matching.provider_of(user.id) is None
    ]
    return "; ".join(parts)


def trace_lines(instance: MarketInstance, *, one_to_one: bool) -> list[str]:
    """Run deferred acceptance on one instance and log every step.

    Returns:
        The per-round log, the counters, the matching and a closing line
        with every provider's held users and every unmatched user.
    """
    recorder = TraceRecorder(instance)
    run = run_deferred_acceptance(instance, one_to_one=one_to_one, observer=recorder)
    return [
        *recorder.lines,
        f"Done after {run.rounds} rounds and {run.proposals} requests.",
        f"Matching: {run.matching.describe(instance)}",
        summary(instance, run),
    ]
