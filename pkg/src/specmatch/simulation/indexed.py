from dataclasses import dataclass
from typing import Optional, Sequence

from specmatch.core.agents import PreferenceList
from specmatch.core.deferred_acceptance import propose_by_index, provider_rank_table
from specmatch.core.market import MarketInstance
from specmatch.core.matching import Matching
from specmatch.errors import UnsupportedMode
from specmatch.modes import ExperimentMode
from specmatch.scenario.policy import Fixed
from specmatch.scenario.template import ScenarioTemplate
from specmatch.scenario.uncoordinated import NO_PROVIDER, assign_indices, assignment_width


@dataclass(frozen=True)
class IndexedScenario:
    """A scenario template and mode reduced to plain provider indices.

    The Monte Carlo loop solves every instant on these tables and only builds
    instances and matchings when a per-instant check asks for them.

    Args:
        template: The scenario.
        mode: The matcher used at every instant.
        fixed_lists: Per user, its fixed list as provider indices, or None
            for users drawing a random list.
        provider_ranks: See `propose_by_index`.
        quotas: Per provider, the quota the mode applies.
        respect_quotas: Whether the uncoordinated baseline uses its quota variant.
    """

    template: ScenarioTemplate
    mode: ExperimentMode
    fixed_lists: tuple[Optional[tuple[int, ...]], ...]
    provider_ranks: list[list[int]]
    quotas: tuple[int, ...]
    respect_quotas: bool

    @classmethod
    def of(cls, template: ScenarioTemplate, mode: ExperimentMode) -> "IndexedScenario":
        fixed_lists = tuple(
            tuple(provider.index for provider in user.policy.prefs)
            if isinstance(user.policy, Fixed)
            else None
            for user in template.users
        )
        quotas = tuple(
            1 if mode is ExperimentMode.ONE_TO_ONE_DA else provider.quota
            for provider in template.providers
        )
        return cls(
            template=template,
            mode=mode,
            fixed_lists=fixed_lists,
            provider_ranks=provider_rank_table(template.providers, len(template.users)),
            quotas=quotas,
            respect_quotas=any(quota > 1 for quota in quotas),
        )

    @property
    def assignment_width(self) -> int:
        """Uniforms one instant consumes from the assignment substream."""
        if self.mode is not ExperimentMode.UNCOORDINATED:
            return 0
        return assignment_width(*self.template.shape)

    def user_lists(self, random_lists: Sequence[Sequence[int]]) -> list[Sequence[int]]:
        """Every user's list for one draw of the random users' lists."""
        drawn = iter(random_lists)
        return [fixed if fixed is not None else next(drawn) for fixed in self.fixed_lists]

    def positions(
        self, user_lists: Sequence[Sequence[int]], assignment: Sequence[float]
    ) -> list[int]:
        """Solve one instant.

        Args:
            user_lists: From `user_lists`.
            assignment: The instant's assignment uniforms (uncoordinated only).

        Returns:
            Per user, the position in its list of the provider it got, or the
            list's length if it got none.
        """
        match self.mode:
            case ExperimentMode.ONE_TO_ONE_DA | ExperimentMode.MANY_TO_ONE_GS:
                return propose_by_index(user_lists, self.provider_ranks, self.quotas)
            case ExperimentMode.UNCOORDINATED:
                held = assign_indices(
                    assignment,
                    len(user_lists),
                    self.quotas,
                    respect_quotas=self.respect_quotas,
                )
                return [
                    prefs.index(j) if j != NO_PROVIDER else len(prefs)
                    for prefs, j in zip(user_lists, held)
                ]
            case _:
                raise UnsupportedMode(f"Unknown mode: {self.mode}")

    def instance(self, random_lists: Sequence[Sequence[int]]) -> MarketInstance:
        """The market instance of one draw of the random users' lists."""
        providers = [provider.id for provider in self.template.providers]
        return self.template.realize(
            [PreferenceList(tuple(providers[j] for j in prefs)) for prefs in random_lists]
        )

    def matching(
        self, user_lists: Sequence[Sequence[int]], positions: Sequence[int]
    ) -> Matching:
        """The matching described by `positions`."""
        users = self.template.users
        providers = self.template.providers
        return Matching.from_pairs(
            (users[i].id, providers[prefs[position]].id)
            for i, (prefs, position) in enumerate(zip(user_lists, positions))
            if position < len(prefs)
        )
