"""The spectrum-sharing scenarios shipped with specmatch.

Providers are named A, B, C and users SU1..SUN. Each scenario carries the
experiment mode it is meant to be run with.
"""

from functools import cache
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

from specmatch.core.agents import PreferenceList, SpectrumProvider, sp, su
from specmatch.errors import UnknownLabel
from specmatch.modes import ExperimentMode
from specmatch.scenario.policy import Fixed, UniformRandom
from specmatch.scenario.template import ScenarioTemplate, UserTemplate

SYMMETRIC_3X3 = {"A": (1, 2, 3), "B": (2, 3, 1), "C": (3, 1, 2)}
"""Provider lists where every user is first, second and third choice of exactly one provider."""
SU1_FAVOURED_3X3 = {**SYMMETRIC_3X3, "B": (1, 3, 2)}
"""The symmetric lists with provider B moving SU1 to the front."""
CBRS_PROVIDERS = {"A": (1, 2, 4, 3), "B": (3, 4, 1, 2), "C": (1, 3, 2, 4)}
"""Priority-access licensee rankings: competitors last, beamforming users first."""
CBRS_USERS = {1: "ABC", 2: "BAC", 3: "BCA", 4: "ACB"}
"""User rankings of the priority-access licensees."""
ROTATED_4X3 = {"A": (1, 2, 3, 4), "B": (2, 3, 4, 1), "C": (3, 4, 1, 2)}
"""Provider lists for four users and three providers."""
SWEEP_POSITIONS = (4, 3, 2)
"""Positions of SU2 in provider C's list for the sweep scenarios."""


def _template(
    label: str,
    provider_prefs: Mapping[str, Sequence[int]],
    users: int,
    mode: ExperimentMode,
    quotas: Optional[Mapping[str, int]] = None,
    fixed_users: Optional[Mapping[int, str]] = None,
) -> ScenarioTemplate:
    quotas = quotas or {}
    providers = tuple(
        SpectrumProvider(
            id=sp(index),
            prefs=PreferenceList.of(su(n - 1) for n in prefs),
            quota=quotas.get(name, 1),
            name=name,
        )
        for index, (name, prefs) in enumerate(provider_prefs.items())
    )
    names = list(provider_prefs)
    user_slots = []
    for index in range(users):
        if fixed_users:
            ranked = fixed_users[index + 1]
            policy = Fixed(PreferenceList.of(sp(names.index(name)) for name in ranked))
        else:
            policy = UniformRandom()
        user_slots.append(UserTemplate(su(index), policy))
    return ScenarioTemplate(label, providers, tuple(user_slots), mode)


def move_to_position(prefs: Sequence[int], user: int, position: int) -> tuple[int, ...]:
    """Move one user to a 1-based position, keeping everyone else in order.

    Example:
        ```python
        move_to_position((3, 4, 1, 2), user=2, position=2)  # (3, 2, 4, 1)
        ```
    """
    rest = [n for n in prefs if n != user]
    rest.insert(position - 1, user)
    return tuple(rest)


@cache
def _builtin() -> Mapping[str, ScenarioTemplate]:
    one, many = ExperimentMode.ONE_TO_ONE_DA, ExperimentMode.MANY_TO_ONE_GS
    scenarios = [
        _template("table2-1to1", SYMMETRIC_3X3, 3, one),
        _template("table2-spB-variant", SU1_FAVOURED_3X3, 3, one),
        _template("eq4-cbrs", CBRS_PROVIDERS, 4, one, fixed_users=CBRS_USERS),
        _template("eq4-cbrs-random", CBRS_PROVIDERS, 4, one),
        _template("table3-1to1", ROTATED_4X3, 4, one),
        _template("table3-quota2-all", ROTATED_4X3, 4, many, {"A": 2, "B": 2, "C": 2}),
        _template("table3-quotaA2", ROTATED_4X3, 4, many, {"A": 2}),
    ]
    for position in SWEEP_POSITIONS:
        swept = {**ROTATED_4X3, "C": move_to_position(ROTATED_4X3["C"], 2, position)}
        scenarios.append(_template(f"fig8-sweep-{position}", swept, 4, many, {"A": 2}))
    return MappingProxyType({scenario.label: scenario for scenario in scenarios})


def builtin_scenarios() -> Mapping[str, ScenarioTemplate]:
    """All builtin scenarios keyed by label."""
    return _builtin()


def get_builtin(label: str) -> ScenarioTemplate:
    """Look up one builtin scenario.

    Raises:
        UnknownLabel: If no builtin scenario has this label.
    """
    try:
        return _builtin()[label]
    except KeyError as e:
        raise UnknownLabel(
            f"Unknown scenario '{label}'. Available: {', '.join(_builtin())}"
        ) from e
