from typing import Optional

from specmatch.core.deferred_acceptance import da_one_to_one, gale_shapley_many_to_one
from specmatch.core.market import MarketInstance
from specmatch.core.matching import Matching
from specmatch.errors import UnsupportedMode
from specmatch.modes import ExperimentMode
from specmatch.scenario.stream import RandomStream
from specmatch.scenario.template import ScenarioTemplate
from specmatch.scenario.uncoordinated import uncoordinated_match


def check_mode(template: ScenarioTemplate, mode: ExperimentMode) -> None:
    """Reject mode and scenario combinations that cannot be tallied.

    The uncoordinated baseline ignores preferences, so a user may land on a
    provider it never ranked; it therefore needs complete user lists.

    Raises:
        UnsupportedMode: If the combination is not supported.
    """
    if mode is ExperimentMode.UNCOORDINATED and not template.complete_user_lists:
        raise UnsupportedMode(
            f"Scenario '{template.label}' has partial user lists; "
            "the uncoordinated baseline needs complete lists"
        )


def solve(
    instance: MarketInstance,
    mode: ExperimentMode,
    stream: Optional[RandomStream] = None,
    *,
    validate: bool = False,
) -> Matching:
    """Match one instant with the selected mode.

    Args:
        instance: The instant's market.
        mode: Which matcher to use.
        stream: The instant's randomness, needed by the uncoordinated baseline.
        validate: Validate the instance first.

    Returns:
        The instant's matching.
    """
    match mode:
        case ExperimentMode.ONE_TO_ONE_DA:
            return da_one_to_one(instance, validate=validate)
        case ExperimentMode.MANY_TO_ONE_GS:
            return gale_shapley_many_to_one(instance, validate=validate)
        case ExperimentMode.UNCOORDINATED:
            if stream is None:
                raise UnsupportedMode("The uncoordinated baseline needs a random stream")
            respect_quotas = any(provider.quota > 1 for provider in instance.providers)
            return uncoordinated_match(instance, stream, respect_quotas=respect_quotas)
        case _:
            raise UnsupportedMode(f"Unknown mode: {mode}")
