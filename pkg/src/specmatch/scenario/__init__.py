from .builtin import builtin_scenarios, get_builtin, move_to_position
from .io import (
    dump_scenario,
    dumps_scenario,
    load_scenario,
    loads_scenario,
    parse_scenario,
    resolve_scenario,
    save_scenario,
)
from .policy import Fixed, PreferencePolicy, UniformRandom
from .stream import RandomStream, StreamPurpose
from .template import ScenarioTemplate, UserTemplate, instantiate, template_from_instance
from .uncoordinated import uncoordinated_match

__all__ = [
    "Fixed",
    "PreferencePolicy",
    "RandomStream",
    "ScenarioTemplate",
    "StreamPurpose",
    "UniformRandom",
    "UserTemplate",
    "builtin_scenarios",
    "dump_scenario",
    "dumps_scenario",
    "get_builtin",
    "instantiate",
    "load_scenario",
    "loads_scenario",
    "move_to_position",
    "parse_scenario",
    "resolve_scenario",
    "save_scenario",
    "template_from_instance",
    "uncoordinated_match",
]
