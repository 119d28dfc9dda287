"""Scenario file format.

A scenario document is a JSON object::

    {
      "label": "table3-quotaA2",
      "mode": "many-to-one",
      "providers": [{"id": "A", "quota": 2, "prefs": ["SU1", "SU2", "SU3", "SU4"]}, ...],
      "users": [{"id": "SU1", "policy": "uniform-random"},
                {"id": "SU2", "policy": "fixed", "prefs": ["B", "A", "C"]}, ...]
    }

Ids are free-form strings; agents are indexed in array order. `mode` is
optional. Unknown keys are rejected.
"""

import json
from pathlib import Path
from typing import Any

from specmatch.core.agents import AgentId, PreferenceList, SpectrumProvider, sp, su
from specmatch.errors import (
    InstanceError,
    ScenarioFormatError,
    UnknownLabel,
    UnsupportedMode,
)
from specmatch.logger import log
from specmatch.modes import ExperimentMode
from specmatch.scenario.builtin import builtin_scenarios
from specmatch.scenario.policy import Fixed, UniformRandom
from specmatch.scenario.template import ScenarioTemplate, UserTemplate

TOP_LEVEL_KEYS = {"label", "providers", "users", "mode"}
PROVIDER_KEYS = {"id", "quota", "prefs"}
USER_KEYS = {"id", "policy", "prefs"}
FIXED = "fixed"
UNIFORM_RANDOM = "uniform-random"


def _require_object(value: Any, where: str, allowed: set[str], required: set[str]) -> dict:
    if not isinstance(value, dict):
        raise ScenarioFormatError(f"{where} must be an object")
    unknown = set(value) - allowed
    if unknown:
        raise ScenarioFormatError(f"{where} has unknown keys: {sorted(unknown)}")
    missing = required - set(value)
    if missing:
        raise ScenarioFormatError(f"{where} is missing keys: {sorted(missing)}")
    return value


def _require_names(value: Any, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ScenarioFormatError(f"{where} must be an array of id strings")
    return value


def _index_names(entries: list[dict], where: str) -> dict[str, int]:
    names: dict[str, int] = {}
    for index, entry in enumerate(entries):
        name = entry["id"]
        if not isinstance(name, str) or not name:
            raise ScenarioFormatError(f"{where}[{index}].id must be a non-empty string")
        if name in names:
            raise ScenarioFormatError(f"{where} repeats id '{name}'")
        names[name] = index
    return names


def _resolve(
    names: list[str], lookup: dict[str, int], make_id, where: str
) -> PreferenceList:
    ids: list[AgentId] = []
    for name in names:
        if name not in lookup:
            raise ScenarioFormatError(f"{where} names unknown agent '{name}'")
        ids.append(make_id(lookup[name]))
    return PreferenceList(tuple(ids))


def parse_scenario(document: Any) -> ScenarioTemplate:
    """Build a validated scenario from a decoded JSON document.

    Raises:
        ScenarioFormatError: If the document does not follow the format or
            describes an invalid market.
    """
    document = _require_object(
        document, "scenario", TOP_LEVEL_KEYS, {"label", "providers", "users"}
    )
    label = document["label"]
    if not isinstance(label, str):
        raise ScenarioFormatError("label must be a string")
    providers_raw = document["providers"]
    users_raw = document["users"]
    if not isinstance(providers_raw, list) or not isinstance(users_raw, list):
        raise ScenarioFormatError("providers and users must be arrays")

    for index, entry in enumerate(providers_raw):
        _require_object(entry, f"providers[{index}]", PROVIDER_KEYS, PROVIDER_KEYS)
    for index, entry in enumerate(users_raw):
        _require_object(entry, f"users[{index}]", USER_KEYS, {"id", "policy"})

    provider_names = _index_names(providers_raw, "providers")
    user_names = _index_names(users_raw, "users")

    providers = []
    for index, entry in enumerate(providers_raw):
        quota = entry["quota"]
        if not isinstance(quota, int) or isinstance(quota, bool):
            raise ScenarioFormatError(f"providers[{index}].quota must be an integer")
        prefs = _require_names(entry["prefs"], f"providers[{index}].prefs")
        providers.append(
            SpectrumProvider(
                id=sp(index),
                prefs=_resolve(prefs, user_names, su, f"providers[{index}].prefs"),
                quota=quota,
                name=entry["id"],
            )
        )

    users = []
    for index, entry in enumerate(users_raw):
        where = f"users[{index}]"
        match entry["policy"]:
            case "fixed":
                if "prefs" not in entry:
                    raise ScenarioFormatError(f"{where} has a fixed policy but no prefs")
                prefs = _require_names(entry["prefs"], f"{where}.prefs")
                policy = Fixed(_resolve(prefs, provider_names, sp, f"{where}.prefs"))
            case "uniform-random":
                if "prefs" in entry:
                    raise ScenarioFormatError(f"{where} is uniform-random but lists prefs")
                policy = UniformRandom()
            case other:
                raise ScenarioFormatError(f"{where}.policy '{other}' is not supported")
        users.append(UserTemplate(su(index), policy, entry["id"]))

    mode = None
    if "mode" in document:
        try:
            mode = ExperimentMode.parse(document["mode"])
        except UnsupportedMode as e:
            raise ScenarioFormatError(str(e)) from e

    template = ScenarioTemplate(label, tuple(providers), tuple(users), mode)
    try:
        return template.validate()
    except InstanceError as e:
        raise ScenarioFormatError(f"Scenario '{label}' is not a valid market: {e}") from e


def dump_scenario(template: ScenarioTemplate) -> dict[str, Any]:
    """Encode a scenario as a JSON-compatible document."""
    provider_names = [provider.name for provider in template.providers]
    user_names = [user.name for user in template.users]

    users = []
    for user in template.users:
        match user.policy:
            case Fixed(prefs=prefs):
                users.append(
                    {
                        "id": user.name,
                        "policy": FIXED,
                        "prefs": [provider_names[p.index] for p in prefs],
                    }
                )
            case UniformRandom():
                users.append({"id": user.name, "policy": UNIFORM_RANDOM})

    document: dict[str, Any] = {
        "label": template.label,
        "providers": [
            {
                "id": provider.name,
                "quota": provider.quota,
                "prefs": [user_names[u.index] for u in provider.prefs],
            }
            for provider in template.providers
        ],
        "users": users,
    }
    if template.mode is not None:
        document["mode"] = template.mode.value
    return document


def loads_scenario(text: str) -> ScenarioTemplate:
    """Parse a scenario from JSON text.

    Raises:
        ScenarioFormatError: If the text is not valid JSON or not a valid scenario.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioFormatError(f"Scenario is not valid JSON: {e}") from e
    return parse_scenario(document)


def dumps_scenario(template: ScenarioTemplate) -> str:
    """Serialize a scenario to JSON text."""
    return json.dumps(dump_scenario(template), indent=2) + "\n"


def load_scenario(path: str | Path) -> ScenarioTemplate:
    """Read a scenario file."""
    log.debug(f"Loading scenario file {path}")
    return loads_scenario(Path(path).read_text(encoding="utf-8"))


def save_scenario(template: ScenarioTemplate, path: str | Path) -> None:
    """Write a scenario file."""
    Path(path).write_text(dumps_scenario(template), encoding="utf-8")


def resolve_scenario(reference: str) -> ScenarioTemplate:
    """Resolve a builtin label or a scenario file path.

    Builtin labels win over files with the same name.

    Raises:
        UnknownLabel: If the reference is neither a builtin label nor a file.
        ScenarioFormatError: If the file is not a valid scenario.
    """
    scenarios = builtin_scenarios()
    if reference in scenarios:
        return scenarios[reference]
    path = Path(reference)
    if path.is_file():
        return load_scenario(path)
    raise UnknownLabel(
        f"'{reference}' is neither a builtin scenario ({', '.join(scenarios)}) nor a file"
    )
