from dataclasses import dataclass

from specmatch.core.agents import PreferenceList


@dataclass(frozen=True)
class Fixed:
    """The user reports the same preference list at every instant.

    Args:
        prefs: The user's ranking of providers.
    """

    prefs: PreferenceList


@dataclass(frozen=True)
class UniformRandom:
    """The user draws a uniformly random complete ranking at every instant."""


PreferencePolicy = Fixed | UniformRandom
"""How a user's preference list is produced at each allocation instant."""
