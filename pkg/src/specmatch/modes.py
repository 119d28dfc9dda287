from enum import Enum

from specmatch.errors import UnsupportedMode


class ExperimentMode(Enum):
    """How a market instance is solved at each allocation instant."""

    ONE_TO_ONE_DA = "one-to-one"
    """User-proposing deferred acceptance, every provider holds one user."""
    MANY_TO_ONE_GS = "many-to-one"
    """Quota-based Gale-Shapley, provider m holds up to q_m users."""
    UNCOORDINATED = "uncoordinated"
    """Preference-blind uniform random assignment baseline."""

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, value: "str | ExperimentMode") -> "ExperimentMode":
        """Parse a mode from its command-line spelling.

        Args:
            value: A mode or one of "one-to-one", "many-to-one", "uncoordinated".

        Returns:
            The matching ExperimentMode.

        Raises:
            UnsupportedMode: If the spelling is unknown.
        """
        if isinstance(value, ExperimentMode):
            return value
        try:
            return cls(value)
        except ValueError as e:
            choices = ", ".join(mode.value for mode in cls)
            raise UnsupportedMode(
                f"Unknown mode '{value}'. Expected one of: {choices}"
            ) from e
