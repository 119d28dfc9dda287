class SpecmatchError(Exception):
    """Base class for all specmatch errors."""


class InstanceError(SpecmatchError):
    """Base class for all market-instance validation errors."""


class DuplicateInPreference(InstanceError):
    """A preference list names the same agent more than once."""


class UnknownAgentId(InstanceError):
    """A preference list or matching refers to an agent that is not in the market."""


class ZeroQuota(InstanceError):
    """A spectrum provider offers fewer than one spectrum slice."""


class EmptySide(InstanceError):
    """The market has no providers or no users."""


class InconsistentMatching(SpecmatchError):
    """A matching violates the consistency or quota invariants."""


class InstanceTooLarge(SpecmatchError):
    """An instance is too large for exhaustive enumeration."""


class MatchNotInPreferenceList(SpecmatchError):
    """A user is matched to a provider that is absent from its preference list."""


class UnknownLabel(SpecmatchError):
    """A scenario label is not one of the builtin scenarios."""


class ScenarioFormatError(SpecmatchError):
    """A scenario document does not follow the scenario file format."""


class ProfileSpaceTooLarge(SpecmatchError):
    """The preference-profile space is too large for exhaustive simulation."""


class UnsupportedMode(SpecmatchError):
    """An experiment mode cannot be used with the requested engine or scenario."""


class ShapeMismatch(SpecmatchError):
    """Two statistics or runs do not describe the same market shape."""


class GuaranteeViolation(SpecmatchError):
    """A per-instant allocation guarantee did not hold."""


class CliConfigError(SpecmatchError):
    """Command-line options are contradictory or out of range."""


class ReportFormatError(SpecmatchError):
    """A serialized statistics report cannot be parsed."""
