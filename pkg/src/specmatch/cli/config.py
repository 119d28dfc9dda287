from argparse import Namespace
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from specmatch.errors import CliConfigError
from specmatch.modes import ExperimentMode
from specmatch.simulation.monte_carlo import DEFAULT_INSTANTS, DEFAULT_SEED
from specmatch.simulation.report import ReportFormat

FORMATS: tuple[ReportFormat, ...] = ("csv", "json")


@dataclass(frozen=True)
class MonteCarlo:
    """Sample T instants with per-instant substreams of one seed."""

    instants: int = DEFAULT_INSTANTS
    seed: int = DEFAULT_SEED
    workers: int = 1

    def __post_init__(self):
        if self.instants < 1:
            raise CliConfigError(f"--instants must be at least 1, got {self.instants}")
        if self.workers < 1:
            raise CliConfigError(f"--workers must be at least 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            raise CliConfigError(f"--seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class Exhaustive:
    """Enumerate every preference profile."""


Engine = MonteCarlo | Exhaustive


@dataclass(frozen=True)
class CliConfig:
    """One experiment as configured on the command line.

    Args:
        scenario: A builtin label or a scenario file path.
        mode: The experiment mode. None uses the scenario's own mode, then one-to-one.
        engine: Monte Carlo or exhaustive enumeration.
        output: Report file. None writes to stdout.
        format: Report format.
        trace: Print the proposal log of a deterministic scenario.
    """

    scenario: str
    mode: Optional[ExperimentMode] = None
    engine: Engine = field(default_factory=MonteCarlo)
    output: Optional[Path] = None
    format: ReportFormat = "csv"
    trace: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise CliConfigError(f"--format must be one of {', '.join(FORMATS)}")

    @classmethod
    def from_args(cls, args: Namespace, prefix: str = "") -> "CliConfig":
        """Build a config from parsed arguments.

        Args:
            args: The parsed command line.
            prefix: Attribute prefix for the second experiment of `compare`.

        Raises:
            CliConfigError: If the options contradict each other.
        """
        scenario = getattr(args, f"{prefix}scenario", None) or args.scenario
        mode_value = getattr(args, f"{prefix}mode", None) or args.mode
        mode = ExperimentMode.parse(mode_value) if mode_value else None

        engine: Engine
        match args.engine:
            case "exhaustive":
                if args.seed is not None:
                    raise CliConfigError("--seed cannot be used with --engine exhaustive")
                if args.instants is not None:
                    raise CliConfigError("--instants cannot be used with --engine exhaustive")
                engine = Exhaustive()
            case "mc":
                engine = MonteCarlo(
                    instants=DEFAULT_INSTANTS if args.instants is None else args.instants,
                    seed=DEFAULT_SEED if args.seed is None else args.seed,
                    workers=args.workers,
                )
            case other:
                raise CliConfigError(f"Unknown engine '{other}'")

        return cls(
            scenario=scenario,
            mode=mode,
            engine=engine,
            output=Path(args.output) if args.output else None,
            format=args.format,
            trace=getattr(args, "trace", False),
        )
