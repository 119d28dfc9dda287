import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from specmatch import __version__
from specmatch.cli.config import CliConfig
from specmatch.cli.experiment import (
    comparison_csv,
    comparison_table,
    resolve_mode,
    run_experiment,
    scenario_table,
)
from specmatch.cli.reproduce import ReproduceSettings, reproduce_all
from specmatch.cli.trace import trace_lines
from specmatch.errors import CliConfigError, ProfileSpaceTooLarge, SpecmatchError
from specmatch.logger import log
from specmatch.modes import ExperimentMode
from specmatch.scenario.io import resolve_scenario
from specmatch.simulation.monte_carlo import DEFAULT_INSTANTS, DEFAULT_SEED
from specmatch.simulation.report import render

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_TOO_LARGE = 2

MODES = [mode.value for mode in ExperimentMode]


def _experiment_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scenario", required=True, help="builtin label or scenario file")
    parser.add_argument("--mode", choices=MODES, help="defaults to the scenario's mode")
    parser.add_argument("--engine", choices=["mc", "exhaustive"], default="mc")
    parser.add_argument(
        "--instants", type=int, help=f"Monte Carlo instants T (default {DEFAULT_INSTANTS})"
    )
    parser.add_argument(
        "--seed", type=int, help=f"Monte Carlo master seed (default {DEFAULT_SEED})"
    )
    parser.add_argument("--workers", type=int, default=1, help="worker processes")
    parser.add_argument("--output", help="report file; stdout when omitted")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")


def build_parser() -> argparse.ArgumentParser:
    """The `specmatch` argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="log debug messages")
    common.add_argument("--log-file", help="write log messages to a file instead of stderr")

    parser = argparse.ArgumentParser(
        prog="specmatch",
        description="Stable matching of spectrum users to spectrum providers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="run one experiment")
    _experiment_options(run)
    run.add_argument("--trace", action="store_true", help="print the proposal log")

    compare = commands.add_parser("compare", parents=[common], help="compare two experiments")
    _experiment_options(compare)
    compare.add_argument("--other-scenario", help="second scenario; defaults to --scenario")
    compare.add_argument("--other-mode", choices=MODES, help="second mode; defaults to --mode")

    reproduce = commands.add_parser(
        "reproduce-all", parents=[common], help="check every published figure"
    )
    reproduce.add_argument("--instants", type=int, default=DEFAULT_INSTANTS)
    reproduce.add_argument("--seed", type=int, default=DEFAULT_SEED)
    reproduce.add_argument("--workers", type=int, default=1)
    reproduce.add_argument("--no-color", action="store_true", help="plain PASS/FAIL lines")

    commands.add_parser("list-scenarios", parents=[common], help="list builtin scenarios")
    return parser


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    log.system(f"Wrote {output}")


def run(config: CliConfig) -> int:
    """Run one experiment and write its report."""
    template = resolve_scenario(config.scenario)
    mode = resolve_mode(config, template)
    if config.trace:
        if mode is ExperimentMode.UNCOORDINATED:
            log.warning("--trace ignored: the uncoordinated baseline makes no requests")
        elif template.is_deterministic:
            one_to_one = mode is ExperimentMode.ONE_TO_ONE_DA
            for line in trace_lines(template.fixed_instance(), one_to_one=one_to_one):
                print(line)
        else:
            log.warning(f"--trace ignored: scenario '{template.label}' has randomized users")

    report = run_experiment(config, template)
    _emit(render(report, config.format), config.output)
    return EXIT_OK


def compare(config_a: CliConfig, config_b: CliConfig) -> int:
    """Run two experiments and show them side by side."""
    report_a = run_experiment(config_a)
    report_b = run_experiment(config_b)
    if config_a.output is None:
        sys.stdout.write(comparison_table(report_a, report_b))
    else:
        _emit(comparison_csv(report_a, report_b), config_a.output)
    return EXIT_OK


def _dispatch(args: argparse.Namespace) -> int:
    match args.command:
        case "run":
            return run(CliConfig.from_args(args))
        case "compare":
            return compare(CliConfig.from_args(args), CliConfig.from_args(args, prefix="other_"))
        case "reproduce-all":
            settings = ReproduceSettings(args.instants, args.seed, args.workers)
            color = not args.no_color and sys.stdout.isatty()
            return EXIT_OK if reproduce_all(settings, sys.stdout, color=color) else EXIT_ERROR
        case "list-scenarios":
            sys.stdout.write(scenario_table())
            return EXIT_OK
        case other:
            raise CliConfigError(f"Unknown command '{other}'")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the `specmatch` command.

    Returns:
        0 on success, 2 when an exhaustive run is too large, 1 on any other error.
    """
    args = build_parser().parse_args(argv)
    try:
        log.configure(log_file=args.log_file, verbose=args.verbose)
        return _dispatch(args)
    except ProfileSpaceTooLarge as e:
        log.error(e)
        return EXIT_TOO_LARGE
    except (SpecmatchError, OSError) as e:
        log.error(e)
        return EXIT_ERROR
