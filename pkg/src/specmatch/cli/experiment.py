"""Running configured experiments and comparing their results."""

import csv
import io
from dataclasses import dataclass
from typing import Mapping, Optional

from specmatch.cli.config import CliConfig, Exhaustive, MonteCarlo
from specmatch.cli.table import render_table
from specmatch.errors import ShapeMismatch
from specmatch.logger import log
from specmatch.modes import ExperimentMode
from specmatch.scenario.builtin import builtin_scenarios
from specmatch.scenario.io import resolve_scenario
from specmatch.scenario.template import ScenarioTemplate
from specmatch.simulation.checks import InstantCheck
from specmatch.simulation.exhaustive import run_exhaustive
from specmatch.simulation.monte_carlo import run_monte_carlo
from specmatch.simulation.stats import StatsReport


def resolve_mode(config: CliConfig, template: ScenarioTemplate) -> ExperimentMode:
    """The explicit mode, else the scenario's own, else one-to-one."""
    return config.mode or template.mode or ExperimentMode.ONE_TO_ONE_DA


def run_experiment(
    config: CliConfig,
    template: Optional[ScenarioTemplate] = None,
    check: Optional[InstantCheck] = None,
) -> StatsReport:
    """Execute the experiment a config describes.

    Args:
        config: The experiment.
        template: The already resolved scenario, if the caller has it.
        check: Optional per-instant check.

    Returns:
        The statistics with their provenance.
    """
    template = template or resolve_scenario(config.scenario)
    mode = resolve_mode(config, template)
    user_names = tuple(user.name for user in template.users)

    match config.engine:
        case MonteCarlo(instants=instants, seed=seed, workers=workers):
            stats = run_monte_carlo(
                template, mode, instants, seed, workers=workers, check=check
            )
            log.debug(f"'{template.label}' ({mode}): {instants} instants, seed {seed}")
            return StatsReport(template.label, mode, stats, user_names, seed)
        case Exhaustive():
            stats = run_exhaustive(template, mode, check=check)
            log.debug(f"'{template.label}' ({mode}): {stats.instants} profiles")
            return StatsReport(template.label, mode, stats, user_names)


@dataclass(frozen=True)
class ComparisonRow:
    """One statistic of one user in both runs."""

    su_id: str
    metric: str
    """"S1".."SM" for rank shares, "U" for the unmatched share."""
    a: float
    b: float

    @property
    def difference(self) -> float:
        """a - b."""
        return self.a - self.b


def compare_reports(a: StatsReport, b: StatsReport) -> list[ComparisonRow]:
    """Line up the rank and unmatched shares of two runs.

    Runs may differ in provider count; missing ranks count as zero.

    Raises:
        ShapeMismatch: If the runs have different numbers of users.
    """
    users_a, providers_a = a.stats.shape
    users_b, providers_b = b.stats.shape
    if users_a != users_b:
        raise ShapeMismatch(
            f"Cannot compare '{a.label}' with {users_a} users to '{b.label}' with {users_b}"
        )

    def share(report: StatsReport, user: int, rank: int) -> float:
        if rank > report.stats.shape[1]:
            return 0.0
        return float(report.stats.success[user, rank - 1])

    rows = []
    for user, name in enumerate(a.user_names):
        for rank in range(1, max(providers_a, providers_b) + 1):
            rows.append(ComparisonRow(name, f"S{rank}", share(a, user, rank), share(b, user, rank)))
        rows.append(
            ComparisonRow(
                name,
                "U",
                float(a.stats.unmatched_share[user]),
                float(b.stats.unmatched_share[user]),
            )
        )
    return rows


def _describe(report: StatsReport) -> str:
    return f"{report.label} ({report.mode})"


def comparison_table(a: StatsReport, b: StatsReport) -> str:
    """Render two runs side by side with a difference column."""
    rows = [
        (row.su_id, row.metric, f"{row.a:.6f}", f"{row.b:.6f}", f"{row.difference:+.6f}")
        for row in compare_reports(a, b)
    ]
    headers = ("su_id", "metric", _describe(a), _describe(b), "difference")
    return render_table(headers, rows, ["left", "left", "right", "right", "right"])


def comparison_csv(a: StatsReport, b: StatsReport) -> str:
    """The comparison as CSV text."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("su_id", "metric", "a", "b", "difference"))
    for row in compare_reports(a, b):
        writer.writerow(
            (row.su_id, row.metric, f"{row.a:.6f}", f"{row.b:.6f}", f"{row.difference:.6f}")
        )
    return buffer.getvalue()


def scenario_table(scenarios: Optional[Mapping[str, ScenarioTemplate]] = None) -> str:
    """Table of scenarios with their shape, default mode and randomness."""
    if scenarios is None:
        scenarios = builtin_scenarios()
    rows = [
        (
            label,
            f"{template.shape[0]}x{template.shape[1]}",
            " ".join(f"{p.name}={p.quota}" for p in template.providers),
            str(template.mode or ExperimentMode.ONE_TO_ONE_DA),
            "fixed" if template.is_deterministic else "uniform-random",
        )
        for label, template in scenarios.items()
    ]
    headers = ("label", "N x M", "quotas", "mode", "users")
    return render_table(headers, rows, ["left"] * 5)
