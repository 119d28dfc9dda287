"""The acceptance matrix behind `specmatch reproduce-all`.

Every figure check runs its builtin scenarios and compares the statistics
with the published values. Exhaustive runs are used wherever the profile
space is small; Monte Carlo only where the baseline is random.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, TextIO

from specmatch.cli.trace import trace_lines
from specmatch.color import FAILURE, MUTED, SUCCESS, colorize
from specmatch.errors import CliConfigError, SpecmatchError
from specmatch.logger import log
from specmatch.modes import ExperimentMode
from specmatch.scenario.builtin import SWEEP_POSITIONS, get_builtin
from specmatch.simulation.checks import PriorityGuarantee
from specmatch.simulation.exhaustive import run_exhaustive
from specmatch.simulation.monte_carlo import DEFAULT_INSTANTS, DEFAULT_SEED, run_monte_carlo
from specmatch.simulation.stats import AllocationStats
from specmatch.time import Stopwatch

ONE = ExperimentMode.ONE_TO_ONE_DA
MANY = ExperimentMode.MANY_TO_ONE_GS

SYMMETRIC_SHARES = (Fraction(11, 18), Fraction(11, 36), Fraction(1, 12))
"""Exact rank shares of each user of the symmetric 3x3 market."""
FAVOURED_FIRST_CHOICE = 0.89
UNCOORDINATED_FIRST_CHOICE = 1 / 3
EXACT_TOLERANCE = 0.03
"""Allowed distance between exact values and the published rounded ones."""
EXPECTED_TRACE_SUMMARY = "A holds SU1; B holds SU3; C holds SU2; SU4 exhausted list"


@dataclass(frozen=True)
class ReproduceSettings:
    """Monte Carlo settings shared by all checks."""

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

    @property
    def tolerance(self) -> float:
        """Allowed sampling error: 0.01 at 10^5 instants, wider for shorter runs."""
        return max(0.01, 3 * math.sqrt(0.25 / self.instants))


@dataclass(frozen=True)
class CheckOutcome:
    passed: bool
    detail: str


@dataclass(frozen=True)
class FigureCheck:
    """One row of the acceptance matrix."""

    name: str
    description: str
    run: Callable[[ReproduceSettings], CheckOutcome]


def _exact(label: str, mode: ExperimentMode = ONE, **kwargs) -> AllocationStats:
    return run_exhaustive(get_builtin(label), mode, **kwargs)


def _close(value: float, target: float, tolerance: float) -> bool:
    return abs(value - target) <= tolerance


def check_symmetric_market(_: ReproduceSettings) -> CheckOutcome:
    stats = _exact("table2-1to1")
    symmetric = all((stats.counts[n] == stats.counts[0]).all() for n in range(3))
    shares = [stats.exact_success(0, rank) for rank in (1, 2, 3)]
    exact = shares == list(SYMMETRIC_SHARES) and not stats.unmatched.any()
    detail = "S1..S3 = " + ", ".join(str(s) for s in shares)
    return CheckOutcome(symmetric and exact, detail + ("" if symmetric else ", users differ"))


def check_estimate_matches_exact(settings: ReproduceSettings) -> CheckOutcome:
    exact = _exact("table2-1to1").success
    estimate = run_monte_carlo(
        get_builtin("table2-1to1"),
        ONE,
        settings.instants,
        settings.seed,
        workers=settings.workers,
    ).success
    worst = float(abs(exact - estimate).max())
    return CheckOutcome(worst <= settings.tolerance, f"largest deviation {worst:.4f}")


def check_preference_variant(settings: ReproduceSettings) -> CheckOutcome:
    favoured = float(_exact("table2-spB-variant").success[0, 0])
    random = float(
        run_monte_carlo(
            get_builtin("table2-1to1"),
            ExperimentMode.UNCOORDINATED,
            settings.instants,
            settings.seed,
            workers=settings.workers,
        ).success[0, 0]
    )
    passed = _close(favoured, FAVOURED_FIRST_CHOICE, EXACT_TOLERANCE) and _close(
        random, UNCOORDINATED_FIRST_CHOICE, settings.tolerance
    )
    return CheckOutcome(passed, f"SU1 first choice {favoured:.3f} matched, {random:.3f} uncoordinated")


def check_worked_trace(_: ReproduceSettings) -> CheckOutcome:
    lines = trace_lines(get_builtin("eq4-cbrs").fixed_instance(), one_to_one=True)
    summary = lines[-1]
    return CheckOutcome(summary == EXPECTED_TRACE_SUMMARY, summary)


def check_provider_preferences(_: ReproduceSettings) -> CheckOutcome:
    # SU1 tops A's list in both markets and is never left over; being first
    # at two providers shows up in its first-choice share instead.
    rotated = _exact("table3-1to1")
    licensed = _exact("eq4-cbrs-random")
    passed = (
        rotated.unmatched_share[0] >= licensed.unmatched_share[0]
        and licensed.success[0, 0] > rotated.success[0, 0]
        and licensed.unmatched_share[1] > rotated.unmatched_share[1]
    )
    detail = (
        f"SU1 first choice {rotated.success[0, 0]:.3f} vs {licensed.success[0, 0]:.3f}, "
        f"SU2 unmatched {rotated.unmatched_share[1]:.3f} vs {licensed.unmatched_share[1]:.3f}"
    )
    return CheckOutcome(bool(passed), detail)


def check_quotas_everywhere(_: ReproduceSettings) -> CheckOutcome:
    quota = _exact("table3-quota2-all", MANY)
    single = _exact("table3-1to1")
    nobody_left = not quota.unmatched.any()
    better = bool((quota.success[:, 0] > single.success[:, 0]).all())
    detail = "first choice " + ", ".join(
        f"{q:.3f}>{s:.3f}" for q, s in zip(quota.success[:, 0], single.success[:, 0])
    )
    return CheckOutcome(nobody_left and better, detail + ("" if nobody_left else ", users left over"))


def check_priority_guarantee(_: ReproduceSettings) -> CheckOutcome:
    stats = _exact("table3-quotaA2", MANY, check=PriorityGuarantee("A"))
    return CheckOutcome(True, f"guarantee held over {stats.instants} profiles")


def check_position_sweep(_: ReproduceSettings) -> CheckOutcome:
    sweep = {
        position: _exact(f"fig8-sweep-{position}", MANY).success for position in SWEEP_POSITIONS
    }
    su2_first = [float(sweep[position][1, 0]) for position in SWEEP_POSITIONS]
    monotone = all(a <= b for a, b in zip(su2_first, su2_first[1:]))
    front = sweep[SWEEP_POSITIONS[-1]]
    overtakes = front[1, 0] > front[2, 0]
    detail = "SU2 first choice " + " -> ".join(f"{s:.3f}" for s in su2_first)
    return CheckOutcome(monotone and bool(overtakes), detail)


FIGURE_CHECKS = (
    FigureCheck("fig3", "symmetric one-to-one market, exact", check_symmetric_market),
    FigureCheck("fig3-mc", "Monte Carlo estimate against exact values", check_estimate_matches_exact),
    FigureCheck("fig4", "favoured SU1 and uncoordinated baseline", check_preference_variant),
    FigureCheck("trace", "worked deferred-acceptance example", check_worked_trace),
    FigureCheck("fig5", "rotated against licensee provider lists", check_provider_preferences),
    FigureCheck("fig6", "quota 2 at every provider", check_quotas_everywhere),
    FigureCheck("fig7", "priority of A's top users under quota 2", check_priority_guarantee),
    FigureCheck("fig8", "moving SU2 up provider C's list", check_position_sweep),
)


@dataclass(frozen=True)
class CheckResult:
    check: FigureCheck
    outcome: CheckOutcome
    elapsed: float


def run_check(check: FigureCheck, settings: ReproduceSettings) -> CheckResult:
    """Run one check; library errors count as a failure."""
    with Stopwatch() as watch:
        try:
            outcome = check.run(settings)
        except SpecmatchError as e:
            log.error(f"{check.name}: {e}")
            outcome = CheckOutcome(False, f"{type(e).__name__}: {e}")
    return CheckResult(check, outcome, watch.elapsed)


def format_result(result: CheckResult, color: bool = False) -> str:
    """One PASS/FAIL line."""
    if result.outcome.passed:
        status = colorize("PASS", SUCCESS, enabled=color)
    else:
        status = colorize("FAIL", FAILURE, enabled=color)
    timing = colorize(f"({result.elapsed:.2f}s)", MUTED, enabled=color)
    return (
        f"{status} {result.check.name:<8} {result.check.description}: "
        f"{result.outcome.detail} {timing}"
    )


def reproduce_all(
    settings: ReproduceSettings,
    out: TextIO,
    *,
    color: bool = False,
    checks: tuple[FigureCheck, ...] = FIGURE_CHECKS,
) -> bool:
    """Run the acceptance matrix and print one line per check.

    Returns:
        Whether every check passed.
    """
    results = []
    for check in checks:
        result = run_check(check, settings)
        results.append(result)
        print(format_result(result, color), file=out, flush=True)

    failed = [result.check.name for result in results if not result.outcome.passed]
    total = sum(result.elapsed for result in results)
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed: {', '.join(failed)}", file=out)
    else:
        print(f"All {len(results)} checks passed in {total:.2f}s", file=out)
    return not failed
