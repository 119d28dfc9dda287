"""Monte Carlo driver over allocation instants."""

from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from itertools import repeat
from typing import Iterator, Optional

import numpy as np

from specmatch.logger import log
from specmatch.modes import ExperimentMode
from specmatch.scenario.stream import StreamPurpose, permutation_rows, uniform_rows
from specmatch.scenario.template import ScenarioTemplate
from specmatch.simulation.checks import InstantCheck
from specmatch.simulation.indexed import IndexedScenario
from specmatch.simulation.solve import check_mode
from specmatch.simulation.stats import AllocationStats, merge

DEFAULT_INSTANTS = 100_000
DEFAULT_SEED = 7
CHUNK_INSTANTS = 4096
"""Instants whose random draws are generated in one batch."""


def shard_ranges(instants: int, shards: int) -> list[range]:
    """Split instants 0..T-1 into contiguous, nearly equal ranges.

    Example:
        ```python
        shard_ranges(10, 3)  # [range(0, 4), range(4, 7), range(7, 10)]
        ```
    """
    if shards < 1:
        raise ValueError(f"Shard count must be positive, got {shards}")
    shards = min(shards, instants)
    size, extra = divmod(instants, shards)
    ranges = []
    start = 0
    for shard in range(shards):
        stop = start + size + (1 if shard < extra else 0)
        ranges.append(range(start, stop))
        start = stop
    return ranges


def run_shard(
    template: ScenarioTemplate,
    mode: ExperimentMode,
    instants: range,
    master_seed: int,
    check: Optional[InstantCheck] = None,
) -> AllocationStats:
    """Simulate a range of instants of an already validated template.

    Each instant draws from its own substream, so the tallies of a shard do
    not depend on which other shards exist. The draws of instant t are the
    ones `instantiate` and `solve` use with `RandomStream(master_seed, t)`.
    """
    indexed = IndexedScenario.of(template, mode)
    users, providers = template.shape
    random_count = len(template.random_users)
    # Last column counts instants without a provider.
    tally = [[0] * (providers + 1) for _ in range(users)]

    for chunk in _chunks(instants):
        drawn = permutation_rows(
            master_seed, StreamPurpose.PREFERENCES, chunk, random_count, providers
        ).tolist()
        assignments = uniform_rows(
            master_seed, StreamPurpose.ASSIGNMENT, chunk, indexed.assignment_width
        ).tolist()
        for instant, random_lists, assignment in zip(chunk, drawn, assignments):
            user_lists = indexed.user_lists(random_lists)
            positions = indexed.positions(user_lists, assignment)
            if check is not None:
                check(
                    instant,
                    indexed.instance(random_lists),
                    indexed.matching(user_lists, positions),
                )
            for row, prefs, position in zip(tally, user_lists, positions):
                row[position if position < len(prefs) else providers] += 1

    counts = np.array(tally, dtype=np.int64).reshape(users, providers + 1)
    return AllocationStats(
        counts=np.ascontiguousarray(counts[:, :providers]),
        unmatched=counts[:, providers].copy(),
        instants=len(instants),
        parts=1,
    )


def _chunks(instants: range) -> Iterator[range]:
    for start in range(instants.start, instants.stop, CHUNK_INSTANTS):
        yield range(start, min(start + CHUNK_INSTANTS, instants.stop))


def run_monte_carlo(
    template: ScenarioTemplate,
    mode: ExperimentMode,
    instants: int,
    master_seed: int,
    *,
    workers: int = 1,
    shards: Optional[int] = None,
    check: Optional[InstantCheck] = None,
) -> AllocationStats:
    """Estimate matching success by simulating T allocation instants.

    Every instant draws fresh user preferences, solves the market with the
    selected mode and tallies each user's rank. Results are identical for
    any number of workers or shards.

    Args:
        template: The scenario to simulate.
        mode: The matcher used at every instant.
        instants: T, the number of instants.
        master_seed: Seed of the run.
        workers: Worker processes. 1 runs in the calling process.
        shards: Number of instant ranges. Defaults to the worker count.
        check: Optional per-instant check, called after every instant. Must
            be picklable when workers > 1.

    Returns:
        Exact integer tallies over the T instants.

    Raises:
        InstanceError: If the template is not a valid market.
        UnsupportedMode: If the mode cannot be used with the template.
    """
    if instants < 1:
        raise ValueError(f"Number of instants must be positive, got {instants}")
    if workers < 1:
        raise ValueError(f"Number of workers must be positive, got {workers}")
    template.validate()
    check_mode(template, mode)

    ranges = shard_ranges(instants, shards or workers)
    log.debug(
        f"Simulating {instants} instants of '{template.label}' ({mode}) "
        f"in {len(ranges)} shard(s) on {workers} worker(s), seed {master_seed}"
    )

    if workers == 1:
        results = [run_shard(template, mode, r, master_seed, check) for r in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    run_shard,
                    repeat(template),
                    repeat(mode),
                    ranges,
                    repeat(master_seed),
                    repeat(check),
                )
            )

    return reduce(merge, results, AllocationStats.zeros(*template.shape))
