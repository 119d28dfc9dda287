from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from specmatch.core.matching import Unmatched
from specmatch.errors import ShapeMismatch
from specmatch.modes import ExperimentMode


@dataclass(eq=False)
class AllocationStats:
    """Per-user tallies of matching success over a number of instants.

    Counts stay integers; fractions are derived on demand.

    Args:
        counts: Array of shape (N, M); counts[n, i-1] is how often user n
            got its rank-i provider.
        unmatched: Array of shape (N,); how often user n got nothing.
        instants: Number of instants tallied (T).
        parts: Number of partial runs merged into these statistics.
    """

    counts: np.ndarray
    unmatched: np.ndarray
    instants: int = 0
    parts: int = field(default=0)

    @classmethod
    def zeros(cls, users: int, providers: int) -> "AllocationStats":
        """Empty statistics, the identity of `merge`."""
        return cls(
            counts=np.zeros((users, providers), dtype=np.int64),
            unmatched=np.zeros(users, dtype=np.int64),
        )

    @property
    def shape(self) -> tuple[int, int]:
        """The market shape as (N users, M providers)."""
        users, providers = self.counts.shape
        return users, providers

    def record(self, ranks: Iterable[int | Unmatched]) -> None:
        """Tally one instant.

        Args:
            ranks: One rank (or UNMATCHED) per user, in user order.
        """
        for user, rank in enumerate(ranks):
            if isinstance(rank, Unmatched):
                self.unmatched[user] += 1
            else:
                self.counts[user, rank - 1] += 1
        self.instants += 1

    @property
    def success(self) -> np.ndarray:
        """S[n, i-1]: share of instants user n got its rank-i provider."""
        if self.instants == 0:
            return np.zeros(self.counts.shape)
        return self.counts / self.instants

    @property
    def unmatched_share(self) -> np.ndarray:
        """U[n]: share of instants user n got no spectrum."""
        if self.instants == 0:
            return np.zeros(self.unmatched.shape)
        return self.unmatched / self.instants

    def exact_success(self, user: int, rank: int) -> Fraction:
        """S for one user (0-based) and rank (1-based) as an exact ratio."""
        return Fraction(int(self.counts[user, rank - 1]), self.instants)

    def exact_unmatched(self, user: int) -> Fraction:
        """U for one user (0-based) as an exact ratio."""
        return Fraction(int(self.unmatched[user]), self.instants)

    def is_normalized(self) -> bool:
        """Whether every user's tallies add up to the instant count."""
        totals = self.counts.sum(axis=1) + self.unmatched
        return bool(np.all(totals == self.instants))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AllocationStats):
            return NotImplemented
        return (
            self.instants == other.instants
            and self.counts.shape == other.counts.shape
            and np.array_equal(self.counts, other.counts)
            and np.array_equal(self.unmatched, other.unmatched)
        )

    def __repr__(self) -> str:
        return (
            f"AllocationStats(shape={self.shape}, instants={self.instants}, "
            f"parts={self.parts})"
        )


def merge(a: AllocationStats, b: AllocationStats) -> AllocationStats:
    """Combine two tallies of the same market shape.

    Raises:
        ShapeMismatch: If the shapes differ.
    """
    if a.shape != b.shape:
        raise ShapeMismatch(f"Cannot merge statistics of shapes {a.shape} and {b.shape}")
    return AllocationStats(
        counts=a.counts + b.counts,
        unmatched=a.unmatched + b.unmatched,
        instants=a.instants + b.instants,
        parts=a.parts + b.parts,
    )


@dataclass(frozen=True)
class StatsRow:
    """One user's line of a report."""

    su_id: str
    counts: tuple[int, ...]
    unmatched: int
    fractions: tuple[float, ...]
    unmatched_fraction: float


@dataclass(frozen=True)
class StatsReport:
    """Statistics of one experiment together with how they were produced.

    Args:
        label: The scenario label.
        mode: The experiment mode.
        stats: The tallies.
        user_names: Display names of the users, in user order.
        seed: The master seed, or None for an exhaustive run.
    """

    label: str
    mode: ExperimentMode
    stats: AllocationStats
    user_names: tuple[str, ...]
    seed: Optional[int] = None

    def __post_init__(self):
        if len(self.user_names) != self.stats.shape[0]:
            raise ShapeMismatch(
                f"{len(self.user_names)} user names for {self.stats.shape[0]} users"
            )

    @property
    def engine(self) -> str:
        """"exhaustive" or "mc"."""
        return "exhaustive" if self.seed is None else "mc"

    @property
    def instants(self) -> int:
        """T, the number of instants (or profiles) tallied."""
        return self.stats.instants

    @property
    def merges(self) -> int:
        """Number of partial runs merged into the statistics."""
        return self.stats.parts

    @property
    def rows(self) -> list[StatsRow]:
        """One row per user."""
        success = self.stats.success
        unmatched = self.stats.unmatched_share
        return [
            StatsRow(
                su_id=name,
                counts=tuple(int(c) for c in self.stats.counts[user]),
                unmatched=int(self.stats.unmatched[user]),
                fractions=tuple(float(f) for f in success[user]),
                unmatched_fraction=float(unmatched[user]),
            )
            for user, name in enumerate(self.user_names)
        ]
