from dataclasses import dataclass
from enum import IntEnum

import numpy as np

MAX_SEED = 2**64 - 1
WORDS_PER_BLOCK = 4
"""64-bit words Philox4x64 emits per counter step."""


class StreamPurpose(IntEnum):
    """Independent substreams drawn for the same instant."""

    PREFERENCES = 0
    """User preference lists."""
    ASSIGNMENT = 1
    """Random assignments of the uncoordinated baseline."""


def uniform_rows(
    master_seed: int, purpose: StreamPurpose, instants: range, width: int
) -> np.ndarray:
    """Uniform draws in [0, 1) of consecutive instants, one row per instant.

    A Philox generator keyed on (master_seed, purpose) is positioned at a
    counter derived from the instant index, so row t depends only on
    (master_seed, purpose, t, width). Any split of the instants into ranges
    yields the same rows.

    Args:
        master_seed: The run's seed, a 64-bit unsigned integer.
        purpose: Which substream to draw from.
        instants: The instants to draw for.
        width: Number of draws per instant.

    Returns:
        Array of shape (len(instants), width).
    """
    blocks = -(-width // WORDS_PER_BLOCK)
    bit_generator = np.random.Philox(
        key=master_seed | int(purpose) << 64, counter=instants.start * blocks
    )
    draws = np.random.Generator(bit_generator).random(
        (len(instants), blocks * WORDS_PER_BLOCK)
    )
    return draws[:, :width]


def permutation_rows(
    master_seed: int, purpose: StreamPurpose, instants: range, count: int, size: int
) -> np.ndarray:
    """Uniform random permutations of range(size), `count` of them per instant.

    Returns:
        Integer array of shape (len(instants), count, size).
    """
    draws = uniform_rows(master_seed, purpose, instants, count * size)
    return np.argsort(draws.reshape(len(instants), count, size), axis=-1)


@dataclass(frozen=True)
class RandomStream:
    """Randomness of one allocation instant.

    The draws of instant t are a pure function of (master_seed, t), so
    results do not depend on the order in which instants are simulated or
    on how they are spread over workers.

    Args:
        master_seed: The run's seed, a 64-bit unsigned integer.
        instant_index: Zero-based instant number.
    """

    master_seed: int
    instant_index: int = 0

    def __post_init__(self):
        if not 0 <= self.master_seed <= MAX_SEED:
            raise ValueError(f"Seed must fit in 64 unsigned bits, got {self.master_seed}")
        if self.instant_index < 0:
            raise ValueError(f"Instant index must be non-negative, got {self.instant_index}")

    @property
    def _instants(self) -> range:
        return range(self.instant_index, self.instant_index + 1)

    def uniforms(self, purpose: StreamPurpose, width: int) -> np.ndarray:
        """This instant's row of `uniform_rows`."""
        return uniform_rows(self.master_seed, purpose, self._instants, width)[0]

    def permutations(
        self, count: int, size: int, purpose: StreamPurpose = StreamPurpose.PREFERENCES
    ) -> np.ndarray:
        """This instant's `count` permutations of range(size), shape (count, size)."""
        return permutation_rows(self.master_seed, purpose, self._instants, count, size)[0]

    def at(self, instant_index: int) -> "RandomStream":
        """The stream of another instant of the same run."""
        return RandomStream(self.master_seed, instant_index)
