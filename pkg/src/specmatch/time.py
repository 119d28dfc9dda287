from dataclasses import dataclass, field
from time import perf_counter


def get_time() -> float:
    """Get a monotonic timestamp in seconds."""
    return perf_counter()


@dataclass
class Stopwatch:
    """Measures wall time of a block.

    Example:
        ```python
        with Stopwatch() as watch:
            run_exhaustive(template, mode)
        print(watch.elapsed)
        ```
    """

    started: float = field(default=0.0, init=False)
    elapsed: float = field(default=0.0, init=False)
    """Seconds between entering and leaving the block."""

    def __enter__(self) -> "Stopwatch":
        self.started = get_time()
        return self

    def __exit__(self, *exc_info) -> None:
        self.elapsed = get_time() - self.started
