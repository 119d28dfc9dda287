from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Color:
    """A class to represent a terminal color with RGB values.

    Args:
        r: Red component (0-255).
        g: Green component (0-255).
        b: Blue component (0-255).
    """

    r: int
    g: int
    b: int

    def __post_init__(self):
        for component in (self.r, self.g, self.b):
            if not 0 <= component <= 255:
                raise ValueError("Color components must be between 0 and 255.")

    @property
    def rgb(self) -> tuple[int, int, int]:
        """Convert the color to an RGB tuple."""
        return self.r, self.g, self.b


SUCCESS = Color(34, 197, 94)
"""Color used for passing checks."""
FAILURE = Color(239, 68, 68)
"""Color used for failing checks."""
MUTED = Color(156, 163, 175)
"""Color used for secondary details such as timings."""


def colorize(
    text: str,
    fg: Optional[Color] = None,
    bg: Optional[Color] = None,
    enabled: bool = True,
) -> str:
    """Colorize text with ANSI escape codes.

    Args:
        text: The text to colorize.
        fg: The foreground color. If None, no foreground color is applied.
        bg: The background color. If None, no background color is applied.
        enabled: Whether to emit escape codes at all. Callers pass False
                 when the output is not a terminal.

    Returns:
        The text wrapped with appropriate ANSI escape codes for coloring.
        If both fg and bg are None, or coloring is disabled, returns the
        original text unchanged.
    """
    if not enabled or (fg is None and bg is None):
        return text

    codes: list[str] = []

    if fg is not None:
        codes.append(f"38;2;{fg.r};{fg.g};{fg.b}")

    if bg is not None:
        codes.append(f"48;2;{bg.r};{bg.g};{bg.b}")

    return f"\033[{';'.join(codes)}m{text}\033[0m"
