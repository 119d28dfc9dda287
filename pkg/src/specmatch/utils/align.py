from typing import Literal

from specmatch.errors import SpecmatchError

HorizontalAlignment = Literal["left", "center", "right"]


class AlignmentError(SpecmatchError):
    """An unknown alignment was requested."""


def get_aligned_start_x(
    content: str, region_width: int, alignment: HorizontalAlignment
) -> int:
    """
    Calculate the starting x position for content alignment within a region.

    Args:
        content (str): The content to be aligned.
        region_width (int): The width of the region in which the content will be placed.
        alignment (HorizontalAlignment): The alignment type ('left', 'center', 'right').

    Returns:
        int: The starting x position for the content.
    """
    content_width = len(content)
    match alignment:
        case "left":
            return 0
        case "center":
            return max(0, (region_width - content_width) // 2)
        case "right":
            return max(0, region_width - content_width)
        case _:
            raise AlignmentError(f"Invalid alignment type: {alignment}")


def align(content: str, region_width: int, alignment: HorizontalAlignment) -> str:
    """Pad content with spaces so it fills a region of the given width.

    Args:
        content (str): The content to be aligned.
        region_width (int): The width of the region.
        alignment (HorizontalAlignment): The alignment type.

    Returns:
        str: The padded content. Content wider than the region is returned unchanged.
    """
    start = get_aligned_start_x(content, region_width, alignment)
    padded = " " * start + content
    return padded + " " * max(0, region_width - len(padded))
