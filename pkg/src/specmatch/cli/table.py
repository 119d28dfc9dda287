from typing import Sequence

from specmatch.utils.align import HorizontalAlignment, align


def render_table(
    headers: Sequence[str],
    rows: Sequence[Sequence[str]],
    alignments: Sequence[HorizontalAlignment] | None = None,
) -> str:
    """Render rows as a plain-text table with aligned columns.

    Args:
        headers: Column titles.
        rows: Cell texts, one sequence per row.
        alignments: Per-column alignment. Defaults to left for the first
            column and right for the others.

    Returns:
        The table, one line per row, with a rule under the headers.
    """
    if alignments is None:
        alignments = ["left"] + ["right"] * (len(headers) - 1)
    widths = [
        max(len(str(cell)) for cell in column) for column in zip(headers, *rows)
    ]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(
            align(str(cell), width, alignment)
            for cell, width, alignment in zip(cells, widths, alignments)
        ).rstrip()

    rule = "  ".join("-" * width for width in widths)
    return "\n".join([line(headers), rule, *(line(row) for row in rows)]) + "\n"
