"""CSV and JSON codecs for statistics reports.

CSV rows are ``su_id,rank,count,fraction`` for ranks 1..M followed by one
``su_id,unmatched,count,fraction`` row per user. The JSON document mirrors
StatsReport. Fractions carry 6 decimal digits; counts are authoritative
when parsing.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Literal

import numpy as np

from specmatch.errors import ReportFormatError, UnsupportedMode
from specmatch.modes import ExperimentMode
from specmatch.simulation.stats import AllocationStats, StatsReport

ReportFormat = Literal["csv", "json"]

CSV_HEADER = ("su_id", "rank", "count", "fraction")
UNMATCHED_RANK = "unmatched"


def _fraction(value: float) -> str:
    return f"{value:.6f}"


def to_csv(report: StatsReport) -> str:
    """Serialize a report's statistics as CSV text."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        for rank, (count, fraction) in enumerate(zip(row.counts, row.fractions), start=1):
            writer.writerow((row.su_id, rank, count, _fraction(fraction)))
        writer.writerow(
            (row.su_id, UNMATCHED_RANK, row.unmatched, _fraction(row.unmatched_fraction))
        )
    return buffer.getvalue()


def from_csv(text: str) -> tuple[tuple[str, ...], AllocationStats]:
    """Parse CSV text back into user names and statistics.

    Raises:
        ReportFormatError: If the text is not a statistics CSV.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration as e:
        raise ReportFormatError("Empty CSV report") from e
    if header != CSV_HEADER:
        raise ReportFormatError(f"Unexpected CSV header {header}")

    counts: dict[str, dict[int, int]] = {}
    unmatched: dict[str, int] = {}
    try:
        for su_id, rank, count, _ in reader:
            counts.setdefault(su_id, {})
            if rank == UNMATCHED_RANK:
                unmatched[su_id] = int(count)
            else:
                counts[su_id][int(rank)] = int(count)
    except ValueError as e:
        raise ReportFormatError(f"Malformed CSV row: {e}") from e

    names = tuple(counts)
    if not names or set(unmatched) != set(names):
        raise ReportFormatError("Every user needs rank rows and one unmatched row")
    providers = max(max(ranks, default=0) for ranks in counts.values())
    stats = AllocationStats.zeros(len(names), providers)
    for user, name in enumerate(names):
        for rank, count in counts[name].items():
            stats.counts[user, rank - 1] = count
        stats.unmatched[user] = unmatched[name]

    totals = set(int(t) for t in stats.counts.sum(axis=1) + stats.unmatched)
    if len(totals) != 1:
        raise ReportFormatError(f"Users disagree on the number of instants: {sorted(totals)}")
    stats.instants = totals.pop()
    stats.parts = 1
    return names, stats


def to_document(report: StatsReport) -> dict[str, Any]:
    """Encode a report as a JSON-compatible document."""
    return {
        "label": report.label,
        "mode": report.mode.value,
        "engine": report.engine,
        "instants": report.instants,
        "seed": "exhaustive" if report.seed is None else report.seed,
        "merges": report.merges,
        "users": [
            {
                "su_id": row.su_id,
                "counts": list(row.counts),
                "unmatched": row.unmatched,
                "fractions": [round(f, 6) for f in row.fractions],
                "unmatched_fraction": round(row.unmatched_fraction, 6),
            }
            for row in report.rows
        ],
    }


def to_json(report: StatsReport) -> str:
    """Serialize a report as JSON text."""
    return json.dumps(to_document(report), indent=2) + "\n"


def from_json(text: str) -> StatsReport:
    """Parse JSON text back into a report.

    Raises:
        ReportFormatError: If the text is not a statistics report.
    """
    try:
        document = json.loads(text)
        users = document["users"]
        names = tuple(user["su_id"] for user in users)
        counts = np.array([user["counts"] for user in users], dtype=np.int64)
        unmatched = np.array([user["unmatched"] for user in users], dtype=np.int64)
        seed = document["seed"]
        stats = AllocationStats(
            counts=counts.reshape(len(names), -1),
            unmatched=unmatched,
            instants=int(document["instants"]),
            parts=int(document["merges"]),
        )
        return StatsReport(
            label=document["label"],
            mode=ExperimentMode.parse(document["mode"]),
            stats=stats,
            user_names=names,
            seed=None if seed == "exhaustive" else int(seed),
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, UnsupportedMode) as e:
        raise ReportFormatError(f"Malformed JSON report: {e}") from e


def render(report: StatsReport, fmt: ReportFormat) -> str:
    """Serialize a report in the requested format."""
    match fmt:
        case "csv":
            return to_csv(report)
        case "json":
            return to_json(report)
        case _:
            raise ReportFormatError(f"Unknown report format '{fmt}'")


def write_report(report: StatsReport, path: str | Path, fmt: ReportFormat) -> None:
    """Write a report file."""
    Path(path).write_text(render(report, fmt), encoding="utf-8")
