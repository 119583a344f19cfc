"""
Report emission: the statistics table (Best/Worst/Average/Std of the
objective, then F_min/F_max/F_avg/F_std), plus the per-run log it was
computed from, as a human-readable table, CSV, or JSON lines.
"""
import json
import logging
import math
import sys
from dataclasses import asdict
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

import pandas as pd

from ..utils.exceptions import ClusterBenchError
from .config import ReportFormat
from .experiment import RunRecord, RunStats

__all__ = [
    "STATS_COLUMNS",
    "RUN_COLUMNS",
    "stats_frame",
    "runs_frame",
    "emit_report",
    "runs_log_path",
]

LOG = logging.getLogger("clusterbench")

STATS_COLUMNS = ["dataset", "algorithm", "runs", "best", "worst", "average", "std",
                 "f_min", "f_max", "f_avg", "f_std", "failures"]
RUN_COLUMNS = ["dataset", "algorithm", "run", "seed", "objective", "f_measure", "iterations", "wall_time", "error"]
TABLE_HEADINGS = {
    "dataset": "Data set", "algorithm": "Algorithm", "runs": "Runs", "best": "Best", "worst": "Worst",
    "average": "Average", "std": "Std", "f_min": "F_min", "f_max": "F_max", "f_avg": "F_avg",
    "f_std": "F_std", "failures": "Failed",
}
STD_NOTE = "# Std and F_std are sample standard deviations (divisor runs - 1)."


def stats_frame(stats: Sequence[RunStats]) -> pd.DataFrame:
    rows = []
    for row in stats:
        values = asdict(row)
        values["algorithm"] = row.algorithm.description()
        rows.append({column: values[column] for column in STATS_COLUMNS})
    return pd.DataFrame(rows, columns=STATS_COLUMNS)


def runs_frame(records: Sequence[RunRecord]) -> pd.DataFrame:
    rows = []
    for record in records:
        values = asdict(record)
        values["algorithm"] = record.algorithm.description()
        rows.append({column: values[column] for column in RUN_COLUMNS})
    return pd.DataFrame(rows, columns=RUN_COLUMNS)


def runs_log_path(out: Path) -> Path:
    """report.csv -> report.runs.csv"""
    return out.with_name(f"{out.stem}.runs{out.suffix}")


def _json_lines(frame: pd.DataFrame) -> str:
    # json (unlike DataFrame.to_json) keeps floats at full precision
    lines = []
    for row in frame.to_dict(orient="records"):
        clean = {key: (None if isinstance(value, float) and math.isnan(value) else value) for key, value in row.items()}
        lines.append(json.dumps(clean))
    return "\n".join(lines) + "\n"


def _render(frame: pd.DataFrame, fmt: ReportFormat, note: Optional[str] = None) -> str:
    if fmt is ReportFormat.CSV:
        return frame.to_csv(index=False)
    if fmt is ReportFormat.JSON_LINES:
        return _json_lines(frame)
    table = frame.rename(columns=TABLE_HEADINGS).to_string(
        index=False, float_format=lambda value: f"{value:.3f}", na_rep="-")
    return f"{note}\n{table}\n" if note else f"{table}\n"


def _write(text: str, path: Path) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ClusterBenchError(f"Cannot write the report to {path}: {e}") from e


def emit_report(stats: List[RunStats], fmt: ReportFormat = ReportFormat.TABLE, out: Optional[Path] = None,
                records: Optional[List[RunRecord]] = None, stream: TextIO = None) -> None:
    """
    Writes the statistics (one row per dataset and algorithm, in the order
    given) and, when `records` are supplied, the per-run log.

    With `out`, the statistics go to that file and the log to
    `runs_log_path(out)`; otherwise both go to `stream` (stdout by default).
    The table format rounds to 3 decimals; CSV and JSON lines keep full
    precision.

    :raises ClusterBenchError: if the output file cannot be written.
    """
    if not stats:
        raise ValueError("There are no statistics to report.")
    stream = stream or sys.stdout
    summary = _render(stats_frame(stats), fmt, STD_NOTE)
    log = _render(runs_frame(records), fmt) if records else None
    if out is not None:
        out = Path(out)
        _write(summary, out)
        LOG.info(f"Report written to {out}")
        if log is not None:
            _write(log, runs_log_path(out))
            LOG.info(f"Per-run log written to {runs_log_path(out)}")
        return
    stream.write(summary)
    if log is not None:
        stream.write("\n")
        stream.write(log)
