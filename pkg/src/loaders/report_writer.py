"""
File-based implementation of IReportWriter.

Writes into one output directory:
- checks.csv: one row per check, sorted by name, floats with 17 significant digits
- summary.json: environment, timestamp, config echo and totals
- convergence.csv: per-step errors of convergence experiments (optional)
"""
import json
import logging
import platform
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd
import scipy

from ..models.results import CheckResult
from .interface import IReportWriter

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ["name", "group", "residual", "tolerance", "passed", "anchor", "detail"]
FLOAT_FORMAT = "%.17g"


def environment() -> dict:
    """Interpreter and library versions recorded in the summary."""
    return {
        "python": sys.version.split()[0],
        "platform": platform.platform(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
    }


class ReportWriter(IReportWriter):
    """
    Report files in a single directory.

    The CSV bodies depend only on the results, never on the clock, so
    identical runs produce byte-identical tables.
    """

    def __init__(self, directory: str = "reports"):
        """
        Args:
            directory: Output directory, created on initialize().
        """
        self.directory = Path(directory)

    @property
    def checks_path(self) -> Path:
        return self.directory / "checks.csv"

    @property
    def summary_path(self) -> Path:
        return self.directory / "summary.json"

    @property
    def convergence_path(self) -> Path:
        return self.directory / "convergence.csv"

    def initialize(self) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)

    def save(self, results: List[CheckResult]) -> Path:
        rows = sorted((r.to_dict() for r in results), key=lambda row: row["name"])
        frame = pd.DataFrame(rows, columns=CHECK_COLUMNS)
        frame.to_csv(self.checks_path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        logger.info("wrote %d check rows to %s", len(frame), self.checks_path)
        return self.checks_path

    def save_summary(self, summary: dict) -> Path:
        payload = {"written_at": datetime.now(timezone.utc).isoformat(), "environment": environment()}
        payload.update(summary)
        self.summary_path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n",
                                     encoding="utf-8")
        return self.summary_path

    def save_convergence(self, rows: List[dict]) -> Optional[Path]:
        if not rows:
            return None
        frame = pd.DataFrame(rows).sort_values(["check", "step"], ascending=[True, False], kind="mergesort")
        frame.to_csv(self.convergence_path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        return self.convergence_path

    def load(self) -> List[CheckResult]:
        """Read checks.csv back into CheckResult rows."""
        frame = pd.read_csv(self.checks_path, keep_default_na=False)
        return [CheckResult.from_dict(row) for row in frame.to_dict(orient="records")]
