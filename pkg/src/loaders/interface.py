"""
Interface for report writers.
Defines the contract for persisting experiment results.
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

from ..models.results import CheckResult


class IReportWriter(ABC):
    """
    Abstract base class for report writers.

    Responsible for persisting CheckResult rows, the run summary and
    optional convergence tables to a storage location.
    """

    @abstractmethod
    def initialize(self) -> None:
        """
        Prepare the storage (e.g., create the output directory).
        """

    @abstractmethod
    def save(self, results: List[CheckResult]) -> Path:
        """
        Save check rows, ordered by check name.

        Args:
            results: CheckResult rows of one experiment run.

        Returns:
            Location of the written table.
        """

    @abstractmethod
    def save_summary(self, summary: dict) -> Path:
        """
        Save the run summary (environment, config echo, totals).

        Args:
            summary: JSON-serializable mapping.
        """

    @abstractmethod
    def save_convergence(self, rows: List[dict]) -> Optional[Path]:
        """
        Save per-step convergence rows, if any.

        Args:
            rows: Mappings with at least "check", "step" and "error" keys.

        Returns:
            Location of the written table, None when there was nothing to write.
        """
