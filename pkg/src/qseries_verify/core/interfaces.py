"""Abstract base classes for sweep targets and report formatters."""

from abc import ABC, abstractmethod

# Forward references to avoid circular imports
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from ..models.sweep import SweepReport, SweepRow
    from .numerics import PrecisionContext


class SweepTarget(ABC):
    """
    Abstract base class for verification targets.

    A target knows its default grid and turns one grid point into one report row.
    """

    name: str

    @abstractmethod
    def default_grid(self, options: dict[str, Any]) -> list[dict[str, Any]]:
        """
        Build the grid the target runs when none is given.

        Args:
            options: Target-wide settings (family, formula, seed, ...)

        Returns:
            List of parameter dictionaries in evaluation order

        Raises:
            ConfigurationError: If the options are incomplete or inconsistent
        """
        pass

    @abstractmethod
    def evaluate(
        self,
        index: int,
        params: dict[str, Any],
        options: dict[str, Any],
        ctx: "PrecisionContext",
    ) -> "SweepRow":
        """
        Evaluate one grid point.

        Args:
            index: Position of the point in the grid
            params: Parameters of the point
            options: Target-wide settings
            ctx: Precision context owned by the caller

        Returns:
            Report row with status pass or fail

        Raises:
            RegimeError: If the point is below a regime gate (reported as skip)
            DomainError: If the point is outside the target's domain
            ResourceError: If an evaluation exceeds the term cap
        """
        pass


class ReportFormatter(ABC):
    """Abstract base class for report formatters."""

    @abstractmethod
    def format_report(self, report: "SweepReport", include_timing: bool = False) -> str:
        """
        Format a sweep report.

        Args:
            report: Finished sweep report
            include_timing: Whether wall-clock times are included

        Returns:
            Formatted string representation
        """
        pass
