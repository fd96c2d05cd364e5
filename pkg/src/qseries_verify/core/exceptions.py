"""Custom exception hierarchy for qseries-verify."""


class QSeriesError(Exception):
    """Base exception for all evaluation and verification errors."""

    def __init__(self, message: str, original_error: Exception | None = None) -> None:
        """
        Initialize q-series error.

        Args:
            message: Error message
            original_error: Original exception that caused this error
        """
        self.message = message
        self.original_error = original_error
        super().__init__(self.message)


class DomainError(QSeriesError):
    """Raised when an argument lies outside the domain of an operation."""

    pass


class SingularityError(QSeriesError):
    """Raised at a pole or when a denominator vanishes."""

    pass


class ResourceError(QSeriesError):
    """Raised when a truncation index would exceed the term cap."""

    def __init__(
        self,
        message: str,
        required_terms: int | None = None,
        original_error: Exception | None = None,
    ) -> None:
        """
        Initialize resource error.

        Args:
            message: Error message
            required_terms: Number of terms the evaluation would have needed
            original_error: Original exception
        """
        super().__init__(message, original_error)
        self.required_terms = required_terms


class RegimeError(DomainError):
    """Raised when n is below the explicit large-n gate of a representation."""

    def __init__(
        self,
        message: str,
        gate_value: float | None = None,
        original_error: Exception | None = None,
    ) -> None:
        """
        Initialize regime error.

        Args:
            message: Error message naming the gate inequality
            gate_value: Measured left side of the gate (must be below 1)
            original_error: Original exception
        """
        super().__init__(message, original_error)
        self.gate_value = gate_value


class ConfigurationError(QSeriesError):
    """Raised when a sweep or formula configuration is invalid."""

    pass


class UnsupportedParameterError(QSeriesError):
    """Raised for parameters that are legal but deliberately not supported."""

    pass


class BoundViolationError(QSeriesError):
    """Raised when a fail-fast sweep stops at a failing row."""

    pass


class OutputError(QSeriesError):
    """Raised when a report cannot be written to its destination."""

    pass
