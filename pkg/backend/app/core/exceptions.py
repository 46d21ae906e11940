"""
Custom exception hierarchy for the stability engine.

All app-level exceptions inherit from AppException, which carries
an exit_code, error_code, and human-readable message. The CLI error
handler (registered in main.py) catches these and emits a consistent
error document before exiting with the class's exit code.
"""


class AppException(Exception):
    """Base application exception."""

    exit_code: int = 70
    error_code: str = "INTERNAL_ERROR"

    def __init__(self, message: str = "An unexpected error occurred"):
        self.message = message
        super().__init__(self.message)


class InputError(AppException):
    """Malformed or inconsistent input (exit 2)."""

    exit_code = 2
    error_code = "INPUT_ERROR"


class ParseError(InputError):
    """Instance file could not be parsed; carries the offending position."""

    error_code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class DimensionMismatchError(InputError):
    """Monomials or ideals living in different ambient rings."""

    error_code = "DIMENSION_MISMATCH"

    def __init__(self, expected: int, got: int):
        super().__init__(
            f"exponent vector has length {got}, expected {expected} variables"
        )


class ModeError(InputError):
    """Certified computation requested for an input that does not qualify."""

    error_code = "MODE_ERROR"


class ResourceLimitError(AppException):
    """A configured cap would be exceeded (exit 3)."""

    exit_code = 3
    error_code = "RESOURCE_LIMIT"

    def __init__(self, resource: str = "resource", limit=None, requested=None):
        detail = f"{resource} limit exceeded"
        if limit is not None:
            detail = f"{resource} limit {limit} exceeded"
            if requested is not None:
                detail += f" (requested {requested})"
        super().__init__(detail)


class VerdictFailure(AppException):
    """One or more checked bounds failed (exit 1)."""

    exit_code = 1
    error_code = "VERDICT_FAILURE"

    def __init__(self, message: str = "One or more verdicts failed"):
        super().__init__(message)


class InvariantViolationError(AppException):
    """A property guaranteed for the input class did not hold (exit 4)."""

    exit_code = 4
    error_code = "INVARIANT_VIOLATION"


class ConfigurationError(AppException):
    """Invalid settings (exit 78)."""

    exit_code = 78
    error_code = "CONFIGURATION_ERROR"
