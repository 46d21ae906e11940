"""
Exception tests: custom exception hierarchy and the CLI error mapping.

Tests the core/exceptions.py and core/error_handlers.py modules.
"""

import pytest

from app.core.error_handlers import INTERNAL_EXIT_CODE, error_document, handle_exception
from app.core.exceptions import (
    AppException,
    ConfigurationError,
    DimensionMismatchError,
    InputError,
    InvariantViolationError,
    ModeError,
    ParseError,
    ResourceLimitError,
    VerdictFailure,
)


class TestAppException:
    """Test base application exception."""

    def test_app_exception_default(self):
        """AppException should have default message."""
        exc = AppException()
        assert exc.message == "An unexpected error occurred"
        assert exc.exit_code == 70
        assert exc.error_code == "INTERNAL_ERROR"

    def test_app_exception_custom_message(self):
        """AppException should accept custom message."""
        exc = AppException("Custom error message")
        assert exc.message == "Custom error message"
        assert str(exc) == "Custom error message"


class TestInputErrors:
    """Exit code 2 family."""

    def test_input_error(self):
        exc = InputError("bad input")
        assert (exc.exit_code, exc.error_code) == (2, "INPUT_ERROR")

    def test_parse_error_position(self):
        """ParseError should prefix line and column."""
        exc = ParseError("unknown variable 'y3'", line=2, column=4)
        assert exc.message == "line 2, column 4: unknown variable 'y3'"
        assert exc.exit_code == 2

    def test_parse_error_line_only(self):
        assert ParseError("oops", line=5).message == "line 5: oops"

    def test_parse_error_without_position(self):
        assert ParseError("oops").message == "oops"

    def test_dimension_mismatch(self):
        exc = DimensionMismatchError(3, 2)
        assert "length 2, expected 3" in exc.message
        assert isinstance(exc, InputError)

    def test_mode_error(self):
        assert ModeError("not matroidal").error_code == "MODE_ERROR"


class TestOtherErrors:
    """Resource, verdict, invariant and configuration errors."""

    def test_resource_limit_message(self):
        exc = ResourceLimitError("lcm lattice", 100, 250)
        assert exc.message == "lcm lattice limit 100 exceeded (requested 250)"
        assert exc.exit_code == 3

    def test_resource_limit_bare(self):
        assert ResourceLimitError().message == "resource limit exceeded"

    def test_verdict_failure(self):
        assert VerdictFailure().exit_code == 1

    def test_invariant_violation(self):
        assert InvariantViolationError("broken").exit_code == 4

    def test_configuration_error(self):
        assert ConfigurationError("bad").exit_code == 78

    def test_all_inherit_from_app_exception(self):
        for cls in (InputError, ParseError, ModeError, ResourceLimitError, VerdictFailure,
                    InvariantViolationError, ConfigurationError):
            assert issubclass(cls, AppException)

    def test_can_be_caught_as_app_exception(self):
        with pytest.raises(AppException):
            raise ResourceLimitError("Ass sweep variable", 14, 20)


class TestHandleException:
    """Exceptions map to an error document and exit code."""

    def test_app_exception(self):
        doc, code = handle_exception(ParseError("bad token", line=1, column=1))
        assert code == 2
        assert doc == {
            "success": False,
            "error": {"code": "PARSE_ERROR", "message": "line 1, column 1: bad token"},
        }

    def test_memory_error(self):
        doc, code = handle_exception(MemoryError())
        assert code == 3
        assert doc["error"]["code"] == "RESOURCE_LIMIT"

    def test_unexpected_error_hides_details(self):
        doc, code = handle_exception(KeyError("secret"))
        assert code == INTERNAL_EXIT_CODE
        assert doc["error"] == {"code": "INTERNAL_ERROR", "message": "An internal error occurred"}

    def test_error_document_shape(self):
        assert error_document("X", "y") == {"success": False, "error": {"code": "X", "message": "y"}}
