"""
Global exception handling for the CLI.

Every error leaves the process with a consistent document:
{
    "success": false,
    "error": {
        "code": "PARSE_ERROR",
        "message": "line 3, column 4: unknown variable 'y7'"
    }
}
and the exit code attached to the exception class.
"""

import logging
from typing import Any, Dict, Tuple

from app.api.schemas import ErrorDetail, ErrorResponse
from app.core.exceptions import AppException

logger = logging.getLogger("polystab.cli")

INTERNAL_EXIT_CODE = 70


def error_document(code: str, message: str) -> Dict[str, Any]:
    return ErrorResponse(error=ErrorDetail(code=code, message=message)).model_dump()


def handle_exception(exc: BaseException) -> Tuple[Dict[str, Any], int]:
    """Map an exception to (error document, exit code)."""
    if isinstance(exc, AppException):
        logger.warning(
            "AppException: %s [exit %s]: %s",
            exc.error_code,
            exc.exit_code,
            exc.message,
        )
        return error_document(exc.error_code, exc.message), exc.exit_code

    if isinstance(exc, MemoryError):
        logger.error("Out of memory: %s", exc)
        return (
            error_document("RESOURCE_LIMIT", "Out of memory while computing"),
            3,
        )

    logger.error("Unhandled exception: %s", exc, exc_info=True)
    return (
        error_document("INTERNAL_ERROR", "An internal error occurred"),
        INTERNAL_EXIT_CODE,
    )
