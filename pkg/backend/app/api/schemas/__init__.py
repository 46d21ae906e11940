"""
Standardized output schemas.

Every command emits either a Report (see report_schemas) or, on error,
an ErrorResponse, so stdout always carries one of two documented shapes.
"""

from pydantic import BaseModel


class ErrorDetail(BaseModel):
    """Structured error detail inside an error response."""

    code: str
    message: str


class ErrorResponse(BaseModel):
    """Error document shape (what the CLI error handler prints)."""

    success: bool = False
    error: ErrorDetail
