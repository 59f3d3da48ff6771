"""Error payloads written to stderr when a CLI command fails."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from superspencer.exceptions import ReportIOError, SuperSpencerError


class ErrorResponse(BaseModel):
    """Standard error payload."""
    detail: str
    code: Optional[str] = None
    exit_code: int
    path: Optional[str] = None
    errors: Optional[List[Dict[str, Any]]] = None  # per-item validation problems


def create_error_response(
    error: Exception,
    errors: Optional[List[Dict[str, Any]]] = None,
) -> Dict[str, Any]:
    """Create a standardized error payload from an exception.

    Args:
        error: The exception that stopped the command
        errors: Optional itemized problems (for example pydantic validation errors)

    Returns:
        Dictionary ready to be dumped as JSON; optional keys only when set
    """
    if isinstance(error, SuperSpencerError):
        response: Dict[str, Any] = {
            "detail": error.detail,
            "exit_code": error.exit_code,
            "code": error.code,
        }
    else:
        response = {
            "detail": str(error),
            "exit_code": 3,
        }
    if isinstance(error, ReportIOError):
        response["path"] = error.path
    if errors:
        response["errors"] = errors
    return ErrorResponse(**response).model_dump(exclude_none=True)
