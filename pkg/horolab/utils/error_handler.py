from typing import Dict, Any
import logging
from datetime import datetime, timezone
import traceback

logger = logging.getLogger(__name__)


class HorolabError(Exception):
    """Base exception for horolab errors."""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        self.message = message
        self.details = details or {}
        self.timestamp = datetime.now(timezone.utc)
        self.traceback = traceback.format_exc()
        super().__init__(self.message)


class ValidationError(HorolabError):
    """Invalid user input: bad parameters, scenario keys or side tags."""
    pass


class DimensionError(HorolabError):
    """Weights or vectors of mismatched rank/dimension."""
    pass


class DomainError(HorolabError):
    """Argument outside the mathematical domain (Λ⁺, real form, poles)."""
    pass


class DataError(HorolabError):
    """Inconsistent catalog or root data."""
    pass


class UnsupportedError(HorolabError):
    """No explicit realization is available for the request."""
    pass


class TruncationError(HorolabError):
    """A truncated series does not cover the requested components."""
    pass


class ConventionError(HorolabError):
    """Normalization conventions failed a consistency check."""
    pass


class ResourceError(HorolabError):
    """Exception for resource-related errors."""
    pass


class InternalError(HorolabError):
    """State that valid inputs can never reach."""
    pass


class VerificationError(HorolabError):
    """A numerical identity failed its tolerance."""
    pass


USAGE_ERRORS = (ValidationError, DimensionError)


def exit_code_for(error: Exception) -> int:
    """Map an exception to the CLI exit code."""
    if isinstance(error, VerificationError):
        return 1
    if isinstance(error, USAGE_ERRORS):
        return 2
    if isinstance(error, (DomainError, UnsupportedError, ResourceError)):
        return 2
    return 1


def handle_horolab_error(error: Exception) -> Dict[str, Any]:
    """
    Convert an exception into a machine-readable diagnostic.

    Args:
        error: The exception that occurred

    Returns:
        Dict[str, Any]: Diagnostic with message, timestamp, type and details
    """
    error_response = {
        "message": str(error),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "type": error.__class__.__name__,
        "details": {}
    }

    if isinstance(error, HorolabError):
        logger.error(f"{error.__class__.__name__}: {error.message}", extra={
            "details": error.details,
            "traceback": error.traceback
        })
        error_response["details"] = error.details
        return error_response

    if isinstance(error, (ValueError, TypeError)):
        logger.error(f"Validation error: {str(error)}")
        error_response["message"] = f"Invalid input: {str(error)}"
        return error_response

    if isinstance(error, MemoryError):
        logger.error("Out of memory")
        error_response["message"] = "Out of memory. Lower the level cap or the truncation."
        return error_response

    logger.error(f"Unexpected error: {str(error)}", exc_info=True)
    error_response["message"] = f"Unexpected error: {str(error)}"
    error_response["details"] = {"traceback": traceback.format_exc()}
    return error_response
