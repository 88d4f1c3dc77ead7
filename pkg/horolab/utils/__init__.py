from .error_handler import (
    HorolabError,
    ValidationError,
    DimensionError,
    DomainError,
    DataError,
    UnsupportedError,
    TruncationError,
    ConventionError,
    ResourceError,
    InternalError,
    VerificationError,
    handle_horolab_error,
    exit_code_for,
)
from .performance_utils import PerformanceMonitor, timed

__all__ = [
    "HorolabError",
    "ValidationError",
    "DimensionError",
    "DomainError",
    "DataError",
    "UnsupportedError",
    "TruncationError",
    "ConventionError",
    "ResourceError",
    "InternalError",
    "VerificationError",
    "handle_horolab_error",
    "exit_code_for",
    "PerformanceMonitor",
    "timed",
]
