from .base_analyzer import BaseAnalyzer
from .acceptance_checks import AcceptanceChecks, NUMBERED_CHECKS, SUPPLEMENTARY_CHECKS
from .verification_analyzer import VerificationAnalyzer
from .limit_analyzer import LimitAnalyzer

__all__ = [
    "BaseAnalyzer",
    "AcceptanceChecks",
    "NUMBERED_CHECKS",
    "SUPPLEMENTARY_CHECKS",
    "VerificationAnalyzer",
    "LimitAnalyzer",
]
