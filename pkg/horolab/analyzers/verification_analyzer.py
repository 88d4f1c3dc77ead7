from typing import Optional
import logging

import numpy as np

from .acceptance_checks import NUMBERED_CHECKS, SUPPLEMENTARY_CHECKS
from .base_analyzer import BaseAnalyzer
from ..config import get_settings
from ..models.reports import VerificationReport

logger = logging.getLogger(__name__)


class VerificationAnalyzer(BaseAnalyzer):
    """Runs the acceptance suite and the supplementary identities."""

    name = "verify_all"

    def run(self, quick: bool = False, seed: Optional[int] = None,
            supplementary: bool = True) -> VerificationReport:
        """
        Run every numbered check, then the supplementary ones.

        Each check draws from its own generator seeded by (seed, index), so
        the outcome of one check does not depend on which others ran.

        Args:
            quick: Lower the level and weight caps
            seed: Seed for the randomized checks; defaults to ``settings.seed``

        Returns:
            The finished report
        """
        seed = get_settings().seed if seed is None else seed
        report = VerificationReport(command="verify-all", metadata={"quick": quick, "seed": seed})
        checks = list(NUMBERED_CHECKS) + (list(SUPPLEMENTARY_CHECKS) if supplementary else [])
        for index, check in enumerate(checks, start=1):
            rng = np.random.default_rng([seed, index])
            result = self.run_check(report, check.__name__, check, rng, quick)
            if index <= len(NUMBERED_CHECKS):
                result.details["criterion"] = index
            level = logging.INFO if result.passed else logging.WARNING
            logger.log(level, f"{result.name}: passed={result.passed}, maxError={result.max_error}")

        report.metadata["timings"] = self.monitor.summary()
        logger.info(f"verify-all finished: {len(report.checks) - len(report.failed)}/{len(report.checks)} passed")
        return report

    def save(self, report: VerificationReport) -> str:
        return self.save_to_json(self._standardize_results(report), report.command)
