from typing import Callable, Dict
import logging

import numpy as np

from .base_analyzer import BaseAnalyzer
from ..config import ToleranceSettings, get_settings
from ..limits import (
    PropagatedFamily,
    build_family,
    compatible_dual_dimension,
    dual_radon_limit,
    gamma_commute_check,
    graded_proj_check,
    kernel_limit_check,
    noncommuting_defect,
    projective_evaluation_check,
    random_points,
    sphere_radon_limit,
)
from ..models.reports import CheckResult, Scenario, VerificationReport
from ..utils.error_handler import HorolabError, UnsupportedError

logger = logging.getLogger(__name__)


def _vector(rng: np.random.Generator, dimension: int) -> np.ndarray:
    return rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)


class LimitAnalyzer(BaseAnalyzer):
    """Runs the checks a scenario file asks for along one propagated family."""

    name = "limits"

    def __init__(self, output_dir=None):
        super().__init__(output_dir)
        self._handlers: Dict[str, Callable[..., CheckResult]] = {
            "admissibility": self._admissibility,
            "gammaCommute": self._gamma_commute,
            "gradedProj": self._graded_proj,
            "kernelLimit": self._kernel_limit,
            "dualRadonLimit": self._dual_radon_limit,
            "sphereRadonLimit": self._sphere_radon_limit,
            "noncommutingDefect": self._noncommuting_defect,
            "compatibleDuals": self._compatible_duals,
            "projectiveEvaluation": self._projective_evaluation,
        }

    def run(self, scenario: Scenario) -> VerificationReport:
        settings = get_settings()
        tol = settings.with_tolerances(scenario.tolerances.model_dump(exclude_none=True)).tolerances
        family = build_family(scenario.family, scenario.p, scenario.levels, scenario.mu_coefficients)
        seed = settings.seed if scenario.seed is None else scenario.seed
        report = VerificationReport(command="limits run", metadata={
            "scenario": scenario.model_dump(by_alias=True),
            "family": family.to_dict(),
            "seed": seed,
        })
        for index, check in enumerate(scenario.checks):
            rng = np.random.default_rng([seed, index])
            self.run_check(report, check, self._guarded, check, family, scenario, tol, rng)
        report.metadata["timings"] = self.monitor.summary()
        return report

    def save(self, report: VerificationReport) -> str:
        return self.save_to_json(self._standardize_results(report), report.command)

    def _guarded(self, check: str, family: PropagatedFamily, scenario: Scenario,
                 tol: ToleranceSettings, rng: np.random.Generator) -> CheckResult:
        try:
            return self._handlers[check](family, scenario, tol, rng)
        except UnsupportedError as e:
            logger.info(f"Skipping {check}: {e.message}")
            return CheckResult(name=check, passed=True, details={"skipped": e.message, **e.details})
        except HorolabError as e:
            logger.error(f"Error checking {check}: {str(e)}")
            return CheckResult(name=check, passed=False,
                               details={"error": e.message, "type": e.__class__.__name__, **e.details})

    # scenario checks

    @staticmethod
    def _admissibility(family, scenario, tol, rng) -> CheckResult:
        report = family.admissibility
        return CheckResult(name="admissibility", passed=report["admissible"], details=report)

    @staticmethod
    def _gamma_commute(family, scenario, tol, rng) -> CheckResult:
        base = family.model(0)
        report = gamma_commute_check(family, 0, len(family) - 1, _vector(rng, base.dimension),
                                     random_points(base, rng, 5))
        return CheckResult(name="gammaCommute", passed=report["maxError"] <= tol.exact,
                           max_error=report["maxError"], details=report)

    @staticmethod
    def _graded_proj(family, scenario, tol, rng) -> CheckResult:
        top = len(family) - 1
        report = graded_proj_check(family, 0, top, _vector(rng, family.model(top).dimension),
                                   random_points(family.model(0), rng, 5))
        return CheckResult(name="gradedProj", passed=report["maxError"] <= tol.proportionality,
                           max_error=report["maxError"], details=report)

    @staticmethod
    def _kernel_limit(family, scenario, tol, rng) -> CheckResult:
        base = family.model(0)
        report = kernel_limit_check(family, 0, _vector(rng, base.dimension), base.random_real(rng, 0.7),
                                    truncation=scenario.truncation, min_degree=scenario.quadrature_order)
        passed = report["spread"] <= tol.exact and report["maxError"] <= tol.identity
        return CheckResult(name="kernelLimit", passed=passed, max_error=report["maxError"],
                           sequence=report["sequence"], details=report)

    @staticmethod
    def _dual_radon_limit(family, scenario, tol, rng) -> CheckResult:
        base = family.model(0)
        report = dual_radon_limit(family, 0, _vector(rng, base.dimension), base.random_real(rng, 0.7))
        return CheckResult(name="dualRadonLimit", passed=report["maxError"] <= tol.identity,
                           max_error=report["maxError"], sequence=report["sequence"], details=report)

    @staticmethod
    def _sphere_radon_limit(family, scenario, tol, rng) -> CheckResult:
        base = family.model(0)
        report = sphere_radon_limit(family, 0, base.highest_vector, scenario.a_sweep[0],
                                    base.random_real(rng, 0.3), scenario.a_sweep)
        return CheckResult(name="sphereRadonLimit", passed=report["sweepMonotone"],
                           max_error=report["maxError"], sequence=report["sequence"], details=report)

    @staticmethod
    def _noncommuting_defect(family, scenario, tol, rng) -> CheckResult:
        if len(family) < 2:
            raise UnsupportedError("the defect compares two levels", {"levels": len(family)})
        base = family.model(0)
        report = noncommuting_defect(family, 0, 1, _vector(rng, base.dimension), base.random_real(rng, 0.7))
        return CheckResult(name="noncommutingDefect", passed=report["maxError"] <= tol.identity,
                           max_error=report["maxError"], details=report)

    @staticmethod
    def _compatible_duals(family, scenario, tol, rng) -> CheckResult:
        report = compatible_dual_dimension(family)
        return CheckResult(name="compatibleDuals", passed=report["dimension"] == 1, details=report)

    @staticmethod
    def _projective_evaluation(family, scenario, tol, rng) -> CheckResult:
        base = family.model(0)
        report = projective_evaluation_check(family, 0, _vector(rng, base.dimension),
                                             random_points(base, rng, 5))
        return CheckResult(name="projectiveEvaluation", passed=report["maxError"] <= tol.exact,
                           max_error=report["maxError"], details=report)
