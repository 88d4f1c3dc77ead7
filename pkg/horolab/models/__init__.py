from .reports import CheckResult, VerificationReport, Scenario, ScenarioTolerances, SCENARIO_CHECKS

__all__ = ["CheckResult", "VerificationReport", "Scenario", "ScenarioTolerances", "SCENARIO_CHECKS"]
