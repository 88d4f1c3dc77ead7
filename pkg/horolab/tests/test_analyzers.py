import json

import numpy as np
import pytest

from horolab.analyzers import (
    NUMBERED_CHECKS,
    SUPPLEMENTARY_CHECKS,
    AcceptanceChecks,
    LimitAnalyzer,
    VerificationAnalyzer,
)
from horolab.models.reports import Scenario


@pytest.fixture
def scenario():
    """H² → H³ with μ = ω and a cheap set of checks."""
    return Scenario(
        family="SO",
        p=1,
        level_range=[2, 3],
        mu_coefficients=[1],
        checks=["admissibility", "gammaCommute", "gradedProj", "compatibleDuals"],
        seed=11,
    )


def test_check_tuples():
    assert len(NUMBERED_CHECKS) == 13
    assert len(SUPPLEMENTARY_CHECKS) == 5
    assert len({c.__name__ for c in NUMBERED_CHECKS + SUPPLEMENTARY_CHECKS}) == 18


@pytest.mark.parametrize("check,name", [
    (AcceptanceChecks.check_c_normalization, "cNormalization"),
    (AcceptanceChecks.check_lattice_exactness, "latticeExactness"),
    (AcceptanceChecks.check_multiplicity_one, "multiplicityOne"),
    (AcceptanceChecks.check_kernel_tilde, "kernelTildeClosedForm"),
])
def test_quick_acceptance_checks(check, name: str):
    result = check(np.random.default_rng(1), quick=True)
    assert result.name == name
    assert result.passed, result.details


def test_limit_analyzer_runs_scenario(scenario, tmp_path):
    analyzer = LimitAnalyzer(str(tmp_path))
    report = analyzer.run(scenario)
    assert report.command == "limits run"
    assert [c.name for c in report.checks] == scenario.checks
    assert report.passed
    assert report.metadata["seed"] == 11
    assert set(report.metadata["timings"]) == set(scenario.checks)

    saved = analyzer.save(report)
    data = json.loads(open(saved).read())
    assert data["schemaVersion"] == "1.0"
    assert data["metadata"]["analyzer"] == "limits"
    assert data["results"]["failed"] == []


def test_limit_analyzer_skips_unsupported_checks(tmp_path):
    scenario = Scenario(family="SL2", level_range=[1, 2], mu_coefficients=[1], checks=["dualRadonLimit"])
    report = LimitAnalyzer(str(tmp_path)).run(scenario)
    result = report.checks[0]
    assert result.passed
    assert "skipped" in result.details


def test_verification_analyzer_subset(monkeypatch, tmp_path):
    from horolab.analyzers import verification_analyzer

    monkeypatch.setattr(verification_analyzer, "NUMBERED_CHECKS", (AcceptanceChecks.check_c_normalization,))
    monkeypatch.setattr(verification_analyzer, "SUPPLEMENTARY_CHECKS", (AcceptanceChecks.check_model_constants,))
    analyzer = VerificationAnalyzer(str(tmp_path))
    report = analyzer.run(quick=True, seed=3)
    assert [c.name for c in report.checks] == ["cNormalization", "modelConstants"]
    assert report.checks[0].details["criterion"] == 1
    assert "criterion" not in report.checks[1].details

    report = analyzer.run(quick=True, seed=3, supplementary=False)
    assert len(report.checks) == 1
    assert analyzer.save(report).endswith(".json")


def test_quick_limits_use_a_shorter_chain():
    result = AcceptanceChecks.check_limits(np.random.default_rng(2), quick=True)
    assert result.passed, result.details
    assert len(result.sequence) == 14
    assert result.sequence[-1] == pytest.approx(1.0 / 15.0)
