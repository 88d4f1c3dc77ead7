import json
import time

import pytest
import yaml

from horolab.config import Settings, get_settings
from horolab.models.reports import SCENARIO_CHECKS, CheckResult, Scenario, VerificationReport
from horolab.utils.error_handler import (
    DataError,
    DomainError,
    InternalError,
    ResourceError,
    TruncationError,
    UnsupportedError,
    ValidationError,
    VerificationError,
    exit_code_for,
    handle_horolab_error,
)
from horolab.utils.performance_utils import PerformanceMonitor, timed


def test_default_settings():
    settings = Settings()
    assert settings.tolerances.identity == 1e-8
    assert settings.tolerances.rank_one_oracle == 1e-6
    assert settings.output.schema_version == "1.0"
    assert settings.seed == 20240611


def test_settings_from_env(monkeypatch, fresh_settings):
    monkeypatch.setenv("HOROLAB_TOL_IDENTITY", "1e-6")
    monkeypatch.setenv("HOROLAB_THREADS", "2")
    monkeypatch.setenv("HOROLAB_SEED", "99")
    monkeypatch.setenv("HOROLAB_PERF_PROFILING_ENABLED", "true")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.tolerances.identity == 1e-6
    assert settings.performance.max_workers == 2
    assert settings.performance.profiling_enabled is True
    assert settings.seed == 99


def test_with_tolerances():
    settings = Settings()
    assert settings.with_tolerances(None) is settings
    tighter = settings.with_tolerances({"cauchy": 1e-9})
    assert tighter.tolerances.cauchy == 1e-9
    assert tighter.tolerances.identity == settings.tolerances.identity
    assert settings.tolerances.cauchy == 1e-6


@pytest.mark.parametrize("error,code", [
    (ValidationError("bad"), 2),
    (DomainError("outside"), 2),
    (UnsupportedError("no model"), 2),
    (ResourceError("too big"), 2),
    (VerificationError("mismatch"), 1),
    (TruncationError("too small"), 1),
    (DataError("float"), 1),
    (InternalError("unreachable"), 1),
    (RuntimeError("boom"), 1),
])
def test_exit_codes(error, code: int):
    assert exit_code_for(error) == code


def test_diagnostics():
    diagnostic = handle_horolab_error(ValidationError("bad level", {"level": 1}))
    assert diagnostic["type"] == "ValidationError"
    assert diagnostic["message"] == "bad level"
    assert diagnostic["details"] == {"level": 1}
    assert handle_horolab_error(ValueError("x"))["message"] == "Invalid input: x"


def test_report_tracks_failures():
    report = VerificationReport(command="radon kernel")
    report.add(CheckResult(name="a", passed=True, max_error=1e-12))
    assert report.passed
    report.add(CheckResult(name="b", passed=False))
    assert not report.passed
    assert [c.name for c in report.failed] == ["b"]
    data = report.to_json_dict()
    assert data["schemaVersion"] == "1.0"
    assert data["checks"][0]["maxError"] == 1e-12


def test_scenario_defaults_and_aliases():
    scenario = Scenario.model_validate({"family": "SO", "p": 1, "levelRange": [2, 5], "muCoefficients": [2]})
    assert scenario.levels == [2, 3, 4, 5]
    assert scenario.truncation == 3
    assert scenario.checks == list(SCENARIO_CHECKS)
    assert scenario.a_sweep[0] == 1.0
    assert scenario.output_format == "json"


@pytest.mark.parametrize("data", [
    {"family": "SO", "p": 1, "levelRange": [4, 2], "muCoefficients": [1]},
    {"family": "SO", "p": 1, "levelRange": [2, 3], "muCoefficients": [-1]},
    {"family": "SO", "p": 1, "levelRange": [2, 3], "muCoefficients": [1], "checks": ["everything"]},
    {"family": "SO", "p": 1, "levelRange": [2, 3], "muCoefficients": [1], "outputFormat": "xml"},
    {"family": "SO", "p": 1, "levelRange": [2, 3], "muCoefficients": [1], "tolerances": {"loose": 1}},
    {"family": "SO", "p": 1, "levelRange": [2], "muCoefficients": [1]},
], ids=["order", "negative", "check", "format", "tolerance-key", "range-length"])
def test_scenario_rejects(data, tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(data))
    with pytest.raises(ValidationError):
        Scenario.from_file(str(path))


def test_scenario_from_yaml(tmp_path):
    path = tmp_path / "scenario.yaml"
    path.write_text(yaml.safe_dump({"family": "SL2", "levelRange": [1, 3], "muCoefficients": [1],
                                    "tolerances": {"identity": 1e-7}, "aSweep": [1.0, 2.0]}))
    scenario = Scenario.from_file(str(path))
    assert scenario.tolerances.identity == 1e-7
    assert scenario.a_sweep == [1.0, 2.0]

    path.write_text("family: [unclosed")
    with pytest.raises(ValidationError):
        Scenario.from_file(str(path))
    path.write_text("- just a list")
    with pytest.raises(ValidationError):
        Scenario.from_file(str(path))


def test_performance_monitor():
    monitor = PerformanceMonitor()
    for _ in range(2):
        with monitor.monitor("step"):
            time.sleep(0.001)
    assert len(monitor.get_metrics("step")) == 2
    assert monitor.summary()["step"] > 0
    assert monitor.get_average_execution_time("other") is None
    monitor.clear_metrics("step")
    assert monitor.summary() == {}


def test_timed_keeps_result():
    @timed("double")
    def double(x):
        return 2 * x

    assert double(3) == 6
    assert double.__name__ == "double"
