import csv
import io
import json

import pytest
import yaml
from click.testing import CliRunner

from horolab import __version__
from horolab.cli import cli, run


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


def _json(result):
    return json.loads(result.output)


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_cfun_eval_at_rho(runner):
    result = runner.invoke(cli, ["cfun", "eval", "--family", "SO", "--p", "1", "--q", "2", "--mu", "0"])
    assert result.exit_code == 0
    data = _json(result)
    assert data["schemaVersion"]
    assert data["command"] == "cfun eval"
    assert data["result"]["value"] == pytest.approx(1.0)
    assert data["result"]["wellDefined"] is True


def test_cfun_eval_csv(runner):
    result = runner.invoke(cli, ["cfun", "eval", "--family", "SL", "--n", "3", "--mu", "1,0", "--format", "csv"])
    assert result.exit_code == 0
    header, row = list(csv.reader(io.StringIO(result.output)))
    assert header == ["level", "mu", "cValue"]
    level, mu, value = row
    assert level == "SL(3,R)"
    assert mu == "1 0"
    assert float(value) == pytest.approx(1.0 / 3.0)


def test_cfun_limit_csv(runner):
    result = runner.invoke(cli, ["cfun", "limit", "--family", "SO", "--p", "1", "--levels", "2..6",
                                 "--mu", "1", "--format", "csv"])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0] == ["level", "mu", "cValue"]
    assert len(rows) == 6
    assert [r[0] for r in rows[1:]] == [f"SO(1,{q})" for q in range(2, 7)]
    assert all(float(r[-1]) == pytest.approx(0.5) for r in rows[1:])


def test_cfun_table(runner):
    result = runner.invoke(cli, ["cfun", "table", "--family", "SO", "--params", "1,3", "--max-height", "2"])
    assert result.exit_code == 0
    rows = _json(result)["result"]["rows"]
    assert sorted(r["mu"] for r in rows) == [[0], [1], [2]]


def test_space_info_table(runner):
    result = runner.invoke(cli, ["space", "info", "--family", "SO", "--params", "1,3", "--format", "table"])
    assert result.exit_code == 0
    assert "HarmonicPoly" in result.output


def test_space_propagates(runner):
    result = runner.invoke(cli, ["space", "propagates", "--lo", "SO:1,3", "--hi", "SO:1,4"])
    assert result.exit_code == 0
    assert _json(result)["result"]["propagates"] is True

    result = runner.invoke(cli, ["space", "propagates", "--lo", "SU:2,2", "--hi", "SU:2,3"])
    assert result.exit_code == 0
    assert _json(result)["result"]["propagates"] is False


def test_space_propagates_across_families_is_a_usage_error(runner):
    result = runner.invoke(cli, ["space", "propagates", "--lo", "SO:1,3", "--hi", "SU:1,3"])
    assert result.exit_code == 2
    assert _json(result)["error"]["type"] == "ValidationError"

    assert runner.invoke(cli, ["space", "propagates", "--lo", "SO", "--hi", "SO:1,4"]).exit_code == 2

    help_text = runner.invoke(cli, ["space", "propagates", "--help"]).output
    assert "usage" in help_text
    assert "SU:1,3" in help_text


def test_weights_commands(runner):
    result = runner.invoke(cli, ["weights", "iota", "--family", "SL", "--lo", "2", "--hi", "3", "--mu", "1"])
    assert result.exit_code == 0
    assert _json(result)["result"]["image"] == ["1", "0"]

    result = runner.invoke(cli, ["weights", "restrict", "--family", "SL", "--lo", "2", "--hi", "3", "--mu", "0,1"])
    assert _json(result)["result"]["restriction"] == ["0"]

    result = runner.invoke(cli, ["weights", "check-fiber", "--family", "SL", "--lo", "2", "--hi", "3",
                                 "--mu", "1", "--candidate", "1,1"])
    assert _json(result)["result"]["minimal"] is False

    result = runner.invoke(cli, ["weights", "classify", "--family", "SO", "--p", "1", "--levels", "2..5"])
    assert _json(result)["result"]["familyTag"] == "SO(1+∞)"


def test_radon_dual_check(runner):
    result = runner.invoke(cli, ["radon", "dual-check", "--family", "SL", "--n", "2", "--mu", "2",
                                 "--points", "3", "--seed", "1"])
    assert result.exit_code == 0
    report = _json(result)
    assert report["passed"] is True
    assert report["checks"][0]["name"] == "dualRadon"


def test_radon_kernel_with_tilde(runner):
    result = runner.invoke(cli, ["radon", "kernel", "--family", "SL2", "--n", "2", "--mu", "1,0",
                                 "--tilde", "6", "--seed", "3", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "name,passed,maxError"


def test_missing_level_is_a_usage_error(runner):
    result = runner.invoke(cli, ["cfun", "eval", "--family", "SL"])
    assert result.exit_code == 2
    diagnostic = _json(result)
    assert diagnostic["error"]["type"] == "ValidationError"


def test_unknown_flag(runner):
    result = runner.invoke(cli, ["cfun", "eval", "--family", "SO", "--bogus"])
    assert result.exit_code == 2


def test_limits_run(runner, tmp_path):
    scenario = tmp_path / "scenario.yaml"
    scenario.write_text(yaml.safe_dump({
        "family": "SO",
        "p": 1,
        "levelRange": [2, 3],
        "muCoefficients": [1],
        "checks": ["admissibility", "gammaCommute", "compatibleDuals", "dualRadonLimit"],
        "seed": 5,
    }))
    result = runner.invoke(cli, ["--output-dir", str(tmp_path / "out"), "limits", "run",
                                 "--scenario", str(scenario)])
    assert result.exit_code == 0, result.output
    report = _json(result)
    assert report["passed"] is True
    assert [c["name"] for c in report["checks"]] == ["admissibility", "gammaCommute", "compatibleDuals",
                                                      "dualRadonLimit"]
    assert list((tmp_path / "out").glob("limits_*.json"))


def test_limits_run_rejects_unknown_keys(runner, tmp_path):
    scenario = tmp_path / "bad.yaml"
    scenario.write_text(yaml.safe_dump({"family": "SO", "p": 1, "levelRange": [2, 3],
                                        "muCoefficients": [1], "colour": "blue"}))
    result = runner.invoke(cli, ["limits", "run", "--scenario", str(scenario)])
    assert result.exit_code == 2
    assert _json(result)["error"]["type"] == "ValidationError"


def test_run_returns_exit_codes():
    assert run(["cfun", "eval", "--family", "SO", "--params", "1,2"]) == 0
    assert run(["cfun", "eval", "--family", "SL"]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["weights", "iota", "--family", "SO", "--p", "1", "--lo", "3", "--hi", "2", "--mu", "1"]) == 2
