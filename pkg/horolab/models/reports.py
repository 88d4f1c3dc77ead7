from pydantic import BaseModel, ConfigDict, Field, field_validator
from typing import Optional, Dict, Any, List
from datetime import datetime, timezone
from pathlib import Path
import json
import yaml

from ..config import get_settings
from ..utils.error_handler import ValidationError


def _camel(name: str) -> str:
    head, *rest = name.split("_")
    return head + "".join(part.capitalize() for part in rest)


class CheckResult(BaseModel):
    """Outcome of one numerical check."""
    model_config = ConfigDict(alias_generator=_camel, populate_by_name=True)

    name: str
    passed: bool
    max_error: Optional[float] = None
    sequence: Optional[List[Any]] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """A command's checks with the versioned report envelope."""
    model_config = ConfigDict(alias_generator=_camel, populate_by_name=True)

    schema_version: str = Field(default_factory=lambda: get_settings().output.schema_version)
    command: str
    passed: bool = True
    checks: List[CheckResult] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)
    created_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        self.passed = self.passed and check.passed
        return check

    @property
    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class ScenarioTolerances(BaseModel):
    model_config = ConfigDict(extra="forbid", alias_generator=_camel, populate_by_name=True)

    identity: Optional[float] = Field(default=None, gt=0)
    exact: Optional[float] = Field(default=None, gt=0)
    proportionality: Optional[float] = Field(default=None, gt=0)
    cauchy: Optional[float] = Field(default=None, gt=0)


class Scenario(BaseModel):
    """A limit experiment read from YAML or JSON; unknown keys are rejected."""
    model_config = ConfigDict(extra="forbid", alias_generator=_camel, populate_by_name=True)

    family: str
    p: Optional[int] = None
    level_range: List[int] = Field(min_length=2, max_length=2)
    mu_coefficients: List[int]
    truncation: int = Field(default=3, ge=0)
    quadrature_order: Optional[int] = Field(default=None, ge=1)
    tolerances: ScenarioTolerances = Field(default_factory=ScenarioTolerances)
    a_sweep: List[float] = Field(default_factory=lambda: [float(t) for t in range(1, 11)])
    checks: List[str] = Field(default_factory=lambda: list(SCENARIO_CHECKS))
    seed: Optional[int] = None
    output_format: str = "json"

    @field_validator("level_range")
    @classmethod
    def _ordered(cls, value: List[int]) -> List[int]:
        if value[0] > value[1]:
            raise ValueError("levelRange must be [first, last] with first <= last")
        return value

    @field_validator("mu_coefficients")
    @classmethod
    def _nonnegative(cls, value: List[int]) -> List[int]:
        if any(k < 0 for k in value):
            raise ValueError("muCoefficients must be non-negative")
        return value

    @field_validator("checks")
    @classmethod
    def _known_checks(cls, value: List[str]) -> List[str]:
        unknown = sorted(set(value) - set(SCENARIO_CHECKS))
        if unknown:
            raise ValueError(f"unknown checks {unknown}; known: {list(SCENARIO_CHECKS)}")
        return value

    @field_validator("output_format")
    @classmethod
    def _format(cls, value: str) -> str:
        if value not in ("json", "csv"):
            raise ValueError("outputFormat must be json or csv")
        return value

    @property
    def levels(self) -> List[int]:
        return list(range(self.level_range[0], self.level_range[1] + 1))

    @classmethod
    def from_file(cls, path: str) -> "Scenario":
        """Load a scenario; parse and validation problems raise ``ValidationError``."""
        text = Path(path).read_text()
        try:
            data = json.loads(text) if path.endswith(".json") else yaml.safe_load(text)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise ValidationError(f"cannot parse scenario {path}", {"error": str(e)})
        if not isinstance(data, dict):
            raise ValidationError("scenario must be a mapping", {"path": path})
        try:
            return cls.model_validate(data)
        except Exception as e:
            raise ValidationError(f"invalid scenario {path}", {"error": str(e)})


SCENARIO_CHECKS = (
    "admissibility",
    "gammaCommute",
    "gradedProj",
    "kernelLimit",
    "dualRadonLimit",
    "sphereRadonLimit",
    "noncommutingDefect",
    "compatibleDuals",
    "projectiveEvaluation",
)
