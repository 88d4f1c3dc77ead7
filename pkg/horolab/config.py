from pydantic import BaseModel, ConfigDict, Field
from typing import Any, Dict, Optional
from functools import lru_cache
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class ToleranceSettings(BaseModel):
    """Tolerances of the numerical identities."""
    model_config = ConfigDict(extra="forbid")

    identity: float = Field(default=1e-8, gt=0, description="Relative error for operator identities")
    exact: float = Field(default=1e-10, gt=0, description="Error for identities exact up to roundoff")
    proportionality: float = Field(default=1e-9, gt=0, description="Residual allowed in proportionality tests")
    cauchy: float = Field(default=1e-6, gt=0, description="Tail difference for Cauchy criteria")
    roundoff: float = Field(default=1e-12, gt=0, description="Absolute floor for double precision comparisons")
    rank_one_oracle: float = Field(default=1e-6, gt=0, description="Relative error of the rank-one integral oracle")


class QuadratureSettings(BaseModel):
    """Haar and scalar quadrature settings."""
    min_compact_degree: int = Field(default=0, ge=0, description="Lowest polynomial degree of the U-quadrature rules")
    min_circle_nodes: int = Field(default=1, ge=1, description="Lowest number of trapezoid nodes for SO(2) averages")
    oracle_limit: int = Field(default=200, ge=50, description="Subdivision limit of the rank-one radial integral")


class PerformanceSettings(BaseModel):
    """Performance-related settings."""
    max_workers: int = Field(default=4, ge=1, description="Maximum number of worker threads")
    max_model_dimension: int = Field(default=4000, ge=1, description="Largest representation dimension a model may build")
    profiling_enabled: bool = Field(default=False, description="Track memory peaks in the performance monitor")


class OutputSettings(BaseModel):
    """Report output settings."""
    output_dir: str = Field(default="horolab_results", description="Directory for saved JSON reports")
    schema_version: str = Field(default="1.0", description="Value of the schemaVersion report field")
    default_format: str = Field(default="json", description="Default output format (json, csv, table)")


class Settings(BaseModel):
    """Core configuration settings."""

    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)

    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)

    performance: PerformanceSettings = Field(default_factory=PerformanceSettings)

    output: OutputSettings = Field(default_factory=OutputSettings)

    seed: int = Field(default=20240611, description="Seed for randomized property checks")

    @classmethod
    def from_env(cls) -> 'Settings':
        """Create settings from environment variables."""

        def get_nested_env(prefix: str, defaults: Dict[str, Any]) -> Dict[str, Any]:
            """Get nested environment variables with prefix."""
            result = {}
            for key, default in defaults.items():
                env_key = f"{prefix}_{key}".upper()
                if isinstance(default, bool):
                    result[key] = os.getenv(env_key, str(default)).lower() == "true"
                elif isinstance(default, (int, float)):
                    result[key] = type(default)(os.getenv(env_key, default))
                else:
                    result[key] = os.getenv(env_key, default)
            return result

        tolerance_settings = ToleranceSettings(
            **get_nested_env("HOROLAB_TOL", ToleranceSettings().model_dump())
        )
        quadrature_settings = QuadratureSettings(
            **get_nested_env("HOROLAB_QUAD", QuadratureSettings().model_dump())
        )

        performance_values = get_nested_env("HOROLAB_PERF", PerformanceSettings().model_dump())
        threads = os.getenv("HOROLAB_THREADS")
        if threads:
            performance_values["max_workers"] = int(threads)
        performance_settings = PerformanceSettings(**performance_values)

        output_settings = OutputSettings(
            **get_nested_env("HOROLAB_OUTPUT", OutputSettings().model_dump())
        )

        return cls(
            tolerances=tolerance_settings,
            quadrature=quadrature_settings,
            performance=performance_settings,
            output=output_settings,
            seed=int(os.getenv("HOROLAB_SEED", "20240611")),
        )

    def with_tolerances(self, overrides: Optional[Dict[str, float]]) -> 'Settings':
        """Copy of the settings with some tolerances replaced."""
        if not overrides:
            return self
        tolerances = ToleranceSettings(**{**self.tolerances.model_dump(), **overrides})
        return self.model_copy(update={"tolerances": tolerances})


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings read once from the environment."""
    return Settings.from_env()
