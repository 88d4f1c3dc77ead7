from typing import Dict, Any, Optional
from datetime import datetime
from pathlib import Path
import json
import logging

from .. import __version__
from ..config import get_settings
from ..models.reports import CheckResult, VerificationReport
from ..utils.performance_utils import PerformanceMonitor

logger = logging.getLogger(__name__)


class BaseAnalyzer:
    """Base class for all analyzers with JSON output support."""

    name = "base"

    def __init__(self, output_dir: Optional[str] = None):
        settings = get_settings()
        self.output_dir = output_dir or settings.output.output_dir
        self.monitor = PerformanceMonitor(track_memory=settings.performance.profiling_enabled)

    def _generate_json_filename(self, label: str) -> Path:
        """Generate a unique filename for the JSON output."""
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        safe_label = "".join(c if c.isalnum() else "_" for c in label)
        return Path(self.output_dir) / f"{self.name}_{safe_label}_{timestamp}.json"

    def save_to_json(self, data: Dict[str, Any], label: str) -> str:
        """
        Save a report to a JSON file under ``output_dir``.

        Args:
            data: Standardized results
            label: Short description used in the filename

        Returns:
            Path to the saved JSON file
        """
        filename = self._generate_json_filename(label)
        filename.parent.mkdir(parents=True, exist_ok=True)

        data_with_metadata = {
            "metadata": {
                "analyzer": self.name,
                "timestamp": datetime.now().isoformat(),
                "version": __version__,
            },
            "schemaVersion": get_settings().output.schema_version,
            "results": data,
        }

        with open(filename, "w") as f:
            json.dump(data_with_metadata, f, indent=2, default=str)

        logger.info(f"Saved {self.name} report to {filename}")
        return str(filename)

    def run_check(self, report: VerificationReport, name: str, check, *args, **kwargs) -> CheckResult:
        """Run one static check under the performance monitor and record it."""
        with self.monitor.monitor(name):
            result = check(*args, **kwargs)
        return report.add(result)

    def _standardize_results(self, report: VerificationReport) -> Dict[str, Any]:
        """
        Standardize a report for JSON output.

        Args:
            report: Finished verification report

        Returns:
            Standardized results structure
        """
        report.metadata.setdefault("timings", self.monitor.summary())
        standardized = report.to_json_dict()
        standardized["failed"] = [c.name for c in report.failed]
        return {k: v for k, v in standardized.items() if v is not None}
