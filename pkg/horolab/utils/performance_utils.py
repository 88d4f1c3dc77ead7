"""
Timing helpers for expensive model constructions and verification checks.
"""
import time
from typing import Any, Dict, List, Optional
from functools import wraps
import logging
import threading
import tracemalloc
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime

logger = logging.getLogger(__name__)


@dataclass
class PerformanceMetrics:
    """Container for performance metrics."""
    execution_time: float
    start_time: datetime
    end_time: datetime
    memory_peak: Optional[int] = None
    additional_data: Dict[str, Any] = field(default_factory=dict)


def timed(label: Optional[str] = None):
    """Decorator logging the wall time of a synchronous call at DEBUG level."""
    def wrapper(func):
        name = label or func.__qualname__

        @wraps(func)
        def wrapped(*args, **kwargs):
            start = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                logger.debug(f"{name} took {time.perf_counter() - start:.3f} seconds")
        return wrapped
    return wrapper


class PerformanceMonitor:
    """Monitor and track execution times of named operations.

    Memory tracking uses the process-global tracemalloc and is only switched on
    when ``track_memory`` is set; keep it off when checks run on worker threads.
    """

    def __init__(self, track_memory: bool = False):
        self.track_memory = track_memory
        self.metrics: Dict[str, List[PerformanceMetrics]] = {}
        self._lock = threading.Lock()

    @contextmanager
    def monitor(self, operation_name: str):
        """Context manager to monitor an operation's performance."""
        start_time = datetime.now()
        if self.track_memory:
            tracemalloc.start()
        start = time.perf_counter()

        try:
            yield
        finally:
            end = time.perf_counter()
            peak = None
            if self.track_memory:
                _, peak = tracemalloc.get_traced_memory()
                tracemalloc.stop()

            metrics = PerformanceMetrics(
                execution_time=end - start,
                start_time=start_time,
                end_time=datetime.now(),
                memory_peak=peak,
            )
            with self._lock:
                self.metrics.setdefault(operation_name, []).append(metrics)

    def get_metrics(self, operation_name: str) -> List[PerformanceMetrics]:
        """Get metrics for a specific operation."""
        return self.metrics.get(operation_name, [])

    def get_average_execution_time(self, operation_name: str) -> Optional[float]:
        """Get average execution time for an operation."""
        metrics = self.get_metrics(operation_name)
        if not metrics:
            return None
        return sum(m.execution_time for m in metrics) / len(metrics)

    def summary(self) -> Dict[str, float]:
        """Average execution time per operation, rounded for reports."""
        return {
            name: round(self.get_average_execution_time(name), 6)
            for name in sorted(self.metrics)
        }

    def clear_metrics(self, operation_name: Optional[str] = None):
        """Clear metrics for an operation or all operations."""
        if operation_name:
            self.metrics.pop(operation_name, None)
        else:
            self.metrics.clear()
