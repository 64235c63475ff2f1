"""Run configuration shared by the CLI commands."""

import os
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from fraclap.utils.errors import ParamError

THREADS_ENV = "FRACLAP_THREADS"
DEFAULT_TOL = 1e-6


class OutputFormat(Enum):
    """File formats written by eval and solve-disk."""

    CSV = "csv"
    JSON = "json"


def resolve_threads(requested: Optional[int] = None) -> int:
    """Number of worker threads to use.

    Falls back to FRACLAP_THREADS, then to 1, and clamps to [1, cpu_count].

    Raises:
        ParamError: If FRACLAP_THREADS is not an integer.
    """
    if requested is None:
        raw = os.environ.get(THREADS_ENV)
        if raw is None or raw.strip() == "":
            requested = 1
        else:
            try:
                requested = int(raw)
            except ValueError:
                raise ParamError(f"{THREADS_ENV} must be an integer: {raw!r}") from None
    cpus = os.cpu_count() or 1
    return max(1, min(requested, cpus))


@dataclass
class RunConfig:
    """Settings for one CLI job."""

    threads: int = 1
    tol: float = DEFAULT_TOL
    output_format: OutputFormat = OutputFormat.CSV
    verbose: bool = False
    quick: bool = False

    def __post_init__(self):
        self.threads = resolve_threads(self.threads)
        if isinstance(self.output_format, str):
            try:
                self.output_format = OutputFormat(self.output_format.lower())
            except ValueError:
                raise ParamError(
                    f"Unknown output format: {self.output_format}. "
                    f"Available: {[f.value for f in OutputFormat]}"
                ) from None
        if self.tol <= 0:
            raise ParamError(f"Tolerance must be positive: {self.tol}")
