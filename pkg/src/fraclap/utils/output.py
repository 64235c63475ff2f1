"""CSV and JSON writers for evaluation tables and grids."""

import json
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from fraclap.utils.config import OutputFormat
from fraclap.utils.rows import FracResult

SCHEMA_VERSION = 1
FLOAT_FORMAT = "%.17g"
EVAL_COLUMNS = ["x", "f", "result", "branch", "near_pole"]
EXCLUDED = "excluded"


def eval_frame(
    xs: Sequence[float], f_values: Sequence[float], results: Sequence[Optional[FracResult]]
) -> pd.DataFrame:
    """One row per point: x, f(x), the operator value, the branch and the near-pole flag.

    A None result marks an excluded point (NaN value, branch "excluded").
    """
    return pd.DataFrame(
        {
            "x": np.asarray(xs, dtype=float),
            "f": np.asarray(f_values, dtype=float),
            "result": [r.value if r is not None else float("nan") for r in results],
            "branch": [r.branch_used.value if r is not None else EXCLUDED for r in results],
            "near_pole": [r.near_pole if r is not None else False for r in results],
        },
        columns=EVAL_COLUMNS,
    )


def _float_17(value: float) -> float:
    # Round-trip through 17 significant digits, the CSV precision.
    return float(FLOAT_FORMAT % value)


def _json_ready(frame: pd.DataFrame) -> list[dict]:
    records = frame.to_dict(orient="records")
    for record in records:
        for key, value in record.items():
            if isinstance(value, (float, np.floating)):
                record[key] = _float_17(float(value))
            elif isinstance(value, np.bool_):
                record[key] = bool(value)
    return records


def write_table(frame: pd.DataFrame, path: Path, fmt: OutputFormat, meta: Optional[dict] = None) -> None:
    """Write a table as CSV (fixed header, 17 significant digits) or versioned JSON.

    Raises:
        OSError: If the file cannot be written.
    """
    path = Path(path)
    if fmt == OutputFormat.CSV:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return
    payload = {"schema": SCHEMA_VERSION, **(meta or {}), "columns": list(frame.columns), "rows": _json_ready(frame)}
    path.write_text(json.dumps(payload, indent=2))


def grid_frame(xs: np.ndarray, ys: np.ndarray, values: np.ndarray, name: str = "u") -> pd.DataFrame:
    """Long format x, y, value of a grid whose rows are indexed by y."""
    X, Y = np.meshgrid(xs, ys)
    return pd.DataFrame({"x": X.ravel(), "y": Y.ravel(), name: np.asarray(values, dtype=float).ravel()})


def write_grid(
    xs: np.ndarray,
    ys: np.ndarray,
    values: np.ndarray,
    path: Path,
    fmt: OutputFormat,
    name: str = "u",
    meta: Optional[dict] = None,
) -> None:
    """Write a 2D grid as long-format CSV or as JSON with x, y and a row-per-y matrix.

    Raises:
        OSError: If the file cannot be written.
    """
    path = Path(path)
    if fmt == OutputFormat.CSV:
        grid_frame(xs, ys, values, name).to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return
    matrix = [[_float_17(v) for v in row] for row in np.asarray(values, dtype=float)]
    payload = {
        "schema": SCHEMA_VERSION,
        **(meta or {}),
        "x": [_float_17(v) for v in xs],
        "y": [_float_17(v) for v in ys],
        name: matrix,
    }
    path.write_text(json.dumps(payload, indent=2))


def read_json(path: Path) -> dict:
    """Load a JSON file written by this module or a coefficient file.

    Raises:
        OSError: If the file cannot be read.
        ValueError: If it is not valid JSON.
    """
    return json.loads(Path(path).read_text())
