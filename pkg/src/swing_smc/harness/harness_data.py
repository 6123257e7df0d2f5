# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Observation Loading
============================

Reads a rectangular numeric CSV (header row) into a (T, d_y) array and
applies declared transforms in order:

- {"divide": value, "columns": [...]}: divide columns (all when omitted) by
  a constant, for example a population size.
- {"day_difference": period}: Y_t = W_t - W_{period floor((t - 1) / period)}
  for t = 1..n-1, rows indexed from 0; the output is one row shorter.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
from swing_smc.errors import ConfigError, DataError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def day_start_difference(values: np.ndarray, period: int = 24) -> np.ndarray:
    """
    Difference of every row with the first row of its day.

    Args:
        values (np.ndarray): Rows W_0, ..., W_{n-1}.
        period (int): Rows per day.

    Returns:
        np.ndarray: Rows Y_1, ..., Y_{n-1}.
    """
    values = np.asarray(values, dtype=float)
    if period < 1:
        raise ConfigError("transforms.day_difference", "period must be positive", period)
    n = values.shape[0]
    if n < 2:
        raise DataError("Day-start differencing needs at least two rows")
    t = np.arange(1, n)
    start = period * ((t - 1) // period)
    return values[t] - values[start]


def _divide(frame: pd.DataFrame, spec: Mapping[str, Any]) -> pd.DataFrame:
    value = float(spec["divide"])
    if value == 0.0:
        raise ConfigError("transforms.divide", "cannot divide by zero")
    columns = list(spec.get("columns") or frame.columns)
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise DataError("Transform names an unknown column", column=missing[0])
    frame = frame.copy()
    frame[columns] = frame[columns] / value
    return frame


def _day_difference(frame: pd.DataFrame, spec: Mapping[str, Any]) -> pd.DataFrame:
    period = int(spec["day_difference"])
    diffs = day_start_difference(frame.to_numpy(dtype=float), period)
    return pd.DataFrame(diffs, columns=frame.columns)


TRANSFORMS = {
    "divide": _divide,
    "day_difference": _day_difference,
}


def apply_transforms(frame: pd.DataFrame, transforms: Sequence[Mapping[str, Any]]) -> pd.DataFrame:
    """Apply transforms in declared order."""
    for i, spec in enumerate(transforms or []):
        names = [name for name in TRANSFORMS if name in spec]
        if len(names) != 1:
            raise ConfigError(f"transforms[{i}]", f"must name exactly one of {sorted(TRANSFORMS)}", dict(spec))
        frame = TRANSFORMS[names[0]](frame, spec)
        logger.debug("Applied transform %s: %d rows left", names[0], len(frame))
    return frame


def read_numeric_csv(path: str, columns: Optional[List[str]] = None) -> pd.DataFrame:
    """
    Read a CSV whose cells must all be numeric.

    Args:
        path (str): CSV path.
        columns (Optional[List[str]]): Columns to keep; all when None.

    Returns:
        pd.DataFrame: Float frame.
    """
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except FileNotFoundError as exc:
        raise DataError("Observation file not found", path=path) from exc
    except pd.errors.EmptyDataError as exc:
        raise DataError("Observation file is empty", path=path) from exc
    if frame.empty:
        raise DataError("Observation file has no data rows", path=path)
    if columns:
        missing = [c for c in columns if c not in frame.columns]
        if missing:
            raise DataError("Observation file lacks a requested column", path=path, column=missing[0])
        frame = frame[list(columns)]
    numeric: Dict[str, pd.Series] = {}
    for column in frame.columns:
        values = pd.to_numeric(frame[column].str.strip(), errors="coerce")
        bad = np.flatnonzero(values.isna().to_numpy())
        if bad.size:
            raise DataError(
                f"Non-numeric cell {frame[column].iloc[bad[0]]!r}",
                path=path, row=int(bad[0]) + 1, column=column,
            )
        numeric[column] = values.astype(float)
    return pd.DataFrame(numeric)


def load_observations(
    path: str,
    columns: Optional[List[str]] = None,
    transforms: Optional[Sequence[Mapping[str, Any]]] = None,
) -> np.ndarray:
    """
    Observation sequence from a CSV file.

    Args:
        path (str): CSV path with a header row.
        columns (Optional[List[str]]): Columns to keep, in order.
        transforms (Optional[Sequence[Mapping[str, Any]]]): Transforms
            applied in order.

    Returns:
        np.ndarray: Observations, shape (T, d_y).
    """
    frame = apply_transforms(read_numeric_csv(path, columns), transforms or [])
    ys = frame.to_numpy(dtype=float)
    logger.info("Loaded %d observations of dimension %d from %s", ys.shape[0], ys.shape[1], path)
    return ys


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "TRANSFORMS",
    "apply_transforms",
    "day_start_difference",
    "load_observations",
    "read_numeric_csv",
]
