# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Run Output Files
=========================

Run records are written as CSV with the fixed columns

    t, theta_hat_1..d, theta_proj_1..d, ess, resampled, log_increment

and floats at 17 significant digits, so reading the file back recovers the
values exactly. A flat `key=value` sidecar (`<output>.meta`) holds the
config echo, the seed, the toolkit version, the kernel application count
and the wall time.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Any, Dict, Mapping, Tuple

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.engine import RunRecord
from swing_smc.errors import DataError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def sidecar_path(path: str) -> str:
    return f"{path}{get_smc_config('output', 'sidecar_suffix')}"


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, np.ndarray):
        return repr(value.tolist())
    if value is None:
        return "none"
    return str(value).replace("\n", " ")


def write_frame(frame: pd.DataFrame, path: str) -> None:
    """Write a frame at full float precision with a trailing newline."""
    frame.to_csv(path, index=False, float_format=get_smc_config("output", "float_format"), lineterminator="\n")


def write_metadata(meta: Mapping[str, Any], path: str) -> str:
    """
    Write the `key=value` sidecar of an output file.

    Args:
        meta (Mapping[str, Any]): Flat metadata.
        path (str): Output file the sidecar belongs to.

    Returns:
        str: Sidecar path.
    """
    target = sidecar_path(path)
    with open(target, "w", encoding="utf-8") as handle:
        for key in sorted(meta):
            handle.write(f"{key}={_format_value(meta[key])}\n")
    return target


def read_metadata(path: str) -> Dict[str, str]:
    """Parse the sidecar of an output file into strings."""
    target = sidecar_path(path)
    meta: Dict[str, str] = {}
    try:
        with open(target, "r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                if "=" not in line:
                    raise DataError("Metadata line without '='", path=target, row=number)
                key, value = line.split("=", 1)
                meta[key] = value
    except FileNotFoundError as exc:
        raise DataError("Metadata sidecar not found", path=target) from exc
    return meta


def write_record(record: RunRecord, path: str, meta: Mapping[str, Any]) -> None:
    """Write a run record and its sidecar."""
    write_frame(record.to_frame(), path)
    target = write_metadata(meta, path)
    logger.info("Wrote %d rows to %s (metadata %s)", len(record), path, target)


def read_record(path: str) -> Tuple[RunRecord, Dict[str, str]]:
    """
    Read a run record written by `write_record`.

    Args:
        path (str): Output CSV.

    Returns:
        Tuple[RunRecord, Dict[str, str]]: The record and the metadata.
    """
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except FileNotFoundError as exc:
        raise DataError("Run output not found", path=path) from exc
    return RunRecord.from_frame(frame), read_metadata(path)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "read_metadata",
    "read_record",
    "sidecar_path",
    "write_frame",
    "write_metadata",
    "write_record",
]
