# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Data Error Class
=========================

Raised when an observation file cannot be turned into an observation
sequence: missing file, empty table, non-numeric cell.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Optional

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class DataError(SmcError):
    """
    Data Error Class
    ================

    Unusable observation data. Row and column are 1-based data positions
    (the header row is not counted) when the failure is cell-specific.
    """

    code = "data_invalid"

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        row: Optional[int] = None,
        column: Optional[str] = None,
    ) -> None:
        self.row = row
        self.column = column
        details = {"path": path}
        if row is not None:
            details["row"] = row
            details["column"] = column
            message = f"{message} (row {row}, column {column!r})"
        super().__init__(message=message, details=details)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "DataError",
]
