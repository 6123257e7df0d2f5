# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Error Module
============

This module aggregates the toolkit's error classes. Every error derives
from `SmcError`, carries a message, structured details and a short code,
and logs itself on construction.

The following errors are included:
- ConfigError
- DataError
- ParameterSpaceError
- ScheduleError
- RejectionCapError
- DegeneracyError
- KalmanError
- ModelError

Usage:
------
Catch `SmcError` at the outer boundary (the CLI does) and report
`error.as_dict()`.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .error_base import SmcError
from .error_config import ConfigError
from .error_data import DataError
from .error_degeneracy import DegeneracyError
from .error_kalman import KalmanError
from .error_model import ModelError
from .error_sampling import RejectionCapError
from .error_schedule import ScheduleError
from .error_space import ParameterSpaceError

__all__ = [
    "SmcError",
    "ConfigError",
    "DataError",
    "DegeneracyError",
    "KalmanError",
    "ModelError",
    "RejectionCapError",
    "ScheduleError",
    "ParameterSpaceError",
]
