# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Schedule Error Class
=============================

Raised for invalid artificial-dynamics schedules: unknown flavor, decay
exponents out of range, scale matrices that are not symmetric positive
definite, time indices below the first admissible value.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class ScheduleError(SmcError):
    """
    Schedule Error Class
    ====================

    Invalid dynamics schedule or schedule query.
    """

    code = "schedule_invalid"


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ScheduleError",
]
