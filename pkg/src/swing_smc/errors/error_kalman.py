# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Kalman Error Class
===========================

Raised by the exact Kalman recursion when the innovation covariance is not
positive definite.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class KalmanError(SmcError):
    """
    Kalman Error Class
    ==================

    Non positive definite innovation covariance at time `t`.
    """

    code = "kalman_innovation"

    def __init__(self, t: int, message: str = "innovation covariance is not positive definite") -> None:
        self.t = t
        super().__init__(message=f"{message} at t={t}", details={"t": t})


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "KalmanError",
]
