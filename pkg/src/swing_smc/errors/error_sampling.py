# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Rejection Cap Error Class
==================================

Raised when a rejection sampler exhausts its attempt budget without
producing an in-support draw for every particle.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class RejectionCapError(SmcError):
    """
    Rejection Cap Error Class
    =========================

    Rejection sampling did not terminate within the configured cap.

    Attributes:
        sampler (str): Name of the sampler that gave up.
        attempts (int): Number of rounds tried.
        pending (int): Number of particles still without a draw.
    """

    code = "rejection_cap"

    def __init__(self, sampler: str, attempts: int, pending: int) -> None:
        self.sampler = sampler
        self.attempts = attempts
        self.pending = pending
        super().__init__(
            message=f"{sampler}: no in-support draw after {attempts} rounds",
            details={"sampler": sampler, "attempts": attempts, "pending": pending},
        )


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "RejectionCapError",
]
