# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Degeneracy Error Class
===============================

Raised when every particle weight becomes zero, or when a model returns a
NaN log-density. The time index is always named; iterated filtering adds
the pass and the position inside the pass.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Optional, Tuple

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class DegeneracyError(SmcError):
    """
    Degeneracy Error Class
    ======================

    Total weight degeneracy of a particle system.

    Attributes:
        t (int): Global time index at which the failure occurred.
        position (Optional[Tuple[int, int]]): (pass, step inside the pass)
            for iterated filtering runs.
    """

    code = "weight_degeneracy"

    def __init__(
        self,
        t: int,
        reason: str = "all particle weights are zero",
        position: Optional[Tuple[int, int]] = None,
    ) -> None:
        self.t = t
        self.position = position
        where = f"t={t}"
        if position is not None:
            where += f" (k={position[0]}, s={position[1]})"
        super().__init__(
            message=f"{reason} at {where}",
            details={"t": t, "k": position[0] if position else None,
                     "s": position[1] if position else None},
        )


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "DegeneracyError",
]
