# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Spline Basis Class
===========================

Basis of the natural cubic splines on knots 0 = xi_1 < ... < xi_{p+1} = 24
with the constant function removed, normalized so that b_j(0) = 0.

The basis functions are the cardinal natural splines L_1, ..., L_p (L_j
equals one at xi_{j+1} and zero at the other knots); dropping L_0 removes
the constants and L_j(0) = 0 holds by construction.

Usage:
------
    basis = SplineBasis([0.0, 12.0, 24.0])
    basis(6.5)          # array of length 2
    basis.row(25)       # hour-of-day row, identical to basis.row(1)

Links:
------
- https://docs.scipy.org/doc/scipy/reference/generated/scipy.interpolate.CubicSpline.html

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Sequence, Union

# Import | Libraries
import numpy as np
from scipy.interpolate import CubicSpline

# Import | Local Modules
from swing_smc.errors import ModelError


# =============================================================================
# Variables
# =============================================================================

DAY_START = 0.0
DAY_END = 24.0
HOURS = 24


# =============================================================================
# Class
# =============================================================================

class SplineBasis:
    """
    Spline Basis Class
    ==================

    Attributes:
        knots (np.ndarray): Knots, strictly increasing from 0 to 24.
        p (int): Number of basis functions.
        rows (np.ndarray): Basis values at hours 1..24, shape (24, p).
    """

    def __init__(self, knots: Sequence[float]) -> None:
        knots = np.asarray(knots, dtype=float)
        if knots.ndim != 1 or knots.size < 2:
            raise ModelError("A spline basis needs at least two knots")
        if np.any(np.diff(knots) <= 0.0):
            raise ModelError("Spline knots must be strictly increasing", details={"knots": knots.tolist()})
        if knots[0] != DAY_START or knots[-1] != DAY_END:
            raise ModelError(
                "Spline knots must start at 0 and end at 24",
                details={"knots": knots.tolist()},
            )
        self.knots = knots
        self.p = knots.size - 1
        cardinal = np.eye(knots.size)[:, 1:]
        self._spline = CubicSpline(knots, cardinal, bc_type="natural")
        self.rows = self._spline(np.arange(1, HOURS + 1, dtype=float))

    def __call__(self, s: Union[float, np.ndarray], nu: int = 0) -> np.ndarray:
        """
        Evaluate the basis (or its `nu`-th derivative) at `s` in [0, 24].
        """
        arr = np.asarray(s, dtype=float)
        if np.any(arr < DAY_START) or np.any(arr > DAY_END):
            raise ModelError("Spline argument must lie in [0, 24]", details={"s": np.ravel(arr).tolist()[:5]})
        return self._spline(arr, nu)

    @staticmethod
    def hour_of(t: int) -> int:
        """Hour of day of time t: t - 24 floor((t - 1) / 24), in {1, ..., 24}."""
        return int(t - HOURS * ((t - 1) // HOURS))

    def row(self, t: int) -> np.ndarray:
        """Basis row b(hour(t))."""
        return self.rows[self.hour_of(t) - 1]

    def __repr__(self) -> str:
        return f"SplineBasis(knots={self.knots.tolist()})"


# =============================================================================
# Functions
# =============================================================================

def natural_cubic_basis(knots: Sequence[float], s: Union[float, np.ndarray]) -> np.ndarray:
    """
    Evaluate the natural cubic spline basis on `knots` at `s`.

    Args:
        knots (Sequence[float]): Knots from 0 to 24.
        s (Union[float, np.ndarray]): Points in [0, 24].

    Returns:
        np.ndarray: Values, shape s.shape + (p,).
    """
    return SplineBasis(knots)(s)


def default_knots(p: int) -> np.ndarray:
    """Evenly spaced knots on [0, 24] for p basis functions."""
    if p < 1:
        raise ModelError("Spline dimension must be positive", details={"p": p})
    return np.linspace(DAY_START, DAY_END, p + 1)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "SplineBasis",
    "default_knots",
    "natural_cubic_basis",
]
