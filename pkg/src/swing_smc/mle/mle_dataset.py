# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Cloned Dataset Class
=============================

Infinitely repeated copy of a finite record y_1, ..., y_T: the observation
at global time t is y_s with s = t - T floor((t - 1) / T).

Usage:
------
    data = ClonedDataset(ys)
    data.obs_at(data.T + 1)     # equals ys[0]
    data.position(2 * data.T)   # (2, T)

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.errors import ConfigError


# =============================================================================
# Class
# =============================================================================

class ClonedDataset:
    """
    Cloned Dataset Class
    ====================

    Attributes:
        y_tilde (np.ndarray): Observations, shape (T, d_y).
        T (int): Record length.
    """

    def __init__(self, y_tilde: np.ndarray) -> None:
        arr = np.asarray(y_tilde, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise ConfigError("y_tilde", "cloned data need at least one observation row", list(arr.shape))
        self.y_tilde = arr
        self.T = int(arr.shape[0])

    def local_index(self, t: int) -> int:
        """s = t - T floor((t - 1) / T), in {1, ..., T}."""
        if t < 1:
            raise ConfigError("t", "global time starts at 1", t)
        return int(t - self.T * ((t - 1) // self.T))

    def position(self, t: int) -> Tuple[int, int]:
        """(pass k, step s) of global time t = (k - 1) T + s."""
        return int((t - 1) // self.T + 1), self.local_index(t)

    def obs_at(self, t: int) -> np.ndarray:
        return self.y_tilde[self.local_index(t) - 1]

    def __len__(self) -> int:
        return self.T

    def __repr__(self) -> str:
        return f"ClonedDataset(T={self.T}, d_y={self.y_tilde.shape[1]})"


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ClonedDataset",
]
