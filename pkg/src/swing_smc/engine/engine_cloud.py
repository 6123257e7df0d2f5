# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Particle Cloud Class
=============================

The weighted particle system of a self-organized state-space model: one
parameter vector and one state payload per particle, unnormalized
log-weights, and the bookkeeping of the last resampling.

State payloads are anything indexable by an integer array along the
particle axis: a raw (N, d_x) array, or a batch of Kalman sufficient
statistics for the Rao-Blackwellised filter.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass, field
from typing import Any, List, Optional

# Import | Libraries
import numpy as np
from scipy.special import logsumexp

# Import | Local Modules
from swing_smc.errors import DegeneracyError, SmcError


# =============================================================================
# Class
# =============================================================================

@dataclass
class ParticleCloud:
    """
    Particle Cloud Class
    ====================

    Attributes:
        theta (np.ndarray): Parameter particles, shape (N, d).
        state (Any): State payloads, indexable along the particle axis.
        logw (np.ndarray): Unnormalized log-weights, shape (N,).
        t (int): Time index of the cloud.
        ancestry (np.ndarray): Ancestor indices used by the last step.
        resampled_at (List[int]): Times at which a resampling occurred.
    """

    theta: np.ndarray
    state: Any
    logw: np.ndarray
    t: int = 0
    ancestry: Optional[np.ndarray] = None
    resampled_at: List[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.theta = np.atleast_2d(np.asarray(self.theta, dtype=float))
        self.logw = np.asarray(self.logw, dtype=float).reshape(-1)
        if self.theta.shape[0] < 1:
            raise SmcError("A particle cloud needs at least one particle")
        if self.logw.shape[0] != self.theta.shape[0]:
            raise SmcError(
                "Parameter and weight arrays disagree on N",
                details={"theta": self.theta.shape[0], "logw": self.logw.shape[0]},
            )
        if self.ancestry is None:
            self.ancestry = np.arange(self.N)

    @property
    def N(self) -> int:
        return int(self.theta.shape[0])

    @property
    def W(self) -> np.ndarray:
        """Normalized weights."""
        return normalize_log_weights(self.logw, self.t)

    @classmethod
    def uniform(cls, theta: np.ndarray, state: Any, t: int = 0) -> "ParticleCloud":
        """Cloud with equal weights."""
        theta = np.atleast_2d(np.asarray(theta, dtype=float))
        return cls(theta=theta, state=state, logw=np.zeros(theta.shape[0]), t=t)


# =============================================================================
# Functions
# =============================================================================

def normalize_log_weights(logw: np.ndarray, t: int = 0) -> np.ndarray:
    """
    Normalized weights from log-weights through a max shift.

    Args:
        logw (np.ndarray): Unnormalized log-weights.
        t (int): Time index named in the failure.

    Returns:
        np.ndarray: Weights summing to one.
    """
    logw = np.asarray(logw, dtype=float)
    top = np.max(logw)
    if not np.isfinite(top):
        raise DegeneracyError(t)
    w = np.exp(logw - top)
    return w / w.sum()


def log_mass(logw: np.ndarray) -> float:
    """log of the total unnormalized weight."""
    return float(logsumexp(logw))


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ParticleCloud",
    "log_mass",
    "normalize_log_weights",
]
