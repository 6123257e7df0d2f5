# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Cloned Model Class
===========================

T-periodic model over infinitely cloned data. At global time
t = (k - 1) T + s the observation density is the base density at s and the
transition is the base transition at s, except at s = 1 where the state is
drawn afresh from the base initial law.

Usage:
------
    model = clone_model(base, T)
    model.sample_transition(T + 1, state, theta, rng)   # ~ initial law

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Any, Optional, Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.errors import ConfigError
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Class
# =============================================================================

class ClonedModel(SsmModel):
    """
    Cloned Model Class
    ==================

    Attributes:
        base (SsmModel): Model defined on times 1..T.
        period (int): Record length T.
    """

    def __init__(self, base: SsmModel, T: int) -> None:
        if int(T) < 1:
            raise ConfigError("T", "cloned data need at least one observation", T)
        self.base = base
        self.period = int(T)
        self.d_x = base.d_x
        self.d_y = base.d_y
        self.name = f"cloned-{base.name}"

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> Any:
        return self.base.sample_initial(theta, rng)

    def sample_transition(
        self, t: int, state: Any, theta: np.ndarray, rng: np.random.Generator,
    ) -> Any:
        s = self.local_time(t)
        if s == 1:
            return self.base.sample_initial(theta, rng)
        return self.base.sample_transition(s, state, theta, rng)

    def obs_logdensity(self, t: int, y: np.ndarray, state: Any, theta: np.ndarray) -> np.ndarray:
        return self.base.obs_logdensity(self.local_time(t), y, state, theta)

    def condition(
        self, t: int, y: np.ndarray, state: Any, theta: np.ndarray,
    ) -> Tuple[np.ndarray, Any]:
        return self.base.condition(self.local_time(t), y, state, theta)

    def sample_observation(
        self, t: int, state: Any, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        return self.base.sample_observation(self.local_time(t), state, theta, rng)

    def state_summary(self, state: Any, W: np.ndarray) -> np.ndarray:
        return self.base.state_summary(state, W)

    def exact_loglik(self, theta: np.ndarray, ys: np.ndarray) -> Optional[float]:
        """Exact log-likelihood of one pass, from the base model."""
        return self.base.exact_loglik(theta, ys)

    def __repr__(self) -> str:
        return f"ClonedModel(base={self.base!r}, T={self.period})"


# =============================================================================
# Functions
# =============================================================================

def clone_model(base: SsmModel, T: int) -> ClonedModel:
    """
    T-periodic model with state reinitialization at the start of each pass.

    Args:
        base (SsmModel): Model over the record y_1..y_T.
        T (int): Record length.

    Returns:
        ClonedModel: The cloned model.
    """
    return ClonedModel(base, T)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ClonedModel",
    "clone_model",
]
