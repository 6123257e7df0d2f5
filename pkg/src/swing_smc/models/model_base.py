# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides State-Space Model Base Class
=====================================

Interface shared by every model the particle filters run on. All callables
are vectorised over particles: `theta` is always an (N, d) array and the
state payload holds N rows, so one call advances the whole cloud.

Observations are rows of an (T, d_y) array; the step at time t receives
the row `ys[t - 1]`.

Usage:
------
    class MyModel(SsmModel):
        name = "my-model"
        d_x = 1

        def sample_initial(self, theta, rng): ...
        def sample_transition(self, t, state, theta, rng): ...
        def obs_logdensity(self, t, y, state, theta): ...
        def sample_observation(self, t, state, theta, rng): ...

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Any, Optional, Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.errors import ModelError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Class
# =============================================================================

class SsmModel:
    """
    State-Space Model Base Class
    ============================

    Attributes:
        name (str): Registry name.
        period (int): Period tau; the callables at time t depend on t only
            through the local time t - tau * floor((t - 1) / tau).
        d_x (int): State dimension (0 for state-free models).
        d_y (int): Observation dimension.
    """

    name: str = "ssm"
    period: int = 1
    d_x: int = 1
    d_y: int = 1

    # -------------------------------------------------------------------------
    # Time
    # -------------------------------------------------------------------------

    def local_time(self, t: int) -> int:
        """Position of `t` inside the period, in {1, ..., period}."""
        return int(t - self.period * ((t - 1) // self.period))

    # -------------------------------------------------------------------------
    # Dynamics
    # -------------------------------------------------------------------------

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> Any:
        """Draw X_1 ~ chi_theta for every row of `theta`."""
        raise NotImplementedError

    def sample_transition(
        self, t: int, state: Any, theta: np.ndarray, rng: np.random.Generator,
    ) -> Any:
        """Draw X_t ~ M_{t, theta}(X_{t-1}, .) for every particle."""
        raise NotImplementedError

    def obs_logdensity(self, t: int, y: np.ndarray, state: Any, theta: np.ndarray) -> np.ndarray:
        """log f_{t, theta}(y | x) per particle; -inf marks invalid particles."""
        raise NotImplementedError

    def condition(
        self, t: int, y: np.ndarray, state: Any, theta: np.ndarray,
    ) -> Tuple[np.ndarray, Any]:
        """
        Weight the particles with the observation at time t.

        Returns the per-particle log-weight increment and the (possibly
        updated) state payload. Raw-state models leave the state as is.
        """
        return self.obs_logdensity(t, y, state, theta), state

    def sample_observation(
        self, t: int, state: Any, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        """Draw Y_t ~ f_{t, theta}(. | x), shape (N, d_y)."""
        raise NotImplementedError

    # -------------------------------------------------------------------------
    # Summaries and oracles
    # -------------------------------------------------------------------------

    def state_summary(self, state: Any, W: np.ndarray) -> np.ndarray:
        """Weighted mean of the state payload."""
        arr = np.asarray(state, dtype=float)
        if arr.ndim < 2 or arr.shape[1] == 0:
            return np.zeros(0)
        return W @ arr

    def exact_loglik(self, theta: np.ndarray, ys: np.ndarray) -> Optional[float]:
        """Exact log-likelihood for oracle-capable models, else None."""
        return None

    def check_theta(self, theta: np.ndarray, width: int) -> np.ndarray:
        """Parameter rows as an (N, width) float array."""
        arr = np.atleast_2d(np.asarray(theta, dtype=float))
        if arr.shape[1] != width:
            raise ModelError(
                f"{self.name} expects {width} parameters, got {arr.shape[1]}",
                details={"model": self.name},
            )
        return arr

    def __repr__(self) -> str:
        return f"{type(self).__name__}(period={self.period}, d_x={self.d_x})"


# =============================================================================
# Functions
# =============================================================================

def simulate(
    model: SsmModel,
    theta: np.ndarray,
    T: int,
    rng: np.random.Generator,
) -> Tuple[list, np.ndarray]:
    """
    Forward simulation of (X_{1:T}, Y_{1:T}) at one parameter value.

    Args:
        model (SsmModel): Model to simulate.
        theta (np.ndarray): Parameter vector (d,).
        T (int): Number of steps.
        rng (np.random.Generator): Random stream.

    Returns:
        Tuple[list, np.ndarray]: The states (one single-particle payload
        per step) and the observations, shape (T, d_y).
    """
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    states = []
    ys = np.empty((T, model.d_y))
    state = None
    for t in range(1, T + 1):
        if t == 1:
            state = model.sample_initial(theta, rng)
        else:
            state = model.sample_transition(t, state, theta, rng)
        states.append(state)
        ys[t - 1] = np.asarray(model.sample_observation(t, state, theta, rng)).reshape(-1)
    logger.debug("Simulated %d steps of %s", T, model.name)
    return states, ys


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "SsmModel",
    "simulate",
]
