# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Stochastic Volatility Model
====================================

    Y_t | X_t = x      ~ N(0, beta^2 exp(x))
    X_t | X_{t-1} = x  ~ alpha x + sigma t_nu     (variant "student")
                       ~ N(alpha x, sigma^2)      (variant "gaussian")

with theta = (alpha, beta, sigma). The law of X_1 is configurable; by
default it is N(0, sigma^2 / (1 - alpha^2)) when |alpha| < 1 and
N(0, sigma^2) otherwise.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Callable, Optional, Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import ParameterSpace
from swing_smc.errors import ModelError
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Class
# =============================================================================

InitialLaw = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]

LOG_2PI = float(np.log(2.0 * np.pi))


def stationary_initial(theta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Mean and standard deviation of X_1 per parameter row."""
    alpha, sigma = theta[:, 0], theta[:, 2]
    stationary = np.abs(alpha) < 1.0
    var = np.where(stationary, sigma ** 2 / np.where(stationary, 1.0 - alpha ** 2, 1.0), sigma ** 2)
    return np.zeros(theta.shape[0]), np.sqrt(var)


class SvModel(SsmModel):
    """
    Stochastic Volatility Model Class
    =================================

    Attributes:
        variant (str): "student" or "gaussian" state noise.
        nu (float): Degrees of freedom of the Student noise.
        initial_law (InitialLaw): theta rows -> (means, standard
            deviations) of X_1.
    """

    name = "sv"
    d_x = 1
    d_y = 1
    d = 3

    def __init__(
        self,
        variant: str = "student",
        nu: Optional[float] = None,
        initial_law: Optional[InitialLaw] = None,
    ) -> None:
        if variant not in ("student", "gaussian"):
            raise ModelError(f"Unknown volatility variant {variant!r}", details={"allowed": ["student", "gaussian"]})
        self.variant = variant
        self.nu = float(nu if nu is not None else get_smc_config("models", "sv_nu"))
        if not self.nu > 0.0:
            raise ModelError("Degrees of freedom must be positive", details={"nu": self.nu})
        self.initial_law = initial_law or stationary_initial

    def unpack(self, theta: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Split rows into (alpha, beta, sigma); nonpositive beta or sigma is rejected."""
        theta = self.check_theta(theta, self.d)
        alpha, beta, sigma = theta[:, 0], theta[:, 1], theta[:, 2]
        if np.any(beta <= 0.0) or np.any(sigma <= 0.0):
            raise ModelError("Volatility parameters beta and sigma must be positive", details={"model": self.name})
        return alpha, beta, sigma

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        theta = self.check_theta(theta, self.d)
        self.unpack(theta)
        mean, sd = self.initial_law(theta)
        return (mean + sd * rng.standard_normal(theta.shape[0]))[:, None]

    def sample_transition(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        alpha, _, sigma = self.unpack(theta)
        n = state.shape[0]
        if self.variant == "student":
            noise = rng.standard_t(self.nu, size=n)
        else:
            noise = rng.standard_normal(n)
        return (alpha * state[:, 0] + sigma * noise)[:, None]

    def obs_logdensity(
        self, t: int, y: np.ndarray, state: np.ndarray, theta: np.ndarray,
    ) -> np.ndarray:
        _, beta, _ = self.unpack(theta)
        x = state[:, 0]
        y = float(np.ravel(y)[0])
        return -0.5 * LOG_2PI - np.log(beta) - 0.5 * x - 0.5 * y ** 2 * np.exp(-x) / beta ** 2

    def sample_observation(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        _, beta, _ = self.unpack(theta)
        sd = beta * np.exp(0.5 * state[:, 0])
        return (sd * rng.standard_normal(sd.shape))[:, None]


# =============================================================================
# Functions
# =============================================================================

def sv_model(variant: str = "student", nu: Optional[float] = None) -> SvModel:
    """Stochastic volatility model with Student (default) or Gaussian state noise."""
    return SvModel(variant=variant, nu=nu)


def sv_default_space() -> ParameterSpace:
    """Box [-1, 1] x [0.01, 5] x [0.01, 2] for (alpha, beta, sigma)."""
    return ParameterSpace.from_box([-1.0, 0.01, 0.01], [1.0, 5.0, 2.0])


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "SvModel",
    "stationary_initial",
    "sv_default_space",
    "sv_model",
]
