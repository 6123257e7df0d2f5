# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Global Noisy Optimizer
===============================

Maximization of theta -> E[h(Y, theta)] from a stream of noisy draws
Y_1, Y_2, ... The particle system carries parameters only; each step
multiplies the weights by exp(h(Y_t, theta_t)) and the resampling and
kernel rules are those of the slow adaptive filter (epoch or ESS trigger).

Usage:
------
    record = run_noisy_opt("quadratic", ys, space, schedule, n_particles=1000, seed=3)

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Callable, Dict, Optional, Tuple, Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace
from swing_smc.engine import ParticleCloud, RngStreams, RunRecord, run_adaptive_slow
from swing_smc.engine.engine_filter import InitialSampler
from swing_smc.errors import ConfigError
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

Payoff = Callable[[np.ndarray, np.ndarray], np.ndarray]


# =============================================================================
# Class
# =============================================================================

class PayoffModel(SsmModel):
    """
    Payoff Model Class
    ==================

    State-free model whose log observation density is the payoff.

    Attributes:
        payoff (Payoff): h(y, theta rows) -> (N,) real values.
    """

    name = "payoff"
    d_x = 0

    def __init__(self, payoff: Payoff, d_y: int = 1) -> None:
        self.payoff = payoff
        self.d_y = int(d_y)

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return np.zeros((np.atleast_2d(theta).shape[0], 0))

    def sample_transition(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        return state

    def obs_logdensity(self, t: int, y: np.ndarray, state: np.ndarray, theta: np.ndarray) -> np.ndarray:
        return np.asarray(self.payoff(y, theta), dtype=float)


# =============================================================================
# Functions
# =============================================================================

def quadratic_payoff(y: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """h(y, theta) = -||theta - y||^2 per parameter row."""
    theta = np.atleast_2d(theta)
    return -np.sum((theta - np.ravel(y)) ** 2, axis=1)


def zero_payoff(y: np.ndarray, theta: np.ndarray) -> np.ndarray:
    return np.zeros(np.atleast_2d(theta).shape[0])


def resolve_payoff(payoff: Union[str, Payoff]) -> Payoff:
    if callable(payoff):
        return payoff
    if payoff not in PAYOFFS:
        raise ConfigError("payoff", f"unknown payoff, expected one of {sorted(PAYOFFS)}", payoff)
    return PAYOFFS[payoff]


def run_noisy_opt(
    payoff: Union[str, Payoff],
    ys: np.ndarray,
    space: ParameterSpace,
    schedule: DynamicsSchedule,
    n_particles: Optional[int] = None,
    c_ess: Optional[float] = None,
    seed: Union[int, RngStreams] = 0,
    mu0: Optional[InitialSampler] = None,
    scheme: Optional[str] = None,
    theta_star: Optional[np.ndarray] = None,
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Global noisy optimization with a parameter-only particle system.

    Args:
        payoff (Union[str, Payoff]): Registered payoff name or callable.
        ys (np.ndarray): Noisy draws, (T,) or (T, d_y).
        space (ParameterSpace): Search space.
        schedule (DynamicsSchedule): Parameter kernels and epochs.
        n_particles (Optional[int]): N.
        c_ess (Optional[float]): Resampling threshold factor.
        seed (Union[int, RngStreams]): Master seed or stream family.
        mu0 (Optional[InitialSampler]): Initial sampler; uniform when None.
        scheme (Optional[str]): Resampling scheme.
        theta_star (Optional[np.ndarray]): Known maximizer, kept on the record.
        keep_cloud (bool): Also return the final cloud.

    Returns:
        RunRecord: One row per draw with the weighted parameter mean.
    """
    ys = np.asarray(ys, dtype=float)
    d_y = 1 if ys.ndim == 1 else ys.shape[1]
    model = PayoffModel(resolve_payoff(payoff), d_y=d_y)
    logger.debug("Noisy optimization with payoff %s", getattr(model.payoff, "__name__", model.payoff))
    return run_adaptive_slow(
        model, space, ys, schedule,
        n_particles=n_particles, c_ess=c_ess, variant="theta-before-x", seed=seed,
        mu0=mu0, scheme=scheme, theta_star=theta_star, keep_cloud=keep_cloud,
    )


# =============================================================================
# Registry
# =============================================================================

PAYOFFS: Dict[str, Payoff] = {
    "quadratic": quadratic_payoff,
    "zero": zero_payoff,
}


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "PAYOFFS",
    "PayoffModel",
    "quadratic_payoff",
    "resolve_payoff",
    "run_noisy_opt",
    "zero_payoff",
]
