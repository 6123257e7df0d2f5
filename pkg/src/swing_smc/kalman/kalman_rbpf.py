# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Rao-Blackwellised Particle Filter
==========================================

Marginalized particle filter for linear-Gaussian models with an unknown
parameter: each particle carries a parameter value and the Kalman
sufficient statistics of the state under that value. The state move is
the Kalman prediction, the weight is the log predictive density of the
observation, so no Monte-Carlo error enters through the state.

`RaoBlackwellModel` exposes a `LgSpec` through the `SsmModel` interface,
which makes every runner of the engine (always-on kernel, fast and slow
adaptive dynamics) and the iterated filters available in marginalized
form.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Optional, Tuple, Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace
from swing_smc.engine import (
    ParticleCloud,
    RngStreams,
    RunRecord,
    run_adaptive_fast,
    run_adaptive_slow,
    run_bootstrap_so_pf,
    so_pf_step,
)
from swing_smc.errors import ConfigError
from swing_smc.kalman.kalman_filter import KalmanState, LgSpec, kf_predict, kf_update
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Class
# =============================================================================

class RaoBlackwellModel(SsmModel):
    """
    Rao-Blackwellised Model Class
    =============================

    `SsmModel` whose state payload is a `KalmanState` batch.

    Attributes:
        spec (LgSpec): Linear-Gaussian maps.
    """

    def __init__(self, spec: LgSpec, name: str = "rao-blackwell") -> None:
        self.spec = spec
        self.name = name
        self.period = spec.period
        self.d_x = spec.d_x
        self.d_y = spec.d_y

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> KalmanState:
        return self.spec.initial_state(theta)

    def sample_transition(
        self, t: int, state: KalmanState, theta: np.ndarray, rng: np.random.Generator,
    ) -> KalmanState:
        return kf_predict(state, self.spec, theta, t)

    def condition(
        self, t: int, y: np.ndarray, state: KalmanState, theta: np.ndarray,
    ) -> Tuple[np.ndarray, KalmanState]:
        state, loglik, bad = kf_update(state, self.spec, theta, t, y)
        if bad.any():
            logger.debug("t=%d: %d particles with a singular innovation", t, int(bad.sum()))
        return loglik, state

    def obs_logdensity(
        self, t: int, y: np.ndarray, state: KalmanState, theta: np.ndarray,
    ) -> np.ndarray:
        return self.condition(t, y, state, theta)[0]

    def sample_observation(
        self, t: int, state: KalmanState, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        """Draw from the predictive law of Y_t given the state statistics."""
        m, A, B = self.spec.observation(self.spec.local_time(t), np.atleast_2d(theta))
        mean = m + np.einsum("nij,nj->ni", A, state.mean)
        cov = np.einsum("nij,njk,nlk->nil", A, state.cov, A) + B
        chol = np.linalg.cholesky(cov)
        z = rng.standard_normal(mean.shape)
        return mean + np.einsum("nij,nj->ni", chol, z)

    def state_summary(self, state: KalmanState, W: np.ndarray) -> np.ndarray:
        return W @ state.mean


# =============================================================================
# Functions
# =============================================================================

def rb_pf_step(
    cloud: ParticleCloud,
    spec: Union[LgSpec, RaoBlackwellModel],
    schedule: DynamicsSchedule,
    space: ParameterSpace,
    y: np.ndarray,
    streams: Union[int, RngStreams],
    c_ess: Optional[float] = None,
    variant: Optional[str] = None,
    scheme: Optional[str] = None,
) -> ParticleCloud:
    """
    One marginalized filter step: parameter dynamics and resampling as in
    `so_pf_step`, then per-particle Kalman prediction and update.

    Args:
        cloud (ParticleCloud): Cloud whose state is a `KalmanState` batch.
        spec (Union[LgSpec, RaoBlackwellModel]): Model maps.
        schedule (DynamicsSchedule): Parameter kernels.
        space (ParameterSpace): Parameter space.
        y (np.ndarray): Observation of the next time.
        streams (Union[int, RngStreams]): Seed or random streams.
        c_ess (Optional[float]): Resampling threshold factor.
        variant (Optional[str]): Ordering of parameter and state moves.
        scheme (Optional[str]): Resampling scheme.

    Returns:
        ParticleCloud: Cloud at the next time.
    """
    model = spec if isinstance(spec, RaoBlackwellModel) else RaoBlackwellModel(spec)
    return so_pf_step(cloud, model, schedule, space, y, streams, variant, c_ess, scheme)


RUNNERS = {
    "bootstrap": run_bootstrap_so_pf,
    "fast": run_adaptive_fast,
    "slow": run_adaptive_slow,
}


def run_rb_filter(
    spec: LgSpec,
    space: ParameterSpace,
    ys: np.ndarray,
    schedule: DynamicsSchedule,
    algorithm: str = "bootstrap",
    **kwargs,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Marginalized version of one of the engine runners.

    Args:
        spec (LgSpec): Model maps.
        space (ParameterSpace): Parameter space.
        ys (np.ndarray): Observations.
        schedule (DynamicsSchedule): Parameter kernels.
        algorithm (str): "bootstrap", "fast" or "slow".
        **kwargs: Forwarded to the runner (n_particles, c_ess, seed, ...).

    Returns:
        RunRecord: The run record.
    """
    if algorithm not in RUNNERS:
        raise ConfigError("algorithm", f"must be one of {sorted(RUNNERS)}", algorithm)
    model = RaoBlackwellModel(spec)
    if algorithm == "bootstrap":
        return run_bootstrap_so_pf(model, schedule, space, ys, **kwargs)
    return RUNNERS[algorithm](model, space, ys, schedule, **kwargs)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "RaoBlackwellModel",
    "rb_pf_step",
    "run_rb_filter",
]
