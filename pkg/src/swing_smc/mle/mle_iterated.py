# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Iterated Filtering Runners
===================================

Maximum likelihood through a particle filter on infinitely cloned data.
The record y_1..y_T is replayed pass after pass; global time
t = (k - 1) T + s keeps increasing, so the parameter dynamics vanish over
passes and the parameter cloud concentrates on the maximizer of the
likelihood of the record.

Runners:
--------
- run_if_fast: truncated Gaussian kernel with h_t = o(1/t), fired only
  when resampling fires (at s = 1 this is decided by the weights at the end
  of the previous pass).
- run_if_slow: resampling is forced at pass-aligned epochs where the
  heavy-tailed kernel fires; elsewhere the ESS trigger fires the truncated
  Gaussian kernel.

Both return a `RunRecord` with one row per pass, `t` holding the pass
index and `log_increment` the log-likelihood estimate of the pass.

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
from swing_smc.dynamics import ParameterSpace
from swing_smc.engine import (
    ParticleCloud,
    RngStreams,
    RunRecord,
    StepOutcome,
    advance,
    as_streams,
    ess,
    estimate_theta,
    initialize,
)
from swing_smc.engine.engine_filter import InitialSampler
from swing_smc.errors import ConfigError, ScheduleError
from swing_smc.mle.mle_clone import ClonedModel, clone_model
from swing_smc.mle.mle_config import IfConfig
from swing_smc.mle.mle_dataset import ClonedDataset
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

FAST_FLAVORS = ("fast-vanishing", "pomp-geometric", "pomp-hyperbolic", "none")
SLOW_FLAVORS = ("slow-vanishing", "mixed")


# =============================================================================
# Class
# =============================================================================

class _PassTotals:
    """Accumulator of the steps of one pass."""

    def __init__(self) -> None:
        self.log_increment = 0.0
        self.resampled = False
        self.moves = 0

    def add(self, outcome: StepOutcome) -> None:
        self.log_increment += outcome.log_increment
        self.resampled = self.resampled or outcome.resampled
        self.moves += int(outcome.moved)


# =============================================================================
# Functions
# =============================================================================

def _close_pass(
    record: RunRecord,
    k: int,
    cloud: ParticleCloud,
    model: ClonedModel,
    space: ParameterSpace,
    totals: _PassTotals,
) -> None:
    W = cloud.W
    theta_hat, theta_proj = estimate_theta(cloud, space)
    record.append(
        t=k,
        theta_hat=theta_hat,
        theta_proj=theta_proj,
        state_mean=model.state_summary(cloud.state, W),
        ess=ess(W),
        resampled=totals.resampled,
        log_increment=totals.log_increment,
        moved=totals.moves,
    )
    logger.debug(
        "pass %d: log-likelihood %.6g, %d kernel applications, theta_proj %s",
        k, totals.log_increment, totals.moves, np.array2string(theta_proj, precision=4),
    )


def _run_if(
    label: str,
    base: SsmModel,
    y_tilde: np.ndarray,
    space: ParameterSpace,
    config: IfConfig,
    seed: Union[int, RngStreams],
    mu0: Optional[InitialSampler],
    use_epochs: bool,
    theta_star: Optional[np.ndarray],
    keep_cloud: bool,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    data = ClonedDataset(y_tilde)
    if data.T != config.T:
        raise ConfigError("T", f"config is for T={config.T}, the record has {data.T} rows", data.T)
    model = clone_model(base, data.T)
    schedule = config.schedule
    streams = as_streams(seed)

    logger.info(
        "%s: %s, N=%d, T=%d, passes=%d, flavor=%s",
        label, base.name, config.n_particles, data.T, config.max_passes, schedule.flavor,
    )
    record = RunRecord(theta_star=None if theta_star is None else np.asarray(theta_star, float))
    outcome = initialize(
        model, schedule, space, data.obs_at(1), config.n_particles, streams,
        config.variant, mu0, position=(1, 1),
    )
    totals = _PassTotals()
    totals.add(outcome)
    for t in range(2, config.total_steps + 1):
        k, s = data.position(t)
        if s == 1:
            _close_pass(record, k - 1, outcome.cloud, model, space, totals)
            totals = _PassTotals()
        force = use_epochs and schedule.is_epoch(t)
        if force:
            logger.debug("t=%d (pass %d): epoch", t, k)
        outcome = advance(
            outcome.cloud, model, schedule, space, data.obs_at(t), streams,
            variant=config.variant, c_ess=config.c_ess, scheme=config.scheme,
            gate="resample", force=force, position=(k, s),
        )
        totals.add(outcome)
    _close_pass(record, config.max_passes, outcome.cloud, model, space, totals)

    logger.info(
        "%s finished: %d resamplings, %d kernel applications, last pass log-likelihood %.6g",
        label, len(outcome.cloud.resampled_at), record.kernel_applications, record.log_increment[-1],
    )
    if keep_cloud:
        return record, outcome.cloud
    return record


def run_if_fast(
    base: SsmModel,
    y_tilde: np.ndarray,
    space: ParameterSpace,
    config: IfConfig,
    seed: Union[int, RngStreams] = 0,
    mu0: Optional[InitialSampler] = None,
    theta_star: Optional[np.ndarray] = None,
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Iterated filtering with fast adaptive dynamics.

    Args:
        base (SsmModel): Model over the record.
        y_tilde (np.ndarray): Record y_1..y_T, (T,) or (T, d_y).
        space (ParameterSpace): Parameter space.
        config (IfConfig): Run settings; a fast-vanishing or pomp schedule.
        seed (Union[int, RngStreams]): Master seed or stream family.
        mu0 (Optional[InitialSampler]): Initial parameter sampler; uniform
            on the space when None.
        theta_star (Optional[np.ndarray]): Ground truth kept on the record.
        keep_cloud (bool): Also return the final cloud.

    Returns:
        RunRecord: One row per pass (and the final cloud when `keep_cloud`).
    """
    schedule = config.schedule
    if schedule.flavor not in FAST_FLAVORS and schedule.h_override is None:
        raise ScheduleError(
            "Fast iterated filtering needs a fast-vanishing or pomp schedule",
            details={"flavor": schedule.flavor},
        )
    return _run_if(
        "if-fast", base, y_tilde, space, config, seed, mu0, False, theta_star, keep_cloud,
    )


def run_if_slow(
    base: SsmModel,
    y_tilde: np.ndarray,
    space: ParameterSpace,
    config: IfConfig,
    seed: Union[int, RngStreams] = 0,
    mu0: Optional[InitialSampler] = None,
    theta_star: Optional[np.ndarray] = None,
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Iterated filtering with slow adaptive dynamics: epochs at the start of
    passes force resampling and a heavy-tailed move.

    Arguments are those of `run_if_fast`; the schedule must be slow-vanishing
    or mixed with a first epoch.
    """
    schedule = config.schedule
    if schedule.flavor not in SLOW_FLAVORS:
        raise ScheduleError(
            "Slow iterated filtering needs a slow-vanishing or mixed schedule",
            details={"flavor": schedule.flavor},
        )
    if not config.uses_epochs:
        raise ScheduleError("Slow iterated filtering needs a first epoch")
    return _run_if(
        "if-slow", base, y_tilde, space, config, seed, mu0, True, theta_star, keep_cloud,
    )


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "run_if_fast",
    "run_if_slow",
]
