# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Self-Organized Particle Filters
========================================

Bootstrap particle filters on the self-organized model in which the
parameter is a hidden Markov chain moved by the kernels of a
`DynamicsSchedule`. One step implements:

1. Resampling test: ESS <= N c_ESS (or a forced trigger at epoch times).
2. On trigger, resample ancestors and reset the weights to one.
3. Parameter move through the kernel K_t, always or only on trigger.
4. State move under the ancestor parameter ("theta-after-x") or the moved
   parameter ("theta-before-x").
5. Reweighting with the observation density and bookkeeping of the log
   normalizing increment.

Runners:
--------
- run_bootstrap_so_pf: kernel applied at every step.
- run_adaptive_fast: kernel applied only when resampling fires.
- run_adaptive_slow: resampling and kernel fire at epoch times or on the
  ESS trigger; heavy-tailed moves at epochs.

Random draws of step t come from the streams "resample", "kernel" and
"transition" keyed by t, so a run is a pure function of its seed.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import TYPE_CHECKING, Any, Callable, NamedTuple, Optional, Tuple, Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace, kernel_at
from swing_smc.engine.engine_cloud import ParticleCloud, log_mass, normalize_log_weights
from swing_smc.engine.engine_record import RunRecord
from swing_smc.engine.engine_resample import ess, resample
from swing_smc.engine.engine_rng import RngStreams, as_streams
from swing_smc.errors import ConfigError, DegeneracyError, ScheduleError

if TYPE_CHECKING:
    from swing_smc.models.model_base import SsmModel


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

VARIANTS: Tuple[str, ...] = ("theta-after-x", "theta-before-x")
GATES: Tuple[str, ...] = ("always", "resample")

InitialSampler = Callable[[int, np.random.Generator], np.ndarray]


# =============================================================================
# Class
# =============================================================================

class StepOutcome(NamedTuple):
    """Result of one filter step."""

    cloud: ParticleCloud
    resampled: bool
    moved: bool
    log_increment: float


# =============================================================================
# Functions
# =============================================================================

def as_observations(ys: Any, d_y: Optional[int] = None) -> np.ndarray:
    """
    Observations as a (T, d_y) float array; a flat sequence is one column.
    """
    arr = np.asarray(ys, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ConfigError("ys", "observations must form a (T, d_y) table", list(arr.shape))
    if d_y is not None and arr.shape[0] and arr.shape[1] != d_y:
        raise ConfigError("ys", f"observations have {arr.shape[1]} columns, model expects {d_y}")
    return arr


def _check_variant(variant: Optional[str]) -> str:
    variant = variant or get_smc_config("engine", "variant")
    if variant not in VARIANTS:
        raise ConfigError("variant", f"must be one of {list(VARIANTS)}", variant)
    return variant


def _check_c_ess(c_ess: Optional[float]) -> float:
    c_ess = float(c_ess if c_ess is not None else get_smc_config("engine", "c_ess"))
    if not 0.0 < c_ess <= 1.0:
        raise ConfigError("c_ess", "must lie in (0, 1]", c_ess)
    return c_ess


def _reweight(
    model: "SsmModel",
    t: int,
    y: np.ndarray,
    state: Any,
    theta: np.ndarray,
    logw_prev: np.ndarray,
    position: Optional[Tuple[int, int]],
) -> Tuple[np.ndarray, Any, float]:
    loglik, state = model.condition(t, y, state, theta)
    loglik = np.asarray(loglik, dtype=float)
    if np.isnan(loglik).any():
        raise DegeneracyError(t, reason=f"{model.name} returned a NaN log-density", position=position)
    logw = logw_prev + loglik
    if not np.isfinite(np.max(logw)):
        raise DegeneracyError(t, position=position)
    return logw, state, log_mass(logw) - log_mass(logw_prev)


def advance(
    cloud: ParticleCloud,
    model: "SsmModel",
    schedule: DynamicsSchedule,
    space: ParameterSpace,
    y: np.ndarray,
    streams: RngStreams,
    variant: str = "theta-after-x",
    c_ess: float = 0.7,
    scheme: Optional[str] = None,
    gate: str = "always",
    force: bool = False,
    position: Optional[Tuple[int, int]] = None,
) -> StepOutcome:
    """
    Move a cloud from time t - 1 to time t.

    Args:
        cloud (ParticleCloud): Cloud at time t - 1.
        model (SsmModel): Model.
        schedule (DynamicsSchedule): Parameter kernels.
        space (ParameterSpace): Parameter space.
        y (np.ndarray): Observation row of time t.
        streams (RngStreams): Random streams.
        variant (str): One of `VARIANTS`.
        c_ess (float): Resampling threshold factor.
        scheme (Optional[str]): Resampling scheme.
        gate (str): "always" applies the kernel every step, "resample" only
            when resampling fires.
        force (bool): Resample and move regardless of the ESS.
        position (Optional[Tuple[int, int]]): (pass, step) named in
            failures of iterated filtering.

    Returns:
        StepOutcome: The new cloud and the step flags.
    """
    if gate not in GATES:
        raise ConfigError("gate", f"must be one of {list(GATES)}", gate)
    t = cloud.t + 1
    N = cloud.N
    W = normalize_log_weights(cloud.logw, cloud.t)

    # ESS never exceeds N, so c_ess = 1 triggers at every step
    triggered = bool(force) or c_ess >= 1.0 or ess(W) <= N * c_ess
    if triggered:
        ancestors = resample(W, N, scheme, streams.generator("resample", t))
        logw_prev = np.zeros(N)
        resampled_at = cloud.resampled_at + [t]
        logger.debug("t=%d: resampled (forced=%s)", t, force)
    else:
        ancestors = np.arange(N)
        logw_prev = cloud.logw
        resampled_at = list(cloud.resampled_at)
    theta_prev = cloud.theta[ancestors]
    state_prev = cloud.state[ancestors] if triggered else cloud.state

    moved = schedule.flavor != "none" and (gate == "always" or triggered)
    if moved:
        theta = kernel_at(schedule, t, theta_prev, space, streams.generator("kernel", t))
    else:
        theta = theta_prev.copy()

    driver = theta_prev if variant == "theta-after-x" else theta
    state = model.sample_transition(t, state_prev, driver, streams.generator("transition", t))
    logw, state, increment = _reweight(model, t, y, state, theta, logw_prev, position)

    new_cloud = ParticleCloud(
        theta=theta, state=state, logw=logw, t=t,
        ancestry=ancestors, resampled_at=resampled_at,
    )
    return StepOutcome(new_cloud, triggered, moved, increment)


def so_pf_step(
    cloud: ParticleCloud,
    model: "SsmModel",
    schedule: DynamicsSchedule,
    space: ParameterSpace,
    y: np.ndarray,
    streams: Union[int, RngStreams],
    variant: Optional[str] = None,
    c_ess: Optional[float] = None,
    scheme: Optional[str] = None,
) -> ParticleCloud:
    """
    One step of the bootstrap filter on the self-organized model, kernel
    applied at every step.
    """
    return advance(
        cloud, model, schedule, space, np.atleast_1d(y), as_streams(streams),
        variant=_check_variant(variant), c_ess=_check_c_ess(c_ess),
        scheme=scheme, gate="always",
    ).cloud


def estimate_theta(
    cloud: ParticleCloud,
    space: Optional[ParameterSpace] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Weighted parameter mean and its projection on the space.

    Args:
        cloud (ParticleCloud): Cloud with at least one finite weight.
        space (Optional[ParameterSpace]): Space used for the projection;
            the mean is returned twice when None.

    Returns:
        Tuple[np.ndarray, np.ndarray]: (theta_hat, theta_proj).
    """
    theta_hat = cloud.W @ cloud.theta
    theta_proj = space.project(theta_hat) if space is not None else theta_hat.copy()
    return theta_hat, theta_proj


def record_step(
    record: RunRecord,
    outcome: StepOutcome,
    model: "SsmModel",
    space: ParameterSpace,
    t: Optional[int] = None,
) -> None:
    """Append the summaries of a step to a record."""
    cloud = outcome.cloud
    W = cloud.W
    theta_hat, theta_proj = estimate_theta(cloud, space)
    record.append(
        t=cloud.t if t is None else t,
        theta_hat=theta_hat,
        theta_proj=theta_proj,
        state_mean=model.state_summary(cloud.state, W),
        ess=ess(W),
        resampled=outcome.resampled,
        log_increment=outcome.log_increment,
        moved=outcome.moved,
    )


def initialize(
    model: "SsmModel",
    schedule: DynamicsSchedule,
    space: ParameterSpace,
    y: np.ndarray,
    n_particles: int,
    streams: RngStreams,
    variant: str,
    mu0: Optional[InitialSampler] = None,
    position: Optional[Tuple[int, int]] = None,
) -> StepOutcome:
    """
    Cloud at time 1: theta_0 ~ mu_0, X_1 ~ chi_{theta_0}, then theta_1 from
    K_1 ("theta-after-x") or theta_1 = theta_0 ("theta-before-x"), weighted
    with the first observation.
    """
    if n_particles < 1:
        raise ConfigError("n_particles", "must be at least 1", n_particles)
    rng = streams.generator("initial", 0)
    theta0 = mu0(n_particles, rng) if mu0 is not None else space.sample_uniform(n_particles, rng)
    theta0 = np.atleast_2d(np.asarray(theta0, dtype=float))
    if theta0.shape != (n_particles, space.d) or not np.all(space.contains(theta0)):
        raise ConfigError("mu0", "initial sampler must return (N, d) points of the space")

    state = model.sample_initial(theta0, streams.generator("transition", 1))
    moved = variant == "theta-after-x" and schedule.flavor != "none"
    if moved:
        theta1 = kernel_at(schedule, 1, theta0, space, streams.generator("kernel", 1))
    else:
        theta1 = theta0.copy()
    logw, state, increment = _reweight(
        model, 1, y, state, theta1, np.zeros(n_particles), position,
    )
    cloud = ParticleCloud(theta=theta1, state=state, logw=logw, t=1)
    return StepOutcome(cloud, False, moved, increment)


def _run(
    label: str,
    model: "SsmModel",
    schedule: DynamicsSchedule,
    space: ParameterSpace,
    ys: np.ndarray,
    n_particles: Optional[int],
    c_ess: Optional[float],
    variant: Optional[str],
    seed: Union[int, RngStreams],
    mu0: Optional[InitialSampler],
    scheme: Optional[str],
    gate: str,
    use_epochs: bool,
    theta_star: Optional[np.ndarray],
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    ys = as_observations(ys)
    if ys.shape[0] == 0:
        raise ConfigError("ys", "observation sequence is empty")
    variant = _check_variant(variant)
    c_ess = _check_c_ess(c_ess)
    n_particles = int(n_particles or get_smc_config("engine", "n_particles"))
    streams = as_streams(seed)

    logger.info(
        "%s: %s, N=%d, T=%d, flavor=%s, variant=%s",
        label, model.name, n_particles, ys.shape[0], schedule.flavor, variant,
    )
    record = RunRecord(theta_star=None if theta_star is None else np.asarray(theta_star, float))
    outcome = initialize(model, schedule, space, ys[0], n_particles, streams, variant, mu0)
    record_step(record, outcome, model, space)
    for t in range(2, ys.shape[0] + 1):
        force = use_epochs and schedule.is_epoch(t)
        if force:
            logger.debug("t=%d: epoch", t)
        outcome = advance(
            outcome.cloud, model, schedule, space, ys[t - 1], streams,
            variant=variant, c_ess=c_ess, scheme=scheme, gate=gate, force=force,
        )
        record_step(record, outcome, model, space)
    logger.info(
        "%s finished: %d resamplings, %d kernel applications, log-likelihood %.6g",
        label, len(outcome.cloud.resampled_at), record.kernel_applications, record.log_likelihood,
    )
    if keep_cloud:
        return record, outcome.cloud
    return record


def run_bootstrap_so_pf(
    model: "SsmModel",
    schedule: DynamicsSchedule,
    space: ParameterSpace,
    ys: np.ndarray,
    n_particles: Optional[int] = None,
    c_ess: Optional[float] = None,
    variant: Optional[str] = None,
    seed: Union[int, RngStreams] = 0,
    mu0: Optional[InitialSampler] = None,
    scheme: Optional[str] = None,
    theta_star: Optional[np.ndarray] = None,
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Bootstrap filter on the self-organized model with the kernel applied
    at every step.

    Args:
        model (SsmModel): Model.
        schedule (DynamicsSchedule): Parameter kernels.
        space (ParameterSpace): Parameter space.
        ys (np.ndarray): Observations, (T,) or (T, d_y).
        n_particles (Optional[int]): N; the `engine.n_particles` setting
            when None.
        c_ess (Optional[float]): Resampling threshold factor.
        variant (Optional[str]): One of `VARIANTS`.
        seed (Union[int, RngStreams]): Master seed or stream family.
        mu0 (Optional[InitialSampler]): Initial parameter sampler; uniform
            on the space when None.
        scheme (Optional[str]): Resampling scheme.
        theta_star (Optional[np.ndarray]): Ground truth kept on the record.
        keep_cloud (bool): Also return the final cloud.

    Returns:
        RunRecord: One row per observation (and the final cloud when
        `keep_cloud`).
    """
    return _run(
        "bootstrap", model, schedule, space, ys, n_particles, c_ess, variant,
        seed, mu0, scheme, "always", False, theta_star, keep_cloud,
    )


def run_adaptive_fast(
    model: "SsmModel",
    space: ParameterSpace,
    ys: np.ndarray,
    schedule: Optional[DynamicsSchedule] = None,
    n_particles: Optional[int] = None,
    c_ess: Optional[float] = None,
    variant: Optional[str] = None,
    seed: Union[int, RngStreams] = 0,
    mu0: Optional[InitialSampler] = None,
    scheme: Optional[str] = None,
    theta_star: Optional[np.ndarray] = None,
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Fast adaptive dynamics: the truncated Gaussian kernel with a scale
    h_t = o(1/t) is applied only at steps where resampling fires.

    A fast-vanishing schedule with the default exponent is used when
    `schedule` is None. Other arguments are those of `run_bootstrap_so_pf`.
    """
    schedule = schedule or DynamicsSchedule(flavor="fast-vanishing")
    if schedule.flavor not in ("fast-vanishing", "none") and schedule.h_override is None:
        raise ScheduleError(
            "Fast adaptive dynamics need a fast-vanishing schedule",
            details={"flavor": schedule.flavor},
        )
    return _run(
        "adaptive-fast", model, schedule, space, ys, n_particles, c_ess, variant,
        seed, mu0, scheme, "resample", False, theta_star, keep_cloud,
    )


def run_adaptive_slow(
    model: "SsmModel",
    space: ParameterSpace,
    ys: np.ndarray,
    schedule: DynamicsSchedule,
    n_particles: Optional[int] = None,
    c_ess: Optional[float] = None,
    variant: Optional[str] = None,
    seed: Union[int, RngStreams] = 0,
    mu0: Optional[InitialSampler] = None,
    scheme: Optional[str] = None,
    theta_star: Optional[np.ndarray] = None,
    keep_cloud: bool = False,
) -> Union[RunRecord, Tuple[RunRecord, ParticleCloud]]:
    """
    Slow adaptive dynamics: resampling and the parameter kernel fire when
    t is an epoch time or when ESS <= N c_ESS. The kernel at epochs is the
    heavy-tailed one of the schedule (slow-vanishing and mixed flavors).

    Other arguments are those of `run_bootstrap_so_pf`.
    """
    return _run(
        "adaptive-slow", model, schedule, space, ys, n_particles, c_ess, variant,
        seed, mu0, scheme, "resample", True, theta_star, keep_cloud,
    )


def filter_mean_error(record: RunRecord, reference: np.ndarray) -> np.ndarray:
    """
    Euclidean distance between the recorded filter state means and
    reference means (for example Kalman means at the true parameter).

    Args:
        record (RunRecord): Run record with state means.
        reference (np.ndarray): Reference means, shape (len(record), d_x).

    Returns:
        np.ndarray: Error per recorded step.
    """
    means = record.state_mean_array()
    reference = np.asarray(reference, dtype=float).reshape(means.shape)
    return np.linalg.norm(means - reference, axis=1)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "GATES",
    "VARIANTS",
    "StepOutcome",
    "advance",
    "as_observations",
    "estimate_theta",
    "filter_mean_error",
    "initialize",
    "record_step",
    "run_adaptive_fast",
    "run_adaptive_slow",
    "run_bootstrap_so_pf",
    "so_pf_step",
]
