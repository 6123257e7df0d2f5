# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Kalman Filter Functions
================================

Exact filtering for periodic linear-Gaussian models

    Y_t | X_t = x      ~ N(m_t(theta) + A_t(theta) x, B_t(theta))
    X_t | X_{t-1} = x  ~ N(C_t(theta) x, D_t(theta))
    X_1                ~ N(mu(theta), Sigma(theta))

vectorised over a batch of parameter values. C_t and D_t index the
transition into time t; the first step has no prediction.

Covariances are updated in Joseph form and symmetrized after every step.

Usage:
------
    state = spec.initial_state(theta)
    for t, y in enumerate(ys, start=1):
        state, loglik = kf_step(state, spec, theta, t, y)

    kf_loglik(spec, theta, ys)

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from dataclasses import dataclass
from typing import Callable, Tuple, Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.errors import KalmanError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Class
# =============================================================================

LOG_2PI = float(np.log(2.0 * np.pi))


@dataclass
class KalmanState:
    """
    Kalman State Class
    ==================

    Gaussian sufficient statistics of a batch of filters.

    Attributes:
        mean (np.ndarray): Means, shape (N, d_x).
        cov (np.ndarray): Covariances, shape (N, d_x, d_x).
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self) -> None:
        self.mean = np.asarray(self.mean, dtype=float)
        self.cov = np.asarray(self.cov, dtype=float)
        if self.mean.ndim == 1:
            self.mean = self.mean[None, :]
        if self.cov.ndim == 2:
            self.cov = self.cov[None, :, :]

    def __getitem__(self, idx) -> "KalmanState":
        return KalmanState(self.mean[idx], self.cov[idx])

    def __len__(self) -> int:
        return int(self.mean.shape[0])

    def is_valid(self, tol: float = 1e-10) -> bool:
        """Symmetric and numerically positive semi-definite covariances."""
        symmetric = np.allclose(self.cov, np.swapaxes(self.cov, 1, 2), atol=tol)
        return bool(symmetric and np.linalg.eigvalsh(self.cov).min() >= -tol)


@dataclass
class LgSpec:
    """
    Linear-Gaussian Specification Class
    ===================================

    Time-varying maps of a periodic linear-Gaussian model. Every callable
    receives parameter rows of shape (N, d) and returns batched arrays.

    Attributes:
        d_x (int): State dimension.
        d_y (int): Observation dimension.
        observation (Callable): (t, theta) -> (m (N, d_y), A (N, d_y, d_x),
            B (N, d_y, d_y)).
        transition (Callable): (t, theta) -> (C (N, d_x, d_x),
            D (N, d_x, d_x)), the move into time t.
        initial (Callable): theta -> (mean (N, d_x), cov (N, d_x, d_x)).
        period (int): Period of the maps.
    """

    d_x: int
    d_y: int
    observation: Callable
    transition: Callable
    initial: Callable
    period: int = 1

    def local_time(self, t: int) -> int:
        return int(t - self.period * ((t - 1) // self.period))

    def initial_state(self, theta: np.ndarray) -> KalmanState:
        mean, cov = self.initial(np.atleast_2d(theta))
        return KalmanState(mean, cov)


# =============================================================================
# Functions
# =============================================================================

def _symmetrize(cov: np.ndarray) -> np.ndarray:
    return 0.5 * (cov + np.swapaxes(cov, 1, 2))


def kf_predict(state: KalmanState, spec: LgSpec, theta: np.ndarray, t: int) -> KalmanState:
    """Prediction X_t | Y_{1:t-1} from the filter at t - 1."""
    C, D = spec.transition(spec.local_time(t), np.atleast_2d(theta))
    mean = np.einsum("nij,nj->ni", C, state.mean)
    cov = np.einsum("nij,njk,nlk->nil", C, state.cov, C) + D
    return KalmanState(mean, _symmetrize(cov))


def kf_update(
    state: KalmanState,
    spec: LgSpec,
    theta: np.ndarray,
    t: int,
    y: np.ndarray,
) -> Tuple[KalmanState, np.ndarray, np.ndarray]:
    """
    Update of a predicted state with the observation of time t.

    Args:
        state (KalmanState): Predicted state.
        spec (LgSpec): Model maps.
        theta (np.ndarray): Parameter rows (N, d).
        t (int): Time index.
        y (np.ndarray): Observation, shape (d_y,).

    Returns:
        Tuple[KalmanState, np.ndarray, np.ndarray]: Filtered state, log
        predictive densities (N,) and a mask of rows whose innovation
        covariance is not positive definite (their density is -inf and
        their state is the prediction).
    """
    m, A, B = spec.observation(spec.local_time(t), np.atleast_2d(theta))
    y = np.asarray(y, dtype=float).reshape(-1)
    N, d_x = state.mean.shape

    P = state.cov
    S = _symmetrize(np.einsum("nij,njk,nlk->nil", A, P, A) + B)
    bad = np.linalg.eigvalsh(S).min(axis=1) <= 0.0
    if bad.any():
        S = S.copy()
        S[bad] = np.eye(spec.d_y)

    innovation = y[None, :] - m - np.einsum("nij,nj->ni", A, state.mean)
    # S^-1 A P, transposed into the gain P A' S^-1
    gain = np.swapaxes(np.linalg.solve(S, np.einsum("nij,njk->nik", A, P)), 1, 2)
    mean = state.mean + np.einsum("nij,nj->ni", gain, innovation)
    I_KA = np.eye(d_x)[None, :, :] - np.einsum("nij,njk->nik", gain, A)
    cov = (
        np.einsum("nij,njk,nlk->nil", I_KA, P, I_KA)
        + np.einsum("nij,njk,nlk->nil", gain, B, gain)
    )

    _, logdet = np.linalg.slogdet(S)
    quad = np.einsum("ni,ni->n", innovation, np.linalg.solve(S, innovation[:, :, None])[:, :, 0])
    loglik = -0.5 * (spec.d_y * LOG_2PI + logdet + quad)
    loglik[bad] = -np.inf
    mean[bad] = state.mean[bad]
    cov[bad] = P[bad]
    return KalmanState(mean, _symmetrize(cov)), loglik, bad


def kf_step(
    state: KalmanState,
    spec: LgSpec,
    theta: np.ndarray,
    t: int,
    y: np.ndarray,
) -> Tuple[KalmanState, Union[float, np.ndarray]]:
    """
    One Kalman recursion: predict into t (skipped at t = 1), then update.

    Args:
        state (KalmanState): Filter at t - 1 (the prior of X_1 at t = 1).
        spec (LgSpec): Model maps.
        theta (np.ndarray): One parameter (d,) or rows (N, d).
        t (int): Time index, at least 1.
        y (np.ndarray): Observation of time t.

    Returns:
        Tuple[KalmanState, Union[float, np.ndarray]]: Filter at t and the
        log predictive density of y (a float for a single parameter).
    """
    single = np.ndim(theta) == 1
    if t > 1:
        state = kf_predict(state, spec, theta, t)
    state, loglik, bad = kf_update(state, spec, theta, t, y)
    if bad.any():
        raise KalmanError(t, message="innovation covariance is not positive definite")
    return state, (float(loglik[0]) if single else loglik)


def kf_filter(
    spec: LgSpec,
    theta: np.ndarray,
    ys: np.ndarray,
) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Full pass of the filter at one parameter value.

    Returns:
        Tuple[float, np.ndarray, np.ndarray]: Log-likelihood, filtered means
        (T, d_x) and filtered covariances (T, d_x, d_x).
    """
    ys = np.asarray(ys, dtype=float)
    if ys.ndim == 1:
        ys = ys.reshape(-1, 1)
    theta = np.atleast_2d(np.asarray(theta, dtype=float))[:1]
    T = ys.shape[0]
    means = np.zeros((T, spec.d_x))
    covs = np.zeros((T, spec.d_x, spec.d_x))
    total = 0.0
    state = spec.initial_state(theta)
    for t in range(1, T + 1):
        state, loglik = kf_step(state, spec, theta[0], t, ys[t - 1])
        total += loglik
        means[t - 1] = state.mean[0]
        covs[t - 1] = state.cov[0]
    return total, means, covs


def kf_loglik(spec: LgSpec, theta: np.ndarray, ys: np.ndarray) -> float:
    """
    Exact log-likelihood log L_T(theta), the sum of the kf_step
    increments; zero for an empty sequence.
    """
    return kf_filter(spec, theta, ys)[0]


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "KalmanState",
    "LgSpec",
    "kf_filter",
    "kf_loglik",
    "kf_predict",
    "kf_step",
    "kf_update",
]
