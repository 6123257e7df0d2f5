# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides SEIRD Dirichlet-Beta Model
===================================

Epidemic model on population fractions w = (s, e, i, r, d) with a
time-varying transmission rate beta_t and infectious fraction q_t:

    X'_t          ~ Dirichlet(F(X'_{t-1}, beta_{t-1}, q_{t-1}) / kappa)
    log q_t       ~ N(log q_{t-1}, sigma_q^2)
    log beta_t    ~ N(log beta_{t-1}, sigma_beta^2)
    Y_{1,t}       ~ Beta(eta E_t / lambda_1, (1 - eta E_t) / lambda_1)
    Y_{2,t}       ~ Beta(mu I_t / lambda_2, (1 - mu I_t) / lambda_2)

with F the Euler step of the SEIRD equations and
theta = (eta, gamma, mu, sigma_q, sigma_beta, kappa, lambda_1, lambda_2).
The step into t = 1 starts from X'_0 = (1 - I_0 - E_0, E_0, I_0, 0, 0),
I_0, E_0 ~ U[0, 1e-4], q_0 ~ U[0.5, 1], beta_0 ~ U[0, 0.5].

A particle state row is (s, e, i, r, d, beta, q). Invalid Dirichlet or Beta
parameters give a -inf log-density.

Observations are daily counts divided by the population size; the division
is a data transform of the harness. A fraction at or below half a person
(`0.5 / population`) is a zero count: it is scored with the Beta mass
below that threshold, and symmetrically near 1. A zero shape parameter is
the point mass its Beta limit describes.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Optional, Tuple, Union

# Import | Libraries
import numpy as np
from scipy.special import betainc, betaln

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import ParameterSpace
from swing_smc.errors import ModelError
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

COMPARTMENTS = ("s", "e", "i", "r", "d")
STATE_COLUMNS = COMPARTMENTS + ("beta", "q")
PARAMETERS = ("eta", "gamma", "mu", "sigma_q", "sigma_beta", "kappa", "lambda_1", "lambda_2")


# =============================================================================
# Functions
# =============================================================================

def seird_map(
    w: np.ndarray,
    beta: Union[float, np.ndarray],
    q: Union[float, np.ndarray],
    eta: Union[float, np.ndarray],
    gamma: Union[float, np.ndarray],
    mu: Union[float, np.ndarray],
) -> np.ndarray:
    """
    Euler step F of the SEIRD equations.

    Args:
        w (np.ndarray): Compartments (s, e, i, r, d), shape (5,) or (n, 5).
        beta, q, eta, gamma, mu: Rates, scalars or length-n arrays.

    Returns:
        np.ndarray: F(w), same shape as `w`; its components sum to sum(w).
    """
    w = np.asarray(w, dtype=float)
    s, e, i, r, d = (w[..., k] for k in range(5))
    infection = beta * s * (e + q * i)
    return np.stack(
        [
            s - infection,
            e + infection - eta * e - gamma * e,
            i + eta * e - gamma * i - mu * i,
            r + gamma * e + gamma * i,
            d + mu * i,
        ],
        axis=-1,
    )


def sample_dirichlet(alpha: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Row-wise Dirichlet draws through normalized Gamma variables.

    Zero concentrations give zero components; rows with a negative or
    non-finite concentration come back as NaN.
    """
    alpha = np.asarray(alpha, dtype=float)
    invalid = ~np.all(np.isfinite(alpha) & (alpha >= 0.0), axis=1)
    safe = np.where(invalid[:, None], 1.0, alpha)
    g = rng.gamma(safe)
    total = g.sum(axis=1, keepdims=True)
    invalid |= ~(total[:, 0] > 0.0)
    out = g / np.where(total > 0.0, total, 1.0)
    out[invalid] = np.nan
    return out


def beta_logpdf(y: float, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Beta(a, b) log-density at y, -inf outside (0, 1) or for a, b <= 0.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.full(np.broadcast(a, b).shape, -np.inf)
    if not 0.0 < y < 1.0:
        return out
    ok = (a > 0.0) & (b > 0.0) & np.isfinite(a) & np.isfinite(b)
    out[ok] = (a[ok] - 1.0) * np.log(y) + (b[ok] - 1.0) * np.log1p(-y) - betaln(a[ok], b[ok])
    return out


def _lower_tail_logmass(a: np.ndarray, b: np.ndarray, threshold: float) -> np.ndarray:
    # log P(Y <= threshold); a == 0 is the point mass at 0
    out = np.full(a.shape, -np.inf)
    out[(a == 0.0) & (b > 0.0) & np.isfinite(b)] = 0.0
    ok = (a > 0.0) & (b > 0.0) & np.isfinite(a) & np.isfinite(b)
    with np.errstate(divide="ignore"):
        out[ok] = np.log(betainc(a[ok], b[ok], threshold))
    return out


def beta_obs_logdensity(y: float, a: np.ndarray, b: np.ndarray, threshold: float) -> np.ndarray:
    """
    Log-likelihood of an observed fraction under Beta(a, b), censored at
    `threshold` on both ends.

    Args:
        y (float): Observed fraction.
        a (np.ndarray): First shape per particle; 0 is the point mass at 0.
        b (np.ndarray): Second shape per particle; 0 is the point mass at 1.
        threshold (float): Values at or below it (or at or above
            1 - threshold) are scored by the tail mass.

    Returns:
        np.ndarray: Log-likelihood per particle, -inf for invalid shapes.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a, b = np.broadcast_arrays(a, b)
    if y <= threshold:
        return _lower_tail_logmass(a, b, threshold)
    if y >= 1.0 - threshold:
        return _lower_tail_logmass(b, a, threshold)
    return beta_logpdf(y, a, b)


def effective_reproduction(theta: np.ndarray, state: np.ndarray) -> Union[float, np.ndarray]:
    """
    Effective reproduction number beta S (1 + q eta / (gamma + mu)) / (gamma + eta).

    Args:
        theta (np.ndarray): Parameter vector (8,).
        state (np.ndarray): State row (7,) or rows (n, 7).

    Returns:
        Union[float, np.ndarray]: Value per state row.
    """
    theta = np.asarray(theta, dtype=float).reshape(-1)
    eta, gamma, mu = theta[0], theta[1], theta[2]
    if gamma + mu <= 0.0 or gamma + eta <= 0.0:
        raise ModelError(
            "Reproduction number needs gamma + mu > 0 and gamma + eta > 0",
            details={"eta": eta, "gamma": gamma, "mu": mu},
        )
    state = np.asarray(state, dtype=float)
    s, beta, q = state[..., 0], state[..., 5], state[..., 6]
    value = beta * s * (1.0 + q * eta / (gamma + mu)) / (gamma + eta)
    return float(value) if np.ndim(value) == 0 else value


def seird_reproduction_series(theta: np.ndarray, record) -> np.ndarray:
    """Reproduction number along the filtered state means of a run record."""
    return np.asarray(effective_reproduction(theta, record.state_mean_array()), dtype=float)


def seird_default_space() -> ParameterSpace:
    """
    Box [0, 0.5]^5 x [1e-7, 1e-4]^3; eta <= 0.5 keeps eta <= 1 - gamma for
    every gamma in [0, 0.5].
    """
    return ParameterSpace.from_box(
        [0.0] * 5 + [1e-7] * 3,
        [0.5] * 5 + [1e-4] * 3,
    )


# =============================================================================
# Class
# =============================================================================

class SeirdModel(SsmModel):
    """
    SEIRD Dirichlet-Beta Model Class
    ================================

    Daily model with state rows (s, e, i, r, d, beta, q) and two
    observation columns (new symptomatic cases, new deaths), both as
    population fractions.
    """

    name = "seird"
    d_x = 7
    d_y = 2
    d = 8

    def __init__(self, population: Optional[float] = None) -> None:
        population = float(population or get_smc_config("models", "seird_population"))
        if population <= 0.0:
            raise ModelError("SEIRD population must be positive", details={"population": population})
        self.population = population
        self.zero_threshold = 0.5 / population

    def unpack(self, theta: np.ndarray) -> Tuple[np.ndarray, ...]:
        theta = self.check_theta(theta, self.d)
        return tuple(theta[:, k] for k in range(self.d))

    def _step(self, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        eta, gamma, mu, sigma_q, sigma_beta, kappa, _, _ = self.unpack(theta)
        n = state.shape[0]
        w, beta, q = state[:, :5], state[:, 5], state[:, 6]
        concentration = seird_map(w, beta, q, eta, gamma, mu) / kappa[:, None]
        out = np.empty_like(state)
        out[:, :5] = sample_dirichlet(concentration, rng)
        out[:, 5] = beta * np.exp(sigma_beta * rng.standard_normal(n))
        out[:, 6] = q * np.exp(sigma_q * rng.standard_normal(n))
        return out

    def initial_compartments(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Draws of (X'_0, beta_0, q_0), shape (n, 7)."""
        i0 = rng.uniform(0.0, 1e-4, size=n)
        e0 = rng.uniform(0.0, 1e-4, size=n)
        q0 = rng.uniform(0.5, 1.0, size=n)
        beta0 = rng.uniform(0.0, 0.5, size=n)
        zeros = np.zeros(n)
        return np.column_stack([1.0 - i0 - e0, e0, i0, zeros, zeros, beta0, q0])

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        theta = self.check_theta(theta, self.d)
        state0 = self.initial_compartments(theta.shape[0], rng)
        return self._step(state0, theta, rng)

    def sample_transition(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        return self._step(state, theta, rng)

    def _beta_parameters(self, state: np.ndarray, theta: np.ndarray) -> Tuple[np.ndarray, ...]:
        eta, _, mu, _, _, _, lambda_1, lambda_2 = self.unpack(theta)
        symptomatic = eta * state[:, 1]
        deaths = mu * state[:, 2]
        return (
            symptomatic / lambda_1, (1.0 - symptomatic) / lambda_1,
            deaths / lambda_2, (1.0 - deaths) / lambda_2,
        )

    def obs_logdensity(
        self, t: int, y: np.ndarray, state: np.ndarray, theta: np.ndarray,
    ) -> np.ndarray:
        y = np.ravel(y)
        a1, b1, a2, b2 = self._beta_parameters(state, theta)
        # NaN rows from invalid Dirichlet draws fail the shape tests
        return (
            beta_obs_logdensity(float(y[0]), a1, b1, self.zero_threshold)
            + beta_obs_logdensity(float(y[1]), a2, b2, self.zero_threshold)
        )

    def sample_observation(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        a1, b1, a2, b2 = self._beta_parameters(state, theta)
        out = np.zeros((state.shape[0], 2))
        for col, (a, b) in enumerate(((a1, b1), (a2, b2))):
            ok = (a > 0.0) & (b > 0.0)
            out[ok, col] = rng.beta(a[ok], b[ok])
            out[~ok & (b <= 0.0), col] = 1.0
        return out

    def state_summary(self, state: np.ndarray, W: np.ndarray) -> np.ndarray:
        valid = np.all(np.isfinite(state), axis=1)
        if not valid.any():
            return np.full(self.d_x, np.nan)
        w = np.where(valid, W, 0.0)
        return (w / w.sum()) @ np.where(valid[:, None], state, 0.0)


def seird_model(population: Optional[float] = None) -> SeirdModel:
    return SeirdModel(population)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "COMPARTMENTS",
    "PARAMETERS",
    "STATE_COLUMNS",
    "SeirdModel",
    "beta_logpdf",
    "beta_obs_logdensity",
    "effective_reproduction",
    "sample_dirichlet",
    "seird_default_space",
    "seird_map",
    "seird_model",
    "seird_reproduction_series",
]
