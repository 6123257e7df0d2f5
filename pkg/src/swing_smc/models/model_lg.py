# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Periodic Linear-Gaussian Model
=======================================

Hourly series with a random daily profile:

    Y_t     = sum_j (beta_j + X_{j,t}) b_j(hour(t)) + sigma_1 eps_t
    X_{t+1} = diag(rho) X_t + diag(sigma_2, ..., sigma_{p+1}) eta_t
    X_1     ~ N(0, 4 I_p)

with the natural cubic spline basis b of `model_spline` and the parameter
theta = (beta_1..p, rho_1..p, sigma_1..p+1). The model is 24-periodic and
exposes both a raw-state form (bootstrap filters) and a `LgSpec` form
(Kalman filter, Rao-Blackwellised filters).

Usage:
------
    model, spec = lg_periodic_model(p=2)
    theta_star = lg_sample_theta_star(2, rng)
    states, ys = simulate(model, theta_star, 1000, rng)
    kf_loglik(spec, theta_star, ys)

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Optional, Sequence, Tuple

# Import | Libraries
import numpy as np
from scipy import stats

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import ParameterSpace
from swing_smc.errors import ModelError
from swing_smc.kalman.kalman_filter import LgSpec, kf_loglik
from swing_smc.models.model_base import SsmModel
from swing_smc.models.model_spline import HOURS, SplineBasis, default_knots


# =============================================================================
# Class
# =============================================================================

class LgPeriodicModel(SsmModel):
    """
    Periodic Linear-Gaussian Model Class
    ====================================

    Attributes:
        basis (SplineBasis): Daily profile basis.
        p (int): Number of basis functions (state dimension).
        initial_variance (float): Variance of each coordinate of X_1.
    """

    name = "lg-periodic"
    period = HOURS
    d_y = 1

    def __init__(
        self,
        p: int = 2,
        knots: Optional[Sequence[float]] = None,
        initial_variance: Optional[float] = None,
    ) -> None:
        self.basis = SplineBasis(default_knots(p) if knots is None else knots)
        if self.basis.p != p:
            raise ModelError(
                f"{len(self.basis.knots)} knots give {self.basis.p} basis functions, expected {p}",
            )
        self.p = p
        self.d_x = p
        self.initial_variance = float(
            initial_variance if initial_variance is not None
            else get_smc_config("models", "lg_initial_variance")
        )
        self.spec = self._build_spec()

    @property
    def d(self) -> int:
        return 3 * self.p + 1

    def unpack(self, theta: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Split parameter rows into (beta, rho, sigma); negative scales are rejected."""
        theta = self.check_theta(theta, self.d)
        p = self.p
        beta, rho, sigma = theta[:, :p], theta[:, p:2 * p], theta[:, 2 * p:]
        if np.any(sigma < 0.0):
            raise ModelError("Scale parameters sigma must be nonnegative", details={"model": self.name})
        return beta, rho, sigma

    # -------------------------------------------------------------------------
    # Raw-state form
    # -------------------------------------------------------------------------

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        n = np.atleast_2d(theta).shape[0]
        return np.sqrt(self.initial_variance) * rng.standard_normal((n, self.p))

    def sample_transition(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        _, rho, sigma = self.unpack(theta)
        return rho * state + sigma[:, 1:] * rng.standard_normal(state.shape)

    def _obs_mean(self, t: int, state: np.ndarray, beta: np.ndarray) -> np.ndarray:
        return (beta + state) @ self.basis.row(t)

    def obs_logdensity(
        self, t: int, y: np.ndarray, state: np.ndarray, theta: np.ndarray,
    ) -> np.ndarray:
        beta, _, sigma = self.unpack(theta)
        scale = sigma[:, 0]
        mean = self._obs_mean(t, state, beta)
        out = np.full(mean.shape, -np.inf)
        ok = scale > 0.0
        out[ok] = stats.norm.logpdf(float(np.ravel(y)[0]), loc=mean[ok], scale=scale[ok])
        return out

    def sample_observation(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        beta, _, sigma = self.unpack(theta)
        mean = self._obs_mean(t, state, beta)
        return (mean + sigma[:, 0] * rng.standard_normal(mean.shape))[:, None]

    def exact_loglik(self, theta: np.ndarray, ys: np.ndarray) -> float:
        return kf_loglik(self.spec, theta, ys)

    # -------------------------------------------------------------------------
    # Linear-Gaussian form
    # -------------------------------------------------------------------------

    def _build_spec(self) -> LgSpec:
        p = self.p
        eye = np.eye(p)

        def observation(s: int, theta: np.ndarray):
            beta, _, sigma = self.unpack(theta)
            row = self.basis.row(s)
            n = beta.shape[0]
            m = (beta @ row)[:, None]
            A = np.broadcast_to(row, (n, 1, p)).copy()
            B = (sigma[:, 0] ** 2)[:, None, None]
            return m, A, B

        def transition(s: int, theta: np.ndarray):
            _, rho, sigma = self.unpack(theta)
            C = rho[:, :, None] * eye[None, :, :]
            D = (sigma[:, 1:] ** 2)[:, :, None] * eye[None, :, :]
            return C, D

        def initial(theta: np.ndarray):
            n = np.atleast_2d(theta).shape[0]
            return np.zeros((n, p)), np.broadcast_to(self.initial_variance * eye, (n, p, p)).copy()

        return LgSpec(d_x=p, d_y=1, observation=observation, transition=transition,
                      initial=initial, period=self.period)

    def default_space(self) -> ParameterSpace:
        """Box [-10, 10]^p x [-1, 1]^p x [0, 4]^(p+1)."""
        return lg_default_space(self.p)


# =============================================================================
# Functions
# =============================================================================

def lg_periodic_model(
    p: int = 2,
    knots: Optional[Sequence[float]] = None,
) -> Tuple[LgPeriodicModel, LgSpec]:
    """
    Periodic linear-Gaussian model in raw-state and Kalman forms.

    Args:
        p (int): Number of spline basis functions.
        knots (Optional[Sequence[float]]): Knots from 0 to 24; evenly
            spaced when None.

    Returns:
        Tuple[LgPeriodicModel, LgSpec]: The model and its linear-Gaussian
        specification.
    """
    model = LgPeriodicModel(p=p, knots=knots)
    return model, model.spec


def lg_default_space(p: int) -> ParameterSpace:
    lower = np.concatenate([np.full(p, -10.0), np.full(p, -1.0), np.zeros(p + 1)])
    upper = np.concatenate([np.full(p, 10.0), np.full(p, 1.0), np.full(p + 1, 4.0)])
    return ParameterSpace.from_box(lower, upper)


def lg_sample_theta_star(p: int, rng: np.random.Generator) -> np.ndarray:
    """
    Ground truth of the synthetic experiments: beta ~ U[-2, 2]^p,
    rho ~ U[-1, 1]^p and sigma = (0.5, 1, ..., 1).
    """
    beta = rng.uniform(-2.0, 2.0, size=p)
    rho = rng.uniform(-1.0, 1.0, size=p)
    sigma = np.concatenate([[0.5], np.ones(p)])
    return np.concatenate([beta, rho, sigma])


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "LgPeriodicModel",
    "lg_default_space",
    "lg_periodic_model",
    "lg_sample_theta_star",
]
