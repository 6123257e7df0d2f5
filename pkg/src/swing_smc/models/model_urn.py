# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Bernoulli-Laplace Urn Model
====================================

Two urns hold j and k balls, r of them red (r < j + k). At every step one
ball is drawn from each urn and the two are swapped. W_t, the number of red
balls in urn 2, is a Markov chain on S = {max(0, r - j), ..., min(k, r)}
started from W_1 = 0 with the tri-diagonal kernel of `urn_transition`.

Maximum likelihood on an observed path w_1..w_{T+1} is cast as a
degenerate state-space model without state whose observations are the
pairs (w_t, w_{t+1}) and whose log-density is log p_theta(w_{t+1} | w_t).

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
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import ParameterSpace
from swing_smc.errors import ModelError
from swing_smc.mle.mle_dataset import ClonedDataset
from swing_smc.models.model_base import SsmModel


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def _split(theta: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    if theta.shape[1] != 3:
        raise ModelError("Urn parameters are (j, k, r)", details={"shape": list(theta.shape)})
    return theta[:, 0], theta[:, 1], theta[:, 2]


def urn_support(theta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Bounds (min S, max S) of the chain support per parameter row."""
    j, k, r = _split(theta)
    return np.maximum(0.0, r - j), np.minimum(k, r)


def urn_transition(
    theta: np.ndarray,
    w1: Union[int, np.ndarray],
    w2: Union[int, np.ndarray],
) -> Union[float, np.ndarray]:
    """
    Transition probability p_theta(w2 | w1).

    Args:
        theta (np.ndarray): (j, k, r) or rows of it.
        w1, w2: Current and next number of red balls in urn 2; scalars or
            arrays broadcasting against the parameter rows.

    Returns:
        Union[float, np.ndarray]: A float for a single parameter and scalar
        states, an array otherwise.
    """
    scalar = np.ndim(theta) == 1 and np.ndim(w1) == 0 and np.ndim(w2) == 0
    j, k, r = _split(theta)
    w1 = np.asarray(w1, dtype=float)
    w2 = np.asarray(w2, dtype=float)
    lo, hi = np.maximum(0.0, r - j), np.minimum(k, r)
    jk = j * k
    down = (j - r + w1) * w1 / jk
    stay = ((r - w1) * w1 + (j - r + w1) * (k - w1)) / jk
    up = (r - w1) * (k - w1) / jk
    step = w2 - w1
    p = np.where(step == -1, down, np.where(step == 0, stay, np.where(step == 1, up, 0.0)))
    p = np.where((w1 >= lo) & (w1 <= hi) & (w1 == np.round(w1)), p, 0.0)
    return float(p[0]) if scalar else p


def urn_simulate(theta: np.ndarray, T: int, rng: np.random.Generator) -> np.ndarray:
    """
    Path w_1..w_{T+1} of the chain started from W_1 = 0.

    Args:
        theta (np.ndarray): (j, k, r) with r <= j.
        T (int): Number of transitions.
        rng (np.random.Generator): Random stream.

    Returns:
        np.ndarray: Integer path of length T + 1.
    """
    j, k, r = (int(v) for v in np.asarray(theta).reshape(-1))
    if min(j, k) < 1 or r < 0 or r >= j + k:
        raise ModelError("Urn parameters need j, k >= 1 and 0 <= r < j + k", details={"theta": [j, k, r]})
    if r > j:
        raise ModelError("All red balls start in urn 1, so r <= j", details={"theta": [j, k, r]})
    path = np.zeros(T + 1, dtype=np.int64)
    u = rng.random(T)
    for t in range(T):
        w = path[t]
        probs = [urn_transition(np.array([j, k, r], float), w, w + step) for step in (-1, 0)]
        if u[t] < probs[0]:
            path[t + 1] = w - 1
        elif u[t] < probs[0] + probs[1]:
            path[t + 1] = w
        else:
            path[t + 1] = w + 1
    return path


def urn_loglik(theta: np.ndarray, w: np.ndarray) -> np.ndarray:
    """
    sum_t log p_theta(w_{t+1} | w_t) per parameter row; -inf where some
    transition is impossible.
    """
    w = np.asarray(w, dtype=float).reshape(-1)
    rows = np.atleast_2d(np.asarray(theta, dtype=float))
    total = np.zeros(rows.shape[0])
    pairs, counts = np.unique(np.column_stack([w[:-1], w[1:]]), axis=0, return_counts=True)
    with np.errstate(divide="ignore"):
        for (w1, w2), n in zip(pairs, counts):
            total += n * np.log(urn_transition(rows, w1, w2))
    return total


def urn_parameter_space(w: np.ndarray, bound: Optional[int] = None) -> ParameterSpace:
    """
    Discrete space of (j, k, r) in {1..bound}^3 with r < j + k, r >= v and
    k >= v, where v is the largest observed value.

    Args:
        w (np.ndarray): Observed path.
        bound (Optional[int]): Largest coordinate; the `models.urn_bound`
            setting when None.

    Returns:
        ParameterSpace: Discrete-only space with bounds (1, bound).
    """
    bound = int(bound if bound is not None else get_smc_config("models", "urn_bound"))
    v = int(np.max(w))
    if bound < max(1, v):
        raise ModelError("Urn bound is below the largest observation", details={"bound": bound, "v": v})
    grid = np.arange(1, bound + 1)
    k, r = np.meshgrid(grid, grid, indexing="ij")
    k, r = k.ravel(), r.ravel()
    keep = (r >= v) & (k >= v)
    k, r = k[keep], r[keep]
    blocks = []
    for j in grid:
        ok = r < j + k
        blocks.append(np.column_stack([np.full(ok.sum(), j), k[ok], r[ok]]))
    points = np.vstack(blocks)
    logger.debug("Urn parameter space: %d points (bound=%d, v=%d)", points.shape[0], bound, v)
    return ParameterSpace.from_discrete(points, lower=1, upper=bound)


def urn_grid_mle(w: np.ndarray, space: ParameterSpace) -> np.ndarray:
    """
    Exhaustive maximizer of the path log-likelihood over the points of a
    discrete space; ties go to the lexicographically smallest point.
    """
    points = space.discrete_set
    scores = urn_loglik(points, w)
    return points[int(np.argmax(scores))].astype(float)


# =============================================================================
# Class
# =============================================================================

class UrnPairModel(SsmModel):
    """
    Urn Pair Model Class
    ====================

    State-free model over observation pairs (w_t, w_{t+1}).
    """

    name = "urn"
    d_x = 0
    d_y = 2

    def __init__(self, period: int = 1) -> None:
        self.period = int(period)

    def sample_initial(self, theta: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return np.zeros((np.atleast_2d(theta).shape[0], 0))

    def sample_transition(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        return state

    def obs_logdensity(
        self, t: int, y: np.ndarray, state: np.ndarray, theta: np.ndarray,
    ) -> np.ndarray:
        y = np.ravel(y)
        with np.errstate(divide="ignore"):
            return np.log(urn_transition(np.atleast_2d(theta), y[0], y[1]))

    def sample_observation(
        self, t: int, state: np.ndarray, theta: np.ndarray, rng: np.random.Generator,
    ) -> np.ndarray:
        raise ModelError("Urn pairs are built from an observed path; use urn_simulate")


def urn_as_cloned_ssm(w: np.ndarray) -> Tuple[ClonedDataset, UrnPairModel]:
    """
    Cloned data of pairs (w_t, w_{t+1}), t = 1..T, and the matching model.
    """
    w = np.asarray(w, dtype=float).reshape(-1)
    if w.size < 2:
        raise ModelError("An urn path needs at least two values")
    data = ClonedDataset(np.column_stack([w[:-1], w[1:]]))
    return data, UrnPairModel(period=data.T)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "UrnPairModel",
    "urn_as_cloned_ssm",
    "urn_grid_mle",
    "urn_loglik",
    "urn_parameter_space",
    "urn_simulate",
    "urn_support",
    "urn_transition",
]
