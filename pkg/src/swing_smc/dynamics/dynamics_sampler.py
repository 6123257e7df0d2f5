# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Truncated Samplers
===========================

Samplers for the kernels acting on parameter particles: the Gaussian and
the Student-t distributions truncated to the parameter box, and the
signed-Binomial walk restricted to the discrete set.

All samplers accept a single center (shape (d,)) or one center per
particle (shape (n, d)) and return the same shape. A zero scale (or a zero
move probability) returns the centers unchanged.

Diagonal scale matrices use exact coordinatewise inverse-CDF sampling;
other matrices and the Student-t use vectorised rejection against the box,
bounded by the `dynamics.rejection_cap` setting.

Links:
------
- https://docs.scipy.org/doc/scipy/reference/generated/scipy.stats.truncnorm.html

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Callable, Optional, Sequence, Tuple

# Import | Libraries
import numpy as np
from scipy import stats

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.dynamics.dynamics_schedule import validate_scale_matrix
from swing_smc.dynamics.dynamics_space import ParameterSpace
from swing_smc.errors import ParameterSpaceError, RejectionCapError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Functions
# =============================================================================

def _as_rows(center: np.ndarray, width: int) -> Tuple[np.ndarray, bool]:
    arr = np.array(center, dtype=float)
    single = arr.ndim <= 1
    return arr.reshape(-1, width), single


def _check_in_box(rows: np.ndarray, space: ParameterSpace) -> None:
    inside = np.all((rows >= space.lower) & (rows <= space.upper), axis=1)
    if not inside.all():
        bad = int(np.flatnonzero(~inside)[0])
        raise ParameterSpaceError(
            "Kernel center lies outside the parameter box",
            details={"row": bad, "center": rows[bad].tolist()},
        )


def rejection_loop(
    n: int,
    propose: Callable[[np.ndarray], np.ndarray],
    accept: Callable[[np.ndarray], np.ndarray],
    sampler: str,
    width: int,
    dtype: type = float,
    cap: Optional[int] = None,
) -> np.ndarray:
    """
    Vectorised rejection sampling over `n` independent rows.

    Args:
        n (int): Number of rows to fill.
        propose (Callable): Maps the pending row indices to candidates of
            shape (len(pending), width).
        accept (Callable): Maps candidates to a boolean acceptance mask.
        sampler (str): Name used in warnings and errors.
        width (int): Row width.
        dtype (type): Output dtype.
        cap (Optional[int]): Maximum number of rounds; the
            `dynamics.rejection_cap` setting when None.

    Returns:
        np.ndarray: Accepted rows, shape (n, width).
    """
    cap = int(cap if cap is not None else get_smc_config("dynamics", "rejection_cap"))
    warn_after = int(get_smc_config("dynamics", "rejection_warn"))
    out = np.empty((n, width), dtype=dtype)
    pending = np.arange(n)
    rounds = 0
    while pending.size:
        if rounds >= cap:
            raise RejectionCapError(sampler, rounds, int(pending.size))
        rounds += 1
        candidates = propose(pending)
        ok = accept(candidates)
        out[pending[ok]] = candidates[ok]
        pending = pending[~ok]
        if rounds == warn_after and pending.size:
            logger.warning(
                "%s: %d rows still pending after %d rounds",
                sampler, pending.size, rounds,
            )
    return out


def sample_truncated_normal(
    center: np.ndarray,
    h: float,
    sigma: np.ndarray,
    space: ParameterSpace,
    rng: np.random.Generator,
    cap: Optional[int] = None,
) -> np.ndarray:
    """
    Gaussian N(center, h^2 sigma) conditioned on the parameter box.

    Args:
        center (np.ndarray): Continuous coordinates, (d1,) or (n, d1).
        h (float): Nonnegative scale.
        sigma (np.ndarray): Symmetric positive definite (d1, d1) matrix.
        space (ParameterSpace): Space providing the box.
        rng (np.random.Generator): Random stream.
        cap (Optional[int]): Rejection round cap for non-diagonal sigma.

    Returns:
        np.ndarray: Draws with the shape of `center`.
    """
    rows, single = _as_rows(center, space.d1)
    _check_in_box(rows, space)
    sigma = validate_scale_matrix(sigma)
    if h < 0.0:
        raise ParameterSpaceError("Kernel scale must be nonnegative", details={"h": h})
    if h == 0.0 or rows.shape[0] == 0:
        return rows[0].copy() if single else rows.copy()

    if np.count_nonzero(sigma - np.diag(np.diag(sigma))) == 0:
        scale = h * np.sqrt(np.diag(sigma))
        lo = (space.lower - rows) / scale
        hi = (space.upper - rows) / scale
        draws = stats.truncnorm.rvs(
            lo, hi, loc=rows, scale=scale, size=rows.shape, random_state=rng,
        )
        draws = np.clip(draws, space.lower, space.upper)
    else:
        chol = np.linalg.cholesky(sigma)

        def propose(pending: np.ndarray) -> np.ndarray:
            z = rng.standard_normal((pending.size, space.d1))
            return rows[pending] + h * z @ chol.T

        def accept(candidates: np.ndarray) -> np.ndarray:
            return np.all((candidates >= space.lower) & (candidates <= space.upper), axis=1)

        draws = rejection_loop(rows.shape[0], propose, accept, "truncated-normal", space.d1, cap=cap)
    return draws[0] if single else draws


def sample_truncated_student(
    center: np.ndarray,
    h: float,
    sigma: np.ndarray,
    nu: float,
    space: ParameterSpace,
    rng: np.random.Generator,
    cap: Optional[int] = None,
) -> np.ndarray:
    """
    Multivariate Student-t(nu) with location `center` and scale matrix
    h^2 sigma, conditioned on the parameter box.

    The t draw is a Gaussian draw divided by sqrt(W / nu), W ~ chi2(nu),
    one W per row.

    Args:
        center (np.ndarray): Continuous coordinates, (d1,) or (n, d1).
        h (float): Nonnegative scale.
        sigma (np.ndarray): Symmetric positive definite (d1, d1) matrix.
        nu (float): Degrees of freedom.
        space (ParameterSpace): Space providing the box.
        rng (np.random.Generator): Random stream.
        cap (Optional[int]): Rejection round cap.

    Returns:
        np.ndarray: Draws with the shape of `center`.
    """
    rows, single = _as_rows(center, space.d1)
    _check_in_box(rows, space)
    sigma = validate_scale_matrix(sigma)
    if h < 0.0:
        raise ParameterSpaceError("Kernel scale must be nonnegative", details={"h": h})
    if h == 0.0 or rows.shape[0] == 0:
        return rows[0].copy() if single else rows.copy()
    chol = np.linalg.cholesky(sigma)

    def propose(pending: np.ndarray) -> np.ndarray:
        z = rng.standard_normal((pending.size, space.d1)) @ chol.T
        w = rng.chisquare(nu, size=pending.size)
        return rows[pending] + h * z / np.sqrt(w / nu)[:, None]

    def accept(candidates: np.ndarray) -> np.ndarray:
        return np.all((candidates >= space.lower) & (candidates <= space.upper), axis=1)

    draws = rejection_loop(rows.shape[0], propose, accept, "truncated-student", space.d1, cap=cap)
    return draws[0] if single else draws


def sample_discrete_kernel(
    psi: np.ndarray,
    p: float,
    space: ParameterSpace,
    rng: np.random.Generator,
    bounds: Optional[Sequence[int]] = None,
    cap: Optional[int] = None,
) -> np.ndarray:
    """
    Signed-Binomial walk on the discrete coordinates, restricted to the
    discrete set.

    Each coordinate moves by (2I - 1) B with I ~ Bernoulli(1/2) and
    B ~ Binomial(b - a, p); proposals leaving the set are redrawn.

    Args:
        psi (np.ndarray): Integer coordinates, (d2,) or (n, d2).
        p (float): Move probability in [0, 1].
        space (ParameterSpace): Space providing the discrete set.
        rng (np.random.Generator): Random stream.
        bounds (Optional[Sequence[int]]): (a, b) for the Binomial size;
            the space bounds when None.
        cap (Optional[int]): Rejection round cap.

    Returns:
        np.ndarray: Draws with the shape of `psi`.
    """
    rows, single = _as_rows(psi, space.d2)
    if not 0.0 <= p <= 1.0:
        raise ParameterSpaceError("Move probability must lie in [0, 1]", details={"p": p})
    member = space.contains_discrete(rows)
    if not member.all():
        bad = int(np.flatnonzero(~member)[0])
        raise ParameterSpaceError(
            "Kernel center lies outside the discrete set",
            details={"row": bad, "center": rows[bad].tolist()},
        )
    if p == 0.0 or rows.shape[0] == 0:
        return rows[0].copy() if single else rows.copy()
    a, b = bounds if bounds is not None else space.bounds
    size = int(b) - int(a)

    def propose(pending: np.ndarray) -> np.ndarray:
        steps = rng.binomial(size, p, size=(pending.size, space.d2))
        signs = 2 * rng.integers(0, 2, size=(pending.size, space.d2)) - 1
        return rows[pending] + signs * steps

    draws = rejection_loop(
        rows.shape[0], propose, space.contains_discrete, "discrete-kernel", space.d2, cap=cap,
    )
    return draws[0] if single else draws


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "rejection_loop",
    "sample_discrete_kernel",
    "sample_truncated_normal",
    "sample_truncated_student",
]
