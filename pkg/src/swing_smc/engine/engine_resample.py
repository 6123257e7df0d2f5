# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Resampling Schemes
===========================

Effective sample size and four unbiased resampling schemes. Every scheme
is exposed through offspring counts O_n (how many copies of particle n
survive) and through ancestor indices, the sorted expansion of the counts.

Schemes:
--------
- ssp: Srinivasan sampling process; O_n is floor(N W_n) or ceil(N W_n).
- systematic: one uniform shared by N evenly spaced points.
- stratified: one uniform per stratum.
- multinomial: N independent categorical draws.

Indices are 0-based.

Links:
------
- https://arxiv.org/abs/1909.09488

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.errors import SmcError


# =============================================================================
# Variables
# =============================================================================

SCHEMES: Tuple[str, ...] = ("ssp", "systematic", "stratified", "multinomial")


# =============================================================================
# Functions
# =============================================================================

def _check_normalized(W: np.ndarray) -> np.ndarray:
    W = np.asarray(W, dtype=float)
    tol = 1e-9
    if W.ndim != 1 or W.size == 0:
        raise SmcError("Weights must be a nonempty vector")
    if np.any(W < 0.0) or not np.all(np.isfinite(W)) or abs(W.sum() - 1.0) > tol:
        raise SmcError(
            "Weights must be nonnegative and sum to one",
            details={"sum": float(W.sum())},
        )
    return W


def ess(W: np.ndarray) -> float:
    """
    Effective sample size 1 / sum(W^2).

    Args:
        W (np.ndarray): Normalized weights.

    Returns:
        float: Value in [1, N].
    """
    W = _check_normalized(W)
    return float(1.0 / np.sum(W ** 2))


def _inverse_cdf(W: np.ndarray, u: np.ndarray) -> np.ndarray:
    cumulative = np.cumsum(W)
    cumulative[-1] = 1.0
    idx = np.searchsorted(cumulative, u, side="right")
    return np.minimum(idx, W.size - 1)


def counts_from_indices(indices: np.ndarray, n_in: int) -> np.ndarray:
    """Offspring counts from ancestor indices."""
    return np.bincount(indices, minlength=n_in)


def indices_from_counts(counts: np.ndarray) -> np.ndarray:
    """Sorted ancestor indices from offspring counts."""
    return np.repeat(np.arange(counts.size), counts)


def ssp_counts(W: np.ndarray, M: int, rng: np.random.Generator) -> np.ndarray:
    """
    Offspring counts of the SSP scheme.

    Pairs of fractional parts are merged until at most one remains
    fractional; each merge moves mass from one particle to the other with
    probabilities keeping every expected count at M W_n.

    Args:
        W (np.ndarray): Normalized weights.
        M (int): Number of offspring.
        rng (np.random.Generator): Random stream.

    Returns:
        np.ndarray: Integer counts summing to M.
    """
    N = W.size
    MW = M * W
    counts = np.floor(MW).astype(np.int64)
    xi = MW - counts
    if N == 1:
        return np.array([M], dtype=np.int64)
    u = rng.random(N - 1)
    i, j = 0, 1
    for k in range(N - 1):
        delta_i = min(xi[j], 1.0 - xi[i])
        delta_j = min(xi[i], 1.0 - xi[j])
        total = delta_i + delta_j
        pj = delta_i / total if total > 0.0 else 0.0
        if u[k] < pj:
            i, j = j, i
            delta_i = delta_j
        if xi[j] < 1.0 - xi[i]:
            xi[i] += delta_i
            j = k + 2
        else:
            xi[j] -= delta_i
            counts[i] += 1
            i = k + 2
    # Round-off can leave the last active fraction at 1 - eps
    missing = M - int(counts.sum())
    if missing == 1:
        active = i if i < N else j
        counts[active] += 1
    elif missing != 0:
        raise SmcError("SSP resampling lost offspring", details={"missing": missing})
    return counts


def offspring_counts(
    W: np.ndarray,
    M: int,
    scheme: str,
    rng: np.random.Generator,
) -> np.ndarray:
    """
    Offspring counts of any supported scheme.

    Args:
        W (np.ndarray): Normalized weights of the N input particles.
        M (int): Number of offspring.
        scheme (str): One of `SCHEMES`.
        rng (np.random.Generator): Random stream.

    Returns:
        np.ndarray: Counts of length N summing to M.
    """
    W = _check_normalized(W)
    if M < 1:
        raise SmcError("Number of offspring must be positive", details={"M": M})
    if scheme == "ssp":
        return ssp_counts(W, M, rng)
    if scheme == "systematic":
        u = (rng.random() + np.arange(M)) / M
    elif scheme == "stratified":
        u = (rng.random(M) + np.arange(M)) / M
    elif scheme == "multinomial":
        u = np.sort(rng.random(M))
    else:
        raise SmcError(f"Unknown resampling scheme {scheme!r}", details={"allowed": list(SCHEMES)})
    return counts_from_indices(_inverse_cdf(W, u), W.size)


def _ssp_count_replicates(W: np.ndarray, M: int, size: int, rng: np.random.Generator) -> np.ndarray:
    N = W.size
    MW = M * W
    base = np.floor(MW).astype(np.int64)
    counts = np.tile(base, (size, 1))
    if N == 1:
        return np.full((size, 1), M, dtype=np.int64)
    xi = np.tile(MW - base, (size, 1))
    u = rng.random((size, N - 1))
    rows = np.arange(size)
    i = np.zeros(size, dtype=np.int64)
    j = np.ones(size, dtype=np.int64)
    for k in range(N - 1):
        xi_i, xi_j = xi[rows, i], xi[rows, j]
        delta_i = np.minimum(xi_j, 1.0 - xi_i)
        delta_j = np.minimum(xi_i, 1.0 - xi_j)
        total = delta_i + delta_j
        pj = np.divide(delta_i, total, out=np.zeros(size), where=total > 0.0)
        swap = u[:, k] < pj
        i, j = np.where(swap, j, i), np.where(swap, i, j)
        delta = np.where(swap, delta_j, delta_i)
        grow = xi[rows, j] < 1.0 - xi[rows, i]
        xi[rows[grow], i[grow]] += delta[grow]
        settle = ~grow
        xi[rows[settle], j[settle]] -= delta[settle]
        counts[rows[settle], i[settle]] += 1
        i = np.where(grow, i, k + 2)
        j = np.where(grow, k + 2, j)
    missing = M - counts.sum(axis=1)
    if np.any((missing != 0) & (missing != 1)):
        raise SmcError("SSP resampling lost offspring", details={"missing": int(missing.max())})
    short = missing == 1
    active = np.where(i < N, i, j)
    counts[rows[short], active[short]] += 1
    return counts


def offspring_count_replicates(
    W: np.ndarray,
    M: int,
    scheme: str,
    rng: np.random.Generator,
    size: int,
) -> np.ndarray:
    """
    Independent replicates of the offspring counts of one weight vector,
    drawn in a single vectorised pass.

    Args:
        W (np.ndarray): Normalized weights of the N input particles.
        M (int): Number of offspring.
        scheme (str): One of `SCHEMES`.
        rng (np.random.Generator): Random stream.
        size (int): Number of replicates.

    Returns:
        np.ndarray: Counts of shape (size, N), every row summing to M.
    """
    W = _check_normalized(W)
    if M < 1:
        raise SmcError("Number of offspring must be positive", details={"M": M})
    if size < 1:
        raise SmcError("Number of replicates must be positive", details={"size": size})
    if scheme == "ssp":
        return _ssp_count_replicates(W, M, size, rng)
    if scheme == "systematic":
        u = (rng.random((size, 1)) + np.arange(M)) / M
    elif scheme == "stratified":
        u = (rng.random((size, M)) + np.arange(M)) / M
    elif scheme == "multinomial":
        u = rng.random((size, M))
    else:
        raise SmcError(f"Unknown resampling scheme {scheme!r}", details={"allowed": list(SCHEMES)})
    idx = _inverse_cdf(W, u) + W.size * np.arange(size)[:, None]
    return np.bincount(idx.ravel(), minlength=size * W.size).reshape(size, W.size)


def resample(
    W: np.ndarray,
    N: int,
    scheme: str = None,
    rng: np.random.Generator = None,
) -> np.ndarray:
    """
    Ancestor indices a_1..a_N drawn from the weights.

    Args:
        W (np.ndarray): Normalized weights.
        N (int): Number of ancestors to draw.
        scheme (str): One of `SCHEMES`; the `engine.scheme` setting when
            None.
        rng (np.random.Generator): Random stream.

    Returns:
        np.ndarray: Sorted 0-based ancestor indices.
    """
    scheme = scheme or get_smc_config("engine", "scheme")
    if rng is None:
        raise SmcError("Resampling needs an explicit random stream")
    return indices_from_counts(offspring_counts(W, N, scheme, rng))


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "SCHEMES",
    "counts_from_indices",
    "ess",
    "indices_from_counts",
    "offspring_count_replicates",
    "offspring_counts",
    "resample",
    "ssp_counts",
]
