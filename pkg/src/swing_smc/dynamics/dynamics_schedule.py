# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Dynamics Schedule Class
================================

Decay sequences and epoch sequences driving the artificial parameter
dynamics. A schedule knows its flavor, its scale `h_t` at every time, the
discrete move probability `p_t`, and the sparse epoch times at which a
heavier-tailed kernel is applied.

Flavors:
--------
- none: no parameter dynamics.
- fast-vanishing: h_t = t^-alpha with alpha > 1.
- slow-vanishing: h_t = t^-alpha; Student-t moves at epoch times.
- mixed: continuous scale t^-alpha (t^-alpha*beta_t at epochs) and
  Binomial moves with probability p_t on the discrete coordinates.
- pomp-geometric, pomp-hyperbolic: the cooling sequences of the
  iterated-filtering R package, indexed by global time over passes of
  length `period`.

Usage:
------
    schedule = DynamicsSchedule(flavor="slow-vanishing", first_epoch=101)
    h_at(schedule, 4)             # 0.5
    next_epoch(100, schedule)     # 122
    schedule.is_epoch(122)        # False, epochs start at 101

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import bisect
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.errors import ScheduleError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

FLAVORS: Tuple[str, ...] = (
    "none",
    "fast-vanishing",
    "slow-vanishing",
    "mixed",
    "pomp-geometric",
    "pomp-hyperbolic",
)

DECAYING_FLAVORS = ("fast-vanishing", "slow-vanishing", "mixed")
POMP_FLAVORS = ("pomp-geometric", "pomp-hyperbolic")


# =============================================================================
# Class
# =============================================================================

@dataclass(eq=False)
class DynamicsSchedule:
    """
    Dynamics Schedule Class
    =======================

    Parameters of the kernel family applied to parameter particles.

    Attributes:
        flavor (str): One of `FLAVORS`.
        alpha (Optional[float]): Decay exponent of h_t (the continuous
            exponent for the mixed flavor, the cooling factor for the pomp
            flavors). Defaults per flavor from the settings.
        sigma (Optional[np.ndarray]): Symmetric positive definite scale
            matrix for the continuous coordinates; identity when None.
        nu (Optional[float]): Student-t degrees of freedom.
        delta (int): Epoch spacing multiplier.
        first_epoch (Optional[int]): First epoch time t_1; no epochs when
            None.
        c (Optional[float]): Discrete move probability scale, in (0, 1].
        alpha_1 (Optional[float]): Discrete decay exponent off epochs.
        alpha_2 (Optional[float]): Discrete decay exponent at epochs.
        beta (Optional[float]): Epoch softening exponent, in (0, 1/2).
        period (Optional[int]): Pass length T for iterated filtering;
            switches the epoch generator to the pass-aligned rule.
        h_override (Optional[Sequence[float]]): Explicit h_1, h_2, ...
        h1_zero (bool): Use h_1 = 0 for the decaying flavors.
        reset_times (Sequence[int]): Times after which the decay sequence
            restarts from local time 1.
    """

    flavor: str = "none"
    alpha: Optional[float] = None
    sigma: Optional[np.ndarray] = None
    nu: Optional[float] = None
    delta: int = 1
    first_epoch: Optional[int] = None
    c: Optional[float] = None
    alpha_1: Optional[float] = None
    alpha_2: Optional[float] = None
    beta: Optional[float] = None
    period: Optional[int] = None
    h_override: Optional[Sequence[float]] = None
    h1_zero: bool = True
    reset_times: Sequence[int] = ()
    _epochs: List[int] = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise ScheduleError(
                f"Unknown dynamics flavor {self.flavor!r}",
                details={"allowed": list(FLAVORS)},
            )
        if self.flavor != "mixed" and (self.alpha_1 is not None or self.alpha_2 is not None):
            raise ScheduleError(
                "Separate discrete exponents alpha_1, alpha_2 belong to the mixed flavor; "
                "other flavors move discrete coordinates with probability c h_t",
                details={"flavor": self.flavor},
            )

        if self.alpha is None:
            if self.flavor == "fast-vanishing":
                self.alpha = float(get_smc_config("dynamics", "alpha_fast"))
            elif self.flavor in POMP_FLAVORS:
                raise ScheduleError("Pomp schedules need an explicit cooling factor alpha")
            else:
                self.alpha = float(get_smc_config("dynamics", "alpha_slow"))
        self.alpha = float(self.alpha)
        if self.nu is None:
            self.nu = float(get_smc_config("dynamics", "nu"))
        if self.c is None:
            self.c = float(get_smc_config("dynamics", "c"))
        if self.alpha_1 is None:
            self.alpha_1 = float(get_smc_config("dynamics", "alpha_1"))
        if self.alpha_2 is None:
            self.alpha_2 = float(get_smc_config("dynamics", "alpha_2"))
        if self.beta is None:
            self.beta = float(get_smc_config("dynamics", "beta"))

        if self.flavor == "fast-vanishing" and self.h_override is None and not self.alpha > 1.0:
            raise ScheduleError(
                "Fast-vanishing dynamics need alpha > 1 so that h_t = o(1/t)",
                details={"alpha": self.alpha},
            )
        if self.flavor in POMP_FLAVORS:
            if not 1.0 / 50.0 < self.alpha < 1.0:
                raise ScheduleError(
                    "Pomp cooling factor must lie in (1/50, 1)",
                    details={"alpha": self.alpha},
                )
            if self.period is None:
                raise ScheduleError("Pomp schedules need the pass length `period`")
        if not self.alpha > 0.0:
            raise ScheduleError("Decay exponent alpha must be positive", details={"alpha": self.alpha})
        if not self.nu > 0.0:
            raise ScheduleError("Degrees of freedom nu must be positive", details={"nu": self.nu})
        if not 0.0 < self.c <= 1.0:
            raise ScheduleError("Discrete scale c must lie in (0, 1]", details={"c": self.c})
        if not 0.0 < self.beta < 0.5:
            raise ScheduleError("beta must lie in (0, 1/2)", details={"beta": self.beta})
        if self.alpha_1 <= 0.0 or self.alpha_2 <= 0.0:
            raise ScheduleError("Discrete decay exponents must be positive")
        if int(self.delta) < 1:
            raise ScheduleError("Epoch spacing delta must be a positive integer")
        self.delta = int(self.delta)

        if self.sigma is not None:
            self.sigma = validate_scale_matrix(self.sigma)

        if self.period is not None:
            self.period = int(self.period)
            if self.period < 1:
                raise ScheduleError("Pass length must be positive")
        if self.first_epoch is not None:
            self.first_epoch = int(self.first_epoch)
            if self.first_epoch < 2:
                raise ScheduleError(
                    "First epoch must be at least 2",
                    details={"first_epoch": self.first_epoch},
                )
            if self.period is not None and self.first_epoch % self.period != 1 % self.period:
                raise ScheduleError(
                    "Epochs of pass-aligned schedules must start a pass (t_p = 1 mod T)",
                    details={"first_epoch": self.first_epoch, "period": self.period},
                )
            self._epochs = [self.first_epoch]
        self.reset_times = tuple(sorted(int(r) for r in self.reset_times))

    # -------------------------------------------------------------------------
    # Scale matrix
    # -------------------------------------------------------------------------

    def scale_matrix(self, d1: int) -> np.ndarray:
        """Scale matrix for `d1` continuous coordinates."""
        if self.sigma is None:
            return np.eye(d1)
        if self.sigma.shape != (d1, d1):
            raise ScheduleError(
                f"Scale matrix has shape {self.sigma.shape}, expected ({d1}, {d1})"
            )
        return self.sigma

    # -------------------------------------------------------------------------
    # Epochs
    # -------------------------------------------------------------------------

    def epochs_until(self, t: int) -> List[int]:
        """All epoch times not larger than `t`."""
        if not self._epochs:
            return []
        while self._epochs[-1] < t:
            self._epochs.append(next_epoch(self._epochs[-1], self))
        return self._epochs[: bisect.bisect_right(self._epochs, t)]

    def is_epoch(self, t: int) -> bool:
        """Whether `t` belongs to the epoch sequence."""
        if not self._epochs:
            return False
        epochs = self.epochs_until(t)
        return bool(epochs) and epochs[-1] == t

    def describe(self) -> dict:
        """Plain description for run metadata."""
        return {
            "flavor": self.flavor,
            "alpha": self.alpha,
            "nu": self.nu,
            "delta": self.delta,
            "first_epoch": self.first_epoch,
            "c": self.c,
            "alpha_1": self.alpha_1,
            "alpha_2": self.alpha_2,
            "beta": self.beta,
            "period": self.period,
            "h1_zero": self.h1_zero,
            "reset_times": list(self.reset_times),
            "sigma": None if self.sigma is None else self.sigma.tolist(),
            "h_override": None if self.h_override is None else list(self.h_override),
        }


# =============================================================================
# Functions
# =============================================================================

def validate_scale_matrix(sigma: np.ndarray) -> np.ndarray:
    """
    Check that a scale matrix is symmetric positive definite.

    Args:
        sigma (np.ndarray): Candidate matrix (a scalar is read as 1x1).

    Returns:
        np.ndarray: The matrix as a 2-d float array.
    """
    arr = np.atleast_2d(np.asarray(sigma, dtype=float))
    if arr.shape[0] != arr.shape[1]:
        raise ScheduleError("Scale matrix must be square", details={"shape": list(arr.shape)})
    if not np.allclose(arr, arr.T, atol=1e-12):
        raise ScheduleError("Scale matrix must be symmetric")
    if np.linalg.eigvalsh(arr).min() <= 0.0:
        raise ScheduleError("Scale matrix must be positive definite")
    return arr


def _local_time(schedule: DynamicsSchedule, t: int) -> int:
    idx = bisect.bisect_left(schedule.reset_times, t) - 1
    if idx >= 0:
        return t - schedule.reset_times[idx]
    return t


def pomp_h(kind: str, alpha: float, period: int, t: int) -> float:
    """
    Cooling value of the pomp schedules at global time t = (k-1)T + s.

    Args:
        kind (str): "geometric" or "hyperbolic".
        alpha (float): Cooling factor in (1/50, 1).
        period (int): Pass length T.
        t (int): Global time, at least 1.

    Returns:
        float: The scale h_t.
    """
    if kind == "geometric":
        return float(alpha ** ((t - 1) / (50.0 * period)))
    if kind == "hyperbolic":
        return float(
            alpha * (50.0 * period - 1.0)
            / (50.0 * alpha * period - 1.0 + (1.0 - alpha) * t)
        )
    raise ScheduleError(f"Unknown pomp schedule kind {kind!r}")


def h_at(schedule: DynamicsSchedule, t: int) -> float:
    """
    Scale h_t of the continuous kernel at time t.

    Args:
        schedule (DynamicsSchedule): The schedule.
        t (int): Time index, at least 1.

    Returns:
        float: Nonnegative scale.
    """
    if t < 1:
        raise ScheduleError("Time index must be at least 1", details={"t": t})
    if schedule.h_override is not None:
        if t > len(schedule.h_override):
            raise ScheduleError(
                f"Explicit h sequence has no value for t={t}",
                details={"length": len(schedule.h_override)},
            )
        return float(schedule.h_override[t - 1])
    if schedule.flavor == "none":
        return 0.0
    if schedule.flavor in POMP_FLAVORS:
        return pomp_h(schedule.flavor.split("-")[1], schedule.alpha, schedule.period, t)
    if t == 1 and schedule.h1_zero:
        return 0.0
    return float(_local_time(schedule, t) ** (-schedule.alpha))


def beta_at(schedule: DynamicsSchedule, t: int) -> float:
    """Epoch softening factor beta_t = (log t)^-beta, for t >= 2."""
    if t < 2:
        raise ScheduleError("beta_t is defined for t >= 2", details={"t": t})
    return float(math.log(t) ** (-schedule.beta))


def continuous_scale(schedule: DynamicsSchedule, t: int, at_epoch: bool) -> float:
    """
    Scale of the continuous kernel, h_t for most flavors, t^-alpha*beta_t
    at epochs of the mixed flavor.
    """
    if schedule.flavor == "mixed" and at_epoch and schedule.h_override is None:
        if t == 1 and schedule.h1_zero:
            return 0.0
        local = _local_time(schedule, t)
        return float(local ** (-schedule.alpha * beta_at(schedule, t)))
    return h_at(schedule, t)


def discrete_probability(schedule: DynamicsSchedule, t: int, at_epoch: bool) -> float:
    """
    Move probability p_t of the discrete kernel. The mixed flavor decays
    with its own exponents alpha_1 (off epochs) and alpha_2 (at epochs);
    every other flavor, and any explicit h sequence, uses min(1, c h_t).

    Args:
        schedule (DynamicsSchedule): The schedule.
        t (int): Time index, at least 1.
        at_epoch (bool): Whether t is an epoch time.

    Returns:
        float: Probability in [0, 1].
    """
    if t < 1:
        raise ScheduleError("Time index must be at least 1", details={"t": t})
    if schedule.flavor == "none":
        return 0.0
    if schedule.flavor != "mixed" or schedule.h_override is not None:
        return float(min(1.0, schedule.c * h_at(schedule, t)))
    if t == 1 and schedule.h1_zero:
        return 0.0
    local = _local_time(schedule, t)
    if at_epoch:
        return float(min(1.0, schedule.c * local ** (-schedule.alpha_2 * beta_at(schedule, t))))
    return float(min(1.0, schedule.c * local ** (-schedule.alpha_1)))


def next_epoch(t_p: int, schedule: DynamicsSchedule) -> int:
    """
    Epoch following `t_p`.

    Args:
        t_p (int): Current epoch, at least 2.
        schedule (DynamicsSchedule): Schedule providing delta, beta, the
            flavor and the pass length.

    Returns:
        int: The next epoch.
    """
    if t_p < 2:
        raise ScheduleError("Epoch generator needs t_p >= 2", details={"t_p": t_p})
    log_t = math.log(t_p)
    if schedule.period is not None:
        # Pass-aligned epochs; the floor is clamped so epochs keep increasing
        step = schedule.delta * schedule.period * max(1, math.floor(log_t ** 2))
    elif schedule.flavor == "mixed":
        step = schedule.delta * math.ceil(log_t ** (1.0 - schedule.beta / 2.0))
    else:
        step = schedule.delta * math.ceil(log_t ** 2)
    return int(t_p + step)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "FLAVORS",
    "DynamicsSchedule",
    "beta_at",
    "continuous_scale",
    "discrete_probability",
    "h_at",
    "next_epoch",
    "pomp_h",
    "validate_scale_matrix",
]
