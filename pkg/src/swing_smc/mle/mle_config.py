# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Iterated Filtering Config Class
========================================

Settings of an iterated-filtering run over cloned data: particle count,
resampling threshold, parameter dynamics and pass budget. The state and
parameter ordering is fixed to "theta-before-x".

Usage:
------
    config = IfConfig.slow(T=200, n_particles=1000, max_passes=10)
    config = IfConfig.fast(T=200, alpha=1.1)
    config = IfConfig.mixed(T=200, alpha=0.5)

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from typing import Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import DynamicsSchedule
from swing_smc.errors import ConfigError, ScheduleError


# =============================================================================
# Class
# =============================================================================

@dataclass
class IfConfig:
    """
    Iterated Filtering Config Class
    ===============================

    Attributes:
        T (int): Record length.
        schedule (DynamicsSchedule): Parameter dynamics over global time.
        n_particles (int): N.
        c_ess (float): Resampling threshold factor in (0, 1].
        max_passes (int): Pass budget K.
        scheme (Optional[str]): Resampling scheme.
        variant (str): Always "theta-before-x".
    """

    T: int
    schedule: DynamicsSchedule
    n_particles: int = 0
    c_ess: float = 0.0
    max_passes: int = 0
    scheme: Optional[str] = None
    variant: str = "theta-before-x"

    def __post_init__(self) -> None:
        self.T = int(self.T)
        if self.T < 1:
            raise ConfigError("T", "record length must be positive", self.T)
        self.n_particles = int(self.n_particles or get_smc_config("engine", "n_particles"))
        if self.n_particles < 1:
            raise ConfigError("n_particles", "must be at least 1", self.n_particles)
        self.c_ess = float(self.c_ess or get_smc_config("engine", "c_ess"))
        if not 0.0 < self.c_ess <= 1.0:
            raise ConfigError("c_ess", "must lie in (0, 1]", self.c_ess)
        self.max_passes = int(self.max_passes or get_smc_config("mle", "max_passes"))
        if self.max_passes < 1:
            raise ConfigError("max_passes", "must be at least 1", self.max_passes)
        if self.variant != "theta-before-x":
            raise ConfigError("variant", "iterated filtering moves the parameter before the state", self.variant)

        schedule = self.schedule
        if schedule.first_epoch is not None:
            if schedule.period != self.T:
                raise ScheduleError(
                    "Epochs of iterated filtering must be aligned on passes",
                    details={"period": schedule.period, "T": self.T},
                )
            # Aligned schedules keep every epoch at the start of a pass
            if (schedule.first_epoch - 1) % self.T != 0:
                raise ScheduleError(
                    "First epoch must start a pass (t_p = 1 mod T)",
                    details={"first_epoch": schedule.first_epoch, "T": self.T},
                )
        if schedule.flavor.startswith("pomp") and schedule.period != self.T:
            raise ScheduleError(
                "Pomp cooling is indexed by passes of length T",
                details={"period": schedule.period, "T": self.T},
            )

    @property
    def total_steps(self) -> int:
        return self.T * self.max_passes

    @property
    def uses_epochs(self) -> bool:
        return self.schedule.first_epoch is not None

    # -------------------------------------------------------------------------
    # Builders
    # -------------------------------------------------------------------------

    @classmethod
    def fast(
        cls,
        T: int,
        alpha: Optional[float] = None,
        sigma: Optional[np.ndarray] = None,
        **kwargs,
    ) -> "IfConfig":
        """Fast-vanishing truncated Gaussian dynamics, h_t = t^-alpha, alpha > 1."""
        schedule = DynamicsSchedule(flavor="fast-vanishing", alpha=alpha, sigma=sigma, h1_zero=False)
        return cls(T=T, schedule=schedule, **kwargs)

    @classmethod
    def slow(
        cls,
        T: int,
        alpha: Optional[float] = None,
        nu: Optional[float] = None,
        delta: Optional[int] = None,
        warmup_passes: Optional[int] = None,
        sigma: Optional[np.ndarray] = None,
        **kwargs,
    ) -> "IfConfig":
        """
        Slow-vanishing dynamics with Student-t moves at pass-aligned epochs.

        Args:
            T (int): Record length.
            alpha (Optional[float]): Decay exponent.
            nu (Optional[float]): Student-t degrees of freedom.
            delta (Optional[int]): Epoch spacing multiplier.
            warmup_passes (Optional[int]): Passes before the first epoch;
                the first epoch is 1 + warmup_passes * T.
            sigma (Optional[np.ndarray]): Scale matrix.
            **kwargs: Remaining `IfConfig` fields.

        Returns:
            IfConfig: The configuration.
        """
        schedule = DynamicsSchedule(
            flavor="slow-vanishing", alpha=alpha, nu=nu, sigma=sigma, period=T, h1_zero=False,
            delta=int(delta or get_smc_config("dynamics", "delta")),
            first_epoch=_first_epoch(T, warmup_passes),
        )
        return cls(T=T, schedule=schedule, **kwargs)

    @classmethod
    def mixed(
        cls,
        T: int,
        alpha: Optional[float] = None,
        c: Optional[float] = None,
        beta: Optional[float] = None,
        nu: Optional[float] = None,
        delta: Optional[int] = None,
        warmup_passes: Optional[int] = None,
        sigma: Optional[np.ndarray] = None,
        **kwargs,
    ) -> "IfConfig":
        """
        Mixed dynamics for spaces with discrete coordinates; the discrete
        exponents off and at epochs both equal `alpha`, and `nu` sets the
        Student-t degrees of freedom of the continuous epoch moves.
        """
        alpha = float(alpha if alpha is not None else get_smc_config("dynamics", "alpha_slow"))
        schedule = DynamicsSchedule(
            flavor="mixed", alpha=alpha, alpha_1=alpha, alpha_2=alpha, c=c, beta=beta,
            nu=nu, sigma=sigma, period=T, h1_zero=False,
            delta=int(delta or get_smc_config("dynamics", "delta")),
            first_epoch=_first_epoch(T, warmup_passes),
        )
        return cls(T=T, schedule=schedule, **kwargs)


# =============================================================================
# Functions
# =============================================================================

def _first_epoch(T: int, warmup_passes: Optional[int]) -> int:
    warmup = int(warmup_passes if warmup_passes is not None else get_smc_config("mle", "warmup_passes"))
    if warmup < 1:
        raise ConfigError("warmup_passes", "must be at least 1", warmup)
    return 1 + warmup * int(T)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "IfConfig",
]
