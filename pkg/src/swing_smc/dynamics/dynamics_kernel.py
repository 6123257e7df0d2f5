# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Kernel Dispatch
========================

`kernel_at` applies the artificial-dynamics kernel of a schedule at time
`t` to one parameter or to a whole cloud of parameters:

- none: identity.
- fast-vanishing and the pomp flavors: truncated normal, scale h_t.
- slow-vanishing: truncated Student-t at epochs, truncated normal
  elsewhere, scale h_t.
- mixed: truncated Student-t with the epoch-softened scale at epochs,
  truncated normal otherwise; the discrete coordinates take the
  signed-Binomial walk with probability p_t.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.dynamics.dynamics_sampler import (
    sample_discrete_kernel,
    sample_truncated_normal,
    sample_truncated_student,
)
from swing_smc.dynamics.dynamics_schedule import (
    DynamicsSchedule,
    continuous_scale,
    discrete_probability,
)
from swing_smc.dynamics.dynamics_space import ParameterSpace


# =============================================================================
# Functions
# =============================================================================

def kernel_at(
    schedule: DynamicsSchedule,
    t: int,
    theta: np.ndarray,
    space: ParameterSpace,
    rng: np.random.Generator,
    at_epoch: Optional[bool] = None,
) -> np.ndarray:
    """
    Draw from the kernel K_t of `schedule`.

    Args:
        schedule (DynamicsSchedule): Kernel family.
        t (int): Time index, at least 1.
        theta (np.ndarray): Parameter (d,) or cloud (n, d), inside `space`.
        space (ParameterSpace): Parameter space.
        rng (np.random.Generator): Random stream.
        at_epoch (Optional[bool]): Force epoch membership; looked up in the
            schedule when None.

    Returns:
        np.ndarray: New parameter(s), same shape as `theta`.
    """
    arr = np.array(theta, dtype=float)
    if schedule.flavor == "none":
        return arr
    single = arr.ndim == 1
    rows = arr.reshape(-1, space.d)
    epoch = schedule.is_epoch(t) if at_epoch is None else bool(at_epoch)
    heavy = epoch and schedule.flavor in ("slow-vanishing", "mixed")

    if space.d1:
        sigma = schedule.scale_matrix(space.d1)
        h = continuous_scale(schedule, t, epoch)
        cont = rows[:, :space.d1]
        if heavy:
            rows[:, :space.d1] = sample_truncated_student(cont, h, sigma, schedule.nu, space, rng)
        else:
            rows[:, :space.d1] = sample_truncated_normal(cont, h, sigma, space, rng)
    if space.d2:
        p = discrete_probability(schedule, t, epoch)
        rows[:, space.d1:] = sample_discrete_kernel(rows[:, space.d1:], p, space, rng)
    return rows[0] if single else rows


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "kernel_at",
]
