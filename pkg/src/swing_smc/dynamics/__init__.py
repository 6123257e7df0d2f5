# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Dynamics Module
===============

Parameter spaces, artificial-dynamics schedules and the kernels that move
parameter particles.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .dynamics_kernel import kernel_at
from .dynamics_sampler import (
    rejection_loop,
    sample_discrete_kernel,
    sample_truncated_normal,
    sample_truncated_student,
)
from .dynamics_schedule import (
    FLAVORS,
    DynamicsSchedule,
    beta_at,
    continuous_scale,
    discrete_probability,
    h_at,
    next_epoch,
    pomp_h,
    validate_scale_matrix,
)
from .dynamics_space import ParameterSpace

__all__ = [
    "FLAVORS",
    "DynamicsSchedule",
    "ParameterSpace",
    "beta_at",
    "continuous_scale",
    "discrete_probability",
    "h_at",
    "kernel_at",
    "next_epoch",
    "pomp_h",
    "rejection_loop",
    "sample_discrete_kernel",
    "sample_truncated_normal",
    "sample_truncated_student",
    "validate_scale_matrix",
]
