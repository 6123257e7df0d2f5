# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Kalman Module
=============

Exact filtering of linear-Gaussian models and the Rao-Blackwellised
particle filter built on it.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .kalman_filter import (
    KalmanState,
    LgSpec,
    kf_filter,
    kf_loglik,
    kf_predict,
    kf_step,
    kf_update,
)
from .kalman_rbpf import RaoBlackwellModel, rb_pf_step, run_rb_filter

__all__ = [
    "KalmanState",
    "LgSpec",
    "RaoBlackwellModel",
    "kf_filter",
    "kf_loglik",
    "kf_predict",
    "kf_step",
    "kf_update",
    "rb_pf_step",
    "run_rb_filter",
]
