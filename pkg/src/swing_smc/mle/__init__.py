# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
MLE Module
==========

Maximum likelihood through iterated filtering on cloned data, pomp cooling
schedules and the global noisy optimizer.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .mle_dataset import ClonedDataset
from .mle_clone import ClonedModel, clone_model
from .mle_config import IfConfig
from .mle_pomp import POMP_KINDS, pomp_schedule, pomp_sequence, pomp_value
from .mle_iterated import run_if_fast, run_if_slow
from .mle_noisy import (
    PAYOFFS,
    PayoffModel,
    quadratic_payoff,
    resolve_payoff,
    run_noisy_opt,
    zero_payoff,
)

__all__ = [
    "PAYOFFS",
    "POMP_KINDS",
    "ClonedDataset",
    "ClonedModel",
    "IfConfig",
    "PayoffModel",
    "clone_model",
    "pomp_schedule",
    "pomp_sequence",
    "pomp_value",
    "quadratic_payoff",
    "resolve_payoff",
    "run_if_fast",
    "run_if_slow",
    "run_noisy_opt",
    "zero_payoff",
]
