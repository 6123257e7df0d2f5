# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Engine Module
=============

Particle clouds, resampling, random streams and the bootstrap filters on
self-organized state-space models.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .engine_cloud import ParticleCloud, log_mass, normalize_log_weights
from .engine_filter import (
    GATES,
    VARIANTS,
    StepOutcome,
    advance,
    as_observations,
    estimate_theta,
    filter_mean_error,
    initialize,
    record_step,
    run_adaptive_fast,
    run_adaptive_slow,
    run_bootstrap_so_pf,
    so_pf_step,
)
from .engine_record import RunRecord
from .engine_resample import (
    SCHEMES,
    counts_from_indices,
    ess,
    indices_from_counts,
    offspring_count_replicates,
    offspring_counts,
    resample,
    ssp_counts,
)
from .engine_rng import RngStreams, as_streams

__all__ = [
    "GATES",
    "SCHEMES",
    "VARIANTS",
    "ParticleCloud",
    "RngStreams",
    "RunRecord",
    "StepOutcome",
    "advance",
    "as_observations",
    "as_streams",
    "counts_from_indices",
    "ess",
    "estimate_theta",
    "filter_mean_error",
    "indices_from_counts",
    "initialize",
    "log_mass",
    "normalize_log_weights",
    "offspring_count_replicates",
    "offspring_counts",
    "record_step",
    "resample",
    "run_adaptive_fast",
    "run_adaptive_slow",
    "run_bootstrap_so_pf",
    "so_pf_step",
    "ssp_counts",
]
