# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Harness Module
==============

Job configuration, observation loading, run orchestration and output files.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .harness_config import ALGORITHMS, KINDS, JobConfig, load_config
from .harness_data import (
    TRANSFORMS,
    apply_transforms,
    day_start_difference,
    load_observations,
    read_numeric_csv,
)
from .harness_output import (
    read_metadata,
    read_record,
    sidecar_path,
    write_frame,
    write_metadata,
    write_record,
)
from .harness_job import JobRunner, RunArtifact, run_job

__all__ = [
    "ALGORITHMS",
    "KINDS",
    "TRANSFORMS",
    "JobConfig",
    "JobRunner",
    "RunArtifact",
    "apply_transforms",
    "day_start_difference",
    "load_config",
    "load_observations",
    "read_metadata",
    "read_numeric_csv",
    "read_record",
    "run_job",
    "sidecar_path",
    "write_frame",
    "write_metadata",
    "write_record",
]
