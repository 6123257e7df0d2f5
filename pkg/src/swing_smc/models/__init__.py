# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Models Module
=============

State-space model interface, the bundled models and their registry.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from .model_base import SsmModel, simulate
from .model_spline import SplineBasis, default_knots, natural_cubic_basis
from .model_lg import (
    LgPeriodicModel,
    lg_default_space,
    lg_periodic_model,
    lg_sample_theta_star,
)
from .model_seird import (
    SeirdModel,
    beta_logpdf,
    beta_obs_logdensity,
    effective_reproduction,
    sample_dirichlet,
    seird_default_space,
    seird_map,
    seird_model,
    seird_reproduction_series,
)
from .model_sv import SvModel, stationary_initial, sv_default_space, sv_model
from .model_urn import (
    UrnPairModel,
    urn_as_cloned_ssm,
    urn_grid_mle,
    urn_loglik,
    urn_parameter_space,
    urn_simulate,
    urn_support,
    urn_transition,
)
from .model_registry import MODEL_REGISTRY, ModelEntry, build_model, default_space

__all__ = [
    "MODEL_REGISTRY",
    "LgPeriodicModel",
    "ModelEntry",
    "SeirdModel",
    "SplineBasis",
    "SsmModel",
    "SvModel",
    "UrnPairModel",
    "beta_logpdf",
    "beta_obs_logdensity",
    "build_model",
    "default_knots",
    "default_space",
    "effective_reproduction",
    "lg_default_space",
    "lg_periodic_model",
    "lg_sample_theta_star",
    "natural_cubic_basis",
    "sample_dirichlet",
    "seird_default_space",
    "seird_map",
    "seird_model",
    "seird_reproduction_series",
    "simulate",
    "stationary_initial",
    "sv_default_space",
    "sv_model",
    "urn_as_cloned_ssm",
    "urn_grid_mle",
    "urn_loglik",
    "urn_parameter_space",
    "urn_simulate",
    "urn_support",
    "urn_transition",
]
