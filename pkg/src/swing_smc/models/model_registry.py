# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Model Registry
=======================

Name-based lookup of the bundled models for the harness:

- "lg-periodic": periodic linear-Gaussian model (parameters: p, knots).
- "sv": stochastic volatility (parameters: variant, nu).
- "seird": SEIRD Dirichlet-Beta epidemic model.
- "urn": Bernoulli-Laplace urn pairs (the space is built from the data).

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass
from typing import Any, Callable, Dict, Mapping, Optional

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.dynamics import ParameterSpace
from swing_smc.errors import ConfigError
from swing_smc.models.model_base import SsmModel
from swing_smc.models.model_lg import LgPeriodicModel
from swing_smc.models.model_seird import SeirdModel, seird_default_space
from swing_smc.models.model_sv import SvModel, sv_default_space
from swing_smc.models.model_urn import UrnPairModel, urn_parameter_space


# =============================================================================
# Class
# =============================================================================

@dataclass(frozen=True)
class ModelEntry:
    """
    Model Entry Class
    =================

    Attributes:
        factory (Callable): Keyword parameters -> model.
        default_space (Callable): (model, observations) -> space.
    """

    factory: Callable[..., SsmModel]
    default_space: Callable[[SsmModel, Optional[np.ndarray]], ParameterSpace]


def _urn_space(model: SsmModel, ys: Optional[np.ndarray]) -> ParameterSpace:
    if ys is None:
        raise ConfigError("input", "the urn parameter space is built from the observed path")
    return urn_parameter_space(np.asarray(ys).reshape(-1))


# =============================================================================
# Variables
# =============================================================================

MODEL_REGISTRY: Dict[str, ModelEntry] = {
    "lg-periodic": ModelEntry(
        factory=lambda **kw: LgPeriodicModel(**kw),
        default_space=lambda model, ys: model.default_space(),
    ),
    "sv": ModelEntry(
        factory=lambda **kw: SvModel(**kw),
        default_space=lambda model, ys: sv_default_space(),
    ),
    "seird": ModelEntry(
        factory=lambda **kw: SeirdModel(**kw),
        default_space=lambda model, ys: seird_default_space(),
    ),
    "urn": ModelEntry(
        factory=lambda **kw: UrnPairModel(**kw),
        default_space=_urn_space,
    ),
}


# =============================================================================
# Functions
# =============================================================================

def build_model(name: str, params: Optional[Mapping[str, Any]] = None) -> SsmModel:
    """
    Instantiate a registered model.

    Args:
        name (str): Registry name.
        params (Optional[Mapping[str, Any]]): Model keyword parameters.

    Returns:
        SsmModel: The model.
    """
    if name not in MODEL_REGISTRY:
        raise ConfigError("model", f"unknown model, expected one of {sorted(MODEL_REGISTRY)}", name)
    try:
        return MODEL_REGISTRY[name].factory(**dict(params or {}))
    except TypeError as exc:
        raise ConfigError("model_params", str(exc), dict(params or {})) from exc


def default_space(name: str, model: SsmModel, ys: Optional[np.ndarray] = None) -> ParameterSpace:
    """Default parameter space of a registered model."""
    if name not in MODEL_REGISTRY:
        raise ConfigError("model", f"unknown model, expected one of {sorted(MODEL_REGISTRY)}", name)
    return MODEL_REGISTRY[name].default_space(model, ys)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "MODEL_REGISTRY",
    "ModelEntry",
    "build_model",
    "default_space",
]
