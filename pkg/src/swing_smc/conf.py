# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Toolkit Settings
=========================

Default settings for the particle filters, the artificial dynamics, the
bundled models and the output writers, together with a getter that falls
back to the defaults when a key is not overridden.

Usage:
------
Read a setting from anywhere in the package:

    from swing_smc.conf import get_smc_config

    c_ess = get_smc_config("engine", "c_ess")

Override settings for the current process, for example from the
`settings:` block of a job file:

    from swing_smc.conf import configure_settings

    configure_settings({"engine": {"scheme": "systematic"}})

Links:
------
- https://numpy.org/doc/stable/reference/random/bit_generators/philox.html

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import copy
import logging
import os
from typing import Any, Dict, Mapping, Optional

# Import | Libraries
import yaml

# Import | Local Modules
# None


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

# Default configuration for the toolkit
DEFAULT_SMC_SETTINGS: Dict[str, Dict[str, Any]] = {
    "base": {
        "log_errors": True,
        "float_tolerance": 1e-12,
    },
    "engine": {
        "c_ess": 0.7,
        "scheme": "ssp",
        "variant": "theta-after-x",
        "n_particles": 1000,
    },
    "dynamics": {
        "alpha_fast": 1.1,
        "alpha_slow": 0.5,
        "nu": 100.0,
        "delta": 1,
        "first_epoch": 100,
        "c": 1.0,
        "beta": 0.01,
        "alpha_1": 0.5,
        "alpha_2": 0.5,
        "rejection_cap": 1_000_000,
        "rejection_warn": 1000,
    },
    "models": {
        "lg_initial_variance": 4.0,
        "sv_nu": 100.0,
        "seird_population": 67_886_004,
        "urn_bound": 200,
    },
    "mle": {
        "max_passes": 50,
        "warmup_passes": 10,
    },
    "output": {
        "float_format": "%.17g",
        "sidecar_suffix": ".meta",
    },
    "logging": {
        "level": "INFO",
        "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
    },
}

# Environment variable naming a YAML file with setting overrides
SETTINGS_ENV_VAR = "SWING_SMC_SETTINGS"

_user_settings: Optional[Dict[str, Dict[str, Any]]] = None


# =============================================================================
# Functions
# =============================================================================

def configure_settings(overrides: Optional[Mapping[str, Any]]) -> None:
    """
    Replace the user overrides for the current process.

    Args:
        overrides (Optional[Mapping[str, Any]]): Mapping of section name to
            a mapping of keys, as in `DEFAULT_SMC_SETTINGS`. `None` clears
            every override.
    """
    global _user_settings
    if overrides is None:
        _user_settings = {}
        return
    _user_settings = {
        str(section): dict(values or {})
        for section, values in overrides.items()
    }
    logger.debug("Settings overridden for sections %s", sorted(_user_settings))


def _load_env_settings() -> Dict[str, Dict[str, Any]]:
    path = os.environ.get(SETTINGS_ENV_VAR)
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as handle:
        loaded = yaml.safe_load(handle) or {}
    logger.info("Loaded settings overrides from %s", path)
    return {str(k): dict(v or {}) for k, v in loaded.items()}


def get_smc_config(section: str, key: str, default: Any = None) -> Any:
    """
    Retrieve a toolkit setting with fallback to defaults.

    Args:
        section (str): The settings section (e.g., "engine", "dynamics").
        key (str): The key to retrieve from the section.
        default (Any): Default value if the key is set nowhere.

    Returns:
        Any: The configuration value.
    """
    global _user_settings
    if _user_settings is None:
        _user_settings = _load_env_settings()
    override = _user_settings.get(section, {})
    if key in override:
        return copy.deepcopy(override[key])
    section_defaults = DEFAULT_SMC_SETTINGS.get(section, {})
    if key in section_defaults:
        return copy.deepcopy(section_defaults[key])
    return copy.deepcopy(DEFAULT_SMC_SETTINGS["base"].get(key, default))


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "DEFAULT_SMC_SETTINGS",
    "SETTINGS_ENV_VAR",
    "configure_settings",
    "get_smc_config",
]
