# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Model Error Class
==========================

Raised for invalid model construction or for parameter values a model
rejects outright (negative scales, unknown model name).

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class ModelError(SmcError):
    """
    Model Error Class
    =================

    Invalid model definition or evaluation.
    """

    code = "model_invalid"


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ModelError",
]
