# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Parameter Space Error Class
====================================

Raised for malformed parameter spaces (empty intervals, discrete points
outside their bounds) and for inputs that must lie in the space but do
not, such as a kernel center outside the box.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class ParameterSpaceError(SmcError):
    """
    Parameter Space Error Class
    ===========================

    Invalid parameter space or out-of-space parameter.
    """

    code = "parameter_space"


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ParameterSpaceError",
]
