# -*- coding: utf-8 -*-

# =============================================================================
# Docstring
# =============================================================================

"""
Provides Configuration Error Class
==================================

Raised when a job file or a command-line override is missing a required
field or holds an invalid value. The offending field is named in the
message and in `details["field"]`.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Any, Optional

# Import | Local Modules
from swing_smc.errors.error_base import SmcError


# =============================================================================
# Class
# =============================================================================

class ConfigError(SmcError):
    """
    Configuration Error Class
    =========================

    Invalid or incomplete job configuration.

    Attributes:
        field (str): Dotted name of the offending configuration field.
    """

    code = "config_invalid"

    def __init__(self, field: str, message: str, value: Optional[Any] = None) -> None:
        self.field = field
        super().__init__(
            message=f"{field}: {message}",
            details={"field": field, "value": repr(value)},
        )


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ConfigError",
]
