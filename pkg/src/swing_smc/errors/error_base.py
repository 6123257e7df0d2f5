# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Base Error Class
=========================

This module provides the base class for every failure raised by the
toolkit, offering a structured dictionary form, logging, and extensibility
for the specific failures of the filters, samplers and harness.

Usage:
------
Use this class as a base for defining specific error classes, such as a
configuration error or a weight degeneracy failure.

Example:
--------
from swing_smc.errors import SmcError

def check(n):
    if n < 1:
        raise SmcError(
            message="Particle count must be positive",
            details={"n": n},
        )

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
from typing import Any, Dict, Optional, Union

# Import | Libraries
# None

# Import | Local Modules
from swing_smc.conf import get_smc_config


# =============================================================================
# Logger
# =============================================================================

# Configure logger
logger = logging.getLogger(__name__)


# =============================================================================
# Class
# =============================================================================

Details = Optional[Union[str, Dict[str, Any], list]]


class SmcError(Exception):
    """
    Base Error Class
    ================

    A base class for toolkit errors, providing a structured dictionary
    form and logging.

    Attributes:
        code (str): Short machine-readable error code.
        message (str): Short description of the error.
        details (Optional[Union[str, Dict[str, Any], list]]): Additional
            details about the error.

    """

    code: str = "smc_error"

    def __init__(
        self,
        message: str,
        details: Details = None,
        code: Optional[str] = None,
    ) -> None:
        """
        Initialize the SmcError.

        Args:
            message (str): A brief message describing the error.
            details (Optional[Union[str, Dict[str, Any], list]]): Additional
                error details (default: None).
            code (Optional[str]): Overrides the class-level error code
                (default: None).
        """
        super().__init__(message)
        self.message = message
        self.details = details
        if code:
            self.code = code

        if get_smc_config("base", "log_errors", True):
            self.log_error()

    @staticmethod
    def to_dict(
        message: str,
        details: Details,
        code: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Convert an error into a structured dictionary.

        Args:
            message (str): A brief message describing the error.
            details (Optional[Union[str, Dict[str, Any], list]]): Additional
                error details.
            code (Optional[str]): Optional error code.

        Returns:
            Dict[str, Any]: A structured dictionary for the error.
        """
        response = {
            "error": message,
            "details": details or "No additional details provided."
        }
        if code:
            response["code"] = code
        return response

    def as_dict(self) -> Dict[str, Any]:
        """Structured dictionary of this error instance."""
        return self.to_dict(self.message, self.details, self.code)

    def log_error(self) -> None:
        """
        Log the error details with contextual information.
        """
        logger.error(
            "%s [%s]: %s | details: %s",
            type(self).__name__,
            self.code,
            self.message,
            self.details,
        )


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "SmcError",
]
