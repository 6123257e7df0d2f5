# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Pomp Cooling Schedules
===============================

Cooling sequences of the iterated-filtering R package, written for pass k
and step s of a cloned record of length T:

- geometric: h_{k,s} = alpha^{((s - 1) + (k - 1) T) / (50 T)}
- hyperbolic: h_{k,s} = alpha (50 T - 1) / (50 alpha T - 1 + (1 - alpha)(s + (k - 1) T))

Both need alpha in (1/50, 1). After 50 passes the geometric scale has
been multiplied by alpha.

Links:
------
    https://kingaa.github.io/pomp/

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Tuple

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule, pomp_h
from swing_smc.errors import ScheduleError


# =============================================================================
# Variables
# =============================================================================

POMP_KINDS: Tuple[str, ...] = ("geometric", "hyperbolic")


# =============================================================================
# Functions
# =============================================================================

def _check(kind: str, alpha: float, T: int) -> None:
    if kind not in POMP_KINDS:
        raise ScheduleError(f"Unknown pomp schedule kind {kind!r}", details={"allowed": list(POMP_KINDS)})
    if not 1.0 / 50.0 < float(alpha) < 1.0:
        raise ScheduleError("Pomp cooling factor must lie in (1/50, 1)", details={"alpha": alpha})
    if int(T) < 1:
        raise ScheduleError("Pass length must be positive", details={"T": T})


def pomp_schedule(kind: str, alpha: float, T: int) -> DynamicsSchedule:
    """
    Truncated Gaussian schedule whose scale follows a pomp cooling sequence.

    Args:
        kind (str): "geometric" or "hyperbolic".
        alpha (float): Cooling factor in (1/50, 1).
        T (int): Pass length.

    Returns:
        DynamicsSchedule: Schedule of flavor "pomp-<kind>" with period T.
    """
    _check(kind, alpha, T)
    return DynamicsSchedule(flavor=f"pomp-{kind}", alpha=float(alpha), period=int(T), h1_zero=False)


def pomp_value(kind: str, alpha: float, T: int, k: int, s: int) -> float:
    """Scale at pass `k` and step `s`."""
    _check(kind, alpha, T)
    if k < 1 or not 1 <= s <= T:
        raise ScheduleError("Pass and step indices out of range", details={"k": k, "s": s, "T": T})
    return pomp_h(kind, float(alpha), int(T), (k - 1) * int(T) + s)


def pomp_sequence(kind: str, alpha: float, T: int, passes: int) -> np.ndarray:
    """
    Scales of `passes` full passes.

    Returns:
        np.ndarray: Array of shape (passes, T); row k - 1 holds pass k.
    """
    _check(kind, alpha, T)
    values = [pomp_h(kind, float(alpha), int(T), t) for t in range(1, passes * int(T) + 1)]
    return np.asarray(values, dtype=float).reshape(passes, int(T))


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "POMP_KINDS",
    "pomp_schedule",
    "pomp_sequence",
    "pomp_value",
]
