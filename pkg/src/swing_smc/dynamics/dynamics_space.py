# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Parameter Space Class
==============================

The compact parameter set on which every parameter particle lives: a box
of continuous coordinates followed by a finite set of integer vectors.
A parameter is a float vector of length `d = d1 + d2`; the first `d1`
entries are continuous, the last `d2` hold integer values.

Usage:
------
    space = ParameterSpace(lower=[-1.0, 0.0], upper=[1.0, 4.0])
    space.contains(np.array([0.5, 1.0]))          # True
    space.project(np.array([2.0, -1.0]))          # array([1., 0.])

    urn = ParameterSpace.from_discrete(points, lower=1, upper=20)

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from typing import Optional, Sequence, Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.errors import ParameterSpaceError


# =============================================================================
# Class
# =============================================================================

ArrayLike = Union[Sequence[float], np.ndarray]


class ParameterSpace:
    """
    Parameter Space Class
    =====================

    Product of a continuous box and a finite integer grid subset.

    Attributes:
        lower (np.ndarray): Lower box bounds, shape (d1,).
        upper (np.ndarray): Upper box bounds, shape (d1,).
        discrete_set (np.ndarray): Allowed integer vectors, shape (m, d2),
            sorted lexicographically.
        bounds (tuple[int, int]): (a, b) with discrete_set within
            {a, ..., b}^d2.
    """

    def __init__(
        self,
        lower: Optional[ArrayLike] = None,
        upper: Optional[ArrayLike] = None,
        discrete_set: Optional[ArrayLike] = None,
        bounds: Optional[Sequence[int]] = None,
    ) -> None:
        self.lower = np.asarray(lower if lower is not None else [], dtype=float).reshape(-1)
        self.upper = np.asarray(upper if upper is not None else [], dtype=float).reshape(-1)
        if self.lower.shape != self.upper.shape:
            raise ParameterSpaceError(
                "Box bounds must have equal length",
                details={"lower": self.lower.tolist(), "upper": self.upper.tolist()},
            )
        bad = np.flatnonzero(~(self.lower < self.upper))
        if bad.size:
            raise ParameterSpaceError(
                f"Box coordinate {int(bad[0])} has lower >= upper",
                details={"coordinate": int(bad[0]),
                         "lower": float(self.lower[bad[0]]),
                         "upper": float(self.upper[bad[0]])},
            )

        if discrete_set is None:
            points = np.zeros((0, 0), dtype=np.int64)
        else:
            points = np.asarray(discrete_set)
            if points.ndim == 1:
                points = points.reshape(-1, 1)
            if points.size and not np.array_equal(points, np.round(points)):
                raise ParameterSpaceError("Discrete set must hold integer vectors")
            points = points.astype(np.int64)
            if points.shape[0] == 0:
                raise ParameterSpaceError("Discrete set is empty")

        if points.shape[1] > 0:
            if bounds is None:
                bounds = (int(points.min()), int(points.max()))
            a, b = int(bounds[0]), int(bounds[1])
            if a > b or points.min() < a or points.max() > b:
                raise ParameterSpaceError(
                    "Discrete set leaves its bounds",
                    details={"bounds": [a, b]},
                )
            # Lexicographic order makes argmin ties resolve lexicographically
            order = np.lexsort(points.T[::-1])
            points = points[order]
            self.bounds = (a, b)
        else:
            self.bounds = (0, 0)

        self.discrete_set = points
        self.d1 = int(self.lower.size)
        self.d2 = int(points.shape[1])
        if self.d1 + self.d2 == 0:
            raise ParameterSpaceError("Parameter space has no coordinates")

        # Mixed-radix codes of the discrete points for membership lookups
        self._radix = self.bounds[1] - self.bounds[0] + 1
        self._codes = np.sort(self._encode(points)) if self.d2 else np.zeros(0, np.int64)

    # -------------------------------------------------------------------------
    # Construction helpers
    # -------------------------------------------------------------------------

    @classmethod
    def from_box(cls, lower: ArrayLike, upper: ArrayLike) -> "ParameterSpace":
        """Continuous-only space."""
        return cls(lower=lower, upper=upper)

    @classmethod
    def from_discrete(
        cls,
        points: ArrayLike,
        lower: Optional[int] = None,
        upper: Optional[int] = None,
    ) -> "ParameterSpace":
        """Discrete-only space with optional explicit bounds (a, b)."""
        bounds = None if lower is None or upper is None else (lower, upper)
        return cls(discrete_set=points, bounds=bounds)

    # -------------------------------------------------------------------------
    # Properties
    # -------------------------------------------------------------------------

    @property
    def d(self) -> int:
        return self.d1 + self.d2

    @property
    def is_convex(self) -> bool:
        return self.d2 == 0

    def describe(self) -> dict:
        """Plain description for run metadata."""
        return {
            "lower": self.lower.tolist(),
            "upper": self.upper.tolist(),
            "discrete_points": int(self.discrete_set.shape[0]),
            "discrete_dim": self.d2,
            "bounds": list(self.bounds),
        }

    # -------------------------------------------------------------------------
    # Membership and projection
    # -------------------------------------------------------------------------

    def _encode(self, points: np.ndarray) -> np.ndarray:
        shifted = points.astype(np.int64) - self.bounds[0]
        weights = self._radix ** np.arange(self.d2 - 1, -1, -1, dtype=np.int64)
        return shifted @ weights

    def contains_discrete(self, points: np.ndarray) -> np.ndarray:
        """
        Row-wise membership of integer vectors in the discrete set.

        Args:
            points (np.ndarray): Shape (n, d2).

        Returns:
            np.ndarray: Boolean mask of shape (n,).
        """
        points = np.asarray(points)
        if self.d2 == 0:
            return np.ones(points.shape[0], dtype=bool)
        a, b = self.bounds
        inside = np.all((points >= a) & (points <= b), axis=1)
        inside &= np.all(points == np.round(points), axis=1)
        mask = np.zeros(points.shape[0], dtype=bool)
        if inside.any():
            mask[inside] = np.isin(self._encode(points[inside]), self._codes, assume_unique=False)
        return mask

    def contains(self, theta: ArrayLike) -> Union[bool, np.ndarray]:
        """
        Membership test.

        Args:
            theta (ArrayLike): One parameter (d,) or a cloud (n, d).

        Returns:
            bool or np.ndarray: Membership per row.
        """
        arr = np.asarray(theta, dtype=float)
        single = arr.ndim == 1
        rows = arr.reshape(-1, self.d) if arr.size else arr.reshape(0, self.d)
        if rows.shape[1] != self.d:
            raise ParameterSpaceError(
                f"Parameter has dimension {rows.shape[1]}, space has {self.d}"
            )
        cont = rows[:, :self.d1]
        mask = np.all((cont >= self.lower) & (cont <= self.upper), axis=1)
        if self.d2:
            mask &= self.contains_discrete(rows[:, self.d1:])
        return bool(mask[0]) if single else mask

    def project(self, v: ArrayLike) -> np.ndarray:
        """
        Project a vector onto the space.

        The box part is clamped coordinatewise; the discrete part moves to
        the nearest discrete point in Euclidean distance, ties going to the
        lexicographically smallest point.

        Args:
            v (ArrayLike): Vector (d,) or rows (n, d).

        Returns:
            np.ndarray: Projected vector(s), same shape as `v`.
        """
        arr = np.array(v, dtype=float)
        single = arr.ndim == 1
        rows = arr.reshape(-1, self.d)
        rows[:, :self.d1] = np.clip(rows[:, :self.d1], self.lower, self.upper)
        if self.d2:
            disc = rows[:, self.d1:]
            dist = ((disc[:, None, :] - self.discrete_set[None, :, :]) ** 2).sum(axis=2)
            rows[:, self.d1:] = self.discrete_set[np.argmin(dist, axis=1)]
        return rows[0] if single else rows

    # -------------------------------------------------------------------------
    # Sampling
    # -------------------------------------------------------------------------

    def sample_uniform(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """
        Draw `n` parameters uniformly: uniform on the box and uniform over
        the points of the discrete set.
        """
        out = np.empty((n, self.d))
        if self.d1:
            out[:, :self.d1] = rng.uniform(self.lower, self.upper, size=(n, self.d1))
        if self.d2:
            idx = rng.integers(0, self.discrete_set.shape[0], size=n)
            out[:, self.d1:] = self.discrete_set[idx]
        return out

    def __repr__(self) -> str:
        return (
            f"ParameterSpace(d1={self.d1}, d2={self.d2}, "
            f"points={self.discrete_set.shape[0]})"
        )


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ParameterSpace",
]
