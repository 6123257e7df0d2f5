# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Run Record Class
=========================

Per-step (or per-pass) trace of a run: the weighted parameter mean and its
projection on the parameter space, the weighted state mean, the effective
sample size, the resampling flag and the log normalizing increment.

The tabular form has the fixed columns

    t, theta_hat_1..d, theta_proj_1..d, ess, resampled, log_increment

used by the harness output files.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
from dataclasses import dataclass, field
from typing import List, Optional

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
from swing_smc.errors import DataError


# =============================================================================
# Class
# =============================================================================

@dataclass
class RunRecord:
    """
    Run Record Class
    ================

    Attributes:
        t (List[int]): Time index (or pass index) of every row.
        theta_hat (List[np.ndarray]): Weighted parameter means.
        theta_proj (List[np.ndarray]): Projections of the means.
        state_mean (List[np.ndarray]): Weighted state summaries.
        ess (List[float]): Effective sample sizes after weighting.
        resampled (List[bool]): Whether a resampling fired.
        log_increment (List[float]): log(sum w_t / sum w_{t-1}).
        moved (List[int]): Number of parameter kernel applications behind
            the row (0 or 1 per step, up to T per pass).
        theta_star (Optional[np.ndarray]): Ground truth for synthetic runs.
    """

    t: List[int] = field(default_factory=list)
    theta_hat: List[np.ndarray] = field(default_factory=list)
    theta_proj: List[np.ndarray] = field(default_factory=list)
    state_mean: List[np.ndarray] = field(default_factory=list)
    ess: List[float] = field(default_factory=list)
    resampled: List[bool] = field(default_factory=list)
    log_increment: List[float] = field(default_factory=list)
    moved: List[int] = field(default_factory=list)
    theta_star: Optional[np.ndarray] = None

    def append(
        self,
        t: int,
        theta_hat: np.ndarray,
        theta_proj: np.ndarray,
        state_mean: np.ndarray,
        ess: float,
        resampled: bool,
        log_increment: float,
        moved: int,
    ) -> None:
        self.t.append(int(t))
        self.theta_hat.append(np.asarray(theta_hat, dtype=float))
        self.theta_proj.append(np.asarray(theta_proj, dtype=float))
        self.state_mean.append(np.asarray(state_mean, dtype=float))
        self.ess.append(float(ess))
        self.resampled.append(bool(resampled))
        self.log_increment.append(float(log_increment))
        self.moved.append(int(moved))

    def __len__(self) -> int:
        return len(self.t)

    @property
    def kernel_applications(self) -> int:
        """Total number of parameter kernel applications."""
        return int(sum(self.moved))

    @property
    def log_likelihood(self) -> float:
        """Sum of the log normalizing increments."""
        return float(np.sum(self.log_increment))

    @property
    def final_theta(self) -> np.ndarray:
        return self.theta_hat[-1]

    @property
    def final_projection(self) -> np.ndarray:
        return self.theta_proj[-1]

    def theta_hat_array(self) -> np.ndarray:
        return np.vstack(self.theta_hat) if self.theta_hat else np.zeros((0, 0))

    def state_mean_array(self) -> np.ndarray:
        return np.vstack(self.state_mean) if self.state_mean else np.zeros((0, 0))

    def to_frame(self) -> pd.DataFrame:
        """Fixed-column table of the record."""
        d = self.theta_hat[0].size if self.theta_hat else 0
        data = {"t": np.asarray(self.t, dtype=np.int64)}
        hat = self.theta_hat_array().reshape(len(self), d)
        proj = (np.vstack(self.theta_proj) if self.theta_proj else np.zeros((0, 0))).reshape(len(self), d)
        for j in range(d):
            data[f"theta_hat_{j + 1}"] = hat[:, j]
        for j in range(d):
            data[f"theta_proj_{j + 1}"] = proj[:, j]
        data["ess"] = np.asarray(self.ess, dtype=float)
        data["resampled"] = np.asarray(self.resampled, dtype=np.int64)
        data["log_increment"] = np.asarray(self.log_increment, dtype=float)
        return pd.DataFrame(data)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "RunRecord":
        """
        Rebuild a record from its table.

        State means and kernel counts are not part of the table and come
        back empty and zero.
        """
        required = {"t", "ess", "resampled", "log_increment"}
        missing = sorted(required - set(frame.columns))
        if missing:
            raise DataError("Run table lacks required columns", column=missing[0])
        hat_cols = sorted(
            (c for c in frame.columns if c.startswith("theta_hat_")),
            key=lambda c: int(c.rsplit("_", 1)[1]),
        )
        proj_cols = sorted(
            (c for c in frame.columns if c.startswith("theta_proj_")),
            key=lambda c: int(c.rsplit("_", 1)[1]),
        )
        if len(hat_cols) != len(proj_cols):
            raise DataError("Run table has unequal theta_hat and theta_proj columns")
        record = cls()
        hat = frame[hat_cols].to_numpy(dtype=float)
        proj = frame[proj_cols].to_numpy(dtype=float)
        for i in range(len(frame)):
            record.append(
                t=int(frame["t"].iloc[i]),
                theta_hat=hat[i],
                theta_proj=proj[i],
                state_mean=np.zeros(0),
                ess=float(frame["ess"].iloc[i]),
                resampled=bool(frame["resampled"].iloc[i]),
                log_increment=float(frame["log_increment"].iloc[i]),
                moved=0,
            )
        return record


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "RunRecord",
]
