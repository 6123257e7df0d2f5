# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Job Runner
===================

Dispatch of a validated `JobConfig` to the models, the online filters, the
iterated filtering runners and the noisy optimizer. Every job returns a
`RunArtifact` and, when the config names an output path, writes the table
and its metadata sidecar.

Jobs:
-----
- simulate: synthetic path (states and observations) at a given parameter.
- online: self-organized filter over the observations, one row per time.
- iffit: iterated filtering over the cloned record, one row per pass.
- optimize: global noisy optimization of a payoff, one row per draw.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

# Import | Libraries
import numpy as np
import pandas as pd

# Import | Local Modules
import swing_smc
from swing_smc.conf import get_smc_config
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace
from swing_smc.engine import RngStreams, RunRecord, run_adaptive_fast, run_adaptive_slow, run_bootstrap_so_pf
from swing_smc.errors import ConfigError
from swing_smc.harness.harness_config import JobConfig
from swing_smc.harness.harness_data import load_observations
from swing_smc.harness.harness_output import write_frame, write_metadata, write_record
from swing_smc.kalman import run_rb_filter
from swing_smc.mle import IfConfig, pomp_schedule, run_if_fast, run_if_slow, run_noisy_opt
from swing_smc.models import (
    LgPeriodicModel,
    SsmModel,
    build_model,
    default_space,
    lg_sample_theta_star,
    simulate,
    urn_as_cloned_ssm,
    urn_simulate,
)


# =============================================================================
# Class
# =============================================================================

@dataclass
class RunArtifact:
    """
    Run Artifact Class
    ==================

    Attributes:
        kind (str): Job kind.
        frame (pd.DataFrame): Table written to the output file.
        record (Optional[RunRecord]): Run record (None for simulate jobs).
        meta (Dict[str, Any]): Config echo, seed, version, kernel
            application count and wall time.
        output (Optional[str]): Path written, if any.
    """

    kind: str
    frame: pd.DataFrame
    record: Optional[RunRecord] = None
    meta: Dict[str, Any] = field(default_factory=dict)
    output: Optional[str] = None

    @property
    def kernel_applications(self) -> int:
        return 0 if self.record is None else self.record.kernel_applications

    @property
    def wall_time(self) -> float:
        return float(self.meta.get("wall_time", 0.0))


class JobRunner:
    """
    Job Runner Class
    ================

    Attributes:
        config (JobConfig): Validated job.
        streams (RngStreams): Random streams of the job seed.
    """

    logger = logging.getLogger(__name__)

    def __init__(self, config: JobConfig) -> None:
        self.config = config
        self.streams = RngStreams(config.seed)

    # -------------------------------------------------------------------------
    # Building blocks
    # -------------------------------------------------------------------------

    def observations(self) -> np.ndarray:
        return load_observations(self.config.input, self.config.columns, self.config.transforms)

    def model(self) -> SsmModel:
        return build_model(self.config.model, self.config.model_params)

    def space(self, model: Optional[SsmModel], ys: Optional[np.ndarray]) -> ParameterSpace:
        declared = self.config.space
        if declared is not None:
            return ParameterSpace(
                lower=declared.get("lower"), upper=declared.get("upper"),
                discrete_set=declared.get("discrete"), bounds=declared.get("bounds"),
            )
        if model is None:
            raise ConfigError("space", "optimize jobs need an explicit search space")
        return default_space(self.config.model, model, ys)

    def schedule(self, space: ParameterSpace, epochs: bool) -> DynamicsSchedule:
        """
        Dynamics schedule of the job. The flavor defaults by algorithm and
        by the presence of discrete coordinates.
        """
        params = dict(self.config.schedule)
        flavor = params.pop("flavor", None)
        if flavor is None:
            if self.config.algorithm == "fast":
                flavor = "fast-vanishing"
            else:
                flavor = "mixed" if space.d2 > 0 else "slow-vanishing"
            self.config.schedule["flavor"] = self.config.inject_default("schedule.flavor", flavor)
        if epochs and params.get("first_epoch") is None:
            first = 1 + int(get_smc_config("dynamics", "first_epoch"))
            params["first_epoch"] = self.config.inject_default("schedule.first_epoch", first)
            self.config.schedule["first_epoch"] = first
        if params.get("sigma") is not None:
            params["sigma"] = np.asarray(params["sigma"], dtype=float)
        return DynamicsSchedule(flavor=flavor, reset_times=self.config.reset_times, **params)

    @staticmethod
    def urn_pairs(ys: np.ndarray) -> np.ndarray:
        w = ys.reshape(-1)
        return np.column_stack([w[:-1], w[1:]])

    # -------------------------------------------------------------------------
    # Jobs
    # -------------------------------------------------------------------------

    def simulate(self) -> Tuple[pd.DataFrame, Optional[RunRecord]]:
        config = self.config
        model = self.model()
        rng = self.streams.generator("simulate", 0)
        if config.theta is not None:
            theta = np.asarray(config.theta, dtype=float)
        elif isinstance(model, LgPeriodicModel):
            theta = lg_sample_theta_star(model.p, self.streams.generator("theta", 0))
            config.theta = config.inject_default("theta", theta.tolist())
        else:
            raise ConfigError("theta", "simulate jobs need the parameter")

        if config.model == "urn":
            w = urn_simulate(theta, int(config.T), rng)
            return pd.DataFrame({"t": np.arange(1, w.size + 1), "w": w}), None
        states, ys = simulate(model, theta, int(config.T), rng)
        data: Dict[str, Any] = {"t": np.arange(1, int(config.T) + 1)}
        if model.d_x:
            xs = np.vstack([np.asarray(s, dtype=float).reshape(1, -1) for s in states])
            for j in range(xs.shape[1]):
                data[f"x_{j + 1}"] = xs[:, j]
        for j in range(ys.shape[1]):
            data[f"y_{j + 1}"] = ys[:, j]
        return pd.DataFrame(data), None

    def online(self) -> Tuple[pd.DataFrame, Optional[RunRecord]]:
        config = self.config
        raw = self.observations()
        model = self.model()
        space = self.space(model, raw)
        ys = self.urn_pairs(raw) if config.model == "urn" else raw
        algorithm = config.algorithm
        epochs = algorithm == "slow" or (algorithm == "rb" and config.schedule.get("first_epoch") is not None)
        schedule = self.schedule(space, epochs)
        kwargs = dict(
            n_particles=config.n_particles, c_ess=config.c_ess, variant=config.variant,
            seed=self.streams, scheme=config.scheme, theta_star=config.theta,
        )
        if algorithm == "rb":
            if not isinstance(model, LgPeriodicModel):
                raise ConfigError("algorithm", "the marginalized filter runs on the lg-periodic model", config.model)
            record = run_rb_filter(model.spec, space, ys, schedule, "slow" if epochs else "bootstrap", **kwargs)
        elif algorithm == "bootstrap":
            record = run_bootstrap_so_pf(model, schedule, space, ys, **kwargs)
        elif algorithm == "fast":
            record = run_adaptive_fast(model, space, ys, schedule, **kwargs)
        else:
            record = run_adaptive_slow(model, space, ys, schedule, **kwargs)
        return record.to_frame(), record

    def iffit(self) -> Tuple[pd.DataFrame, Optional[RunRecord]]:
        config = self.config
        raw = self.observations()
        model = self.model()
        space = self.space(model, raw)
        if config.model == "urn":
            data, model = urn_as_cloned_ssm(raw)
            y_tilde = data.y_tilde
        else:
            y_tilde = raw
        T = int(y_tilde.shape[0])
        common = dict(
            n_particles=config.n_particles, c_ess=config.c_ess, max_passes=config.passes,
            scheme=config.scheme,
        )
        params = dict(config.schedule)
        flavor = params.get("flavor")
        if flavor is not None and flavor.startswith("pomp"):
            if params.get("alpha") is None:
                raise ConfigError("schedule.alpha", "pomp schedules need an explicit cooling factor")
            if_config = IfConfig(T=T, schedule=pomp_schedule(flavor.split("-", 1)[1], params["alpha"], T), **common)
        elif config.algorithm == "fast":
            if_config = IfConfig.fast(T, alpha=params.get("alpha"), sigma=params.get("sigma"), **common)
        elif flavor == "mixed" or (flavor is None and space.d2 > 0):
            if_config = IfConfig.mixed(
                T, alpha=params.get("alpha"), c=params.get("c"), beta=params.get("beta"),
                nu=params.get("nu"), delta=params.get("delta"), warmup_passes=config.warmup_passes,
                sigma=params.get("sigma"), **common,
            )
        else:
            if_config = IfConfig.slow(
                T, alpha=params.get("alpha"), nu=params.get("nu"), delta=params.get("delta"),
                warmup_passes=config.warmup_passes, sigma=params.get("sigma"), **common,
            )
        config.schedule["flavor"] = if_config.schedule.flavor
        runner = run_if_fast if config.algorithm == "fast" else run_if_slow
        record = runner(model, y_tilde, space, if_config, seed=self.streams, theta_star=config.theta)
        return record.to_frame(), record

    def optimize(self) -> Tuple[pd.DataFrame, Optional[RunRecord]]:
        config = self.config
        ys = self.observations()
        space = self.space(None, ys)
        schedule = self.schedule(space, epochs=True)
        record = run_noisy_opt(
            config.payoff, ys, space, schedule,
            n_particles=config.n_particles, c_ess=config.c_ess, seed=self.streams,
            scheme=config.scheme, theta_star=config.theta,
        )
        return record.to_frame(), record

    # -------------------------------------------------------------------------
    # Entry point
    # -------------------------------------------------------------------------

    def run(self) -> RunArtifact:
        config = self.config
        self.logger.info("Starting %s job (model=%s, seed=%d)", config.kind, config.model, config.seed)
        start = time.perf_counter()
        frame, record = getattr(self, config.kind)()
        wall_time = time.perf_counter() - start

        meta = config.echo()
        meta.update({
            "version": swing_smc.__version__,
            "kernel_applications": 0 if record is None else record.kernel_applications,
            "wall_time": wall_time,
            "rows": len(frame),
        })
        if config.output:
            if record is not None:
                write_record(record, config.output, meta)
            else:
                write_frame(frame, config.output)
                write_metadata(meta, config.output)
        self.logger.info("Finished %s job in %.3fs: %d rows", config.kind, wall_time, len(frame))
        return RunArtifact(kind=config.kind, frame=frame, record=record, meta=meta, output=config.output)


# =============================================================================
# Functions
# =============================================================================

def run_job(config: JobConfig) -> RunArtifact:
    """
    Run a job and write its output.

    Args:
        config (JobConfig): Validated job.

    Returns:
        RunArtifact: The table, the record and the metadata.
    """
    return JobRunner(config).run()


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "JobRunner",
    "RunArtifact",
    "run_job",
]
