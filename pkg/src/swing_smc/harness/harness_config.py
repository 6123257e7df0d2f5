# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Job Config Class
=========================

YAML job files describing one run of the toolkit. A minimal online job:

    kind: online
    model: sv
    seed: 7
    input: returns.csv
    output: run.csv
    algorithm: slow
    schedule:
      flavor: slow-vanishing
      first_epoch: 101

Omitted settings are filled from `swing_smc.conf` and listed in
`JobConfig.injected`, so the run metadata records every value used. An
optional `settings:` block is passed to `configure_settings`.

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import dataclasses
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

# Import | Libraries
import yaml

# Import | Local Modules
from swing_smc.conf import configure_settings, get_smc_config
from swing_smc.dynamics import FLAVORS
from swing_smc.engine import VARIANTS
from swing_smc.errors import ConfigError


# =============================================================================
# Logger
# =============================================================================

logger = logging.getLogger(__name__)


# =============================================================================
# Variables
# =============================================================================

KINDS: Tuple[str, ...] = ("simulate", "online", "iffit", "optimize")

ALGORITHMS: Dict[str, Tuple[str, ...]] = {
    "simulate": (),
    "online": ("bootstrap", "fast", "slow", "rb"),
    "iffit": ("fast", "slow"),
    "optimize": ("slow",),
}

SCHEDULE_KEYS = (
    "flavor", "alpha", "sigma", "nu", "delta", "first_epoch", "c",
    "alpha_1", "alpha_2", "beta", "h1_zero",
)

SPACE_KEYS = ("lower", "upper", "discrete", "bounds")

SEED_LIMIT = 2 ** 64


# =============================================================================
# Class
# =============================================================================

@dataclass
class JobConfig:
    """
    Job Config Class
    ================

    Attributes:
        kind (str): One of `KINDS`.
        seed (int): Master seed, 0 <= seed < 2^64.
        model (Optional[str]): Registered model name; optimize jobs run on
            a payoff instead.
        model_params (Dict[str, Any]): Model keyword parameters.
        space (Optional[Dict[str, Any]]): Box with "lower" and "upper"
            lists, a "discrete" list of integer rows with optional
            "bounds", or both; the model default when None.
        schedule (Dict[str, Any]): `DynamicsSchedule` keyword parameters.
        algorithm (Optional[str]): Runner, see `ALGORITHMS`.
        n_particles (Optional[int]): N.
        c_ess (Optional[float]): Resampling threshold factor.
        variant (Optional[str]): State and parameter ordering.
        scheme (Optional[str]): Resampling scheme.
        passes (Optional[int]): Pass budget K of iterated filtering.
        warmup_passes (Optional[int]): Passes before the first epoch of
            slow iterated filtering.
        input (Optional[str]): Observation CSV.
        columns (Optional[List[str]]): Columns read from the input.
        transforms (List[Dict[str, Any]]): Input transforms, in order.
        output (Optional[str]): Output CSV path.
        reset_times (List[int]): Times after which h_t restarts.
        theta (Optional[List[float]]): Parameter of simulate jobs, ground
            truth of the others.
        T (Optional[int]): Length of simulated data.
        payoff (Optional[str]): Payoff of optimize jobs.
        settings (Dict[str, Any]): Toolkit setting overrides.
        injected (List[str]): Fields filled with defaults.
    """

    kind: str
    seed: int
    model: Optional[str] = None
    model_params: Dict[str, Any] = field(default_factory=dict)
    space: Optional[Dict[str, Any]] = None
    schedule: Dict[str, Any] = field(default_factory=dict)
    algorithm: Optional[str] = None
    n_particles: Optional[int] = None
    c_ess: Optional[float] = None
    variant: Optional[str] = None
    scheme: Optional[str] = None
    passes: Optional[int] = None
    warmup_passes: Optional[int] = None
    input: Optional[str] = None
    columns: Optional[List[str]] = None
    transforms: List[Dict[str, Any]] = field(default_factory=list)
    output: Optional[str] = None
    reset_times: List[int] = field(default_factory=list)
    theta: Optional[List[float]] = None
    T: Optional[int] = None
    payoff: Optional[str] = None
    settings: Dict[str, Any] = field(default_factory=dict)
    injected: List[str] = field(default_factory=list)

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    @classmethod
    def from_dict(cls, raw: Mapping[str, Any]) -> "JobConfig":
        """
        Build and validate a config from a parsed mapping.

        Args:
            raw (Mapping[str, Any]): Parsed YAML document.

        Returns:
            JobConfig: The validated config with defaults filled.
        """
        if not isinstance(raw, Mapping):
            raise ConfigError("config", "job file must hold a mapping")
        known = {f.name for f in dataclasses.fields(cls)} - {"injected"}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ConfigError(unknown[0], "unknown configuration field")
        for name in ("kind", "seed"):
            if raw.get(name) is None:
                raise ConfigError(name, "required field is missing")
        config = cls(**{k: v for k, v in raw.items() if v is not None})
        config.settings = dict(config.settings or {})
        if config.settings:
            configure_settings(config.settings)
        config.validate()
        return config

    def with_overrides(self, **overrides: Any) -> "JobConfig":
        """Copy with command-line values taking precedence over the file."""
        values = {k: v for k, v in overrides.items() if v is not None}
        if not values:
            return self
        logger.debug("Command-line overrides: %s", sorted(values))
        config = dataclasses.replace(self, injected=list(self.injected), **values)
        config.validate()
        return config

    # -------------------------------------------------------------------------
    # Validation
    # -------------------------------------------------------------------------

    def inject_default(self, name: str, value: Any) -> Any:
        """Record `name` as filled by default and return `value`."""
        if name not in self.injected:
            self.injected.append(name)
        return value

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ConfigError("kind", f"must be one of {list(KINDS)}", self.kind)
        self._validate_seed()
        self.model_params = dict(self.model_params or {})
        self._validate_space()
        self._validate_engine()
        self._validate_schedule()
        self._validate_kind()

    def _validate_seed(self) -> None:
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigError("seed", "must be an integer", self.seed)
        if not 0 <= self.seed < SEED_LIMIT:
            raise ConfigError("seed", "must lie in [0, 2^64)", self.seed)

    def _validate_space(self) -> None:
        if self.space is None:
            return
        if not isinstance(self.space, Mapping):
            raise ConfigError("space", "must be a mapping with a box and/or a discrete set")
        unknown = sorted(set(self.space) - set(SPACE_KEYS))
        if unknown:
            raise ConfigError(f"space.{unknown[0]}", "unknown space field")
        lower = self.space.get("lower")
        upper = self.space.get("upper")
        discrete = self.space.get("discrete")
        if (lower is None) != (upper is None):
            raise ConfigError("space", "box needs both lower and upper lists")
        if lower is None and discrete is None:
            raise ConfigError("space", "needs a box (lower, upper) or a discrete set")
        if lower is not None:
            if len(lower) != len(upper):
                raise ConfigError("space", "lower and upper have different lengths")
            for i, (lo, hi) in enumerate(zip(lower, upper)):
                if not float(lo) < float(hi):
                    raise ConfigError(f"space.lower[{i}]", f"must be below space.upper[{i}]", [lo, hi])
        if discrete is not None:
            rows = [row if isinstance(row, (list, tuple)) else [row] for row in discrete]
            if not rows:
                raise ConfigError("space.discrete", "discrete set is empty")
            width = len(rows[0])
            for i, row in enumerate(rows):
                if len(row) != width:
                    raise ConfigError(f"space.discrete[{i}]", f"must hold {width} integers", row)
                if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
                    raise ConfigError(f"space.discrete[{i}]", "must hold integers", row)
            bounds = self.space.get("bounds")
            if bounds is not None and (len(bounds) != 2 or int(bounds[0]) > int(bounds[1])):
                raise ConfigError("space.bounds", "must be [a, b] with a <= b", bounds)

    def _validate_engine(self) -> None:
        if self.c_ess is None:
            self.c_ess = self.inject_default("c_ess", float(get_smc_config("engine", "c_ess")))
        if not 0.0 < float(self.c_ess) <= 1.0:
            raise ConfigError("c_ess", "must lie in (0, 1]", self.c_ess)
        if self.n_particles is None:
            self.n_particles = self.inject_default("n_particles", int(get_smc_config("engine", "n_particles")))
        if int(self.n_particles) < 1:
            raise ConfigError("n_particles", "must be at least 1", self.n_particles)
        if self.scheme is None:
            self.scheme = self.inject_default("scheme", get_smc_config("engine", "scheme"))
        if self.variant is None:
            default = "theta-before-x" if self.kind in ("iffit", "optimize") else get_smc_config("engine", "variant")
            self.variant = self.inject_default("variant", default)
        if self.variant not in VARIANTS:
            raise ConfigError("variant", f"must be one of {list(VARIANTS)}", self.variant)
        if self.kind in ("iffit", "optimize") and self.variant != "theta-before-x":
            raise ConfigError("variant", f"{self.kind} jobs move the parameter before the state", self.variant)

    def _validate_schedule(self) -> None:
        self.schedule = dict(self.schedule or {})
        unknown = sorted(set(self.schedule) - set(SCHEDULE_KEYS))
        if unknown:
            raise ConfigError(f"schedule.{unknown[0]}", "unknown schedule field")
        if self.kind == "simulate":
            return
        flavor = self.schedule.get("flavor")
        if flavor is not None and flavor not in FLAVORS:
            raise ConfigError("schedule.flavor", f"must be one of {list(FLAVORS)}", flavor)
        if "alpha" not in self.schedule and not (flavor or "").startswith("pomp"):
            default = "alpha_fast" if flavor == "fast-vanishing" or self.algorithm == "fast" else "alpha_slow"
            self.schedule["alpha"] = self.inject_default("schedule.alpha", float(get_smc_config("dynamics", default)))
        if "nu" not in self.schedule:
            self.schedule["nu"] = self.inject_default("schedule.nu", float(get_smc_config("dynamics", "nu")))
        if "sigma" not in self.schedule:
            self.schedule["sigma"] = self.inject_default("schedule.sigma", None)
        self.reset_times = [int(t) for t in (self.reset_times or [])]
        if any(t < 1 for t in self.reset_times):
            raise ConfigError("reset_times", "must be positive times", self.reset_times)

    def _validate_kind(self) -> None:
        if self.kind != "optimize" and self.model is None:
            raise ConfigError("model", "required field is missing")
        allowed = ALGORITHMS[self.kind]
        if allowed:
            if self.algorithm is None:
                self.algorithm = self.inject_default("algorithm", "slow")
            if self.algorithm not in allowed:
                raise ConfigError("algorithm", f"must be one of {list(allowed)} for {self.kind} jobs", self.algorithm)
        if self.kind == "simulate":
            if self.T is None or int(self.T) < 1:
                raise ConfigError("T", "simulate jobs need a positive length", self.T)
            if self.theta is None and self.model not in ("lg-periodic",):
                raise ConfigError("theta", "simulate jobs need the parameter unless it can be drawn")
        elif self.input is None:
            reason = "iffit jobs derive T from the observed record" if self.kind == "iffit" else "observations are required"
            raise ConfigError("input", reason)
        if self.kind == "iffit":
            if self.passes is None:
                self.passes = self.inject_default("passes", int(get_smc_config("mle", "max_passes")))
            if int(self.passes) < 1:
                raise ConfigError("passes", "must be at least 1", self.passes)
            if self.algorithm == "slow" and self.warmup_passes is None:
                self.warmup_passes = self.inject_default("warmup_passes", int(get_smc_config("mle", "warmup_passes")))
        if self.kind == "optimize" and self.payoff is None:
            self.payoff = self.inject_default("payoff", "quadratic")
        if self.input is not None and not os.path.exists(self.input):
            raise ConfigError("input", "file not found", self.input)

    # -------------------------------------------------------------------------
    # Echo
    # -------------------------------------------------------------------------

    def echo(self) -> Dict[str, Any]:
        """Flat key-value view of every setting used, defaults included."""
        flat: Dict[str, Any] = {}
        for f in dataclasses.fields(self):
            if f.name in ("injected", "settings"):
                continue
            value = getattr(self, f.name)
            if isinstance(value, dict):
                for key in sorted(value):
                    flat[f"{f.name}.{key}"] = value[key]
            else:
                flat[f.name] = value
        for section in sorted(self.settings):
            for key in sorted(self.settings[section] or {}):
                flat[f"settings.{section}.{key}"] = self.settings[section][key]
        flat["injected"] = ",".join(self.injected)
        return flat


# =============================================================================
# Functions
# =============================================================================

def load_config(path: str) -> JobConfig:
    """
    Read and validate a YAML job file.

    Args:
        path (str): Path to the job file.

    Returns:
        JobConfig: The validated config.
    """
    if not os.path.exists(path):
        raise ConfigError("config", "file not found", path)
    with open(path, "r", encoding="utf-8") as handle:
        try:
            raw = yaml.safe_load(handle)
        except yaml.YAMLError as exc:
            raise ConfigError("config", f"invalid YAML: {exc}", path) from exc
    logger.info("Loaded job config from %s", path)
    return JobConfig.from_dict(raw or {})


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "ALGORITHMS",
    "KINDS",
    "JobConfig",
    "load_config",
]
