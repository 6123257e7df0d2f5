# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Harness Tests
=============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import json

# Import | Libraries
import numpy as np
import pandas as pd
import pytest
import yaml

# Import | Local Modules
from swing_smc.__main__ import main
from swing_smc.engine import RunRecord
from swing_smc.errors import ConfigError, DataError
from swing_smc.harness import (
    JobConfig,
    JobRunner,
    day_start_difference,
    load_config,
    load_observations,
    read_metadata,
    read_record,
    run_job,
    write_record,
)


# =============================================================================
# Helpers
# =============================================================================

def _job(tmp_path, name="job.yaml", **fields):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(fields), encoding="utf-8")
    return str(path)


def _csv(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _simulate_lg(tmp_path, seed=3, T=48, name="sim.csv"):
    out = str(tmp_path / name)
    config = load_config(_job(tmp_path, f"{name}.yaml", kind="simulate", seed=seed, model="lg-periodic", T=T, output=out))
    return run_job(config), out


# =============================================================================
# Config
# =============================================================================

def test_defaults_are_injected(tmp_path):
    data = _csv(tmp_path, "y\n0.1\n0.2\n")
    config = load_config(_job(tmp_path, kind="online", seed=1, model="sv", input=data))
    assert config.algorithm == "slow"
    assert config.n_particles == 1000
    assert config.scheme == "ssp"
    assert config.schedule["alpha"] == 0.5
    for name in ("c_ess", "n_particles", "scheme", "variant", "algorithm", "schedule.alpha", "schedule.nu"):
        assert name in config.injected
    echo = config.echo()
    assert echo["schedule.nu"] == 100.0
    assert "c_ess" in echo["injected"]


def test_iterated_jobs_default_to_parameter_first(tmp_path):
    data = _csv(tmp_path, "y\n0.1\n0.2\n")
    config = load_config(_job(tmp_path, kind="iffit", seed=1, model="sv", input=data))
    assert config.variant == "theta-before-x"
    assert config.passes == 50
    assert config.warmup_passes == 10
    with pytest.raises(ConfigError):
        load_config(_job(tmp_path, kind="iffit", seed=1, model="sv", input=data, variant="theta-after-x"))


def test_box_error_names_the_coordinate(tmp_path):
    data = _csv(tmp_path, "y\n0.1\n")
    path = _job(tmp_path, kind="online", seed=1, model="sv", input=data,
                space={"lower": [-1.0, 0.5, 0.0], "upper": [1.0, 0.5, 1.0]})
    with pytest.raises(ConfigError) as info:
        load_config(path)
    assert info.value.field == "space.lower[1]"


@pytest.mark.parametrize(
    "space, field",
    [
        ({"discrete": [[-1], [0, 1]]}, "space.discrete[1]"),
        ({"discrete": [[0], [0.5]]}, "space.discrete[1]"),
        ({"discrete": []}, "space.discrete"),
        ({"discrete": [[0], [2]], "bounds": [3, 1]}, "space.bounds"),
        ({"lower": [0.0]}, "space"),
        ({"lower": [0.0], "upper": [1.0], "shape": "box"}, "space.shape"),
    ],
)
def test_space_errors_name_the_field(tmp_path, space, field):
    data = _csv(tmp_path, "y\n0.1\n")
    with pytest.raises(ConfigError) as info:
        load_config(_job(tmp_path, kind="online", seed=1, model="sv", input=data, space=space))
    assert info.value.field == field


def test_job_space_accepts_discrete_and_mixed_sets(tmp_path):
    data = _csv(tmp_path, "y\n0.1\n")
    config = load_config(_job(
        tmp_path, kind="online", seed=1, model="sv", input=data,
        space={"lower": [-1.0], "upper": [1.0], "discrete": [[0, 1], [2, 3]], "bounds": [0, 4]},
    ))
    space = JobRunner(config).space(None, None)
    assert (space.d1, space.d2) == (1, 2)
    assert space.bounds == (0, 4)


def test_iffit_needs_observations(tmp_path):
    with pytest.raises(ConfigError) as info:
        load_config(_job(tmp_path, kind="iffit", seed=1, model="sv"))
    assert info.value.field == "input"


@pytest.mark.parametrize(
    "fields, field",
    [
        ({"kind": "online", "seed": 1, "model": "sv", "colour": "red"}, "colour"),
        ({"kind": "online", "model": "sv"}, "seed"),
        ({"kind": "simulate", "seed": -4, "model": "sv", "T": 3}, "seed"),
        ({"kind": "simulate", "seed": 2 ** 64, "model": "sv", "T": 3}, "seed"),
        ({"kind": "simulate", "seed": 1, "model": "sv", "T": 3}, "theta"),
        ({"kind": "smooth", "seed": 1, "model": "sv"}, "kind"),
        ({"kind": "online", "seed": 1, "model": "sv", "input": "missing.csv"}, "input"),
        ({"kind": "online", "seed": 1, "model": "sv", "input": "x.csv", "schedule": {"gamma": 1}}, "schedule.gamma"),
    ],
)
def test_invalid_jobs(tmp_path, fields, field):
    with pytest.raises(ConfigError) as info:
        load_config(_job(tmp_path, **fields))
    assert info.value.field == field


def test_config_file_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "absent.yaml"))
    bad = tmp_path / "bad.yaml"
    bad.write_text("kind: [online\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(str(bad))


def test_overrides_take_precedence(tmp_path):
    config = load_config(_job(tmp_path, kind="simulate", seed=1, model="sv", T=5, theta=[0.9, 0.7, 0.2]))
    changed = config.with_overrides(seed=8, output=None)
    assert changed.seed == 8
    assert config.seed == 1
    assert changed.injected is not config.injected


def test_settings_section_applies(tmp_path):
    config = load_config(_job(tmp_path, kind="simulate", seed=1, model="sv", T=5, theta=[0.9, 0.7, 0.2],
                              settings={"engine": {"n_particles": 64}}))
    assert config.n_particles == 64
    assert config.echo()["settings.engine.n_particles"] == 64


# =============================================================================
# Data
# =============================================================================

def test_divide_transform(tmp_path):
    path = _csv(tmp_path, "a,b\n2,4\n6,8\n")
    ys = load_observations(path, transforms=[{"divide": 2, "columns": ["a"]}])
    assert np.array_equal(ys, [[1.0, 4.0], [3.0, 8.0]])


def test_column_selection(tmp_path):
    path = _csv(tmp_path, "a,b\n2,4\n6,8\n")
    assert np.array_equal(load_observations(path, columns=["b"]), [[4.0], [8.0]])
    with pytest.raises(DataError):
        load_observations(path, columns=["c"])


def test_day_start_difference():
    values = np.arange(7.0)
    assert day_start_difference(values, period=3).tolist() == [1.0, 2.0, 3.0, 1.0, 2.0, 3.0]
    with pytest.raises(DataError):
        day_start_difference(np.ones(1))


def test_day_difference_transform_drops_a_row(tmp_path):
    rows = "\n".join(str(v) for v in range(49))
    ys = load_observations(_csv(tmp_path, f"w\n{rows}\n"), transforms=[{"day_difference": 24}])
    assert ys.shape == (48, 1)
    assert ys[23, 0] == 24.0 and ys[24, 0] == 1.0


def test_non_numeric_cell_is_located(tmp_path):
    path = _csv(tmp_path, "x,y\n1.0,2.0\n3.0,abc\n")
    with pytest.raises(DataError) as info:
        load_observations(path)
    assert info.value.row == 2
    assert info.value.column == "y"


@pytest.mark.parametrize("text", ["", "y\n"])
def test_empty_inputs(tmp_path, text):
    with pytest.raises(DataError):
        load_observations(_csv(tmp_path, text))


def test_unknown_transform(tmp_path):
    with pytest.raises(ConfigError):
        load_observations(_csv(tmp_path, "y\n1\n"), transforms=[{"log": True}])


# =============================================================================
# Output
# =============================================================================

def test_record_round_trip_is_exact(tmp_path):
    record = RunRecord()
    for t in (1, 2, 3):
        value = np.array([1.0 / 3.0 * t, 0.1 + 0.2, np.pi / t])
        record.append(t, value, value * 0.5, np.zeros(0), 7.0 / t, t % 2 == 0, -np.e * t, 1)
    path = str(tmp_path / "run.csv")
    write_record(record, path, {"seed": 5, "wall_time": 0.25})
    back, meta = read_record(path)
    assert np.array_equal(back.theta_hat_array(), record.theta_hat_array())
    assert back.log_increment == record.log_increment
    assert back.resampled == record.resampled
    assert meta == {"seed": "5", "wall_time": "0.25"}


def test_missing_outputs(tmp_path):
    with pytest.raises(DataError):
        read_record(str(tmp_path / "none.csv"))
    with pytest.raises(DataError):
        read_metadata(str(tmp_path / "none.csv"))


# =============================================================================
# Jobs
# =============================================================================

def test_simulate_is_byte_deterministic(tmp_path):
    first, a = _simulate_lg(tmp_path, name="a.csv")
    _, b = _simulate_lg(tmp_path, name="b.csv")
    assert open(a, "rb").read() == open(b, "rb").read()
    assert list(first.frame.columns) == ["t", "x_1", "x_2", "y_1"]
    meta = read_metadata(a)
    assert "theta" in meta["injected"]
    assert meta["seed"] == "3"


def test_online_job_has_one_row_per_observation(tmp_path):
    _, data = _simulate_lg(tmp_path)
    out = str(tmp_path / "online.csv")
    config = JobConfig.from_dict({
        "kind": "online", "seed": 2, "model": "lg-periodic", "input": data, "columns": ["y_1"],
        "algorithm": "bootstrap", "n_particles": 100, "output": out,
        "schedule": {"flavor": "slow-vanishing"},
    })
    artifact = run_job(config)
    assert len(artifact.frame) == 48
    record, meta = read_record(out)
    assert record.t == list(range(1, 49))
    assert int(meta["kernel_applications"]) == artifact.kernel_applications
    assert float(meta["wall_time"]) >= 0.0


def test_marginalized_online_job(tmp_path):
    _, data = _simulate_lg(tmp_path, T=24)
    config = JobConfig.from_dict({
        "kind": "online", "seed": 2, "model": "lg-periodic", "input": data, "columns": ["y_1"],
        "algorithm": "rb", "n_particles": 50, "schedule": {"first_epoch": 5},
    })
    artifact = run_job(config)
    assert len(artifact.frame) == 24
    assert artifact.output is None


def test_urn_iffit_job(tmp_path):
    sim = str(tmp_path / "urn.csv")
    run_job(JobConfig.from_dict({
        "kind": "simulate", "seed": 4, "model": "urn", "theta": [5, 3, 4], "T": 20, "output": sim,
    }))
    config = JobConfig.from_dict({
        "kind": "iffit", "seed": 1, "model": "urn", "input": sim, "columns": ["w"],
        "passes": 3, "warmup_passes": 1, "n_particles": 100,
        "settings": {"models": {"urn_bound": 8}},
    })
    artifact = run_job(config)
    assert artifact.record.t == [1, 2, 3]
    assert config.schedule["flavor"] == "mixed"


def test_optimize_job(tmp_path):
    draws = np.random.default_rng(0).normal(0.5, 1.0, size=60)
    data = _csv(tmp_path, "y\n" + "\n".join(format(float(v), ".17g") for v in draws) + "\n")
    config = JobConfig.from_dict({
        "kind": "optimize", "seed": 1, "input": data, "n_particles": 200,
        "space": {"lower": [-2.0], "upper": [2.0]}, "schedule": {"first_epoch": 10},
    })
    artifact = run_job(config)
    assert len(artifact.frame) == 60
    assert config.payoff == "quadratic"


def test_optimize_job_over_a_discrete_space(tmp_path):
    draws = np.random.default_rng(4).normal(0.2, 1.0, size=200)
    data = _csv(tmp_path, "y\n" + "\n".join(format(float(v), ".17g") for v in draws) + "\n")
    config = JobConfig.from_dict({
        "kind": "optimize", "seed": 2, "input": data, "n_particles": 200,
        "space": {"discrete": [[-1], [0], [1]]}, "schedule": {"first_epoch": 10},
    })
    artifact = run_job(config)
    assert config.schedule["flavor"] == "mixed"
    assert len(artifact.frame) == 200
    assert set(artifact.frame["theta_proj_1"]) <= {-1.0, 0.0, 1.0}


# =============================================================================
# Command line
# =============================================================================

def test_cli_success(tmp_path):
    path = _job(tmp_path, kind="simulate", seed=1, model="sv", T=10, theta=[0.9, 0.7, 0.2])
    out = str(tmp_path / "cli.csv")
    assert main(["simulate", "--config", path, "--seed", "6", "--out", out]) == 0
    assert read_metadata(out)["seed"] == "6"
    assert len(pd.read_csv(out)) == 10


def test_cli_failure_prints_json(tmp_path, capsys):
    path = _job(tmp_path, kind="online", seed=1, model="sv", space={"lower": [1.0], "upper": [0.0]})
    assert main(["online", "--config", path]) == 1
    last = [line for line in capsys.readouterr().err.splitlines() if line.strip()][-1]
    payload = json.loads(last)
    assert payload["code"] == "config_invalid"
    assert payload["details"]["field"] == "space.lower[0]"
