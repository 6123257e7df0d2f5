# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Engine Tests
============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pandas as pd
import pytest
from scipy import stats

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace
from swing_smc.engine import (
    SCHEMES,
    ParticleCloud,
    RngStreams,
    RunRecord,
    advance,
    as_observations,
    ess,
    filter_mean_error,
    normalize_log_weights,
    offspring_count_replicates,
    offspring_counts,
    resample,
    run_adaptive_fast,
    run_adaptive_slow,
    run_bootstrap_so_pf,
    so_pf_step,
)
from swing_smc.errors import ConfigError, DataError, DegeneracyError, ScheduleError, SmcError
from swing_smc.models import SsmModel


# =============================================================================
# Helpers
# =============================================================================

class GaussianMean(SsmModel):
    """Y_t ~ N(theta, 1) without hidden state."""

    name = "gaussian-mean"
    d_x = 0

    def sample_initial(self, theta, rng):
        return np.zeros((np.atleast_2d(theta).shape[0], 0))

    def sample_transition(self, t, state, theta, rng):
        return state

    def obs_logdensity(self, t, y, state, theta):
        return stats.norm.logpdf(y[0], loc=theta[:, 0], scale=1.0)


class Impossible(GaussianMean):
    name = "impossible"

    def obs_logdensity(self, t, y, state, theta):
        return np.full(theta.shape[0], -np.inf)


@pytest.fixture
def space():
    return ParameterSpace.from_box([-3.0], [3.0])


@pytest.fixture
def ys():
    return np.random.default_rng(7).normal(0.8, 1.0, size=60)


# =============================================================================
# Resampling
# =============================================================================

def test_ess_values():
    assert ess(np.array([0.5, 0.25, 0.25])) == pytest.approx(8.0 / 3.0)
    assert ess(np.full(10, 0.1)) == pytest.approx(10.0)
    assert ess(np.array([1.0, 0.0, 0.0])) == pytest.approx(1.0)


def test_unnormalized_weights_are_rejected():
    with pytest.raises(SmcError):
        ess(np.array([0.5, 0.6]))
    with pytest.raises(SmcError):
        offspring_counts(np.array([1.5, -0.5]), 2, "ssp", np.random.default_rng(0))


@pytest.mark.parametrize("scheme", SCHEMES)
def test_counts_sum_to_offspring_number(scheme):
    rng = np.random.default_rng(3)
    for _ in range(50):
        N = int(rng.integers(1, 9))
        W = rng.dirichlet(np.ones(N))
        counts = offspring_counts(W, N, scheme, rng)
        assert counts.sum() == N
        assert counts.min() >= 0


@pytest.mark.parametrize("scheme", ["ssp", "systematic"])
def test_low_variance_schemes_stay_within_one(scheme):
    rng = np.random.default_rng(11)
    for _ in range(200):
        N = int(rng.integers(2, 9))
        W = rng.dirichlet(np.ones(N))
        counts = offspring_counts(W, N, scheme, rng)
        assert np.all(np.abs(counts - N * W) < 1.0)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_offspring_means_are_unbiased(scheme):
    rng = np.random.default_rng(5)
    W = np.array([0.05, 0.15, 0.3, 0.5])
    N, reps = W.size, 20_000
    total = np.zeros(N)
    for _ in range(reps):
        total += offspring_counts(W, N, scheme, rng)
    sd = np.sqrt(N * W * (1 - W) / reps)
    assert np.all(np.abs(total / reps - N * W) <= 4 * sd + 1e-9)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_offspring_replicates_match_single_draw_laws(scheme):
    rng = np.random.default_rng(8)
    W = np.array([0.05, 0.15, 0.3, 0.5])
    N, reps = W.size, 20_000
    counts = offspring_count_replicates(W, N, scheme, rng, reps)
    assert counts.shape == (reps, N)
    assert np.all(counts.sum(axis=1) == N)
    if scheme in ("ssp", "systematic"):
        assert np.all(np.abs(counts - N * W) < 1.0)
    sd = np.sqrt(N * W * (1 - W) / reps)
    assert np.all(np.abs(counts.mean(axis=0) - N * W) <= 4 * sd + 1e-9)
    single = offspring_count_replicates(np.array([1.0]), 5, scheme, rng, 3)
    assert single.tolist() == [[5], [5], [5]]


def test_ssp_single_particle():
    assert offspring_counts(np.array([1.0]), 5, "ssp", np.random.default_rng(0)).tolist() == [5]


def test_resample_returns_sorted_indices():
    W = np.array([0.1, 0.6, 0.3])
    indices = resample(W, 3, "multinomial", np.random.default_rng(1))
    assert indices.tolist() == sorted(indices.tolist())
    assert indices.min() >= 0 and indices.max() <= 2


def test_resample_needs_a_stream():
    with pytest.raises(SmcError):
        resample(np.array([0.5, 0.5]), 2, "ssp")


def test_unknown_scheme():
    with pytest.raises(SmcError):
        offspring_counts(np.array([0.5, 0.5]), 2, "residual", np.random.default_rng(0))


# =============================================================================
# Streams and weights
# =============================================================================

def test_streams_are_reproducible_and_distinct():
    a, b = RngStreams(99), RngStreams(99)
    assert np.array_equal(a.generator("kernel", 4).random(5), b.generator("kernel", 4).random(5))
    assert not np.array_equal(a.generator("kernel", 4).random(5), a.generator("kernel", 5).random(5))
    assert not np.array_equal(a.generator("kernel", 4).random(5), a.generator("resample", 4).random(5))


@pytest.mark.parametrize("seed", [-1, 2 ** 64, None])
def test_seed_range(seed):
    with pytest.raises(ConfigError):
        RngStreams(seed)


def test_largest_seed_is_accepted():
    RngStreams(2 ** 64 - 1).generator("initial", 0).random()


def test_log_weights_are_normalized_without_overflow():
    assert np.allclose(normalize_log_weights(np.array([1000.0, 1000.0])), [0.5, 0.5])
    with pytest.raises(DegeneracyError) as info:
        normalize_log_weights(np.array([-np.inf, -np.inf]), t=4)
    assert info.value.t == 4


def test_cloud_checks_sizes():
    with pytest.raises(SmcError):
        ParticleCloud(theta=np.zeros((3, 1)), state=None, logw=np.zeros(2))


def test_observations_shape():
    assert as_observations([1.0, 2.0]).shape == (2, 1)
    with pytest.raises(ConfigError):
        as_observations(np.zeros((3, 2)), d_y=1)


# =============================================================================
# Record
# =============================================================================

def _record():
    record = RunRecord()
    for t in (1, 2):
        record.append(
            t=t, theta_hat=np.array([0.1 * t, 1 / 3]), theta_proj=np.array([0.1 * t, 1 / 3]),
            state_mean=np.zeros(0), ess=9.5, resampled=t == 2, log_increment=-1.25, moved=1,
        )
    return record


def test_record_frame_columns():
    frame = _record().to_frame()
    assert list(frame.columns) == [
        "t", "theta_hat_1", "theta_hat_2", "theta_proj_1", "theta_proj_2",
        "ess", "resampled", "log_increment",
    ]
    assert frame["resampled"].tolist() == [0, 1]


def test_record_totals():
    record = _record()
    assert record.kernel_applications == 2
    assert record.log_likelihood == pytest.approx(-2.5)
    assert np.allclose(record.final_theta, [0.2, 1 / 3])


def test_record_from_frame():
    back = RunRecord.from_frame(_record().to_frame())
    assert back.t == [1, 2]
    assert np.array_equal(back.theta_hat_array(), _record().theta_hat_array())
    with pytest.raises(DataError):
        RunRecord.from_frame(pd.DataFrame({"t": [1]}))


# =============================================================================
# Filters
# =============================================================================

def test_bootstrap_run_shape_and_determinism(space, ys):
    schedule = DynamicsSchedule(flavor="slow-vanishing")
    first = run_bootstrap_so_pf(GaussianMean(), schedule, space, ys, n_particles=200, seed=3)
    second = run_bootstrap_so_pf(GaussianMean(), schedule, space, ys, n_particles=200, seed=3)
    assert len(first) == ys.size
    pd.testing.assert_frame_equal(first.to_frame(), second.to_frame())
    assert space.contains(np.vstack(first.theta_proj)).all()


def test_bootstrap_moves_at_every_step(space, ys):
    schedule = DynamicsSchedule(flavor="slow-vanishing")
    record = run_bootstrap_so_pf(
        GaussianMean(), schedule, space, ys, n_particles=50, seed=1, variant="theta-before-x",
    )
    assert record.kernel_applications == ys.size - 1


def test_seeds_change_the_run(space, ys):
    schedule = DynamicsSchedule(flavor="slow-vanishing")
    a = run_bootstrap_so_pf(GaussianMean(), schedule, space, ys, n_particles=100, seed=1)
    b = run_bootstrap_so_pf(GaussianMean(), schedule, space, ys, n_particles=100, seed=2)
    assert not np.array_equal(a.theta_hat_array(), b.theta_hat_array())


def test_fast_dynamics_move_only_on_resampling(space, ys):
    record = run_adaptive_fast(
        GaussianMean(), space, ys, n_particles=100, c_ess=0.5, seed=4, variant="theta-before-x",
    )
    assert record.kernel_applications == sum(record.resampled)
    assert record.moved == [int(flag) for flag in record.resampled]


def test_fast_runner_rejects_slow_schedule(space, ys):
    with pytest.raises(ScheduleError):
        run_adaptive_fast(GaussianMean(), space, ys, DynamicsSchedule(flavor="slow-vanishing"))


def test_slow_dynamics_resample_at_epochs(space, ys):
    schedule = DynamicsSchedule(flavor="slow-vanishing", first_epoch=5)
    record = run_adaptive_slow(GaussianMean(), space, ys, schedule, n_particles=100, c_ess=0.01, seed=2)
    for t in schedule.epochs_until(ys.size):
        assert record.resampled[t - 1]
        assert record.moved[t - 1] == 1


def test_full_threshold_resamples_every_step(space, ys):
    record = run_bootstrap_so_pf(
        GaussianMean(), DynamicsSchedule(), space, ys[:10], n_particles=30, c_ess=1.0, seed=0,
    )
    assert record.resampled == [False] + [True] * 9


def test_static_parameter_keeps_initial_support(space, ys):
    mu0 = lambda n, rng: np.full((n, 1), 0.5)  # noqa: E731
    record = run_bootstrap_so_pf(GaussianMean(), DynamicsSchedule(), space, ys, n_particles=20, mu0=mu0)
    assert np.allclose(record.theta_hat_array(), 0.5)
    assert record.kernel_applications == 0


def test_initial_sampler_outside_space(space, ys):
    mu0 = lambda n, rng: np.full((n, 1), 10.0)  # noqa: E731
    with pytest.raises(ConfigError):
        run_bootstrap_so_pf(GaussianMean(), DynamicsSchedule(), space, ys, n_particles=5, mu0=mu0)


def test_total_degeneracy_names_time(space, ys):
    with pytest.raises(DegeneracyError) as info:
        run_bootstrap_so_pf(Impossible(), DynamicsSchedule(), space, ys, n_particles=5)
    assert info.value.t == 1


def test_invalid_threshold_and_variant(space, ys):
    with pytest.raises(ConfigError):
        run_bootstrap_so_pf(GaussianMean(), DynamicsSchedule(), space, ys, c_ess=0.0)
    with pytest.raises(ConfigError):
        run_bootstrap_so_pf(GaussianMean(), DynamicsSchedule(), space, ys, variant="sideways")
    with pytest.raises(ConfigError):
        run_bootstrap_so_pf(GaussianMean(), DynamicsSchedule(), space, ys[:0])


def test_single_step_api(space):
    cloud = ParticleCloud.uniform(np.linspace(-1, 1, 20).reshape(-1, 1), np.zeros((20, 0)), t=3)
    out = so_pf_step(cloud, GaussianMean(), DynamicsSchedule(flavor="slow-vanishing"), space, 0.4, 8)
    assert out.t == 4
    assert out.theta.shape == (20, 1)


def test_forced_step_resamples(space):
    cloud = ParticleCloud.uniform(np.zeros((10, 1)), np.zeros((10, 0)), t=1)
    outcome = advance(
        cloud, GaussianMean(), DynamicsSchedule(flavor="slow-vanishing"), space, np.array([0.0]),
        RngStreams(0), c_ess=0.1, gate="resample", force=True,
    )
    assert outcome.resampled and outcome.moved
    assert outcome.cloud.resampled_at == [2]


def test_filter_mean_error():
    record = RunRecord()
    for t, mean in enumerate([[1.0, 0.0], [0.0, 2.0]], start=1):
        record.append(t, np.zeros(1), np.zeros(1), np.array(mean), 1.0, False, 0.0, 0)
    error = filter_mean_error(record, np.zeros((2, 2)))
    assert np.allclose(error, [1.0, 2.0])
