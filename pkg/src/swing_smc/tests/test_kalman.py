# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Kalman Tests
============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pytest
from scipy import stats

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace
from swing_smc.engine import filter_mean_error
from swing_smc.errors import ConfigError, KalmanError
from swing_smc.kalman import (
    KalmanState,
    RaoBlackwellModel,
    kf_filter,
    kf_loglik,
    kf_step,
    run_rb_filter,
)


# =============================================================================
# Fixtures
# =============================================================================

THETA = np.array([0.6, 0.5, 0.8])


@pytest.fixture
def box():
    return ParameterSpace.from_box([-1.0, 0.01, 0.01], [1.0, 2.0, 2.0])


@pytest.fixture
def ys():
    return np.random.default_rng(21).normal(size=(25, 1))


def _fixed(theta):
    return lambda n, rng: np.tile(theta, (n, 1))


# =============================================================================
# Exact filter
# =============================================================================

def test_single_step_static_case(scalar_spec):
    theta = np.array([0.0, 0.0, 1.0])
    state, loglik = kf_step(scalar_spec.initial_state(theta), scalar_spec, theta, 1, np.array([0.0]))
    assert state.mean[0, 0] == pytest.approx(0.0)
    assert state.cov[0, 0, 0] == pytest.approx(0.5)
    assert loglik == pytest.approx(stats.norm.logpdf(0.0, scale=np.sqrt(2.0)))


def test_update_moves_mean_halfway(scalar_spec):
    theta = np.array([0.0, 0.0, 1.0])
    state, _ = kf_step(scalar_spec.initial_state(theta), scalar_spec, theta, 1, np.array([1.0]))
    assert state.mean[0, 0] == pytest.approx(0.5)


def test_two_step_loglik_matches_joint_gaussian(scalar_spec):
    rho, q, r = THETA
    ys = np.array([[0.3], [-1.1]])
    cov = np.array([[1 + r, rho], [rho, rho ** 2 + q + r]])
    expected = stats.multivariate_normal(mean=np.zeros(2), cov=cov).logpdf(ys[:, 0])
    assert kf_loglik(scalar_spec, THETA, ys) == pytest.approx(expected, rel=1e-10)


def test_empty_sequence_has_zero_loglik(scalar_spec):
    assert kf_loglik(scalar_spec, THETA, np.zeros((0, 1))) == 0.0


def test_filter_outputs(scalar_spec, ys):
    total, means, covs = kf_filter(scalar_spec, THETA, ys)
    assert means.shape == (25, 1)
    assert covs.shape == (25, 1, 1)
    assert np.all(covs > 0)
    assert np.isfinite(total)


def test_batch_matches_single_rows(scalar_spec):
    thetas = np.array([[0.6, 0.5, 0.8], [-0.2, 1.0, 0.3]])
    y = np.array([0.7])
    batch, batch_ll = kf_step(scalar_spec.initial_state(thetas), scalar_spec, thetas, 1, y)
    for i in range(2):
        one, one_ll = kf_step(scalar_spec.initial_state(thetas[i]), scalar_spec, thetas[i], 1, y)
        assert batch_ll[i] == pytest.approx(one_ll)
        assert np.allclose(batch.mean[i], one.mean[0])


def test_non_positive_innovation_raises(scalar_spec):
    theta = np.array([0.5, 0.5, -5.0])
    with pytest.raises(KalmanError) as info:
        kf_step(scalar_spec.initial_state(theta), scalar_spec, theta, 1, np.array([0.0]))
    assert info.value.t == 1


def test_state_validity():
    assert KalmanState(np.zeros(2), np.eye(2)).is_valid()
    assert not KalmanState(np.zeros(2), np.array([[1.0, 0.0], [0.0, -1.0]])).is_valid()


# =============================================================================
# Marginalized filter
# =============================================================================

@pytest.mark.parametrize("n_particles", [1, 5])
def test_degenerate_parameter_cloud_recovers_exact_loglik(scalar_spec, box, ys, n_particles):
    record = run_rb_filter(
        scalar_spec, box, ys, DynamicsSchedule(),
        n_particles=n_particles, mu0=_fixed(THETA), seed=0,
    )
    assert record.log_likelihood == pytest.approx(kf_loglik(scalar_spec, THETA, ys), rel=1e-9)


def test_rb_state_means_follow_kalman(scalar_spec, box, ys):
    record = run_rb_filter(scalar_spec, box, ys, DynamicsSchedule(), n_particles=3, mu0=_fixed(THETA))
    _, means, _ = kf_filter(scalar_spec, THETA, ys)
    assert np.allclose(filter_mean_error(record, means), 0.0, atol=1e-10)


def test_singular_particles_get_zero_weight(scalar_spec):
    model = RaoBlackwellModel(scalar_spec)
    thetas = np.array([[0.5, 0.5, 1.0], [0.5, 0.5, -5.0]])
    loglik, _ = model.condition(1, np.array([0.0]), model.sample_initial(thetas, None), thetas)
    assert np.isfinite(loglik[0])
    assert loglik[1] == -np.inf


def test_predictive_draws(scalar_spec, rng):
    model = RaoBlackwellModel(scalar_spec)
    thetas = np.tile(THETA, (4, 1))
    draws = model.sample_observation(1, model.sample_initial(thetas, rng), thetas, rng)
    assert draws.shape == (4, 1)


@pytest.mark.parametrize("algorithm", ["bootstrap", "fast", "slow"])
def test_rb_runners(scalar_spec, box, ys, algorithm):
    flavor = {"bootstrap": "slow-vanishing", "fast": "fast-vanishing", "slow": "slow-vanishing"}
    schedule = DynamicsSchedule(flavor=flavor[algorithm], first_epoch=5)
    record = run_rb_filter(scalar_spec, box, ys, schedule, algorithm, n_particles=50, seed=1)
    assert len(record) == ys.shape[0]
    assert box.contains(record.final_projection)


def test_unknown_rb_algorithm(scalar_spec, box, ys):
    with pytest.raises(ConfigError):
        run_rb_filter(scalar_spec, box, ys, DynamicsSchedule(), "smoothing")
