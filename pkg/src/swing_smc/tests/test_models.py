# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Model Tests
===========

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pytest
from scipy import stats

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule
from swing_smc.engine import run_bootstrap_so_pf
from swing_smc.errors import ConfigError, ModelError
from swing_smc.kalman import kf_loglik
from swing_smc.models import (
    LgPeriodicModel,
    SeirdModel,
    SplineBasis,
    SvModel,
    UrnPairModel,
    beta_logpdf,
    beta_obs_logdensity,
    build_model,
    default_knots,
    default_space,
    effective_reproduction,
    lg_periodic_model,
    lg_sample_theta_star,
    sample_dirichlet,
    seird_default_space,
    seird_map,
    simulate,
    stationary_initial,
    urn_as_cloned_ssm,
    urn_grid_mle,
    urn_loglik,
    urn_parameter_space,
    urn_simulate,
    urn_transition,
)


# =============================================================================
# Spline basis
# =============================================================================

def test_basis_is_cardinal_on_knots():
    basis = SplineBasis(default_knots(2))
    assert np.allclose(basis(0.0), [0.0, 0.0])
    assert np.allclose(basis(12.0), [1.0, 0.0])
    assert np.allclose(basis(24.0), [0.0, 1.0])


def test_basis_is_natural():
    basis = SplineBasis(default_knots(4))
    assert np.allclose(basis(0.0, nu=2), 0.0, atol=1e-12)
    assert np.allclose(basis(24.0, nu=2), 0.0, atol=1e-12)


def test_basis_rows_follow_the_hour():
    basis = SplineBasis(default_knots(3))
    assert basis.rows.shape == (24, 3)
    assert SplineBasis.hour_of(24) == 24
    assert SplineBasis.hour_of(25) == 1
    assert np.array_equal(basis.row(49), basis.row(1))


@pytest.mark.parametrize("knots", [[0.0, 12.0], [0.0, 12.0, 12.0, 24.0], [24.0]])
def test_invalid_knots(knots):
    with pytest.raises(ModelError):
        SplineBasis(knots)


def test_basis_domain():
    with pytest.raises(ModelError):
        SplineBasis(default_knots(2))(25.0)


# =============================================================================
# Linear-Gaussian
# =============================================================================

def test_lg_dimensions_and_truth():
    model, spec = lg_periodic_model(p=2)
    theta = lg_sample_theta_star(2, np.random.default_rng(0))
    assert model.d == 7
    assert spec.period == 24
    assert model.default_space().contains(theta)
    assert theta[4] == 0.5 and np.array_equal(theta[5:], [1.0, 1.0])


def test_lg_kalman_observation_map_matches_raw_model():
    model = LgPeriodicModel(p=2)
    theta = np.array([[1.0, -0.5, 0.3, 0.2, 0.7, 1.0, 1.0]])
    m, A, B = model.spec.observation(5, theta)
    state = np.array([[0.4, -0.1]])
    raw = model.obs_logdensity(5, np.array([0.9]), state, theta)
    mean = m[0, 0] + A[0, 0] @ state[0]
    assert raw[0] == pytest.approx(stats.norm.logpdf(0.9, loc=mean, scale=np.sqrt(B[0, 0, 0])))


def test_lg_raw_filter_approaches_exact_loglik():
    model = LgPeriodicModel(p=2)
    theta = np.array([0.5, -0.5, 0.6, 0.3, 0.5, 1.0, 1.0])
    _, ys = simulate(model, theta, 24, np.random.default_rng(4))
    fixed = lambda n, rng: np.tile(theta, (n, 1))  # noqa: E731
    record = run_bootstrap_so_pf(
        model, DynamicsSchedule(), model.default_space(), ys, n_particles=4000, mu0=fixed, seed=6,
    )
    assert record.log_likelihood == pytest.approx(kf_loglik(model.spec, theta, ys), abs=1.0)
    assert model.exact_loglik(theta, ys) == pytest.approx(kf_loglik(model.spec, theta, ys))


def test_lg_zero_observation_scale():
    model = LgPeriodicModel(p=1)
    theta = np.array([[0.0, 0.5, 0.0, 1.0]])
    assert model.obs_logdensity(1, np.array([0.0]), np.zeros((1, 1)), theta)[0] == -np.inf
    with pytest.raises(ModelError):
        model.unpack(np.array([[0.0, 0.5, -1.0, 1.0]]))


# =============================================================================
# Stochastic volatility
# =============================================================================

def test_sv_observation_density():
    model = SvModel()
    theta = np.array([[0.9, 0.7, 0.2]])
    x = np.array([[0.4]])
    expected = stats.norm.logpdf(1.3, scale=0.7 * np.exp(0.2))
    assert model.obs_logdensity(3, np.array([1.3]), x, theta)[0] == pytest.approx(expected)


def test_sv_stationary_initial_law():
    mean, sd = stationary_initial(np.array([[0.6, 1.0, 0.8], [1.0, 1.0, 0.8]]))
    assert np.allclose(mean, 0.0)
    assert sd[0] == pytest.approx(0.8 / np.sqrt(1 - 0.36))
    assert sd[1] == pytest.approx(0.8)


def test_sv_rejects_bad_parameters():
    with pytest.raises(ModelError):
        SvModel().unpack(np.array([[0.5, 0.0, 0.1]]))
    with pytest.raises(ModelError):
        SvModel(variant="laplace")


@pytest.mark.parametrize("variant", ["student", "gaussian"])
def test_sv_simulation(variant):
    states, ys = simulate(SvModel(variant=variant), np.array([0.9, 0.7, 0.2]), 30, np.random.default_rng(1))
    assert len(states) == 30
    assert ys.shape == (30, 1)
    assert np.all(np.isfinite(ys))


# =============================================================================
# SEIRD
# =============================================================================

def test_seird_map_conserves_mass():
    w = np.array([[0.97, 0.01, 0.01, 0.005, 0.005], [0.5, 0.2, 0.2, 0.05, 0.05]])
    out = seird_map(w, beta=np.array([0.3, 0.4]), q=np.array([0.7, 0.9]), eta=0.2, gamma=0.1, mu=0.01)
    assert np.allclose(out.sum(axis=1), w.sum(axis=1), atol=1e-12)


def test_dirichlet_support(rng):
    alpha = np.array([[2.0, 0.0, 1.0], [1.0, -1.0, 1.0], [0.0, 0.0, 0.0]])
    draws = sample_dirichlet(alpha, rng)
    assert draws[0].sum() == pytest.approx(1.0)
    assert draws[0, 1] == 0.0
    assert np.isnan(draws[1]).all()
    assert np.isnan(draws[2]).all()


def test_beta_logpdf():
    assert beta_logpdf(0.3, np.array([2.0]), np.array([3.0]))[0] == pytest.approx(stats.beta.logpdf(0.3, 2, 3))
    assert beta_logpdf(0.0, np.array([2.0]), np.array([3.0]))[0] == -np.inf
    assert beta_logpdf(1.0, np.array([2.0]), np.array([3.0]))[0] == -np.inf
    assert beta_logpdf(0.3, np.array([-1.0]), np.array([3.0]))[0] == -np.inf


def test_beta_obs_logdensity_scores_zero_counts_by_tail_mass():
    threshold = 1e-8
    a, b = np.array([0.0, 2.0, np.nan]), np.array([3.0, 3.0, 3.0])
    out = beta_obs_logdensity(0.0, a, b, threshold)
    assert out[0] == 0.0
    assert out[1] == pytest.approx(stats.beta.logcdf(threshold, 2.0, 3.0))
    assert out[2] == -np.inf
    assert beta_obs_logdensity(1.0, np.array([3.0]), np.array([0.0]), threshold)[0] == 0.0
    assert beta_obs_logdensity(0.3, np.array([2.0]), np.array([3.0]), threshold)[0] == pytest.approx(
        stats.beta.logpdf(0.3, 2.0, 3.0)
    )
    assert beta_obs_logdensity(0.3, np.array([0.0]), np.array([3.0]), threshold)[0] == -np.inf


def test_seird_zero_threshold_follows_population():
    assert SeirdModel(population=1000).zero_threshold == pytest.approx(5e-4)
    with pytest.raises(ModelError):
        SeirdModel(population=-1.0)


def test_seird_filter_runs_on_simulated_paths():
    model = SeirdModel()
    theta = np.array([0.2, 0.1, 0.01, 0.05, 0.05, 1e-5, 1e-5, 1e-5])
    fixed = lambda n, rng: np.tile(theta, (n, 1))  # noqa: E731
    paths_with_zeros = 0
    for seed in range(20):
        _, ys = simulate(model, theta, 60, np.random.default_rng(seed))
        paths_with_zeros += int(np.any(ys <= model.zero_threshold))
        record = run_bootstrap_so_pf(
            model, DynamicsSchedule(), seird_default_space(), ys, n_particles=200, mu0=fixed, seed=seed,
        )
        assert np.isfinite(record.log_likelihood)
    assert paths_with_zeros > 0


def test_effective_reproduction():
    theta = np.array([0.25, 0.25, 0.25, 0.1, 0.1, 1e-5, 1e-5, 1e-5])
    state = np.array([1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0])
    assert effective_reproduction(theta, state) == pytest.approx(3.0)
    with pytest.raises(ModelError):
        effective_reproduction(np.array([0.0, 0.0, 0.0, 0.1, 0.1, 1e-5, 1e-5, 1e-5]), state)


def test_seird_states_and_observations(rng):
    model = SeirdModel()
    theta = np.tile([0.2, 0.1, 0.01, 0.05, 0.05, 1e-5, 1e-5, 1e-5], (20, 1))
    state = model.sample_initial(theta, rng)
    assert state.shape == (20, 7)
    assert np.allclose(state[:, :5].sum(axis=1), 1.0)
    assert model.sample_observation(1, state, theta, rng).shape == (20, 2)
    assert np.isfinite(model.obs_logdensity(1, np.array([1e-5, 1e-7]), state[:1], theta[:1])[0])
    assert seird_default_space().contains(theta).all()


# =============================================================================
# Urn
# =============================================================================

def test_urn_transition_probabilities():
    theta = np.array([2.0, 2.0, 2.0])
    assert urn_transition(theta, 1, 0) == pytest.approx(0.25)
    assert urn_transition(theta, 1, 1) == pytest.approx(0.5)
    assert urn_transition(theta, 1, 2) == pytest.approx(0.25)
    assert urn_transition(theta, 1, 3) == 0.0


def test_urn_path_stays_in_support():
    path = urn_simulate(np.array([5, 3, 4]), 200, np.random.default_rng(2))
    assert path[0] == 0
    assert path.min() >= 0 and path.max() <= 3
    assert np.all(np.abs(np.diff(path)) <= 1)
    assert np.isfinite(urn_loglik(np.array([5, 3, 4]), path)[0])


def test_urn_rejects_more_red_than_urn_one():
    with pytest.raises(ModelError):
        urn_simulate(np.array([2, 5, 3]), 10, np.random.default_rng(0))


def test_urn_space_constraints():
    space = urn_parameter_space(np.array([0, 1, 2, 1]), bound=4)
    j, k, r = space.discrete_set.T
    assert np.all(r < j + k)
    assert np.all((r >= 2) & (k >= 2))
    assert space.bounds == (1, 4)
    with pytest.raises(ModelError):
        urn_parameter_space(np.array([0, 5]), bound=4)


def test_urn_grid_mle_breaks_ties_lexicographically():
    space = urn_parameter_space(np.array([0, 0, 0]), bound=5)
    assert urn_grid_mle(np.array([0, 0, 0]), space).tolist() == [5.0, 1.0, 1.0]


def test_urn_pairs_model():
    data, model = urn_as_cloned_ssm(np.array([0, 1, 1, 0]))
    assert data.T == 3
    assert model.period == 3
    logp = model.obs_logdensity(1, data.y_tilde[0], None, np.array([[2.0, 2.0, 2.0]]))
    assert logp[0] == pytest.approx(np.log(urn_transition(np.array([2.0, 2.0, 2.0]), 0, 1)))
    with pytest.raises(ModelError):
        urn_as_cloned_ssm(np.array([0]))


# =============================================================================
# Registry
# =============================================================================

def test_registry_builds_models():
    assert build_model("lg-periodic", {"p": 3}).d == 10
    assert isinstance(build_model("urn"), UrnPairModel)
    assert default_space("sv", build_model("sv")).d == 3


def test_registry_errors():
    with pytest.raises(ConfigError):
        build_model("arima")
    with pytest.raises(ConfigError):
        build_model("sv", {"bogus": 1})
    with pytest.raises(ConfigError):
        default_space("urn", build_model("urn"), None)
