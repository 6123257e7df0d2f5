# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Acceptance Tests
================

Statistical runs at desk scale. They take minutes and only run with
`pytest --runslow`.

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import numpy as np
import pytest
from scipy import stats

# Import | Local Modules
from swing_smc.dynamics import DynamicsSchedule, ParameterSpace, sample_discrete_kernel
from swing_smc.engine import (
    SCHEMES,
    filter_mean_error,
    offspring_count_replicates,
    run_adaptive_slow,
    run_bootstrap_so_pf,
)
from swing_smc.kalman import kf_filter, kf_loglik, run_rb_filter
from swing_smc.mle import IfConfig, run_if_fast, run_if_slow, run_noisy_opt
from swing_smc.models import (
    LgPeriodicModel,
    SeirdModel,
    SsmModel,
    seird_default_space,
    simulate,
    urn_as_cloned_ssm,
    urn_grid_mle,
    urn_parameter_space,
    urn_simulate,
)


# =============================================================================
# Variables
# =============================================================================

pytestmark = pytest.mark.slow

SEEDS = range(20)

LG_THETA = np.array([1.0, 0.7, 0.5, 1.0])


# =============================================================================
# Helpers
# =============================================================================

class ShiftedNoise(SsmModel):
    """Y_t ~ N(psi, sigma^2) with a continuous scale sigma and an integer shift psi."""

    name = "shifted-noise"

    def sample_initial(self, theta, rng):
        return np.zeros((np.atleast_2d(theta).shape[0], 1))

    def sample_transition(self, t, state, theta, rng):
        return state

    def obs_logdensity(self, t, y, state, theta):
        y = float(np.ravel(y)[0])
        return stats.norm.logpdf(y, loc=theta[:, 1], scale=theta[:, 0])


def _discrete_kernel_law(start, p, points):
    """Exhaustive law of the signed-Binomial walk on b - a = 2, conditioned on the set."""
    offsets = {0: (1 - p) ** 2, 1: p * (1 - p), -1: p * (1 - p), 2: p ** 2 / 2, -2: p ** 2 / 2}
    mass = np.array([sum(q for k, q in offsets.items() if start + k == x) for x in points])
    return mass / mass.sum()


@pytest.fixture(scope="module")
def urn_instance():
    path = urn_simulate(np.array([5, 5, 5]), 200, np.random.default_rng(55))
    data, model = urn_as_cloned_ssm(path)
    space = urn_parameter_space(path, bound=20)
    return data, model, space, urn_grid_mle(path, space)


# =============================================================================
# Tests
# =============================================================================

def test_filters_match_kalman_likelihood():
    model = LgPeriodicModel(p=1)
    _, ys = simulate(model, LG_THETA, 200, np.random.default_rng(100))
    exact = kf_loglik(model.spec, LG_THETA, ys)
    fixed = lambda n, rng: np.tile(LG_THETA, (n, 1))  # noqa: E731
    space = model.default_space()

    rb = run_rb_filter(model.spec, space, ys, DynamicsSchedule(), n_particles=10, mu0=fixed)
    assert rb.log_likelihood == pytest.approx(exact, rel=1e-9)

    estimates = np.array([
        run_bootstrap_so_pf(model, DynamicsSchedule(), space, ys, n_particles=10_000, mu0=fixed, seed=s).log_likelihood
        for s in SEEDS
    ])
    se = estimates.std(ddof=1) / np.sqrt(len(estimates))
    assert abs(estimates.mean() - exact) <= 3 * se


@pytest.mark.parametrize("scheme", SCHEMES)
def test_offspring_laws(scheme):
    rng = np.random.default_rng(7)
    reps = 100_000
    for k in range(200):
        N = 2 + k % 7
        W = rng.dirichlet(np.ones(N))
        counts = offspring_count_replicates(W, N, scheme, rng, reps)
        if scheme in ("ssp", "systematic"):
            assert np.all(np.abs(counts - N * W) < 1.0)
        sd = np.sqrt(N * W * (1 - W) / reps)
        assert np.all(np.abs(counts.mean(axis=0) - N * W) <= 4 * sd + 1e-9)


@pytest.mark.parametrize("p", [0.3, 0.8])
@pytest.mark.parametrize("start", [0, 1, 2])
def test_discrete_kernel_matches_enumeration(start, p):
    points = [0, 1, 2]
    space = ParameterSpace.from_discrete([[x] for x in points])
    n = 1_000_000
    draws = sample_discrete_kernel(np.full((n, 1), start), p, space, np.random.default_rng(17 + start))
    freq = np.bincount(draws.ravel().astype(int), minlength=3) / n
    law = _discrete_kernel_law(start, p, points)
    assert np.all(np.abs(freq - law) <= 3 * np.sqrt(law * (1 - law) / n) + 1e-12)


def test_urn_iterated_filter_finds_grid_maximizer(urn_instance):
    data, model, space, oracle = urn_instance
    early = final = 0
    for seed in SEEDS:
        config = IfConfig.mixed(data.T, alpha=0.5, warmup_passes=1, n_particles=1000, max_passes=20)
        record = run_if_slow(model, data.y_tilde, space, config, seed=seed)
        early += int(np.array_equal(record.theta_proj[9], oracle))
        final += int(np.array_equal(record.final_projection, oracle))
    assert early >= 16
    assert final >= early


def test_fast_dynamics_stick_more_often_on_the_urn(urn_instance):
    data, model, space, oracle = urn_instance
    hits = {"fast": 0, "slow": 0}
    for seed in SEEDS:
        fast = IfConfig.fast(data.T, alpha=1.1, n_particles=1000, max_passes=10)
        slow = IfConfig.mixed(data.T, alpha=0.5, warmup_passes=1, n_particles=1000, max_passes=10)
        fast_record = run_if_fast(model, data.y_tilde, space, fast, seed=seed)
        slow_record = run_if_slow(model, data.y_tilde, space, slow, seed=seed)
        hits["fast"] += int(np.array_equal(fast_record.final_projection, oracle))
        hits["slow"] += int(np.array_equal(slow_record.final_projection, oracle))
    assert hits["fast"] < hits["slow"]


def test_online_estimates_improve_with_time():
    model = LgPeriodicModel(p=1)
    space = model.default_space()
    d, T, window = LG_THETA.size, 10_000, 50
    theta_better = filter_better = 0
    for seed in SEEDS:
        _, ys = simulate(model, LG_THETA, T, np.random.default_rng(500 + seed))
        schedule = DynamicsSchedule(flavor="slow-vanishing", first_epoch=51)
        record = run_adaptive_slow(model, space, ys, schedule, n_particles=1000, seed=seed)
        hat = record.theta_hat_array()
        early = np.linalg.norm(hat[499] - LG_THETA) / d
        late = np.linalg.norm(hat[-1] - LG_THETA) / d
        theta_better += int(late < early)
        _, means, _ = kf_filter(model.spec, LG_THETA, ys)
        error = filter_mean_error(record, means)
        filter_better += int(error[-window:].mean() < error[500 - window:500].mean())
    assert theta_better >= 18
    assert filter_better >= 18


def test_mixed_space_discrete_coordinate_settles():
    space = ParameterSpace(lower=[0.2], upper=[3.0], discrete_set=[[0], [1], [2], [3], [4]])
    theta_star = np.array([1.0, 2.0])
    settled = 0
    for seed in SEEDS:
        ys = np.random.default_rng(900 + seed).normal(2.0, 1.0, size=(2_000, 1))
        schedule = DynamicsSchedule(flavor="mixed", first_epoch=51)
        record = run_adaptive_slow(
            ShiftedNoise(), space, ys, schedule, n_particles=500, seed=seed, theta_star=theta_star,
        )
        tail = np.vstack(record.theta_proj[-200:])[:, 1]
        settled += int(np.all(tail == 2.0))
    assert settled >= 16


def test_seird_iterated_filter_smoke():
    model = SeirdModel()
    theta = np.array([0.2, 0.1, 0.01, 0.05, 0.05, 1e-5, 1e-5, 1e-5])
    _, ys = simulate(model, theta, 30, np.random.default_rng(3))
    config = IfConfig.slow(30, warmup_passes=1, n_particles=500, max_passes=5)
    record = run_if_slow(model, ys, seird_default_space(), config, seed=0)
    assert len(record) == 5
    assert np.all(np.isfinite(record.theta_hat_array()))
    assert np.all(np.isfinite(record.state_mean_array()))


def test_noisy_optimizer_concentrates():
    space = ParameterSpace.from_box([-2.0], [2.0])
    close = 0
    for seed in SEEDS:
        ys = np.random.default_rng(1000 + seed).normal(0.3, 1.0, size=5_000)
        schedule = DynamicsSchedule(flavor="slow-vanishing", first_epoch=101)
        record = run_noisy_opt("quadratic", ys, space, schedule, n_particles=1000, seed=seed)
        close += int(abs(record.final_theta[0] - 0.3) <= 0.05)
    assert close >= 18
