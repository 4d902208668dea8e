import numpy as np
import pytest

from squeezed_zeno import (
    BathParams,
    TimeGrid,
    analytic_free,
    bloch_to_matrix,
    eigenstates_mu,
    evolve_free,
    evolve_measured,
    measured_coefficients,
    pure_state_matrix,
    sigma_mu,
    zeno_directions,
    zeno_states,
)
from squeezed_zeno.dynamics import measurement_modified_rhs, project_to_measured_basis
from squeezed_zeno.errors import ParameterError
from squeezed_zeno.pauli import Direction
from squeezed_zeno.bath import liouvillian


def random_bloch(rng, surface=False):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if not surface:
        v *= rng.uniform(0, 1)
    return v


class TestEvolveFree:
    def test_vacuum_ground_constant(self):
        b = BathParams(gamma=1.0, n=0.0, m=0.0)
        ts = evolve_free(b, bloch_to_matrix([0, 0, -1]), TimeGrid(0, 3, 30))
        assert np.max(np.abs(ts.values - np.array([0, 0, -1.0]))) < 1e-10

    def test_vacuum_excited_decay(self):
        b = BathParams(gamma=1.0, n=0.0, m=0.0)
        ts = evolve_free(b, bloch_to_matrix([0, 0, 1]), TimeGrid(0, 3, 30))
        expected = 2 * np.exp(-ts.times) - 1
        assert np.max(np.abs(ts.values[:, 2] - expected)) < 1e-9

    def test_zeno_plus_free_decay_toward_steady(self):
        # Without measurements the frozen state is not stationary.
        b = BathParams.maximal(1.0, 1.0, 0.0)
        zd = zeno_directions(b)
        z1, _ = zeno_states(b)
        # slowest mode relaxes at gamma(N + 1/2 - M) ~ 0.086, so go far out
        ts = evolve_free(b, pure_state_matrix(z1), TimeGrid(0, 200, 40), max_step=0.01)
        mu = zd.mu1.unit_vector
        proj = ts.values @ mu
        assert proj[0] == pytest.approx(1.0, abs=1e-12)
        assert proj[-1] < proj[0]
        # long-time value approaches mu . v_steady
        v_steady = np.array([0, 0, -1 / 3])
        assert proj[-1] == pytest.approx(mu @ v_steady, abs=1e-3)

    def test_step_guard(self):
        b = BathParams(gamma=1.0, n=0.0, m=0.0)
        with pytest.raises(ParameterError):
            evolve_free(b, bloch_to_matrix([0, 0, 1]), TimeGrid(0, 1, 10), max_step=0.5)


class TestAnalyticFree:
    def test_t0_identity(self):
        b = BathParams.maximal(1.0, 2.0, 1.1)
        v0 = np.array([0.3, -0.2, 0.4])
        assert np.allclose(analytic_free(b, v0, 0.0), v0)

    def test_long_time_steady_state(self):
        rng = np.random.default_rng(11)
        for n in (0.0, 0.5, 1.0, 2.0):
            b = BathParams.maximal(1.0, n, rng.uniform(0, 2 * np.pi))
            slowest = min(2 * n + 1, n + 0.5 - b.m)  # transverse slow mode
            v = analytic_free(b, random_bloch(rng), 50.0 / slowest)
            assert np.max(np.abs(v - np.array([0, 0, -1 / (2 * n + 1)]))) < 1e-8

    def test_fast_mode_at_psi0(self):
        b = BathParams.maximal(1.0, 1.0, 0.0)
        v = analytic_free(b, np.array([1.0, 0, 0]), 1.0)
        assert v[0] == pytest.approx(np.exp(-(1.5 + np.sqrt(2))), abs=1e-12)
        assert v[1] == pytest.approx(0.0, abs=1e-14)

    def test_matches_rk4(self):
        rng = np.random.default_rng(12)
        for _ in range(20):
            n = rng.uniform(0, 3)
            b = BathParams.maximal(1.0, n, rng.uniform(0, 2 * np.pi))
            v0 = random_bloch(rng, surface=bool(rng.integers(2)))
            grid = TimeGrid(0, 5.0, 25)
            ts = evolve_free(b, bloch_to_matrix(v0), grid)
            exact = analytic_free(b, v0, grid.times)
            assert np.max(np.abs(ts.values - exact)) < 1e-8


class TestMeasuredCoefficients:
    def test_mu1_closed_form(self):
        # alpha = 2 gamma (N - M + 1/2), beta = -alpha for the first
        # preferential direction.
        for n, psi in [(0.5, 0.0), (1.0, 0.0), (2.0, 1.3), (1.0, np.pi)]:
            b = BathParams.maximal(1.0, n, psi)
            alpha, beta = measured_coefficients(b, zeno_directions(b).mu1)
            expected = 2 * (n - b.m + 0.5)
            assert alpha == pytest.approx(expected, abs=1e-12)
            assert beta == pytest.approx(-expected, abs=1e-12)

    def test_mu2_same_coefficients(self):
        b = BathParams.maximal(1.0, 1.0, 0.0)
        a1 = measured_coefficients(b, zeno_directions(b).mu1)
        a2 = measured_coefficients(b, zeno_directions(b).mu2)
        assert a1 == pytest.approx(a2, abs=1e-12)

    def test_n1_value(self):
        b = BathParams.maximal(1.0, 1.0, 0.0)
        alpha, _ = measured_coefficients(b, zeno_directions(b).mu1)
        assert alpha == pytest.approx(2 * (1.5 - np.sqrt(2)), abs=1e-12)

    def test_vacuum_z_reproduces_free_equation(self):
        # Monitoring sigma_z in vacuum: scalar ODE must match
        # d rho_z/dt = -gamma - gamma rho_z.
        b = BathParams(gamma=1.0, n=0.0, m=0.0)
        alpha, beta = measured_coefficients(b, Direction(0.0, 0.0))
        assert alpha == pytest.approx(-1.0, abs=1e-13)
        assert beta == pytest.approx(-1.0, abs=1e-13)


class TestEvolveMeasured:
    def test_zeno_plus_frozen(self):
        b = BathParams.maximal(1.0, 1.0, 0.0)
        z1, _ = zeno_states(b)
        ts, dephased = evolve_measured(
            b, zeno_directions(b).mu1, pure_state_matrix(z1), TimeGrid(0, 5, 100)
        )
        assert not dephased
        assert np.max(np.abs(ts.values - 1.0)) < 1e-10

    def test_zeno_minus_exponential_approach(self):
        b = BathParams.maximal(1.0, 1.0, 0.0)
        d = zeno_directions(b).mu1
        _, minus = eigenstates_mu(d)
        ts, dephased = evolve_measured(b, d, pure_state_matrix(minus), TimeGrid(0, 5, 100))
        assert not dephased
        alpha = 2 * (1.5 - np.sqrt(2))
        expected = 1 - 2 * np.exp(-alpha * ts.times)
        assert np.max(np.abs(ts.values - expected)) < 1e-8

    def test_vacuum_z_measurement_same_as_free(self):
        b = BathParams(gamma=1.0, n=0.0, m=0.0)
        grid = TimeGrid(0, 3, 60)
        rho0 = bloch_to_matrix([0, 0, 1])
        ts, _ = evolve_measured(b, Direction(np.pi, 0.0), rho0, grid)
        free = evolve_free(b, rho0, grid)
        # measured <sigma_mu> with mu = -z equals -<sigma_z> of free evolution
        assert np.max(np.abs(ts.values - (-free.values[:, 2]))) < 1e-8

    def test_off_manifold_state_flagged(self):
        b = BathParams.maximal(1.0, 1.0, 0.0)
        rho0 = bloch_to_matrix([1.0, 0, 0])
        _, dephased = evolve_measured(b, Direction(0.0, 0.0), rho0, TimeGrid(0, 1, 10))
        assert dephased

    def test_monotone_convergence_to_plus(self):
        rng = np.random.default_rng(13)
        b = BathParams.maximal(1.0, 1.5, 0.7)
        d = zeno_directions(b).mu1
        mu = d.unit_vector
        for _ in range(10):
            rho_mu0 = rng.uniform(-1, 1)
            ts, _ = evolve_measured(b, d, bloch_to_matrix(rho_mu0 * mu), TimeGrid(0, 150, 50))
            diffs = np.diff(ts.values)
            assert np.all(diffs >= -1e-12)
            assert ts.values[-1] == pytest.approx(1.0, abs=1e-5)


class TestTraceIdentity:
    def test_modified_equals_free_trace(self):
        # Tr{(P L P + Q L Q) sigma_mu} = Tr{L sigma_mu} on mu-diagonal states.
        rng = np.random.default_rng(14)
        b = BathParams.maximal(1.0, 1.0, 0.9)
        d = Direction(1.1, 2.3)
        smu = sigma_mu(d)
        mu = d.unit_vector
        for _ in range(100):
            rho = bloch_to_matrix(rng.uniform(-1, 1) * mu)
            lhs = np.trace(measurement_modified_rhs(b, d, rho) @ smu).real
            rhs = np.trace(liouvillian(b, rho) @ smu).real
            assert abs(lhs - rhs) < 1e-12


def test_project_to_measured_basis():
    d = Direction(0.0, 0.0)
    rho = bloch_to_matrix([0.5, 0.2, 0.3])
    proj = project_to_measured_basis(d, rho)
    assert np.allclose(proj, bloch_to_matrix([0, 0, 0.3]))


def test_timegrid_validation():
    with pytest.raises(ParameterError):
        TimeGrid(1.0, 0.5, 10)
    with pytest.raises(ParameterError):
        TimeGrid(0.0, 1.0, 0)
