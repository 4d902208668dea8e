"""Time evolution with and without frequent measurements.

Free evolution is integrated with fixed-step RK4 on the affine Bloch
system and cross-checked against the closed-form solution. Evolution
under continuous monitoring of a spin component reduces exactly to a
scalar linear ODE for the measured expectation value, which is solved
in closed form.
"""

from dataclasses import dataclass

import numpy as np

from .bath import BathParams, bloch_rates, liouvillian
from .errors import ParameterError
from .pauli import (
    Direction,
    IDENTITY,
    bloch_to_matrix,
    matrix_to_bloch,
    sigma_mu,
    validate_density_matrix,
)

# Fraction of the fastest relaxation time above which fixed-step RK4 is
# refused (stability guard), and the default internal step.
STABILITY_STEP_FRACTION = 0.1
DEFAULT_STEP_FRACTION = 1e-3


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling grid: n_steps intervals between t_start and t_end."""

    t_start: float
    t_end: float
    n_steps: int

    def __post_init__(self):
        if self.t_end <= self.t_start:
            raise ParameterError("t_end must exceed t_start")
        if self.n_steps < 1:
            raise ParameterError("n_steps must be >= 1")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_steps + 1)


@dataclass(frozen=True)
class TimeSeries:
    """Sampled values on a strictly increasing time axis."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        if np.any(np.diff(t) <= 0):
            raise ParameterError("times must be strictly increasing")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", np.asarray(self.values))


def evolve_free(
    bath: BathParams,
    rho0: np.ndarray,
    grid: TimeGrid,
    max_step: float | None = None,
) -> TimeSeries:
    """Integrate the master equation without measurements.

    Returns a TimeSeries of Bloch vectors sampled on the grid. Each grid
    interval is subdivided so the internal RK4 step stays at or below
    max_step (default 1e-3 of the fastest relaxation time).
    """
    validate_density_matrix(rho0)
    rate_scale = bath.gamma * (2 * bath.n + 1)
    guard = STABILITY_STEP_FRACTION / rate_scale
    if max_step is None:
        max_step = DEFAULT_STEP_FRACTION / rate_scale
    if max_step > guard:
        raise ParameterError(
            f"max_step {max_step} exceeds stability guard {guard}"
        )
    a, c = bloch_rates(bath)

    def deriv(v):
        return a @ v + c

    times = grid.times
    v = matrix_to_bloch(rho0)
    out = np.empty((len(times), 3))
    out[0] = v
    for i in range(1, len(times)):
        dt = times[i] - times[i - 1]
        n_sub = max(1, int(np.ceil(dt / max_step)))
        h = dt / n_sub
        for _ in range(n_sub):
            k1 = deriv(v)
            k2 = deriv(v + 0.5 * h * k1)
            k3 = deriv(v + 0.5 * h * k2)
            k4 = deriv(v + h * k3)
            v = v + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[i] = v
    return TimeSeries(times, out)


def analytic_free(bath: BathParams, v0, t):
    """Closed-form free evolution of a Bloch vector.

    The transverse components decouple into two exponential modes along
    axes rotated by psi/2; the longitudinal component relaxes toward
    -1/(2N+1) at rate gamma(2N+1). Accepts scalar or array t.
    """
    v0 = np.asarray(v0, dtype=float)
    t = np.asarray(t, dtype=float)
    g, n, m, psi = bath.gamma, bath.n, bath.m, bath.psi
    c, s = np.cos(psi / 2), np.sin(psi / 2)
    # Mode amplitudes at t=0 (rotation by psi/2 of the xy components).
    u_fast = c * v0[0] - s * v0[1]  # decays at gamma(N + 1/2 + M)
    u_slow = s * v0[0] + c * v0[1]  # decays at gamma(N + 1/2 - M)
    e_fast = np.exp(-g * (n + 0.5 + m) * t) * u_fast
    e_slow = np.exp(-g * (n + 0.5 - m) * t) * u_slow
    ez = np.exp(-g * (2 * n + 1) * t)
    x = c * e_fast + s * e_slow
    y = -s * e_fast + c * e_slow
    z = v0[2] * ez + (ez - 1.0) / (2 * n + 1)
    return np.stack(np.broadcast_arrays(x, y, z), axis=-1)


def measured_coefficients(bath: BathParams, d: Direction):
    """Drift and relaxation coefficients of the monitored scalar ODE.

    d<sigma_mu>/dt = alpha + beta <sigma_mu> with
    alpha = Tr(L{1} sigma_mu) / 2 and beta = Tr(L{sigma_mu} sigma_mu) / 2.
    """
    smu = sigma_mu(d)
    alpha = 0.5 * np.trace(liouvillian(bath, IDENTITY) @ smu).real
    beta = 0.5 * np.trace(liouvillian(bath, smu) @ smu).real
    return alpha, beta


def evolve_measured(
    bath: BathParams,
    d: Direction,
    rho0: np.ndarray,
    grid: TimeGrid,
):
    """Evolution of <sigma_mu> under continuous monitoring of sigma_mu.

    The monitored dynamics closes on the measured expectation value, so
    the scalar ODE is solved in closed form. If rho0 carries coherence
    in the measured eigenbasis it is dephased at t=0 (the effect of the
    first measurement); the returned flag reports whether that happened.

    Returns (TimeSeries of <sigma_mu>, dephased).
    """
    validate_density_matrix(rho0)
    mu = d.unit_vector
    v0 = matrix_to_bloch(rho0)
    rho_mu0 = float(mu @ v0)
    # Components of the Bloch vector orthogonal to mu are coherences in
    # the sigma_mu eigenbasis; the first measurement removes them.
    dephased = bool(np.linalg.norm(v0 - rho_mu0 * mu) > 1e-12)

    alpha, beta = measured_coefficients(bath, d)
    t = grid.times - grid.times[0]
    if abs(beta) > 1e-14:
        steady = -alpha / beta
        values = steady + (rho_mu0 - steady) * np.exp(beta * t)
    else:
        values = rho_mu0 + alpha * t
    return TimeSeries(grid.times, values), dephased


def measurement_modified_rhs(
    bath: BathParams, d: Direction, rho: np.ndarray
) -> np.ndarray:
    """Right-hand side of the monitored master equation.

    P L{rho} P + (1 - P) L{rho} (1 - P) with P the projector onto the
    +1 eigenstate of sigma_mu. Kept for trace-identity verification;
    the production path uses the scalar reduction.
    """
    from .pauli import eigenstates_mu, pure_state_matrix

    plus, _ = eigenstates_mu(d)
    p = pure_state_matrix(plus)
    q = IDENTITY - p
    image = liouvillian(bath, rho)
    return p @ image @ p + q @ image @ q


def project_to_measured_basis(d: Direction, rho: np.ndarray) -> np.ndarray:
    """Dephase rho in the sigma_mu eigenbasis (drop off-axis Bloch components)."""
    mu = d.unit_vector
    v = matrix_to_bloch(rho)
    return bloch_to_matrix((v @ mu) * mu)
