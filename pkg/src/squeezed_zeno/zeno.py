"""Survival probabilities under repeated measurement and the frozen states.

Covers the closed-system short-time survival law, the first- and
second-order survival rates under the master equation, the survival
functional over measurement directions, its two maxima (the
bath-determined "preferential" directions), the corresponding frozen
states, and exact / Monte Carlo repeated-measurement survival curves.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from .bath import BathParams, bloch_rates, liouvillian
from .dynamics import TimeSeries
from .errors import DomainError, ParameterError
from .pauli import Direction, eigenstates_mu, pure_state_matrix

FIRST_ORDER_ZERO_TOL = 1e-10


@dataclass(frozen=True)
class MeasurementSchedule:
    """dt between consecutive measurements, count measurements in total."""

    dt: float
    count: int

    def __post_init__(self):
        if self.dt <= 0:
            raise ParameterError("dt must be positive")
        if self.count < 1:
            raise ParameterError("count must be >= 1")


@dataclass(frozen=True)
class SurvivalCurve:
    """Survival probability versus time, optionally with standard errors."""

    series: TimeSeries
    stderr: np.ndarray | None = None

    @property
    def times(self) -> np.ndarray:
        return self.series.times

    @property
    def probabilities(self) -> np.ndarray:
        return self.series.values


@dataclass(frozen=True)
class ZenoDirections:
    """The two measurement directions whose +1 eigenstates are frozen."""

    mu1: Direction
    mu2: Direction
    theta: float


def closed_system_survival(h, state, sched: MeasurementSchedule) -> float:
    """Survival probability (1 - dt^2 Var(H))^count for a closed system.

    Var(H) is the energy variance of the initial eigenstate of the
    measured observable; hbar = 1.
    """
    h = np.asarray(h, dtype=complex)
    state = np.asarray(state, dtype=complex)
    mean = np.vdot(state, h @ state).real
    mean_sq = np.vdot(state, h @ h @ state).real
    var = mean_sq - mean**2
    x = sched.dt**2 * var
    if x > 1.0:
        raise DomainError(
            f"dt^2 Var(H) = {x} > 1: short-time expansion invalid"
        )
    return float((1.0 - x) ** sched.count)


def survival_rate(bath: BathParams, state) -> float:
    """First-order survival rate <a| L{|a><a|} |a> (real, <= 0)."""
    state = np.asarray(state, dtype=complex)
    rho = pure_state_matrix(state)
    value = np.vdot(state, liouvillian(bath, rho) @ state)
    return float(value.real)


def survival_functional_F(bath: BathParams, d: Direction) -> float:
    """Survival rate of the +1 eigenstate of sigma_mu(d), as a function of angles.

    Evaluated through the Bloch quadratic form F = mu . (A mu + c) / 2,
    which is an independent route from the direct matrix element in
    survival_rate (the two agree to machine precision).
    """
    a, c = bloch_rates(bath)
    mu = d.unit_vector
    return float(0.5 * mu @ (a @ mu + c))


def survival_functional_grid(bath: BathParams, n_theta: int = 256, n_phi: int = 256):
    """Evaluate the survival functional on an (n_theta x n_phi) angle grid.

    Returns (theta axis, phi axis, F values of shape (n_theta, n_phi)).
    """
    a, c = bloch_rates(bath)
    thetas = np.linspace(0.0, np.pi, n_theta)
    phis = np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)
    st, ct = np.sin(thetas)[:, None], np.cos(thetas)[:, None]
    cp, sp = np.cos(phis)[None, :], np.sin(phis)[None, :]
    mx, my, mz = cp * st, sp * st, ct + 0.0 * cp
    m = np.stack([mx, my, mz], axis=-1)
    f = 0.5 * np.einsum("ijk,kl,ijl->ij", m, a, m) + 0.5 * m @ c
    return thetas, phis, f


def zeno_directions(bath: BathParams) -> ZenoDirections:
    """Closed-form maxima of the survival functional.

    phi_1 = (pi - psi)/2, phi_2 = phi_1 + pi, and the common polar angle
    satisfies cos(theta) = -1 / (2(N + M + 1/2)). At both directions the
    survival functional vanishes (maximal squeezing, N > 0); for N -> 0
    the directions degenerate toward -z.
    """
    theta = float(np.arccos(-1.0 / (2.0 * (bath.n + bath.m + 0.5))))
    phi1 = (np.pi - bath.psi) / 2.0
    return ZenoDirections(
        mu1=Direction(theta, phi1),
        mu2=Direction(theta, phi1 + np.pi),
        theta=theta,
    )


def find_zeno_directions_grid(
    bath: BathParams, n_theta: int = 256, n_phi: int = 256, polish: bool = True
):
    """Locate the survival-functional maxima by grid scan plus local polish.

    Returns a list of (Direction, F value), one per local maximum found
    (the global maximum and any grid point within 1e-9 of it).
    """
    thetas, phis, f = survival_functional_grid(bath, n_theta, n_phi)
    fmax = f.max()
    candidates = np.argwhere(f >= fmax - 1e-9 * max(1.0, abs(fmax)))
    # Cluster neighbouring grid hits: keep maxima separated by > 2 cells.
    results = []
    dtheta = np.pi / (n_theta - 1)
    dphi = 2 * np.pi / n_phi
    for i, j in candidates:
        th, ph = thetas[i], phis[j]
        if any(
            abs(th - r[0].theta) < 3 * dtheta
            and min(abs(ph - r[0].phi), 2 * np.pi - abs(ph - r[0].phi)) < 3 * dphi
            for r in results
        ):
            continue
        if polish:
            res = minimize(
                lambda x: -survival_functional_F(
                    bath, Direction(float(np.clip(x[0], 0, np.pi)), float(x[1]))
                ),
                x0=[th, ph],
                method="Nelder-Mead",
                options={"xatol": 1e-12, "fatol": 1e-14},
            )
            th, ph = float(np.clip(res.x[0], 0, np.pi)), float(res.x[1])
        d = Direction(th, ph)
        results.append((d, survival_functional_F(bath, d)))
    return results


def zeno_states(bath: BathParams):
    """The two frozen states, written in the energy eigenbasis.

    |z1> = sqrt(N/(N+M)) |+> + i sqrt(M/(N+M)) e^{-i psi/2} |->
    |z2> = sqrt(N/(N+M)) |+> - i sqrt(M/(N+M)) e^{-i psi/2} |->

    They are the +1 eigenstates of the spin components along the two
    preferential directions.
    """
    n, m, psi = bath.n, bath.m, bath.psi
    if n + m <= 0:
        raise ParameterError("frozen states require n > 0 (else they degenerate)")
    up = np.sqrt(n / (n + m))
    down = np.sqrt(m / (n + m)) * np.exp(-1j * psi / 2)
    z1 = np.array([up, 1j * down])
    z2 = np.array([up, -1j * down])
    return z1, z2


def _bloch_propagator(bath: BathParams, t: float):
    """Exact affine propagator: v(t) = P v(0) + q for the free Bloch system."""
    a, c = bloch_rates(bath)
    aug = np.zeros((4, 4))
    aug[:3, :3] = a
    aug[:3, 3] = c
    phi = expm(aug * t)
    return phi[:3, :3], phi[:3, 3]


def step_survival_probability(bath: BathParams, state, dt: float) -> float:
    """Probability that one measurement after time dt returns the initial state.

    The projector is evolved exactly for dt under the free master
    equation (matrix exponential of the affine Bloch system) and the
    overlap with the initial state is read off.
    """
    state = np.asarray(state, dtype=complex)
    from .pauli import matrix_to_bloch

    v0 = matrix_to_bloch(pure_state_matrix(state))
    p_mat, q = _bloch_propagator(bath, dt)
    v_dt = p_mat @ v0 + q
    return float(0.5 * (1.0 + v0 @ v_dt))


def repeated_measurement_survival(
    bath: BathParams, state, sched: MeasurementSchedule
) -> SurvivalCurve:
    """Exact survival curve for a sequence of projective measurements.

    Each surviving measurement resets the system to the initial pure
    state, so the curve is p^k at t = k dt with p the one-step survival
    probability. Computed exactly at any dt, it reduces to the
    first-order exponential law as dt -> 0 and exposes the second-order
    law when the first-order rate vanishes.
    """
    p = step_survival_probability(bath, state, sched.dt)
    k = np.arange(sched.count + 1)
    times = k * sched.dt
    probs = p ** k.astype(float)
    return SurvivalCurve(TimeSeries(times, probs))


def second_order_rate(bath: BathParams, state, dt: float) -> float:
    """Second-order survival rate <a| L{L{|a><a|}} |a> dt / 2.

    Only valid when the first-order rate vanishes for this state.
    """
    state = np.asarray(state, dtype=complex)
    first = survival_rate(bath, state)
    if abs(first) > FIRST_ORDER_ZERO_TOL * bath.gamma:
        raise ParameterError(
            f"first-order rate {first} does not vanish; second-order law invalid"
        )
    rho = pure_state_matrix(state)
    double = liouvillian(bath, liouvillian(bath, rho))
    value = np.vdot(state, double @ state).real
    return float(0.5 * value * dt)


def monte_carlo_survival(
    bath: BathParams,
    state,
    sched: MeasurementSchedule,
    n_traj: int,
    seed: int,
) -> SurvivalCurve:
    """Stochastic estimate of the repeated-measurement survival curve.

    Uses a counter-based Philox generator keyed by the seed; step k
    consumes one uniform draw per trajectory in trajectory order, so the
    output is bit-identical for a fixed seed regardless of platform.
    Returns per-step survival fractions with binomial standard errors.
    """
    if n_traj < 1:
        raise ParameterError("n_traj must be >= 1")
    p = step_survival_probability(bath, state, sched.dt)
    rng = np.random.Generator(np.random.Philox(seed))
    alive = np.ones(n_traj, dtype=bool)
    fractions = np.empty(sched.count + 1)
    stderr = np.empty(sched.count + 1)
    fractions[0], stderr[0] = 1.0, 0.0
    for k in range(1, sched.count + 1):
        draws = rng.random(n_traj)
        alive &= draws < p
        frac = alive.sum() / n_traj
        fractions[k] = frac
        stderr[k] = np.sqrt(frac * (1.0 - frac) / n_traj)
    times = np.arange(sched.count + 1) * sched.dt
    return SurvivalCurve(TimeSeries(times, fractions), stderr=stderr)


def survival_rate_of_direction(bath: BathParams, d: Direction, branch: str = "+") -> float:
    """Survival rate of the +1 or -1 eigenstate of sigma_mu(d)."""
    plus, minus = eigenstates_mu(d)
    return survival_rate(bath, plus if branch == "+" else minus)
