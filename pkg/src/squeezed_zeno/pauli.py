"""Exact 2x2 complex algebra for a two-level atom.

Pauli and ladder operator constants, Bloch-vector <-> density-matrix maps,
and spin observables along an arbitrary direction of the Bloch sphere
together with their eigenstates.

Basis convention: |+> = excited = (1, 0)^T, |-> = ground = (0, 1)^T, so
sigma_z |+-> = +-|+-> and the lowering operator sends |+> to |->.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, InvalidStateError

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

# Ladder operators: SIGMA_MINUS |+> = |->
SIGMA_MINUS = 0.5 * (SIGMA_X - 1j * SIGMA_Y)
SIGMA_PLUS = 0.5 * (SIGMA_X + 1j * SIGMA_Y)

EXCITED = np.array([1, 0], dtype=complex)
GROUND = np.array([0, 1], dtype=complex)

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-12
BLOCH_NORM_TOL = 1e-9


@dataclass(frozen=True)
class Direction:
    """A point (theta, phi) on the Bloch sphere, in radians.

    theta is clamped to [0, pi]; phi is reduced to [0, 2*pi).
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi:
            raise InvalidStateError(f"theta must lie in [0, pi], got {self.theta}")
        object.__setattr__(self, "phi", float(np.mod(self.phi, 2 * np.pi)))

    @property
    def unit_vector(self) -> np.ndarray:
        """Cartesian unit vector (cos phi sin theta, sin phi sin theta, cos theta)."""
        st = np.sin(self.theta)
        return np.array(
            [np.cos(self.phi) * st, np.sin(self.phi) * st, np.cos(self.theta)]
        )


def bloch_to_matrix(v) -> np.ndarray:
    """Density matrix rho = (1 + v . sigma) / 2 for a Bloch vector v."""
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm > 1.0 + BLOCH_NORM_TOL:
        raise InvalidStateError(f"Bloch vector norm {norm} exceeds 1")
    return 0.5 * (IDENTITY + v[0] * SIGMA_X + v[1] * SIGMA_Y + v[2] * SIGMA_Z)


def matrix_to_bloch(rho: np.ndarray) -> np.ndarray:
    """Bloch vector (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z)."""
    rho = np.asarray(rho, dtype=complex)
    if abs(np.trace(rho) - 1.0) > 1e-9:
        raise InvalidStateError(f"density matrix trace {np.trace(rho)} != 1")
    return np.array(
        [
            np.trace(rho @ SIGMA_X).real,
            np.trace(rho @ SIGMA_Y).real,
            np.trace(rho @ SIGMA_Z).real,
        ]
    )


def validate_density_matrix(rho: np.ndarray):
    """Raise InvalidStateError unless rho is a valid qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise InvalidStateError(f"expected 2x2 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
        raise InvalidStateError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"density matrix trace {np.trace(rho)} != 1")
    eigvals = np.linalg.eigvalsh(rho)
    if eigvals.min() < -POSITIVITY_TOL:
        raise InvalidStateError(f"density matrix not positive: eigenvalues {eigvals}")


def sigma_mu(d: Direction) -> np.ndarray:
    """Spin component along d: sigma . mu_hat."""
    mu = d.unit_vector
    return mu[0] * SIGMA_X + mu[1] * SIGMA_Y + mu[2] * SIGMA_Z


def eigenstates_mu(d: Direction):
    """The +1 and -1 eigenstates of sigma_mu(d).

    Returns (plus, minus) with
        plus  =  cos(theta/2) |+> + sin(theta/2) e^{i phi} |->
        minus = -sin(theta/2) |+> + cos(theta/2) e^{i phi} |->
    """
    c, s = np.cos(d.theta / 2), np.sin(d.theta / 2)
    phase = np.exp(1j * d.phi)
    plus = np.array([c, s * phase])
    minus = np.array([-s, c * phase])
    return plus, minus


def expectation(rho: np.ndarray, a: np.ndarray) -> float:
    """Tr(rho A) for a Hermitian observable A."""
    a = np.asarray(a, dtype=complex)
    if np.max(np.abs(a - a.conj().T)) > HERMITICITY_TOL:
        raise ContractViolationError("observable is not Hermitian")
    return np.trace(np.asarray(rho, dtype=complex) @ a).real


def pure_state_matrix(state: np.ndarray) -> np.ndarray:
    """Projector |state><state| for a normalized two-component state."""
    state = np.asarray(state, dtype=complex)
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > 1e-10:
        raise InvalidStateError(f"state norm {norm} != 1")
    return np.outer(state, state.conj())
