"""Intelligent-state structure of the frozen states.

Eigensystem of the bath's single jump operator, the rotated spin
observables aligned with the bath fluctuation ellipse, the non-Hermitian
lowering-type operator whose eigenstates saturate the Heisenberg
uncertainty relation, and the saturation check itself.
"""

from dataclasses import dataclass

import numpy as np

from .bath import BathParams, lindblad_s_operator
from .errors import ParameterError
from .pauli import GROUND, SIGMA_X, SIGMA_Y, SIGMA_Z

J_X = 0.5 * SIGMA_X
J_Y = 0.5 * SIGMA_Y
J_Z = 0.5 * SIGMA_Z


@dataclass(frozen=True)
class SqueezeFrame:
    """Squeeze amplitude r, phase psi, and the squeeze ratio e^{2r}."""

    r: float
    psi: float

    @property
    def alpha_ratio(self) -> float:
        return float(np.exp(2.0 * self.r))

    @classmethod
    def from_bath(cls, bath: BathParams) -> "SqueezeFrame":
        return cls(r=bath.squeeze_amplitude, psi=bath.psi)


@dataclass(frozen=True)
class SEigensystem:
    """Eigenvalues and phase-fixed eigenvectors of the jump operator S."""

    lambda_plus: complex
    state_plus: np.ndarray
    lambda_minus: complex
    state_minus: np.ndarray
    degenerate: bool = False


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    """Normalize and make the excited-state amplitude real and non-negative."""
    vec = vec / np.linalg.norm(vec)
    pivot = vec[0] if abs(vec[0]) > 1e-12 else vec[1]
    return vec * (abs(pivot) / pivot)


def s_eigensystem(bath: BathParams) -> SEigensystem:
    """Diagonalize S = sqrt(N+1) sigma - sqrt(N) e^{i psi} sigma+.

    The eigenvalues are +-i sqrt(M) e^{i psi/2} and the eigenvectors are
    the two frozen states. At N = 0 the operator is nilpotent with the
    single eigenvector |->; that case is reported as degenerate.
    """
    s = lindblad_s_operator(bath)
    if bath.n == 0:
        return SEigensystem(0.0, GROUND.copy(), 0.0, GROUND.copy(), degenerate=True)
    eigvals, eigvecs = np.linalg.eig(s)
    target_plus = 1j * np.sqrt(bath.m) * np.exp(1j * bath.psi / 2)
    order = np.argsort(np.abs(eigvals - target_plus))
    i_plus, i_minus = order[0], order[1]
    return SEigensystem(
        lambda_plus=complex(eigvals[i_plus]),
        state_plus=_fix_phase(eigvecs[:, i_plus]),
        lambda_minus=complex(eigvals[i_minus]),
        state_minus=_fix_phase(eigvecs[:, i_minus]),
    )


def rotated_j_operators(psi: float):
    """Spin-1/2 operators rotated by psi/2 about z.

    J1 = cos(psi/2) Jx - sin(psi/2) Jy (major fluctuation axis),
    J2 = sin(psi/2) Jx + cos(psi/2) Jy (minor axis). Returns (J1, J2, Jz).
    """
    c, s = np.cos(psi / 2), np.sin(psi / 2)
    j1 = c * J_X - s * J_Y
    j2 = s * J_X + c * J_Y
    return j1, j2, J_Z


def j_minus_alpha(psi: float, alpha_ratio: float) -> np.ndarray:
    """Non-Hermitian operator (J1 - i alpha J2) / sqrt(1 - alpha^2).

    For alpha > 1 the normalization is imaginary; the principal branch
    sqrt(1 - alpha^2) = i sqrt(alpha^2 - 1) is used so the factorization
    S = 2 lambda_+ J_-(alpha) holds literally.
    """
    if alpha_ratio == 1.0:
        raise ParameterError("normalization singular at alpha_ratio = 1 (vacuum)")
    j1, j2, _ = rotated_j_operators(psi)
    norm = np.sqrt(complex(1.0 - alpha_ratio**2))
    return (j1 - 1j * alpha_ratio * j2) / norm


def uncertainty_product(state, psi: float):
    """Variances of J1 and J2, the Heisenberg bound, and the saturation gap.

    Returns (var_j1, var_j2, bound, gap) with bound = |<Jz>|^2 / 4 and
    gap = var_j1 * var_j2 - bound. Intelligent states have gap = 0.
    """
    state = np.asarray(state, dtype=complex)
    j1, j2, jz = rotated_j_operators(psi)

    def moments(op):
        mean = np.vdot(state, op @ state).real
        mean_sq = np.vdot(state, op @ op @ state).real
        return mean, mean_sq - mean**2

    _, var1 = moments(j1)
    _, var2 = moments(j2)
    mean_z, _ = moments(jz)
    bound = mean_z**2 / 4.0
    return var1, var2, bound, var1 * var2 - bound
