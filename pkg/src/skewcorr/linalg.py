"""Dense complex-matrix primitives shared by the rest of the package.

All functions take and return plain ``numpy`` arrays and never modify their
inputs.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NotPositiveSemidefiniteError, ValidationError

HERMITIAN_TOL = 1e-10
EIGEN_CLAMP_TOL = 1e-10

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class HermitianEig(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise ValidationError("shape", f"expected a non-empty 2-d matrix, got shape {a.shape}")
    return a


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return the symmetrized ``(M + M^dag) / 2`` after checking squareness and hermiticity."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ValidationError("square", f"matrix of shape {a.shape} is not square")
    dev = np.max(np.abs(a - a.conj().T))
    if dev > tol:
        raise ValidationError("hermitian", f"max |H - H^dag| = {dev:.3e} exceeds {tol:g}")
    return (a + a.conj().T) / 2


def hermitian_eig(h) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    a = check_hermitian(h)
    w, v = np.linalg.eigh(a)
    # eigh already returns ascending order; a stable sort keeps ties in place
    order = np.argsort(w, kind="stable")
    return HermitianEig(w[order], v[:, order])


def _clamped_spectrum(rho) -> HermitianEig:
    eig = hermitian_eig(rho)
    w = eig.eigenvalues
    if w[0] < -EIGEN_CLAMP_TOL:
        raise NotPositiveSemidefiniteError(w[0])
    # below this floor eigh cannot resolve an eigenvalue from zero, and its
    # square root (~1e-8) would swamp rank-deficient inputs
    floor = len(w) * np.finfo(float).eps * max(w[-1], 0.0)
    return HermitianEig(np.where(w > floor, w, 0.0), eig.eigenvectors)


def matrix_sqrt(rho) -> np.ndarray:
    """Principal square root of a positive-semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-10, 0)``, and positive ones below the solver's
    resolution, are treated as rounding noise and set to zero. Anything more
    negative raises :class:`NotPositiveSemidefiniteError`.
    """
    w, v = _clamped_spectrum(rho)
    s = (v * np.sqrt(w)) @ v.conj().T
    return (s + s.conj().T) / 2


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def _split(rho, d_a: int, d_b: int) -> np.ndarray:
    a = as_matrix(rho)
    n = d_a * d_b
    if d_a < 1 or d_b < 1 or a.shape != (n, n):
        raise ValidationError(
            "dimension", f"matrix of shape {a.shape} does not match d_A={d_a}, d_B={d_b}"
        )
    return a.reshape(d_a, d_b, d_a, d_b)


def partial_trace_b(rho, d_a: int, d_b: int) -> np.ndarray:
    """Trace out the second factor, leaving a ``d_a x d_a`` matrix."""
    return np.einsum("ikjk->ij", _split(rho, d_a, d_b))


def partial_trace_a(rho, d_a: int, d_b: int) -> np.ndarray:
    """Trace out the first factor, leaving a ``d_b x d_b`` matrix."""
    return np.einsum("kikj->ij", _split(rho, d_a, d_b))


def hellinger_sq(rho, tau) -> float:
    """Squared Hellinger distance ``Tr[(sqrt(rho) - sqrt(tau))^2] / 2``."""
    a = as_matrix(rho)
    b = as_matrix(tau)
    if a.shape != b.shape:
        raise ValidationError("dimension", f"shapes {a.shape} and {b.shape} differ")
    diff = matrix_sqrt(a) - matrix_sqrt(b)
    # diff is Hermitian, so Tr(diff^2) is the squared Frobenius norm
    return 0.5 * float(np.sum(np.abs(diff) ** 2))


def frobenius(m) -> float:
    return float(np.linalg.norm(np.asarray(m), "fro"))
