"""Skew-information correlation measures for ``2 x d`` bipartite states.

Every measure here is built on the local observables ``K = (n . sigma) (x) I``
with ``|n| = 1``. For such observables the skew information reduces to the
quadratic form ``1 - n W n^T`` with ``W`` from :func:`w_matrix`, which gives
closed forms for:

* ``lqu``  -- minimum over all directions, ``1 - lambda_max(W)``
* ``muin`` -- maximum over all directions, ``1 - lambda_min(W)``
* ``uin``  -- maximum over directions commuting with the reduced state of A

``min_hs`` is the Hilbert-Schmidt measurement-induced nonlocality, kept as
a comparator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import MeasureRangeError, PurityError, UnsupportedDimensionError, ValidationError
from .linalg import PAULIS, as_matrix, hermitian_eig, kron, matrix_sqrt, partial_trace_a
from .states import BipartiteState, bloch_vector_a

R_ZERO_THRESHOLD = 1e-8
CLAMP_TOL = 1e-9
PURITY_TOL = 1e-8

R_ZERO = "r-zero"
R_NONZERO = "r-nonzero"
PURE_SHORTCUT = "pure-shortcut"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Observable:
    """Hermitian observable on the full space; ``direction`` is set for ``(n . sigma) (x) I``."""

    matrix: np.ndarray
    direction: Optional[np.ndarray] = None


@dataclass(frozen=True)
class MeasureValue:
    value: float
    branch: str = NOT_APPLICABLE

    def __float__(self):
        return self.value


def _require_qubit_a(rho: BipartiteState):
    if rho.d_a != 2:
        raise UnsupportedDimensionError(f"closed forms need d_A = 2, got d_A = {rho.d_a}")


def _clamp(name: str, value: float, upper: float | None = 1.0) -> float:
    if value < 0.0:
        if value < -CLAMP_TOL:
            raise MeasureRangeError(name, value)
        return 0.0
    if upper is not None and value > upper:
        if value > upper + CLAMP_TOL:
            raise MeasureRangeError(name, value)
        return upper
    return float(value)


def direction_observable(n, d_b: int) -> Observable:
    """``(n_hat . sigma) (x) I_{d_b}`` with ``n_hat = n / |n|``."""
    n = np.asarray(n, dtype=float)
    norm = np.linalg.norm(n)
    if n.shape != (3,) or norm == 0.0:
        raise ValidationError("direction", "direction must be a non-zero real 3-vector")
    n = n / norm
    k_a = sum(c * p for c, p in zip(n, PAULIS))
    return Observable(kron(k_a, np.eye(d_b)), n)


def skew_information(rho: BipartiteState, k: Observable) -> float:
    """Wigner-Yanase skew information ``-Tr([sqrt(rho), K]^2) / 2``."""
    km = as_matrix(k.matrix)
    if km.shape != rho.matrix.shape:
        raise ValidationError(
            "dimension", f"observable shape {km.shape} does not match state shape {rho.matrix.shape}"
        )
    s = matrix_sqrt(rho.matrix)
    c = s @ km - km @ s
    # c is anti-Hermitian, so -Tr(c^2) = ||c||_F^2
    return 0.5 * float(np.sum(np.abs(c) ** 2))


def local_pauli_operators(d_b: int) -> list[np.ndarray]:
    return [kron(p, np.eye(d_b)) for p in PAULIS]


def w_matrix(rho: BipartiteState) -> np.ndarray:
    """Real symmetric 3x3 matrix ``W_ij = Tr[sqrt(rho) S_i sqrt(rho) S_j]``, ``S_i = sigma_i (x) I``."""
    _require_qubit_a(rho)
    s = matrix_sqrt(rho.matrix)
    sandwiched = [s @ op @ s for op in local_pauli_operators(rho.d_b)]
    ops = local_pauli_operators(rho.d_b)
    w = np.array([[np.trace(a @ b).real for b in ops] for a in sandwiched])
    return (w + w.T) / 2


def _w_eigenvalues(rho: BipartiteState) -> np.ndarray:
    return hermitian_eig(w_matrix(rho)).eigenvalues


def lqu(rho: BipartiteState) -> MeasureValue:
    """Local quantum uncertainty, the minimum skew information over local directions."""
    lam = _w_eigenvalues(rho)
    return MeasureValue(_clamp("lqu", 1.0 - lam[-1]))


def muin(rho: BipartiteState) -> MeasureValue:
    """Maximal skew information over all local directions on A.

    Unlike :func:`uin` this does not vanish on product states.
    """
    lam = _w_eigenvalues(rho)
    return MeasureValue(_clamp("muin", 1.0 - lam[0]))


def uin(rho: BipartiteState) -> MeasureValue:
    """Uncertainty-induced nonlocality.

    Maximum skew information over local directions ``n`` whose observable
    commutes with the reduced state of A, i.e. ``r x n = 0``. With a
    maximally mixed marginal every direction commutes and the result is
    ``1 - lambda_min(W)``; otherwise ``n = +-r/|r|`` is forced and the value is
    ``1 - r W r^T / |r|^2``.
    """
    _require_qubit_a(rho)
    r = bloch_vector_a(rho)
    w = w_matrix(rho)
    norm = np.linalg.norm(r)
    if norm <= R_ZERO_THRESHOLD:
        lam_min = hermitian_eig(w).eigenvalues[0]
        return MeasureValue(_clamp("uin", 1.0 - lam_min), R_ZERO)
    return MeasureValue(_clamp("uin", 1.0 - (r @ w @ r) / norm**2), R_NONZERO)


def uin_pure(psi: BipartiteState) -> MeasureValue:
    """Pure-state shortcut ``2 (1 - Tr rho_a^2)``."""
    _require_qubit_a(psi)
    purity = psi.state.purity()
    if abs(purity - 1.0) > PURITY_TOL:
        raise PurityError(purity)
    rho_a = psi.reduced_a()
    value = 2.0 * (1.0 - np.trace(rho_a @ rho_a).real)
    return MeasureValue(_clamp("uin_pure", value), PURE_SHORTCUT)


def correlation_gram(rho: BipartiteState) -> np.ndarray:
    """``T T^T`` for the correlation block of the orthonormal local-basis expansion.

    Uses ``M_i = Tr_A[(sigma_i/sqrt2 (x) I) rho]``; summing over a complete
    orthonormal Hermitian basis on B and dropping its identity element gives
    ``(T T^T)_ik = Tr(M_i M_k) - Tr(M_i) Tr(M_k) / d_B``.
    """
    _require_qubit_a(rho)
    d_b = rho.d_b
    ms = [partial_trace_a(op @ rho.matrix, 2, d_b) / np.sqrt(2) for op in local_pauli_operators(d_b)]
    tt = np.array(
        [[np.trace(a @ b).real - np.trace(a).real * np.trace(b).real / d_b for b in ms] for a in ms]
    )
    return (tt + tt.T) / 2


def min_hs(rho: BipartiteState) -> MeasureValue:
    """Hilbert-Schmidt measurement-induced nonlocality (marginal-preserving projective measurements on A)."""
    r = bloch_vector_a(rho)
    tt = correlation_gram(rho)
    norm = np.linalg.norm(r)
    if norm <= R_ZERO_THRESHOLD:
        value = np.trace(tt) - hermitian_eig(tt).eigenvalues[0]
        return MeasureValue(_clamp("min_hs", value, upper=None), R_ZERO)
    value = np.trace(tt) - (r @ tt @ r) / norm**2
    return MeasureValue(_clamp("min_hs", value, upper=None), R_NONZERO)


MEASURES: dict[str, Callable[[BipartiteState], MeasureValue]] = {
    "uin": uin,
    "muin": muin,
    "lqu": lqu,
    "min_hs": min_hs,
}


def measure(name: str) -> Callable[[BipartiteState], MeasureValue]:
    try:
        return MEASURES[name]
    except KeyError:
        raise ValidationError("measure", f"unknown measure {name!r}; choose from {list(MEASURES)}") from None
