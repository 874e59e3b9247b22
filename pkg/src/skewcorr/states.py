"""Density matrices on ``C^dA (x) C^dB``: validation, builtin states and seeded generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedDimensionError, ValidationError
from .linalg import (
    EIGEN_CLAMP_TOL,
    PAULIS,
    as_matrix,
    check_hermitian,
    hermitian_eig,
    kron,
    partial_trace_a,
    partial_trace_b,
)

TRACE_TOL = 1e-10
BLOCH_NORM_TOL = 1e-9

# Published 4x4 example state, entries as printed (real symmetric, trace 1).
EXAMPLE_ENTRIES = (
    (0.4205, 0.0805, 0.3278, 0.0966),
    (0.0805, 0.1757, 0.0564, 0.0840),
    (0.3278, 0.0564, 0.2808, 0.0615),
    (0.0966, 0.0840, 0.0615, 0.1230),
)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix. Build through :func:`validate_density`."""

    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


@dataclass(frozen=True)
class BipartiteState:
    state: DensityMatrix
    d_a: int
    d_b: int

    def __post_init__(self):
        if self.d_a < 1 or self.d_b < 1 or self.d_a * self.d_b != self.state.dimension:
            raise ValidationError(
                "dimension",
                f"d_A={self.d_a} x d_B={self.d_b} does not match matrix dimension {self.state.dimension}",
            )

    @property
    def matrix(self) -> np.ndarray:
        return self.state.matrix

    @property
    def dims(self) -> tuple[int, int]:
        return self.d_a, self.d_b

    def reduced_a(self) -> np.ndarray:
        return partial_trace_b(self.matrix, self.d_a, self.d_b)

    def reduced_b(self) -> np.ndarray:
        return partial_trace_a(self.matrix, self.d_a, self.d_b)


def validate_density(m, tol: float = TRACE_TOL) -> DensityMatrix:
    """Check hermiticity, unit trace and positivity; never renormalizes."""
    a = as_matrix(m)
    h = check_hermitian(a)
    tr = np.trace(h).real
    if abs(tr - 1.0) > tol:
        raise ValidationError("trace", f"trace {tr:.12g} differs from 1 by more than {tol:g}")
    lam_min = hermitian_eig(h).eigenvalues[0]
    if lam_min < -EIGEN_CLAMP_TOL:
        raise ValidationError(
            "positive-semidefinite", f"minimum eigenvalue {lam_min:.3e} < -{EIGEN_CLAMP_TOL:g}"
        )
    return DensityMatrix(_frozen(h))


def bipartite(m, d_a: int, d_b: int) -> BipartiteState:
    return BipartiteState(validate_density(m), int(d_a), int(d_b))


def example_state() -> BipartiteState:
    return bipartite(np.array(EXAMPLE_ENTRIES), 2, 2)


def bell_state() -> BipartiteState:
    psi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return bipartite(np.outer(psi, psi.conj()), 2, 2)


def max_mixed(d_a: int = 2, d_b: int = 2) -> BipartiteState:
    n = d_a * d_b
    return bipartite(np.eye(n) / n, d_a, d_b)


def product_mixed() -> BipartiteState:
    """``|0><0| (x) I/2``: zero UIN but unit MUIN."""
    ket0 = validate_density(np.diag([1.0, 0.0]))
    half = validate_density(np.eye(2) / 2)
    return product_state(ket0, half)


BUILTINS = {
    "example": example_state,
    "bell": bell_state,
    "product-mixed": product_mixed,
    "max-mixed": max_mixed,
}


def builtin(name: str) -> BipartiteState:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValidationError(
            "builtin", f"unknown builtin state {name!r}; choose from {sorted(BUILTINS)}"
        ) from None


def bloch_vector_a(rho: BipartiteState) -> np.ndarray:
    """Bloch vector of subsystem A, ``r_i = Tr[rho (sigma_i (x) I)]``."""
    if rho.d_a != 2:
        raise UnsupportedDimensionError(f"Bloch vector needs d_A = 2, got {rho.d_a}")
    rho_a = rho.reduced_a()
    r = np.array([np.trace(rho_a @ p).real for p in PAULIS])
    norm = np.linalg.norm(r)
    if norm > 1 + BLOCH_NORM_TOL:
        raise ValidationError("bloch-norm", f"|r| = {norm:.12g} exceeds 1")
    return r


def product_state(rho_a: DensityMatrix, rho_b: DensityMatrix) -> BipartiteState:
    return bipartite(kron(rho_a.matrix, rho_b.matrix), rho_a.dimension, rho_b.dimension)


def conjugate(rho: BipartiteState, u) -> BipartiteState:
    """``U rho U^dag`` for a unitary on the full space (e.g. ``kron(U_A, U_B)``)."""
    u = as_matrix(u)
    return bipartite(u @ rho.matrix @ u.conj().T, rho.d_a, rho.d_b)


def maximally_mixed_marginal(rho: BipartiteState) -> BipartiteState:
    """Local filtering ``(rho_a^{-1/2} (x) I) rho (rho_a^{-1/2} (x) I) / d_A``.

    The result has ``Tr_B = I / d_A`` while keeping the correlations of
    ``rho``. Requires a full-rank marginal.
    """
    rho_a = rho.reduced_a()
    w, v = hermitian_eig(rho_a)
    if w[0] <= 1e-12:
        raise ValidationError("rank", "reduced state of A is singular; cannot filter")
    f = (v / np.sqrt(w)) @ v.conj().T
    big = kron(f, np.eye(rho.d_b))
    out = big @ rho.matrix @ big.conj().T / rho.d_a
    return bipartite((out + out.conj().T) / 2, rho.d_a, rho.d_b)


def _ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def random_density(d: int, rank: int, seed: int) -> DensityMatrix:
    """Seeded random density matrix ``G G^dag / Tr(G G^dag)`` with ``G`` a ``d x rank`` Ginibre matrix."""
    if d < 1 or not 1 <= rank <= d:
        raise ValidationError("rank", f"rank must lie in [1, {d}], got {rank}")
    g = _ginibre(np.random.default_rng(seed), d, rank)
    m = g @ g.conj().T
    m = m / np.trace(m).real
    return validate_density((m + m.conj().T) / 2)


def random_state(d_a: int, d_b: int, seed: int, rank: int | None = None) -> BipartiteState:
    n = d_a * d_b
    return BipartiteState(random_density(n, n if rank is None else rank, seed), d_a, d_b)


def random_pure(d_a: int, d_b: int, seed: int) -> BipartiteState:
    if d_a < 1 or d_b < 1:
        raise ValidationError("dimension", f"dimensions must be positive, got {d_a}, {d_b}")
    return random_state(d_a, d_b, seed, rank=1)


def random_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-random unitary from the QR factorization of a seeded Ginibre matrix."""
    if d < 1:
        raise ValidationError("dimension", f"d must be positive, got {d}")
    q, r = np.linalg.qr(_ginibre(np.random.default_rng(seed), d, d))
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_local_unitary(d_a: int, d_b: int, seed: int) -> np.ndarray:
    ss = np.random.SeedSequence(seed)
    sa, sb = (int(s.generate_state(1)[0]) for s in ss.spawn(2))
    return kron(random_unitary(d_a, sa), random_unitary(d_b, sb))


def random_product(d_a: int, d_b: int, seed: int) -> BipartiteState:
    ss = np.random.SeedSequence(seed)
    sa, sb = (int(s.generate_state(1)[0]) for s in ss.spawn(2))
    return product_state(random_density(d_a, d_a, sa), random_density(d_b, d_b, sb))
