"""Kraus channels acting on subsystem B and parameter sweeps over channel families."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ValidationError
from .linalg import PAULIS, as_matrix, frobenius, kron
from .measures import measure
from .states import BipartiteState, bipartite

COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class KrausChannel:
    operators: tuple

    def __post_init__(self):
        ops = tuple(as_matrix(e) for e in self.operators)
        if not ops:
            raise ValidationError("kraus", "a channel needs at least one Kraus operator")
        shape = ops[0].shape
        if shape[0] != shape[1] or any(e.shape != shape for e in ops):
            raise ValidationError("kraus", "Kraus operators must be square and of equal size")
        gap = frobenius(sum(e.conj().T @ e for e in ops) - np.eye(shape[0]))
        if gap > COMPLETENESS_TOL:
            raise ValidationError("completeness", f"||sum E^dag E - I||_F = {gap:.3e}")
        object.__setattr__(self, "operators", ops)

    @property
    def dimension(self) -> int:
        return self.operators[0].shape[0]

    def apply(self, rho) -> np.ndarray:
        rho = as_matrix(rho)
        return sum(e @ rho @ e.conj().T for e in self.operators)


def _check_rate(name: str, p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValidationError("parameter", f"{name} must lie in [0, 1], got {p}")
    return p


def amplitude_damping(gamma: float) -> KrausChannel:
    """Qubit relaxation toward ``|0>`` with probability ``gamma``."""
    gamma = _check_rate("gamma", gamma)
    e0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex)
    e1 = np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex)
    return KrausChannel((e0, e1))


def phase_damping(lam: float) -> KrausChannel:
    lam = _check_rate("lambda", lam)
    e0 = np.array([[1, 0], [0, np.sqrt(1 - lam)]], dtype=complex)
    e1 = np.array([[0, 0], [0, np.sqrt(lam)]], dtype=complex)
    return KrausChannel((e0, e1))


def depolarizing(p: float, d: int = 2) -> KrausChannel:
    """``rho -> (1 - p) rho + p I/d``.

    Qubits use the Pauli Kraus set; larger ``d`` uses the clock-and-shift
    (Weyl) operators.
    """
    p = _check_rate("p", p)
    if d == 2:
        ops = [np.sqrt(1 - 3 * p / 4) * np.eye(2, dtype=complex)]
        ops += [np.sqrt(p / 4) * s for s in PAULIS]
        return KrausChannel(tuple(ops))
    shift = np.roll(np.eye(d, dtype=complex), 1, axis=0)
    clock = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    ops = []
    for a in range(d):
        for b in range(d):
            weyl = np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b)
            weight = 1 - p + p / d**2 if a == b == 0 else p / d**2
            ops.append(np.sqrt(weight) * weyl)
    return KrausChannel(tuple(ops))


CHANNEL_FAMILIES: dict[str, Callable[[float], KrausChannel]] = {
    "amplitude-damping": amplitude_damping,
    "phase-damping": phase_damping,
    "depolarizing": depolarizing,
}


def channel_family(name: str) -> Callable[[float], KrausChannel]:
    try:
        return CHANNEL_FAMILIES[name]
    except KeyError:
        raise ValidationError(
            "channel", f"unknown channel {name!r}; choose from {sorted(CHANNEL_FAMILIES)}"
        ) from None


def apply_channel_b(rho: BipartiteState, channel: KrausChannel) -> BipartiteState:
    """``sum_k (I (x) E_k) rho (I (x) E_k^dag)``."""
    if channel.dimension != rho.d_b:
        raise ValidationError(
            "dimension", f"channel acts on dimension {channel.dimension}, subsystem B has {rho.d_b}"
        )
    eye_a = np.eye(rho.d_a)
    out = sum(kron(eye_a, e) @ rho.matrix @ kron(eye_a, e.conj().T) for e in channel.operators)
    return bipartite((out + out.conj().T) / 2, rho.d_a, rho.d_b)


@dataclass
class SweepSeries:
    grid: np.ndarray
    values: dict[str, np.ndarray] = field(default_factory=dict)

    def rows(self):
        labels = list(self.values)
        for i, g in enumerate(self.grid):
            yield float(g), {k: float(self.values[k][i]) for k in labels}


def uniform_grid(points: int) -> np.ndarray:
    if points < 1:
        raise ValidationError("grid", f"need at least one grid point, got {points}")
    if points == 1:
        return np.zeros(1)
    return np.linspace(0.0, 1.0, points)


def sweep(
    rho: BipartiteState,
    family: Callable[[float], KrausChannel],
    grid: Sequence[float],
    measures: Sequence[str] = ("uin", "muin", "lqu", "min_hs"),
    workers: int | None = None,
) -> SweepSeries:
    """Evaluate ``measures`` on ``family(g)`` applied to B for each ``g`` in ``grid``.

    ``workers > 1`` evaluates grid points on a thread pool; results are
    assembled in grid order and match the sequential run.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValidationError("grid", "grid must be a non-empty 1-d sequence")
    if np.any(grid < 0) or np.any(grid > 1):
        raise ValidationError("grid", "grid points must lie in [0, 1]")
    if np.any(np.diff(grid) <= 0):
        raise ValidationError("grid", "grid must be strictly ascending")
    fns = {name: measure(name) for name in measures}

    def point(g):
        out = apply_channel_b(rho, family(g))
        return [fn(out).value for fn in fns.values()]

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            table = list(pool.map(point, grid))
    else:
        table = [point(g) for g in grid]
    table = np.array(table, dtype=float).reshape(grid.size, len(fns))
    return SweepSeries(grid, {name: table[:, j] for j, name in enumerate(fns)})
