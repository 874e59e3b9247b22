"""Brute-force optimizers over local directions, independent of the closed forms.

The skew information is evaluated here directly from its commutator
definition on ``(n . sigma) (x) I``; the ``W`` matrix is never used. Sphere
searches scan a Fibonacci lattice, then polish the best lattice point with
golden-section line searches on two angles of a chart centred on it.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import UnsupportedDimensionError
from .linalg import PAULIS, matrix_sqrt
from .measures import R_ZERO_THRESHOLD, direction_observable
from .states import BipartiteState, bloch_vector_a

DEFAULT_SAMPLES = 2000
DEFAULT_REFINE_ITERS = 40
_GOLDEN_STEPS = 16
_INV_PHI = (math.sqrt(5) - 1) / 2

observable_from_direction = direction_observable


def fibonacci_sphere(n: int) -> np.ndarray:
    """``n`` near-uniform unit vectors on the sphere (golden-angle spiral)."""
    i = np.arange(n) + 0.5
    z = 1 - 2 * i / n
    rho = np.sqrt(1 - z * z)
    phi = np.pi * (1 + math.sqrt(5)) * i
    return np.column_stack((rho * np.cos(phi), rho * np.sin(phi), z))


def _require_qubit_a(rho: BipartiteState):
    if rho.d_a != 2:
        raise UnsupportedDimensionError(f"oracles need d_A = 2, got d_A = {rho.d_a}")


def _local_paulis(d_b: int) -> np.ndarray:
    """Stack of ``sigma_i (x) I_{d_b}``, shape ``(3, 2 d_b, 2 d_b)``."""
    return np.einsum("ijk,lm->ijlkm", np.array(PAULIS), np.eye(d_b)).reshape(3, 2 * d_b, 2 * d_b)


def _local_observables(dirs: np.ndarray, paulis: np.ndarray) -> np.ndarray:
    return np.tensordot(dirs, paulis, axes=1)


def skew_objective(rho: BipartiteState):
    """Vectorized ``n -> -Tr([sqrt(rho), K_n]^2) / 2`` for unit directions (rows)."""
    s = matrix_sqrt(rho.matrix)
    paulis = _local_paulis(rho.d_b)

    def f(dirs):
        dirs = np.asarray(dirs, dtype=float)
        if dirs.ndim == 1:
            k = dirs[0] * paulis[0] + dirs[1] * paulis[1] + dirs[2] * paulis[2]
            c = s @ k - k @ s
            return np.array([-0.5 * np.einsum("ij,ji->", c, c).real])
        k = _local_observables(dirs, paulis)
        c = s @ k - k @ s
        return -0.5 * np.einsum("nij,nji->n", c, c).real

    return f


def hs_objective(rho: BipartiteState):
    """Vectorized ``n -> ||rho - Pi_n(rho)||_F^2`` for the projective measurement along ``n``."""
    m = rho.matrix
    paulis = _local_paulis(rho.d_b)

    def f(dirs):
        dirs = np.atleast_2d(np.asarray(dirs, dtype=float))
        k = _local_observables(dirs, paulis)
        # Pi(rho) = sum_{+-} P rho P with P = (I +- K)/2 equals (rho + K rho K)/2
        diff = 0.5 * (m - k @ m @ k)
        return np.sum(np.abs(diff) ** 2, axis=(1, 2))

    return f


def _chart(center: np.ndarray):
    # orthonormal frame with the centre on the chart origin, away from coordinate poles
    helper = np.eye(3)[np.argmin(np.abs(center))]
    e1 = np.cross(center, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(center, e1)

    def point(a, b):
        return math.cos(b) * (math.cos(a) * center + math.sin(a) * e1) + math.sin(b) * e2

    return point


def _golden_max(g, lo, hi, steps):
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    gc, gd = g(c), g(d)
    for _ in range(steps):
        if gc >= gd:
            hi, d, gd = d, c, gc
            c = hi - _INV_PHI * (hi - lo)
            gc = g(c)
        else:
            lo, c, gc = c, d, gd
            d = lo + _INV_PHI * (hi - lo)
            gd = g(d)
    return (c, gc) if gc >= gd else (d, gd)


def sphere_search(objective, samples: int, refine_iters: int, maximize: bool = True):
    """Optimize ``objective`` over unit 3-vectors.

    Returns ``(best_direction, best_value, coarse_value)``. Refinement only
    ever replaces the incumbent with a strictly better point, so the refined
    value never loses to the coarse one. Ties on the lattice go to the
    smallest index.
    """
    sign = 1.0 if maximize else -1.0
    grid = fibonacci_sphere(samples)
    vals = sign * objective(grid)
    idx = int(np.argmax(vals))
    best_n, best = grid[idx], float(vals[idx])
    coarse = best

    def scalar(n):
        return float(sign * objective(n)[0])

    half_width = 2.0 * math.sqrt(4 * math.pi / samples)
    for _ in range(refine_iters):
        point = _chart(best_n)
        a, va = _golden_max(lambda t: scalar(point(t, 0.0)), -half_width, half_width, _GOLDEN_STEPS)
        if va > best:
            best_n, best = point(a, 0.0), va
            point = _chart(best_n)
        b, vb = _golden_max(lambda t: scalar(point(0.0, t)), -half_width, half_width, _GOLDEN_STEPS)
        if vb > best:
            best_n, best = point(0.0, b), vb
        half_width *= 0.75
    return best_n, sign * best, sign * coarse


def oracle_uin(
    rho: BipartiteState,
    coarse_samples: int = DEFAULT_SAMPLES,
    refine_iters: int = DEFAULT_REFINE_ITERS,
) -> float:
    """Largest skew information over directions with ``r x n = 0``.

    A non-zero Bloch vector pins the direction to ``+-r/|r|`` (both signs
    give the same value); a vanishing one leaves the whole sphere.
    """
    _require_qubit_a(rho)
    f = skew_objective(rho)
    r = bloch_vector_a(rho)
    norm = np.linalg.norm(r)
    if norm > R_ZERO_THRESHOLD:
        return float(f(r / norm)[0])
    return sphere_search(f, coarse_samples, refine_iters, maximize=True)[1]


def oracle_muin(
    rho: BipartiteState,
    coarse_samples: int = DEFAULT_SAMPLES,
    refine_iters: int = DEFAULT_REFINE_ITERS,
) -> float:
    _require_qubit_a(rho)
    return sphere_search(skew_objective(rho), coarse_samples, refine_iters, maximize=True)[1]


def oracle_lqu(
    rho: BipartiteState,
    coarse_samples: int = DEFAULT_SAMPLES,
    refine_iters: int = DEFAULT_REFINE_ITERS,
) -> float:
    _require_qubit_a(rho)
    return sphere_search(skew_objective(rho), coarse_samples, refine_iters, maximize=False)[1]


def oracle_min_hs(
    rho: BipartiteState,
    measurement_samples: int = DEFAULT_SAMPLES,
    refine_iters: int = DEFAULT_REFINE_ITERS,
) -> float:
    """Largest ``||rho - Pi(rho)||_F^2`` over projective measurements on A that keep ``rho_a``."""
    _require_qubit_a(rho)
    f = hs_objective(rho)
    r = bloch_vector_a(rho)
    norm = np.linalg.norm(r)
    if norm > R_ZERO_THRESHOLD:
        return float(f(r / norm)[0])
    return sphere_search(f, measurement_samples, refine_iters, maximize=True)[1]
