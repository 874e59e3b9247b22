"""Seeded invariant suites backing ``skewcorr verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import oracle
from .channels import amplitude_damping, apply_channel_b, depolarizing, phase_damping
from .linalg import hellinger_sq
from .measures import R_NONZERO, direction_observable, lqu, muin, skew_information, uin, uin_pure
from .states import (
    BipartiteState,
    conjugate,
    maximally_mixed_marginal,
    random_local_unitary,
    random_pure,
    random_state,
)

FORCED_TOL = 1e-9
SPHERE_TOL = 2e-4
INVARIANCE_TOL = 1e-9
CONTRACTIVITY_TOL = 1e-9
PURITY_TOL = 1e-8
HELLINGER_TOL = 1e-10
GAMMAS = tuple(round(0.1 * k, 1) for k in range(1, 10))


@dataclass
class SuiteResult:
    name: str
    tolerance: float
    index: int = 0
    trials: int = 0
    max_deviation: float = 0.0
    failures: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, trial: int, deviation: float, tolerance: float | None = None):
        tol = self.tolerance if tolerance is None else tolerance
        self.max_deviation = max(self.max_deviation, float(deviation))
        if not deviation <= tol and trial not in self.failures:
            self.failures.append(trial)


def trial_seed(seed: int, suite: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, suite, trial]).generate_state(1)[0])


def _dims(trial: int) -> tuple[int, int]:
    return (2, 2) if trial % 2 == 0 else (2, 3)


def _oracle_suite(res: SuiteResult, trial: int, s: int):
    rho = random_state(*_dims(trial), s)
    u = uin(rho)
    forced = abs(u.value - oracle.oracle_uin(rho))
    res.record(trial, forced, FORCED_TOL if u.branch == R_NONZERO else SPHERE_TOL)
    zero = maximally_mixed_marginal(rho)
    res.record(trial, abs(uin(zero).value - oracle.oracle_uin(zero)))
    res.record(trial, abs(muin(rho).value - oracle.oracle_muin(rho)))
    res.record(trial, abs(lqu(rho).value - oracle.oracle_lqu(rho)))


def _unitary_suite(res: SuiteResult, trial: int, s: int):
    d_a, d_b = _dims(trial)
    rho = random_state(d_a, d_b, s)
    moved = conjugate(rho, random_local_unitary(d_a, d_b, s + 1))
    for fn in (uin, muin, lqu):
        res.record(trial, abs(fn(moved).value - fn(rho).value))


def _contractivity_suite(res: SuiteResult, trial: int, s: int):
    d_a, d_b = _dims(trial)
    rho = random_state(d_a, d_b, s)
    if d_b == 2:
        families = (amplitude_damping, phase_damping, depolarizing)
    else:
        families = (lambda p: depolarizing(p, d_b),)
    before = {fn: fn(rho).value for fn in (uin, muin, lqu)}
    for family in families:
        for g in GAMMAS:
            out = apply_channel_b(rho, family(g))
            for fn, v in before.items():
                res.record(trial, max(0.0, fn(out).value - v))


def _purity_suite(res: SuiteResult, trial: int, s: int):
    psi = random_pure(*_dims(trial), s)
    res.record(trial, abs(uin(psi).value - uin_pure(psi).value))


def _hellinger_suite(res: SuiteResult, trial: int, s: int):
    d_a, d_b = _dims(trial)
    rho = random_state(d_a, d_b, s)
    n = np.random.default_rng(s).standard_normal(3)
    k = direction_observable(n, d_b)
    kk = k.matrix @ rho.matrix @ k.matrix
    res.record(trial, abs(skew_information(rho, k) - hellinger_sq(rho.matrix, kk)))


SUITES: tuple[tuple[str, float, Callable], ...] = (
    ("closed-form-vs-oracle", SPHERE_TOL, _oracle_suite),
    ("local-unitary-invariance", INVARIANCE_TOL, _unitary_suite),
    ("contractivity", CONTRACTIVITY_TOL, _contractivity_suite),
    ("purity-reduction", PURITY_TOL, _purity_suite),
    ("hellinger-identity", HELLINGER_TOL, _hellinger_suite),
)


def run_suites(seed: int, trials: int) -> Iterator[SuiteResult]:
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    for idx, (name, tol, body) in enumerate(SUITES):
        res = SuiteResult(name, tol, idx)
        for t in range(trials):
            body(res, t, trial_seed(seed, idx, t))
            res.trials += 1
        yield res
