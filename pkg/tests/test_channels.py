import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from skewcorr.channels import (
    KrausChannel,
    amplitude_damping,
    apply_channel_b,
    channel_family,
    depolarizing,
    phase_damping,
    sweep,
    uniform_grid,
)
from skewcorr.errors import ValidationError
from skewcorr.linalg import frobenius, kron
from skewcorr.measures import MEASURES, lqu, min_hs, muin, uin
from skewcorr.states import bipartite, random_density, random_state

rates = st.floats(0.0, 1.0)


def completeness(ch):
    return frobenius(sum(e.conj().T @ e for e in ch.operators) - np.eye(ch.dimension))


class TestAmplitudeDamping:
    def test_identity_at_zero(self):
        e0, e1 = amplitude_damping(0.0).operators
        assert_allclose(e0, np.eye(2))
        assert_allclose(e1, np.zeros((2, 2)))

    def test_full_decay(self):
        ch = amplitude_damping(1.0)
        for s in range(5):
            rho = random_density(2, 2, s).matrix
            assert_allclose(ch.apply(rho), np.diag([1.0, 0.0]), atol=1e-15)

    @settings(max_examples=50, deadline=None)
    @given(rates)
    def test_completeness(self, g):
        assert completeness(amplitude_damping(g)) < 1e-12

    @pytest.mark.parametrize("g", [-0.1, 1.5])
    def test_domain(self, g):
        with pytest.raises(ValidationError):
            amplitude_damping(g)

    @settings(max_examples=30, deadline=None)
    @given(rates, rates, st.integers(0, 2**32 - 1))
    def test_composition(self, g1, g2, seed):
        rho = random_state(2, 2, seed)
        twice = apply_channel_b(apply_channel_b(rho, amplitude_damping(g1)), amplitude_damping(g2))
        once = apply_channel_b(rho, amplitude_damping(g1 + g2 - g1 * g2))
        assert frobenius(twice.matrix - once.matrix) < 1e-10


class TestOtherFamilies:
    @pytest.mark.parametrize("family", [phase_damping, depolarizing])
    @pytest.mark.parametrize("p", [0.0, 0.3, 1.0])
    def test_qubit_completeness(self, family, p):
        assert completeness(family(p)) < 1e-12

    @pytest.mark.parametrize("d", [3, 4])
    @pytest.mark.parametrize("p", [0.0, 0.4, 1.0])
    def test_weyl_depolarizing(self, d, p):
        ch = depolarizing(p, d)
        assert completeness(ch) < 1e-12
        rho = random_density(d, d, 5).matrix
        assert frobenius(ch.apply(rho) - ((1 - p) * rho + p * np.eye(d) / d)) < 1e-12

    def test_qubit_depolarizing_action(self):
        rho = random_density(2, 2, 1).matrix
        assert frobenius(depolarizing(0.3).apply(rho) - (0.7 * rho + 0.3 * np.eye(2) / 2)) < 1e-12

    def test_phase_damping_kills_coherence(self):
        rho = random_density(2, 2, 2).matrix
        out = phase_damping(1.0).apply(rho)
        assert_allclose(out, np.diag(np.diag(rho)), atol=1e-15)

    def test_incomplete_kraus_rejected(self):
        with pytest.raises(ValidationError) as err:
            KrausChannel((np.diag([1.0, 0.5]),))
        assert err.value.check == "completeness"

    def test_family_lookup(self):
        assert channel_family("amplitude-damping") is amplitude_damping
        with pytest.raises(ValidationError):
            channel_family("erasure")


class TestApplyChannel:
    def test_identity_channel(self):
        rho = random_state(2, 3, 0)
        out = apply_channel_b(rho, depolarizing(0.0, 3))
        assert np.max(np.abs(out.matrix - rho.matrix)) < 1e-12

    def test_bell_full_decay(self, bell):
        out = apply_channel_b(bell, amplitude_damping(1.0))
        assert_allclose(out.matrix, kron(np.eye(2) / 2, np.diag([1.0, 0.0])), atol=1e-15)

    def test_example_half_damping(self, example):
        out = apply_channel_b(example, amplitude_damping(0.5))
        assert frobenius(out.reduced_a() - example.reduced_a()) < 1e-10
        assert abs(np.trace(out.matrix) - 1) < 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            apply_channel_b(random_state(2, 3, 0), amplitude_damping(0.2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1), rates, st.sampled_from(list(("ad", "pd", "dep"))))
    def test_trace_and_marginal_preserved(self, seed, p, kind):
        rho = random_state(2, 2, seed)
        ch = {"ad": amplitude_damping, "pd": phase_damping, "dep": depolarizing}[kind](p)
        out = apply_channel_b(rho, ch)
        assert abs(np.trace(out.matrix).real - 1) < 1e-10
        assert frobenius(out.reduced_a() - rho.reduced_a()) < 1e-10

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.sampled_from(["ad", "pd", "dep"]))
    def test_contractivity(self, seed, kind):
        family = {"ad": amplitude_damping, "pd": phase_damping, "dep": depolarizing}[kind]
        rho = random_state(2, 2, seed)
        series = sweep(rho, family, uniform_grid(21), ("uin", "muin", "lqu"))
        for name, vals in series.values.items():
            assert vals[0] == MEASURES[name](rho).value
            assert np.all(np.diff(vals) <= 1e-9), name


class TestSweep:
    def test_single_point_matches_state(self, example):
        series = sweep(example, amplitude_damping, [0.0])
        for fn in (uin, muin, lqu, min_hs):
            assert series.values[fn.__name__][0] == fn(example).value

    def test_fig1_uin_contractive(self, example):
        series = sweep(example, amplitude_damping, uniform_grid(101), ("uin",))
        assert len(series.grid) == 101
        assert np.all(np.diff(series.values["uin"]) <= 1e-9)

    def test_min_hs_cannot_grow_under_qubit_channels_on_b(self, example):
        # on 2x2 states any channel on B maps T -> T M^T + x c^T with ||M|| <= 1,
        # and the x c^T part is projected out, so MIN is non-increasing here too
        for family in (amplitude_damping, phase_damping, depolarizing):
            vals = sweep(example, family, uniform_grid(101), ("min_hs",)).values["min_hs"]
            assert np.all(np.diff(vals) <= 1e-12)

    def test_threaded_matches_sequential(self, example):
        grid = uniform_grid(31)
        a = sweep(example, amplitude_damping, grid)
        b = sweep(example, amplitude_damping, grid, workers=4)
        for k in a.values:
            np.testing.assert_array_equal(a.values[k], b.values[k])

    def test_unknown_measure(self, example):
        with pytest.raises(ValidationError):
            sweep(example, amplitude_damping, [0.0], ("concurrence",))

    @pytest.mark.parametrize("grid", [[], [0.5, 0.2], [0.0, 1.2], [0.3, 0.3]])
    def test_bad_grid(self, example, grid):
        with pytest.raises(ValidationError):
            sweep(example, amplitude_damping, grid)

    def test_rows(self, example):
        rows = list(sweep(example, amplitude_damping, [0.0, 1.0], ("uin",)).rows())
        assert rows[0][0] == 0.0 and rows[1][0] == 1.0
        assert set(rows[0][1]) == {"uin"}

    def test_uniform_grid(self):
        assert_allclose(uniform_grid(5), [0, 0.25, 0.5, 0.75, 1])
        assert_allclose(uniform_grid(1), [0])
        with pytest.raises(ValidationError):
            uniform_grid(0)
