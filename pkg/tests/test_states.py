import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from skewcorr.errors import UnsupportedDimensionError, ValidationError
from skewcorr.linalg import frobenius, hermitian_eig, kron
from skewcorr.states import (
    BipartiteState,
    bipartite,
    bloch_vector_a,
    conjugate,
    example_state,
    maximally_mixed_marginal,
    product_state,
    random_density,
    random_local_unitary,
    random_product,
    random_pure,
    random_state,
    random_unitary,
    validate_density,
)

from conftest import ket, proj


class TestValidate:
    def test_maximally_mixed_qubit(self):
        assert validate_density(np.eye(2) / 2).dimension == 2

    def test_trace_error(self):
        with pytest.raises(ValidationError) as err:
            validate_density(np.diag([0.5, 0.6]))
        assert err.value.check == "trace"

    def test_hermitian_error(self):
        with pytest.raises(ValidationError) as err:
            validate_density(np.array([[0.5, 0.1], [0.0, 0.5]]))
        assert err.value.check == "hermitian"

    def test_psd_error(self):
        with pytest.raises(ValidationError) as err:
            validate_density(np.diag([1.2, -0.2]))
        assert err.value.check == "positive-semidefinite"

    def test_no_renormalization(self):
        with pytest.raises(ValidationError):
            validate_density(np.eye(2))

    def test_immutable(self):
        rho = validate_density(np.eye(2) / 2)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1

    def test_dims_must_match(self):
        with pytest.raises(ValidationError):
            BipartiteState(validate_density(np.eye(4) / 4), 2, 3)


class TestExampleState:
    def test_entries(self, example):
        m = example.matrix
        assert m[0, 0] == 0.4205
        assert m[2, 0] == m[0, 2] == 0.3278
        assert example.dims == (2, 2)

    def test_trace(self, example):
        assert np.trace(example.matrix).real == pytest.approx(1.0, abs=1e-12)

    def test_bloch_vector(self, example):
        # 2 Re rho_a[0,1] = 2 * 0.4118, rho_a[0,0] - rho_a[1,1] = 0.5962 - 0.4038
        assert_allclose(bloch_vector_a(example), [0.8236, 0.0, 0.1924], atol=1e-12)


class TestBloch:
    def test_ket0_times_anything(self):
        rho = product_state(validate_density(np.diag([1.0, 0])), random_density(3, 3, 0))
        assert_allclose(bloch_vector_a(rho), [0, 0, 1], atol=1e-14)

    def test_bell(self, bell):
        assert_allclose(bloch_vector_a(bell), [0, 0, 0], atol=1e-15)

    def test_qutrit_rejected(self):
        with pytest.raises(UnsupportedDimensionError):
            bloch_vector_a(random_state(3, 2, 0))

    @pytest.mark.parametrize("d_b", [2, 3, 4])
    @pytest.mark.parametrize("seed", range(5))
    def test_matches_reduced_matrix_formula(self, d_b, seed):
        rho = random_state(2, d_b, seed)
        ra = rho.reduced_a()
        direct = [2 * ra[0, 1].real, -2 * ra[0, 1].imag, (ra[0, 0] - ra[1, 1]).real]
        assert np.max(np.abs(bloch_vector_a(rho) - direct)) < 1e-12
        assert np.linalg.norm(bloch_vector_a(rho)) <= 1 + 1e-9


class TestRandom:
    def test_rank_one_is_pure(self):
        assert abs(random_density(5, 1, 3).purity() - 1) < 1e-10

    def test_deterministic(self):
        assert_array_equal(random_density(4, 3, 11).matrix, random_density(4, 3, 11).matrix)
        assert not np.array_equal(random_density(4, 3, 11).matrix, random_density(4, 3, 12).matrix)

    @pytest.mark.parametrize("rank", [0, 5])
    def test_rank_out_of_range(self, rank):
        with pytest.raises(ValidationError):
            random_density(4, rank, 0)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 8))
    def test_generated_states_validate(self, seed, d):
        for rank in {1, d}:
            rho = random_density(d, rank, seed)
            validate_density(rho.matrix)

    def test_random_pure(self):
        psi = random_pure(2, 3, 7)
        assert abs(psi.state.purity() - 1) < 1e-10
        assert_array_equal(psi.matrix, random_pure(2, 3, 7).matrix)

    def test_unitary_scalar(self):
        u = random_unitary(1, 4)
        assert u.shape == (1, 1)
        assert abs(abs(u[0, 0]) - 1) < 1e-14

    @pytest.mark.parametrize("d", [2, 3, 5, 8])
    def test_unitarity(self, d):
        u = random_unitary(d, d)
        assert frobenius(u.conj().T @ u - np.eye(d)) < 1e-10

    def test_haar_first_moment(self):
        # Haar: |U_00|^2 ~ Beta(1, d-1), mean 1/d, variance (d-1)/(d^2 (d+1))
        d, n = 3, 2000
        x = np.array([abs(random_unitary(d, s)[0, 0]) ** 2 for s in range(n)])
        sigma = np.sqrt((d - 1) / (d**2 * (d + 1)) / n)
        assert abs(x.mean() - 1 / d) < 5 * sigma

    @pytest.mark.parametrize("seed", range(5))
    def test_local_unitary_keeps_spectrum(self, seed):
        rho = random_state(2, 3, seed)
        moved = conjugate(rho, random_local_unitary(2, 3, seed + 100))
        assert_allclose(
            hermitian_eig(moved.matrix).eigenvalues, hermitian_eig(rho.matrix).eigenvalues, atol=1e-10
        )


class TestProductAndFiltering:
    def test_product_marginal(self):
        ra, rb = random_density(2, 2, 1), random_density(3, 2, 2)
        rho = product_state(ra, rb)
        assert rho.dims == (2, 3)
        assert np.max(np.abs(rho.reduced_a() - ra.matrix)) < 1e-12

    def test_random_product_factorizes(self):
        rho = random_product(2, 3, 9)
        assert frobenius(kron(rho.reduced_a(), rho.reduced_b()) - rho.matrix) < 1e-12

    @pytest.mark.parametrize("seed", range(6))
    def test_filtered_marginal_is_maximally_mixed(self, seed):
        rho = maximally_mixed_marginal(random_state(2, 3, seed))
        assert np.linalg.norm(bloch_vector_a(rho)) < 1e-12

    def test_filter_needs_full_rank_marginal(self):
        rho = bipartite(proj(ket(1, 0, 0, 0)), 2, 2)
        with pytest.raises(ValidationError):
            maximally_mixed_marginal(rho)
