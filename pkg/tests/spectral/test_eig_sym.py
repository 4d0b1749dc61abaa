"""Tests for the symmetric eigendecomposition and subspace iteration."""

import numpy as np
import pytest
from scipy.stats import ortho_group

from augmoments.errors import ArgumentError, RangeError, ShapeError
from augmoments.models.grid import Grid
from augmoments.spectral import eig_sym, numerical_rank, subspace_iteration, top_eigvec_images


@pytest.fixture
def decaying_matrix() -> tuple[np.ndarray, np.ndarray]:
    """A 30 x 30 PSD matrix with eigenvalues 2^-i and a random eigenbasis."""
    basis = ortho_group.rvs(30, random_state=5)
    values = 2.0 ** -np.arange(30)
    return (basis * values) @ basis.T, values


class TestEigSym:
    """Tests for eig_sym."""

    def test_zero_matrix_has_rank_zero(self):
        """Test that the zero matrix gives rank 0 and an empty tangent factor."""
        factor = eig_sym(np.zeros((5, 5)))
        assert factor.rank == 0
        assert factor.lambda_max == 0.0
        assert factor.tangent.shape == (5, 0)

    def test_diagonal(self):
        """Test eigenvalues, signs and tangent of diag(3, 1, 0)."""
        factor = eig_sym(np.diag([3.0, 1.0, 0.0]))
        np.testing.assert_allclose(factor.eigenvalues, [3.0, 1.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(factor.eigenvectors, np.eye(3), atol=1e-15)
        assert factor.rank == 2
        np.testing.assert_allclose(factor.tangent, [[np.sqrt(3.0), 0.0], [0.0, 1.0], [0.0, 0.0]], atol=1e-15)
        assert factor.trace == pytest.approx(4.0)

    def test_reconstruction(self, decaying_matrix):
        """Test that Q diag(lambda) Q^T and the tangent factor reproduce the matrix."""
        sigma, values = decaying_matrix
        factor = eig_sym(sigma)
        np.testing.assert_allclose(factor.eigenvalues, values, atol=1e-12)
        rebuilt = (factor.eigenvectors * factor.eigenvalues) @ factor.eigenvectors.T
        np.testing.assert_allclose(rebuilt, sigma, atol=1e-12)
        np.testing.assert_allclose(factor.tangent @ factor.tangent.T, sigma, atol=1e-9)

    def test_rank_tolerance(self, decaying_matrix):
        """Test that the rank counts eigenvalues above tolerance * lambda_max."""
        sigma, _ = decaying_matrix
        assert eig_sym(sigma, tolerance=0.1).rank == 4
        assert eig_sym(sigma, tolerance=1e-3).rank == 10

    def test_signs_are_deterministic(self, decaying_matrix):
        """Test that the first nonzero coefficient of each eigenvector is positive."""
        factor = eig_sym(decaying_matrix[0])
        for column in factor.eigenvectors.T:
            assert column[np.flatnonzero(np.abs(column) > 1e-12)[0]] > 0

    def test_negative_eigenvalues_clamped(self):
        """Test that small negative eigenvalues are clamped to zero."""
        factor = eig_sym(np.diag([1.0, -1e-3]))
        np.testing.assert_allclose(factor.eigenvalues, [1.0, 0.0], atol=1e-15)
        assert factor.rank == 1

    def test_rejects_bad_input(self):
        """Test that asymmetric, non-finite and non-square input is refused."""
        with pytest.raises(ArgumentError):
            eig_sym(np.array([[1.0, 1.0], [0.0, 1.0]]))
        with pytest.raises(ArgumentError):
            eig_sym(np.array([[np.nan, 0.0], [0.0, 1.0]]))
        with pytest.raises(ShapeError):
            eig_sym(np.zeros((2, 3)))


class TestSubspaceIteration:
    """Tests for subspace_iteration."""

    def test_matches_dense_eigenpairs(self, decaying_matrix):
        """Test the top three eigenpairs against the dense decomposition."""
        sigma, values = decaying_matrix
        found_values, found_vectors = subspace_iteration(lambda block: sigma @ block, 30, 3, iterations=30)
        np.testing.assert_allclose(found_values, values[:3], rtol=1e-10)
        exact = eig_sym(sigma).eigenvectors[:, :3]
        np.testing.assert_allclose(np.abs(np.sum(found_vectors * exact, axis=0)), 1.0, atol=1e-10)

    def test_seeded(self, decaying_matrix):
        """Test that the same seed gives the same result."""
        sigma, _ = decaying_matrix
        first = subspace_iteration(lambda block: sigma @ block, 30, 2, iterations=3, seed=11)
        second = subspace_iteration(lambda block: sigma @ block, 30, 2, iterations=3, seed=11)
        np.testing.assert_array_equal(first[0], second[0])
        np.testing.assert_array_equal(first[1], second[1])

    def test_argument_checks(self):
        """Test that rank and iteration counts are validated."""
        with pytest.raises(ArgumentError):
            subspace_iteration(lambda block: block, 4, 5)
        with pytest.raises(ArgumentError):
            subspace_iteration(lambda block: block, 4, 0)
        with pytest.raises(ArgumentError):
            subspace_iteration(lambda block: block, 4, 2, iterations=0)


class TestTopEigvecImages:
    """Tests for top_eigvec_images."""

    @pytest.fixture
    def factor(self):
        return eig_sym(np.diag([3.0, 1.0, 0.0]))

    def test_zero_requested(self, factor):
        """Test that k = 0 returns no images."""
        assert top_eigvec_images(factor, Grid(height=1, width=3), 0) == []

    def test_leading_vectors(self, factor):
        """Test that images are the leading eigenvectors in order."""
        images = top_eigvec_images(factor, Grid(height=1, width=3), 2)
        np.testing.assert_allclose(images[0].data, [1.0, 0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(images[1].data, [0.0, 1.0, 0.0], atol=1e-15)

    def test_beyond_rank(self, factor):
        """Test that asking for more vectors than the rank raises RangeError."""
        with pytest.raises(RangeError):
            top_eigvec_images(factor, Grid(height=1, width=3), 3)

    def test_bad_arguments(self, factor):
        """Test negative k and mismatched grids."""
        with pytest.raises(ArgumentError):
            top_eigvec_images(factor, Grid(height=1, width=3), -1)
        with pytest.raises(ShapeError):
            top_eigvec_images(factor, Grid.square(2), 1)


class TestNumericalRank:
    """Tests for numerical_rank."""

    def test_relative_tolerance(self):
        """Only eigenvalues above tolerance * lambda_max count."""
        assert numerical_rank(np.array([1.0, 1e-9, 1e-11, 0.0])) == 2
        assert numerical_rank(np.array([1.0, 1e-9, 1e-11]), tolerance=1e-12) == 3

    def test_nonpositive_top(self):
        """Empty or non-positive spectra have rank 0."""
        assert numerical_rank(np.array([])) == 0
        assert numerical_rank(np.array([0.0, -1e-18])) == 0
