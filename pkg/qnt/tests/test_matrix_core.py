"""
Tests for dense matrix arithmetic and exact characteristic polynomials
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, seed, settings as hyp_settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from app.exceptions import DimensionMismatchError, DomainError, NotHermitianError
from app.models.linalg import RationalPolynomial
from app.services.integer_rep import build_Z
from app.services.matrix_core import (
    anticommutator,
    char_poly_exact,
    commutator,
    eigen_residual,
    hermitian_eigen,
    PAULI,
    kron,
    matmul_commutator,
    reconstruction_residual,
)

SIGMA1, SIGMA2, SIGMA3 = PAULI
MATRIX_DIMENSION = 4


@pytest.mark.unit
class TestBrackets:
    """Commutators and anticommutators"""

    def test_identity_commutes(self):
        a = np.arange(9).reshape(3, 3) + 1j
        assert np.allclose(commutator(np.eye(3), a), 0)

    def test_spin_half_commutator(self):
        result = commutator(SIGMA1 / 2, SIGMA2 / 2)
        assert np.allclose(result, 1j * SIGMA3 / 2, atol=1e-15)

    def test_anticommutator_qutrit(self, qutrit_z):
        z1, z2, _ = qutrit_z
        expected = np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]])
        assert np.allclose(anticommutator(z1, z2), expected, atol=1e-15)

    def test_sign_accepts_string(self):
        a, b = SIGMA1, SIGMA3
        assert np.allclose(matmul_commutator(a, b, "anticommutator"), 0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            commutator(np.eye(2), np.eye(3))


@pytest.mark.unit
class TestHermitianEigen:
    """Eigen-decomposition of Hermitian matrices"""

    def test_diagonal(self):
        system = hermitian_eigen(np.diag([1.0, 0.0, -1.0]))
        assert np.allclose(system.eigenvalues, [1, 0, -1])

    def test_z1_qutrit(self, qutrit_z):
        system = hermitian_eigen(qutrit_z[0])
        assert np.allclose(system.eigenvalues, [1, 0, -1], atol=1e-12)

    def test_z3_five_dimensional(self):
        system = hermitian_eigen(build_Z(3, 5))
        assert np.allclose(system.eigenvalues, [2, 1, 0, -1, -2])

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError) as info:
            hermitian_eigen(np.array([[0, 1], [0, 0]]))
        assert info.value.max_asymmetry == pytest.approx(1.0)

    def test_invariants_on_z_matrices(self):
        for d in range(2, 16):
            for p in (1, 2, 3):
                z = build_Z(p, d)
                system = hermitian_eigen(z)
                bound = 1e-10 * (1 + np.max(np.abs(z)))
                assert eigen_residual(z, system) <= bound
                assert reconstruction_residual(z, system) <= bound
                v = system.eigenvectors
                assert np.allclose(v.conj().T @ v, np.eye(d), atol=1e-10)

    @seed(1)
    @hyp_settings(max_examples=50, deadline=None)
    @given(
        real=arrays(
            np.float64,
            (MATRIX_DIMENSION, MATRIX_DIMENSION),
            elements=st.floats(min_value=-10.0, max_value=10.0),
        ),
        imag=arrays(
            np.float64,
            (MATRIX_DIMENSION, MATRIX_DIMENSION),
            elements=st.floats(min_value=-10.0, max_value=10.0),
        ),
    )
    def test_reconstruction_property(self, real, imag):
        a = real + 1j * imag
        a = a + a.conj().T
        system = hermitian_eigen(a)
        bound = 1e-10 * (1 + np.max(np.abs(a)))
        assert reconstruction_residual(a, system) <= bound
        assert np.all(np.diff(system.eigenvalues) <= 0)


@pytest.mark.unit
class TestKron:
    """Kronecker products"""

    def test_identities(self):
        assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_even_slot(self):
        result = kron(np.diag([0, 2]), [[1, 0], [0, 0]])
        assert np.array_equal(result, np.diag([0, 0, 2, 0]))

    def test_odd_slot(self):
        result = kron([[0, 0], [0, 1]], np.diag([1, 3]))
        assert np.array_equal(result, np.diag([0, 0, 1, 3]))

    def test_associative(self, rng):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2))
        c = rng.normal(size=(3, 3))
        left = kron(kron(a, b), c)
        right = kron(a, kron(b, c))
        assert np.max(np.abs(left - right)) <= 1e-14


@pytest.mark.unit
class TestCharPolyExact:
    """Faddeev-LeVerrier over the rationals"""

    def test_z3_n1(self):
        poly = char_poly_exact(build_Z(3, 3, exact=True))
        assert poly == RationalPolynomial((0, 1, 0, -1))

    def test_z3_n2(self):
        poly = char_poly_exact(build_Z(3, 5, exact=True))
        assert poly == RationalPolynomial((0, -4, 0, 5, 0, -1))

    def test_z3_half_integer(self):
        poly = char_poly_exact(build_Z(3, 4, exact=True))
        assert poly.coefficients == (
            Fraction(9, 16),
            Fraction(0),
            Fraction(-5, 2),
            Fraction(0),
            Fraction(1),
        )

    def test_non_diagonal_rational_matrix(self):
        # det([[1,2],[3,4]] - xI) = x^2 - 5x - 2
        poly = char_poly_exact([[1, 2], [3, 4]])
        assert poly == RationalPolynomial((-2, -5, 1))

    def test_rejects_floats(self):
        with pytest.raises(DomainError):
            char_poly_exact([[0.5, 0], [0, 1]])

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatchError):
            char_poly_exact([[1, 2, 3], [4, 5, 6]])


@pytest.mark.unit
class TestRationalPolynomial:
    """Exact polynomial arithmetic"""

    def test_trailing_zeros_stripped(self):
        assert RationalPolynomial((1, 2, 0, 0)).degree == 1
        assert RationalPolynomial((0, 0)).is_zero()
        assert RationalPolynomial((0,)).degree == -1

    def test_arithmetic(self):
        p = RationalPolynomial((Fraction(1, 2), 1))  # x + 1/2
        q = RationalPolynomial((Fraction(-1, 2), 1))  # x - 1/2
        assert p * q == RationalPolynomial((Fraction(-1, 4), 0, 1))
        assert p + q == RationalPolynomial((0, 2))
        assert p - p == RationalPolynomial((0,))
        assert (p * 2).coefficients == (Fraction(1), Fraction(2))

    def test_exact_evaluation(self):
        poly = RationalPolynomial((Fraction(-1, 4), 0, 1))
        assert poly(Fraction(1, 2)) == 0
        assert poly(Fraction(3, 2)) == 2

    def test_strings(self):
        poly = RationalPolynomial((0, 1, 0, -1))
        assert str(poly) == "-x^3 + x"
        assert poly.as_strings() == ["0/1", "1/1", "0/1", "-1/1"]
