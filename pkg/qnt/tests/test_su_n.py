"""
Tests for SU(3) from the qutrit Z operators and generalized SU(d) generators
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.exceptions import DomainError, NotAStateError
from app.models.sun import GellMannSet
from app.services import su_n

SQRT3 = math.sqrt(3)


@pytest.fixture(scope="module")
def gellmann() -> GellMannSet:
    return su_n.gellmann_from_Z()


@pytest.fixture(scope="module")
def constants(gellmann):
    return su_n.structure_constants(gellmann)


@pytest.mark.unit
@pytest.mark.sun
class TestGellMannFromZ:
    """Gell-Mann matrices rebuilt from Z1, Z2, Z3 at d = 3"""

    def test_matches_standard_table(self, gellmann):
        standard = su_n.standard_gellmann()
        for a in range(1, 9):
            assert np.allclose(gellmann[a], standard[a], atol=1e-14), f"lambda_{a}"

    def test_anticommutator_z2_z3(self):
        ops = su_n.z3_basis_operators()
        expected = np.array([[0, -1j, 0], [1j, 0, 1j], [0, -1j, 0]]) / math.sqrt(2)
        assert np.allclose(ops["{Z2,Z3}"], expected)

    def test_trace_orthogonality(self, gellmann):
        assert su_n.trace_orthogonality_residual(gellmann) <= 1e-12

    def test_index_is_one_based(self, gellmann):
        assert gellmann[1] is gellmann.lambdas[0]
        with pytest.raises(IndexError):
            gellmann[0]

    def test_set_needs_eight_matrices(self):
        with pytest.raises(ValidationError):
            GellMannSet(lambdas=[np.eye(3)] * 7)


@pytest.mark.unit
@pytest.mark.sun
class TestStructureConstants:
    """f_abc and d_abc from traces"""

    def test_known_values(self, constants):
        assert constants.f_at(1, 2, 3) == pytest.approx(1.0)
        assert constants.f_at(1, 4, 7) == pytest.approx(0.5)
        assert constants.f_at(4, 5, 8) == pytest.approx(SQRT3 / 2)
        assert constants.f_at(2, 1, 3) == pytest.approx(-1.0)
        assert constants.d_at(1, 1, 8) == pytest.approx(1 / SQRT3)
        assert constants.d_at(4, 4, 8) == pytest.approx(-1 / (2 * SQRT3))

    def test_closure(self, gellmann, constants):
        comm, anti = su_n.closure_residuals(gellmann, constants)
        assert comm <= 1e-10
        assert anti <= 1e-10

    def test_symmetries(self, constants):
        f_sym, d_sym = su_n.symmetry_residuals(constants)
        assert f_sym <= 1e-12 and d_sym <= 1e-12

    def test_cartan_killing_metric(self, constants):
        metric, inverse = su_n.cartan_killing(constants)
        assert np.allclose(metric, 3 * np.eye(8))
        assert np.allclose(inverse, np.eye(8) / 3)

    def test_casimir(self, gellmann):
        casimir = su_n.casimir_su3(gellmann)
        assert np.allclose(casimir, (4 / 3) * np.eye(3))


@pytest.mark.unit
@pytest.mark.sun
class TestQutritDensity:
    """rho = (I + sqrt(3) b . lambda) / 3"""

    def test_maximally_mixed(self):
        rho = su_n.qutrit_density(np.zeros(8))
        assert np.allclose(rho.matrix, np.eye(3) / 3)

    def test_pure_state(self):
        b = [0, 0, SQRT3 / 2, 0, 0, 0, 0, 0.5]
        rho = su_n.qutrit_density(b)
        assert np.allclose(rho.matrix, np.diag([1, 0, 0]), atol=1e-12)
        assert rho.purity == pytest.approx(1.0)

    def test_outside_state_space(self):
        with pytest.raises(NotAStateError):
            su_n.qutrit_density([0, 0, 0, 0, 0, 0, 0, 1])

    def test_wrong_length(self):
        with pytest.raises(DomainError):
            su_n.qutrit_density([0.1, 0.2])


@pytest.mark.unit
@pytest.mark.sun
class TestGeneralizedGenerators:
    """Z_l^k in dimension d"""

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_commutation_relations_exact(self, d):
        assert su_n.ggm_commutation_violations(d) == 0

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_trace_sum_vanishes(self, d):
        assert np.all(su_n.ggm_trace_sum(d) == 0)

    def test_generator_entries(self):
        gens = su_n.ggm_generators(3)
        assert len(gens) == 9
        assert np.allclose(gens[(1, 1)], np.diag([2, -1, -1]) / 3)
        assert gens[(1, 2)][0, 1] == 1 and np.count_nonzero(gens[(1, 2)]) == 1

    @pytest.mark.parametrize("d", [2, 3, 6])
    def test_hermiticity_and_rank(self, d):
        assert su_n.ggm_hermiticity_residual(d) == 0.0
        assert su_n.ggm_rank(d) == d * d - 1

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_hermitian_basis(self, d):
        basis = su_n.hermitian_ggm_basis(d)
        assert len(basis) == d * d - 1
        gram = np.array([[np.trace(a @ b) for b in basis] for a in basis])
        assert np.allclose(gram, np.eye(d * d - 1) / 2)
        for t in basis:
            assert np.allclose(t, t.conj().T)
            assert abs(np.trace(t)) < 1e-14

    @pytest.mark.parametrize("d", [2, 3, 4, 7])
    def test_casimir_coefficient(self, d):
        assert su_n.casimir_coefficient(d) == pytest.approx((d * d - 1) / (2 * d))

    def test_dimension_domain(self):
        with pytest.raises(DomainError):
            su_n.ggm_generators(1)
