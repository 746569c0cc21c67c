"""
SU(3) from the d = 3 integer q-number, and generalized SU(d) generators
"""

import logging
import math
from fractions import Fraction

import numpy as np

from app.exceptions import DomainError
from app.models.states import DensityMatrix
from app.models.sun import GellMannSet, StructureConstants
from app.services.ensemble_density import validate_density
from app.services.integer_rep import build_Z
from app.services.matrix_core import anticommutator, max_abs

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)
QUTRIT_PSD_TOL = 1e-10


def z3_basis_operators() -> dict[str, np.ndarray]:
    """Z1, Z2, Z3, the three anticommutators and Z1^2, Z2^2 at d = 3"""
    z1, z2, z3 = (build_Z(p, 3) for p in (1, 2, 3))
    return {
        "Z1": z1,
        "Z2": z2,
        "Z3": z3,
        "{Z1,Z2}": anticommutator(z1, z2),
        "{Z2,Z3}": anticommutator(z2, z3),
        "{Z3,Z1}": anticommutator(z3, z1),
        "Z1^2": z1 @ z1,
        "Z2^2": z2 @ z2,
    }


def gellmann_from_Z() -> GellMannSet:
    """Gell-Mann matrices as combinations of the d = 3 Z operators"""
    ops = z3_basis_operators()
    identity = np.eye(3, dtype=np.complex128)
    z1, z2, z3 = ops["Z1"], ops["Z2"], ops["Z3"]
    z1sq, z2sq = ops["Z1^2"], ops["Z2^2"]
    lambdas = (
        (z1 + ops["{Z3,Z1}"]) / SQRT2,
        (z2 + ops["{Z2,Z3}"]) / SQRT2,
        2 * identity + 0.5 * (z3 - 3 * z1sq - 3 * z2sq),
        z1sq - z2sq,
        ops["{Z1,Z2}"],
        (z1 - ops["{Z3,Z1}"]) / SQRT2,
        (z2 - ops["{Z2,Z3}"]) / SQRT2,
        (-2 * identity + 1.5 * (z3 + z1sq + z2sq)) / SQRT3,
    )
    return GellMannSet(lambdas=lambdas)


def standard_gellmann() -> GellMannSet:
    """Reference table of the eight Gell-Mann matrices"""
    lambdas = [np.zeros((3, 3), dtype=np.complex128) for _ in range(8)]
    lambdas[0][0, 1] = lambdas[0][1, 0] = 1
    lambdas[1][0, 1], lambdas[1][1, 0] = -1j, 1j
    lambdas[2][0, 0], lambdas[2][1, 1] = 1, -1
    lambdas[3][0, 2] = lambdas[3][2, 0] = 1
    lambdas[4][0, 2], lambdas[4][2, 0] = -1j, 1j
    lambdas[5][1, 2] = lambdas[5][2, 1] = 1
    lambdas[6][1, 2], lambdas[6][2, 1] = -1j, 1j
    lambdas[7][:, :] = np.diag([1, 1, -2]) / SQRT3
    return GellMannSet(lambdas=tuple(lambdas))


def _pair_products(g: GellMannSet) -> np.ndarray:
    """P[b, c] = lambda_b @ lambda_c"""
    stack = g.stacked()
    return np.einsum("bij,cjk->bcik", stack, stack)


def structure_constants(g: GellMannSet) -> StructureConstants:
    """
    f_abc = -(i/4) Tr(lambda_a [lambda_b, lambda_c]),
    d_abc = (1/4) Tr(lambda_a {lambda_b, lambda_c}).

    With these traces the closure reads [lambda_a, lambda_b] = 2i f_abc lambda_c.
    """
    stack = g.stacked()
    products = _pair_products(g)
    comm = products - products.transpose(1, 0, 2, 3)
    anti = products + products.transpose(1, 0, 2, 3)
    f = np.real(-0.25j * np.einsum("aij,bcji->abc", stack, comm))
    dsym = np.real(0.25 * np.einsum("aij,bcji->abc", stack, anti))
    return StructureConstants(f=f, dsym=dsym)


def closure_residuals(g: GellMannSet, sc: StructureConstants) -> tuple[float, float]:
    """
    Max residuals of
        [lambda_a, lambda_b] = 2i sum_c f_abc lambda_c
        {lambda_a, lambda_b} = 2 sum_c d_abc lambda_c + (4/3) delta_ab I
    """
    stack = g.stacked()
    products = _pair_products(g)
    comm = products - products.transpose(1, 0, 2, 3)
    anti = products + products.transpose(1, 0, 2, 3)
    comm_expected = 2j * np.einsum("abc,cij->abij", sc.f, stack)
    anti_expected = 2 * np.einsum("abc,cij->abij", sc.dsym, stack) + (4 / 3) * np.einsum(
        "ab,ij->abij", np.eye(8), np.eye(3)
    )
    return max_abs(comm - comm_expected), max_abs(anti - anti_expected)


def symmetry_residuals(sc: StructureConstants) -> tuple[float, float]:
    """Deviation of f from total antisymmetry and of d from total symmetry"""
    permutations = ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    f_worst = d_worst = 0.0
    for perm in permutations:
        odd = perm in ((0, 2, 1), (1, 0, 2), (2, 1, 0))
        sign = -1.0 if odd else 1.0
        f_worst = max(f_worst, max_abs(sc.f.transpose(perm) - sign * sc.f))
        d_worst = max(d_worst, max_abs(sc.dsym.transpose(perm) - sc.dsym))
    return f_worst, d_worst


def trace_orthogonality_residual(g: GellMannSet) -> float:
    """max |Tr(lambda_a lambda_b) - 2 delta_ab|"""
    gram = np.einsum("aij,bji->ab", g.stacked(), g.stacked())
    return max_abs(gram - 2 * np.eye(8))


def cartan_killing(sc: StructureConstants) -> tuple[np.ndarray, np.ndarray]:
    """g_ab = f_acd f_bcd and its inverse"""
    metric = np.einsum("acd,bcd->ab", sc.f, sc.f)
    return metric, np.linalg.inv(metric)


def casimir_su3(g: GellMannSet) -> np.ndarray:
    """C2 = (1/4) sum_a lambda_a^2"""
    stack = g.stacked()
    return 0.25 * np.einsum("aij,ajk->ik", stack, stack)


def qutrit_density(b) -> DensityMatrix:
    """
    rho = (1/3)(I + sqrt(3) b . lambda)

    Raises:
        NotAStateError: if rho has an eigenvalue below -1e-10
    """
    b = np.asarray(b, dtype=float)
    if b.shape != (8,):
        raise DomainError(f"qutrit Bloch vector needs 8 components, got {b.shape}")
    stack = standard_gellmann().stacked()
    matrix = (np.eye(3) + SQRT3 * np.einsum("a,aij->ij", b, stack)) / 3
    return validate_density(matrix, provenance="qutrit", psd_tol=QUTRIT_PSD_TOL)


def _exact_zero(d: int) -> np.ndarray:
    z = np.empty((d, d), dtype=object)
    z.fill(Fraction(0))
    return z


def ggm_generators(d: int, exact: bool = False) -> dict[tuple[int, int], np.ndarray]:
    """
    The d^2 generators (Z_l^k)_ij = delta_li delta_kj - (1/d) delta_kl delta_ij,
    keyed by 1-based (l, k). With exact=True entries are Fractions.
    """
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    generators = {}
    for l in range(1, d + 1):
        for k in range(1, d + 1):
            if exact:
                z = _exact_zero(d)
                z[l - 1, k - 1] += Fraction(1)
                if k == l:
                    for i in range(d):
                        z[i, i] -= Fraction(1, d)
            else:
                z = np.zeros((d, d), dtype=np.complex128)
                z[l - 1, k - 1] = 1.0
                if k == l:
                    z -= np.eye(d) / d
            generators[(l, k)] = z
    return generators


def ggm_commutation_violations(d: int) -> int:
    """
    Count pairs breaking [Z_l^k, Z_r^s] = delta_rk Z_l^s - delta_ls Z_r^k,
    checked in exact rational arithmetic.
    """
    gens = ggm_generators(d, exact=True)
    zero = _exact_zero(d)
    violations = 0
    for (l, k), a in gens.items():
        for (r, s), b in gens.items():
            lhs = a @ b - b @ a
            rhs = zero.copy()
            if r == k:
                rhs = rhs + gens[(l, s)]
            if l == s:
                rhs = rhs - gens[(r, k)]
            if not np.all(lhs == rhs):
                violations += 1
    return violations


def ggm_trace_sum(d: int) -> np.ndarray:
    """sum_l Z_l^l, exact; the zero matrix"""
    gens = ggm_generators(d, exact=True)
    total = _exact_zero(d)
    for l in range(1, d + 1):
        total = total + gens[(l, l)]
    return total


def ggm_hermiticity_residual(d: int) -> float:
    """max |(Z_l^k)^H - Z_k^l|"""
    gens = ggm_generators(d)
    return max(max_abs(z.conj().T - gens[(k, l)]) for (l, k), z in gens.items())


def hermitian_ggm_basis(d: int) -> list[np.ndarray]:
    """
    d^2 - 1 Hermitian traceless generators with Tr(T_a T_b) = delta_ab / 2:
    symmetric and antisymmetric off-diagonal pairs, then diagonal ones.
    """
    gens = ggm_generators(d)
    basis = []
    for l in range(1, d + 1):
        for k in range(l + 1, d + 1):
            basis.append(0.5 * (gens[(l, k)] + gens[(k, l)]))
            basis.append(0.5j * (gens[(l, k)] - gens[(k, l)]))
    for l in range(1, d):
        diagonal = sum(gens[(j, j)] for j in range(1, l + 1)) - l * gens[(l + 1, l + 1)]
        basis.append(diagonal / math.sqrt(2 * l * (l + 1)))
    return basis


def casimir_coefficient(d: int) -> float:
    """c with sum_a T_a^2 = c I for the Hermitian basis; equals (d^2 - 1)/(2d)"""
    basis = hermitian_ggm_basis(d)
    total = sum(t @ t for t in basis)
    return float(np.real(np.trace(total))) / d


def ggm_rank(d: int) -> int:
    """Numerical rank of the flattened d^2 generators (d^2 - 1)"""
    flat = np.stack([z.ravel() for z in ggm_generators(d).values()])
    return int(np.linalg.matrix_rank(flat))
