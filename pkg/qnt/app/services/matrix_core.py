"""
Dense complex matrix arithmetic shared by every operator family
"""

import logging
from fractions import Fraction
from typing import Sequence

import numpy as np

from app.config.settings import settings
from app.exceptions import DimensionMismatchError, DomainError, NotHermitianError
from app.models.linalg import BracketKind, EigenSystem, RationalPolynomial

logger = logging.getLogger(__name__)

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-D complex128 array"""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got ndim={m.ndim}")
    return m


def require_square(m: np.ndarray, name: str = "matrix") -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {m.shape}")
    return m.shape[0]


def max_abs(m: np.ndarray) -> float:
    """Max-abs-entry norm; zero for empty input"""
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conjugate(np.transpose(m))


def matmul_commutator(
    a, b, sign: BracketKind | str = BracketKind.COMMUTATOR
) -> np.ndarray:
    """Return AB - BA (commutator) or AB + BA (anticommutator)"""
    a, b = as_matrix(a), as_matrix(b)
    require_square(a, "A")
    require_square(b, "B")
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    sign = BracketKind(sign)
    if sign is BracketKind.COMMUTATOR:
        return a @ b - b @ a
    return a @ b + b @ a


def commutator(a, b) -> np.ndarray:
    return matmul_commutator(a, b, BracketKind.COMMUTATOR)


def anticommutator(a, b) -> np.ndarray:
    return matmul_commutator(a, b, BracketKind.ANTICOMMUTATOR)


def hermitian_asymmetry(m: np.ndarray) -> float:
    return max_abs(m - dagger(m))


def require_hermitian(m: np.ndarray, rtol: float | None = None) -> None:
    rtol = settings.HERMITIAN_RTOL if rtol is None else rtol
    tolerance = rtol * (1.0 + max_abs(m))
    asymmetry = hermitian_asymmetry(m)
    if asymmetry > tolerance:
        raise NotHermitianError(asymmetry, tolerance)


def hermitian_eigen(a) -> EigenSystem:
    """
    Eigen-decompose a Hermitian matrix.

    Eigenvalues are real and sorted descending; eigenvector columns are
    orthonormal.

    Raises:
        NotHermitianError: if max |A - A^H| exceeds the relative tolerance
    """
    m = as_matrix(a)
    require_square(m)
    require_hermitian(m)
    # eigh reads only one triangle; symmetrize so both halves count
    values, vectors = np.linalg.eigh(0.5 * (m + dagger(m)))
    order = np.argsort(values)[::-1]
    return EigenSystem(eigenvalues=values[order], eigenvectors=vectors[:, order])


def eigen_residual(a, system: EigenSystem) -> float:
    """max_k max-abs(A v_k - lambda_k v_k)"""
    m = as_matrix(a)
    scaled = system.eigenvectors * system.eigenvalues[np.newaxis, :]
    return max_abs(m @ system.eigenvectors - scaled)


def reconstruction_residual(a, system: EigenSystem) -> float:
    """max-abs(A - V diag(lambda) V^H)"""
    m = as_matrix(a)
    v = system.eigenvectors
    return max_abs(m - v @ np.diag(system.eigenvalues) @ dagger(v))


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices"""
    return np.kron(as_matrix(a), as_matrix(b))


def to_fraction_matrix(entries: Sequence[Sequence]) -> np.ndarray:
    """Object array of Fractions; rejects inexact (float/complex) entries"""
    rows = [list(r) for r in entries]
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise DimensionMismatchError("ragged matrix rows")
        for j, value in enumerate(row):
            if isinstance(value, (float, complex, np.floating, np.complexfloating)):
                raise DomainError(
                    f"entry ({i},{j}) = {value!r} is not an exact rational"
                )
            out[i, j] = Fraction(value)
    return out


def char_poly_exact(a: Sequence[Sequence]) -> RationalPolynomial:
    """
    det(A - xI) with exact rational coefficients (Faddeev-LeVerrier).

    Args:
        a: square matrix of ints / Fractions (nested sequences or object array)

    Returns:
        RationalPolynomial: coefficients in ascending degree
    """
    m = to_fraction_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"matrix must be square, got shape {m.shape}")
    size = m.shape[0]
    identity = np.empty((size, size), dtype=object)
    identity.fill(Fraction(0))
    for i in range(size):
        identity[i, i] = Fraction(1)

    # det(xI - A) = sum_k c_k x^k with c_size = 1
    c = [Fraction(0)] * (size + 1)
    c[size] = Fraction(1)
    work = np.empty((size, size), dtype=object)
    work.fill(Fraction(0))
    for k in range(1, size + 1):
        work = m @ work + c[size - k + 1] * identity
        c[size - k] = -Fraction(np.trace(m @ work)) / k

    poly = RationalPolynomial(tuple(c))
    logger.debug("char_poly_exact: size=%d -> %s", size, poly)
    return poly * (-1) ** size
