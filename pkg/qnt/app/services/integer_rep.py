"""
Integer q-number Z = (Z1, Z2, Z3) in dimension d = 2n + 1.

Basis ordering: Z3 is diagonal with entries n, n-1, ..., -n.
"""

import logging
import math
from fractions import Fraction

import numpy as np

from app.exceptions import DomainError, IdentityViolationError, NumericalFailure
from app.models.linalg import RationalPolynomial
from app.models.representation import Direction, ZEigenvector, ZRep
from app.services.matrix_core import commutator, hermitian_eigen, max_abs

logger = logging.getLogger(__name__)

CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


def label_for_dim(d: int) -> Fraction:
    """n = (d - 1) / 2, exact"""
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    return Fraction(d - 1, 2)


def dim_for_label(n) -> int:
    n = Fraction(n)
    if n < Fraction(1, 2) or (2 * n).denominator != 1:
        raise DomainError(f"label must be a positive integer or half-integer, got {n}")
    return int(2 * n + 1)


def _off_diagonal_root(n: Fraction, r: int, s: int) -> float:
    """sqrt((n+1)(r+s-1) - rs) for 1-based indices"""
    return math.sqrt((n + 1) * (r + s - 1) - r * s)


def build_Z(p: int, d: int, exact: bool = False) -> np.ndarray:
    """
    Canonical matrix of Z_p, 1-based elements:

        (Z1)_rs = 1/2 (d_{r,s+1} + d_{r+1,s}) sqrt((n+1)(r+s-1) - rs)
        (Z2)_rs = i/2 (d_{r,s+1} - d_{r+1,s}) sqrt((n+1)(r+s-1) - rs)
        (Z3)_rs = (n + 1 - r) d_rs

    Args:
        p: component 1, 2 or 3
        d: dimension >= 2
        exact: return Z3 as an object array of Fractions (p = 3 only)
    """
    n = label_for_dim(d)
    if p not in (1, 2, 3):
        raise DomainError(f"component must be 1, 2 or 3, got {p}")
    if p == 3:
        diagonal = [n + 1 - r for r in range(1, d + 1)]
        if exact:
            z = np.empty((d, d), dtype=object)
            z.fill(Fraction(0))
            for i, value in enumerate(diagonal):
                z[i, i] = value
            return z
        return np.diag([float(v) for v in diagonal]).astype(np.complex128)
    if exact:
        raise DomainError("Z1 and Z2 have irrational entries; exact form exists for Z3 only")

    z = np.zeros((d, d), dtype=np.complex128)
    for r in range(1, d):
        # (r, r+1) is the d_{r+1,s} entry, (r+1, r) the d_{r,s+1} entry
        upper = _off_diagonal_root(n, r, r + 1)
        lower = _off_diagonal_root(n, r + 1, r)
        if p == 1:
            z[r - 1, r] = 0.5 * upper
            z[r, r - 1] = 0.5 * lower
        else:
            z[r - 1, r] = -0.5j * upper
            z[r, r - 1] = 0.5j * lower
    return z


def z_rep(d: int) -> ZRep:
    return ZRep(
        n=label_for_dim(d), d=d, z1=build_Z(1, d), z2=build_Z(2, d), z3=build_Z(3, d)
    )


def ladder_Z(direction: Direction | str, d: int) -> np.ndarray:
    """Z+ = Z1 + iZ2 raises m by one; Z- = Z1 - iZ2"""
    direction = Direction(direction)
    sign = 1 if direction is Direction.RAISE else -1
    return build_Z(1, d) + sign * 1j * build_Z(2, d)


def expected_norm(n, m) -> float:
    """2^n sqrt((n+m)! (n-m)! / (2n)!) for the first-component-1 eigenvector"""
    n, m = Fraction(n), Fraction(m)
    if abs(m) > n or (n - m).denominator != 1:
        raise DomainError(f"m={m} is not an eigenvalue for n={n}")
    ratio = Fraction(
        math.factorial(int(n + m)) * math.factorial(int(n - m)), math.factorial(int(2 * n))
    )
    return 2 ** float(n) * math.sqrt(ratio)


def z_eigensystem(p: int, d: int, tol: float = 1e-10) -> list[ZEigenvector]:
    """
    Eigenpairs of Z_p, m = n, n-1, ..., -n, each vector scaled so that its
    first nonzero component equals 1.

    Raises:
        NumericalFailure: if a computed eigenvalue is off the lattice {-n..n}
    """
    n = label_for_dim(d)
    system = hermitian_eigen(build_Z(p, d))
    out = []
    for k, (value, vector) in enumerate(system.pairs()):
        m = n - k
        if abs(value - float(m)) > tol * (1 + float(n)):
            raise NumericalFailure(
                f"Z{p} at d={d}: eigenvalue {value!r} is not on the lattice (expected {m})"
            )
        first = int(np.flatnonzero(np.abs(vector) > 1e-8 * np.max(np.abs(vector)))[0])
        scaled = vector / vector[first]
        out.append(
            ZEigenvector(
                component=p, eigenvalue=m, vector=scaled, norm=float(np.linalg.norm(scaled))
            )
        )
    return out


def z_commutator_residual(d: int) -> float:
    """max over cyclic (i, j, k) of |[Z_i, Z_j] - i Z_k|"""
    z = z_rep(d).components
    return max(
        max_abs(commutator(z[i - 1], z[j - 1]) - 1j * z[k - 1]) for i, j, k in CYCLIC
    )


def ladder_coefficient_residual(d: int) -> float:
    """
    Compare |(Z+)_{r,r+1}|^2 with (n-m)(n+m+1) and |(Z-)_{r+1,r}|^2 with
    (n+m)(n-m+1), m being the eigenvalue of the source basis ket.
    """
    n = label_for_dim(d)
    plus, minus = ladder_Z(Direction.RAISE, d), ladder_Z(Direction.LOWER, d)
    worst = 0.0
    for r in range(d - 1):
        m_up = n - (r + 1)  # source ket of Z+ sits at index r+1
        m_down = n - r
        worst = max(
            worst,
            abs(abs(plus[r, r + 1]) ** 2 - float((n - m_up) * (n + m_up + 1))),
            abs(abs(minus[r + 1, r]) ** 2 - float((n + m_down) * (n - m_down + 1))),
        )
    return worst


def casimir_residuals(d: int) -> dict[str, float]:
    rep = z_rep(d)
    n = rep.n
    casimir = rep.casimir
    residuals = {"Z^2 = n(n+1)I": max_abs(casimir - float(n * (n + 1)) * np.eye(d))}
    for p, z in enumerate(rep.components, start=1):
        residuals[f"[Z^2, Z{p}] = 0"] = max_abs(commutator(casimir, z))
    return residuals


def casimir_check(d: int, tol: float | None = None) -> Fraction:
    """
    Verify Z1^2 + Z2^2 + Z3^2 = n(n+1) I and [Z^2, Z_p] = 0.

    Returns:
        Fraction: n(n+1)

    Raises:
        IdentityViolationError: if a residual exceeds tol (default 1e-12 * d)
    """
    threshold = 1e-12 * d if tol is None else tol
    for identity, residual in casimir_residuals(d).items():
        if residual > threshold:
            raise IdentityViolationError(f"{identity} at d={d}", residual, threshold)
    n = label_for_dim(d)
    logger.debug("casimir_check: d=%d passes, n(n+1)=%s", d, n * (n + 1))
    return n * (n + 1)


def char_poly_D(n) -> RationalPolynomial:
    """D(x) = prod_{k=-n}^{n} (k - x), exact"""
    n = Fraction(n)
    dim_for_label(n)
    factors = (
        RationalPolynomial((-n + j, Fraction(-1))) for j in range(int(2 * n) + 1)
    )
    return RationalPolynomial.product(factors)
