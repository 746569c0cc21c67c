"""
Quantum mappings T_p from dimension d to d + 2, their compositions and
the retraction R_p = T_p^H T_p
"""

import logging
import math
from fractions import Fraction
from functools import reduce

import numpy as np

from app.exceptions import DomainError
from app.models.representation import QMapping, RTableRow
from app.services.integer_rep import build_Z, label_for_dim, z_eigensystem
from app.services.matrix_core import dagger, max_abs

logger = logging.getLogger(__name__)


def _shrink_product(d: int, upper: int) -> float:
    """prod_{k=1}^{upper} sqrt((d-k)/(d+2-k)); 1 for an empty range"""
    return math.prod(math.sqrt((d - k) / (d + 2 - k)) for k in range(1, upper + 1))


def build_T(p: int, d: int) -> QMapping:
    """
    (d+2) x d matrix of T_p, 1-based elements with d the source dimension:

        (T1)_rs = d_rs P(r-1) - d_{d+2-r, d-s} P(d-s),  P(u) = prod_{k=1}^{u} sqrt((d-k)/(d+2-k))
        (T2)_rs = d_rs P(r-1) + d_{d+2-r, d-s} P(d-s)
        (T3)_rs = d_{r, s+1}
    """
    label_for_dim(d)
    if p not in (1, 2, 3):
        raise DomainError(f"component must be 1, 2 or 3, got {p}")
    t = np.zeros((d + 2, d), dtype=np.complex128)
    if p == 3:
        # Z3 eigenvalue n+1-s sits at row s+1 one dimension up
        for s in range(1, d + 1):
            t[s, s - 1] = 1.0
        return QMapping(p=p, d_from=d, d_to=d + 2, matrix=t)

    sign = -1.0 if p == 1 else 1.0
    for s in range(1, d + 1):
        t[s - 1, s - 1] += _shrink_product(d, s - 1)
        t[s + 1, s - 1] += sign * _shrink_product(d, d - s)  # row r = s + 2
    return QMapping(p=p, d_from=d, d_to=d + 2, matrix=t)


def compose_T(p: int, d_from: int, d_to: int) -> QMapping:
    """T(d_to-2 -> d_to) ... T(d_from -> d_from+2)"""
    if d_to <= d_from or (d_to - d_from) % 2:
        raise DomainError(
            f"d_to must exceed d_from by a positive even number, got {d_from} -> {d_to}"
        )
    steps = [build_T(p, d).matrix for d in range(d_from, d_to, 2)]
    matrix = reduce(lambda acc, t: t @ acc, steps[1:], steps[0])
    return QMapping(p=p, d_from=d_from, d_to=d_to, matrix=matrix)


def build_R(p: int, d: int) -> np.ndarray:
    """R_p = T_p^H T_p, Hermitian positive semidefinite; R3 = I"""
    t = build_T(p, d).matrix
    return dagger(t) @ t


def _check_m(d: int, m) -> tuple[Fraction, Fraction]:
    n, m = label_for_dim(d), Fraction(m)
    if abs(m) > n or (n - m).denominator != 1:
        raise DomainError(f"m={m} is not an eigenvalue for d={d} (n={n})")
    return n, m


def r_eigenvalue(d: int, m) -> Fraction:
    """r(m) = 1 + 1/d - 4m^2 / (d(d+1)), exact"""
    _, m = _check_m(d, m)
    return 1 + Fraction(1, d) - 4 * m * m / (d * (d + 1))


def r_norm_ratio(d: int, m) -> Fraction:
    """
    <n+1,m|n+1,m> / <n,m|n,m> from the squared eigenvector norms
    4^n (n+m)! (n-m)! / (2n)!, evaluated exactly.
    """
    n, m = _check_m(d, m)

    def squared_norm_without_power(label: Fraction) -> Fraction:
        return Fraction(
            math.factorial(int(label + m)) * math.factorial(int(label - m)),
            math.factorial(int(2 * label)),
        )

    return 4 * squared_norm_without_power(n + 1) / squared_norm_without_power(n)


def eigenbasis(p: int, d: int) -> tuple[np.ndarray, list[Fraction]]:
    """Unit eigenvector columns of Z_p (m descending) and their eigenvalues"""
    vectors = z_eigensystem(p, d)
    columns = np.column_stack([v.unit_vector for v in vectors])
    return columns, [v.eigenvalue for v in vectors]


def transported_R(p: int, d: int) -> tuple[np.ndarray, list[Fraction]]:
    """V^H R_p V in the Z_p eigenbasis; diagonal with entries r(m)"""
    v, eigenvalues = eigenbasis(p, d)
    return dagger(v) @ build_R(p, d) @ v, eigenvalues


def r_table(p: int, d: int) -> list[RTableRow]:
    """
    Per eigenvalue m: r(m) from the closed form, the norm-ratio oracle and
    the diagonal of R_p. For p = 3 the eigenvectors are basis kets, R3 = I
    and both exact columns are 1.
    """
    transported, eigenvalues = transported_R(p, d)
    diagonal = np.real(np.diag(transported))
    rows = []
    for k, m in enumerate(eigenvalues):
        if p == 3:
            formula = oracle = Fraction(1)
        else:
            formula, oracle = r_eigenvalue(d, m), r_norm_ratio(d, m)
        rows.append(RTableRow(m=m, formula=formula, oracle=oracle, numeric=float(diagonal[k])))
    return rows


def homomorphism_residuals(p: int, d: int) -> dict[Fraction, float]:
    """max |Z_p^(d+2) T v - m T v| for every first-component-1 eigenvector v"""
    t = build_T(p, d).matrix
    z_up = build_Z(p, d + 2)
    residuals = {}
    for eigenvector in z_eigensystem(p, d):
        mapped = t @ eigenvector.vector
        m = float(eigenvector.eigenvalue)
        residuals[eigenvector.eigenvalue] = max_abs(z_up @ mapped - m * mapped)
    worst = max(residuals.values())
    if worst > 1e-8:
        logger.warning("T%d at d=%d: homomorphism residual %.3e", p, d, worst)
    return residuals


def rational_set(d_max: int) -> list[Fraction]:
    """Sorted W = {+-r(d, m) : 2 <= d <= d_max, |m| <= (d-1)/2} with 1 adjoined"""
    if d_max < 2:
        raise DomainError(f"d_max must be >= 2, got {d_max}")
    values = {Fraction(1), Fraction(-1)}
    for d in range(2, d_max + 1):
        n = label_for_dim(d)
        for k in range(d):
            r = r_eigenvalue(d, n - k)
            values.update((r, -r))
    values.discard(Fraction(0))
    return sorted(values)


def boundary_r(d: int) -> Fraction:
    """r at |m| = n; equals 4/(d+1)"""
    return r_eigenvalue(d, label_for_dim(d))
