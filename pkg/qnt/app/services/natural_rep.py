"""
Natural q-number representation: ladder matrices, number matrices,
the assembled full-parity operator and symbolic ladder steps on labels
"""

import logging
import math
import operator

import numpy as np

from app.exceptions import DomainError
from app.models.representation import (
    Direction,
    LadderAction,
    LadderCoefficient,
    NaturalRepSpec,
    Parity,
    QNSVSeed,
)
from app.services.matrix_core import kron

logger = logging.getLogger(__name__)

# projectors selecting the even / odd slot of each interleaved pair
P_EVEN = np.array([[1, 0], [0, 0]], dtype=np.complex128)
P_ODD = np.array([[0, 0], [0, 1]], dtype=np.complex128)


def _block_parity(parity: Parity | str) -> Parity:
    parity = Parity(parity)
    if parity is Parity.FULL:
        raise DomainError("expected an even or odd block, got 'full'")
    return parity


def _block_labels(parity: Parity, dim: int) -> np.ndarray:
    """Natural labels of the block basis kets: 0,2,4,... or 1,3,5,..."""
    start = 0 if parity is Parity.EVEN else 1
    return start + 2 * np.arange(dim)


def ladder_matrix(direction: Direction | str, parity: Parity | str, dim: int) -> np.ndarray:
    """
    Truncated N+ (raise) or N- (lower) on one parity block.

    N+|n> = sqrt(n)|n-2> sits on the superdiagonal; N- is its transpose.
    """
    direction = Direction(direction)
    parity = _block_parity(parity)
    if dim < 2:
        raise DomainError(f"ladder matrix needs dim >= 2, got {dim}")
    labels = _block_labels(parity, dim)
    raise_ = np.diag(np.sqrt(labels[1:].astype(float)), k=1).astype(np.complex128)
    return raise_ if direction is Direction.RAISE else raise_.T.copy()


def number_matrix(parity: Parity | str, dim: int) -> np.ndarray:
    """Block number matrix N-N+: diag(0,2,4,...) or diag(0,3,5,...)"""
    parity = _block_parity(parity)
    if dim < 1:
        raise DomainError(f"number matrix needs dim >= 1, got {dim}")
    diagonal = _block_labels(parity, dim).astype(float)
    diagonal[0] = 0.0
    return np.diag(diagonal).astype(np.complex128)


def regularized_number_matrix(parity: Parity | str, dim: int) -> np.ndarray:
    """Number matrix whose spectrum is the parity's naturals: the odd block gains E11"""
    parity = _block_parity(parity)
    if dim < 1:
        raise DomainError(f"number matrix needs dim >= 1, got {dim}")
    return np.diag(_block_labels(parity, dim).astype(float)).astype(np.complex128)


def n_star_matrix(parity: Parity | str, dim: int) -> np.ndarray:
    """N* = N + I on a block; its spectrum starts at 1"""
    return regularized_number_matrix(parity, dim) + np.eye(dim, dtype=np.complex128)


def heisenberg_components(parity: Parity | str, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian parts N1 = (N+ + N-)/2 and N2 = (N+ - N-)/(2i)"""
    plus = ladder_matrix(Direction.RAISE, parity, dim)
    minus = ladder_matrix(Direction.LOWER, parity, dim)
    return 0.5 * (plus + minus), (plus - minus) / 2j


def assemble_full_N(block_dim: int) -> np.ndarray:
    """
    Faithful number operator on both parities.

    The even block goes to the even slot and the regularized odd block to
    the odd slot of every interleaved pair, so label n sits at index n and
    the result is diag(0, 1, ..., 2*block_dim - 1).
    """
    if block_dim < 1:
        raise DomainError(f"block_dim must be >= 1, got {block_dim}")
    even = number_matrix(Parity.EVEN, block_dim)
    odd = regularized_number_matrix(Parity.ODD, block_dim)
    return kron(even, P_EVEN) + kron(odd, P_ODD)


def full_ladder_matrix(direction: Direction | str, block_dim: int) -> np.ndarray:
    """N+ or N- on the interleaved full basis |0>,|1>,|2>,..."""
    if block_dim < 2:
        raise DomainError(f"full ladder needs block_dim >= 2, got {block_dim}")
    even = ladder_matrix(direction, Parity.EVEN, block_dim)
    odd = ladder_matrix(direction, Parity.ODD, block_dim)
    return kron(even, P_EVEN) + kron(odd, P_ODD)


def representation_matrix(spec: NaturalRepSpec, component: str) -> np.ndarray:
    """Dispatch for the rep command: raise, lower, number or nstar"""
    if spec.parity is Parity.FULL:
        if component == "number":
            return assemble_full_N(spec.block_dim)
        if component == "nstar":
            return assemble_full_N(spec.block_dim) + np.eye(spec.dim)
        if component in (Direction.RAISE.value, Direction.LOWER.value):
            return full_ladder_matrix(component, spec.block_dim)
    else:
        if component == "number":
            return number_matrix(spec.parity, spec.dim)
        if component == "nstar":
            return n_star_matrix(spec.parity, spec.dim)
        if component in (Direction.RAISE.value, Direction.LOWER.value):
            return ladder_matrix(component, spec.parity, spec.dim)
    raise DomainError(f"unknown natural component {component!r}")


def interior(m: np.ndarray) -> np.ndarray:
    """Top-left (d-1)x(d-1) block; the last ket of a truncation is excluded"""
    return m[:-1, :-1]


def ladder_apply(n: int, direction: Direction | str) -> LadderAction:
    """
    Apply N+ or N- to the basis ket |n> symbolically.

    N+|n> = sqrt(n)|n-2>: labels 0 and 1 leave the naturals, so the ket is
    absorbed to zero (for n = 1 the coefficient is still reported as 1).
    N-|n> = sqrt(n+2)|n+2>.
    """
    if n < 0:
        raise DomainError(f"label must be a natural number, got {n}")
    direction = Direction(direction)
    if direction is Direction.LOWER:
        return LadderAction(coefficient=LadderCoefficient.from_square(n + 2), target=n + 2)
    if n < 2:
        if n == 1:
            logger.debug("N+ on |1>: target -1 leaves the naturals, absorbed")
        return LadderAction(
            coefficient=LadderCoefficient.from_square(n), target=None, absorbed=True
        )
    return LadderAction(coefficient=LadderCoefficient.from_square(n), target=n - 2)


def qnsv_from_seed(n: int) -> QNSVSeed:
    """|n> = (N-)^k |seed> / sqrt(n!!) with seed = n mod 2, k = n // 2"""
    try:
        n = operator.index(n)
    except TypeError:
        raise DomainError(f"label must be an integer, got {n!r}") from None
    if n < 2:
        raise DomainError(f"labels 0 and 1 are the seeds themselves, got {n}")
    double_factorial = math.prod(range(n, 0, -2))
    return QNSVSeed(
        seed=n % 2,
        power=n // 2,
        double_factorial=double_factorial,
        coefficient=1.0 / math.sqrt(double_factorial),
    )
