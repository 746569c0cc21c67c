"""
Ensembles of qunits, number density operators and their entropies
"""

import logging
from functools import reduce
from typing import Any, Sequence

import numpy as np
from pydantic import ValidationError
from scipy.special import entr

from app.config.settings import settings
from app.exceptions import DimensionMismatchError, DomainError, NotAStateError
from app.models.states import DensityMatrix, Ensemble, Qunit
from app.services.matrix_core import PAULI, as_matrix, kron, require_hermitian, require_square
from app.utils.helpers import parse_amplitude

logger = logging.getLogger(__name__)


def validate_density(
    matrix, provenance: str = "matrix", psd_tol: float | None = None
) -> DensityMatrix:
    """
    Wrap a matrix as a DensityMatrix after checking it is a state.

    Raises:
        NotAStateError: non-Hermitian, trace != 1, or an eigenvalue below -psd_tol
    """
    m = as_matrix(matrix)
    require_square(m, "density matrix")
    try:
        return DensityMatrix.model_validate(
            {"matrix": m, "provenance": provenance}, context={"psd_tol": psd_tol}
        )
    except ValidationError as exc:
        raise NotAStateError(exc.errors()[0]["msg"]) from exc


def pure_ensemble(state: Qunit) -> Ensemble:
    return Ensemble(members=[state], weights=[1.0])


def random_ensemble(d: int) -> Ensemble:
    """d equally likely orthogonal basis kets; its density is I/d"""
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    basis = np.eye(d, dtype=np.complex128)
    return Ensemble(members=[Qunit(amplitudes=row) for row in basis], weights=[1.0 / d] * d)


def density_from_ensemble(e: Ensemble) -> DensityMatrix:
    """rho = sum_i w_i |Q_i><Q_i|"""
    total = float(np.sum(e.weights))
    if abs(total - 1.0) > settings.STATE_TOL:
        raise DomainError(f"weights sum to {total!r}, expected 1")
    vectors = np.stack([m.amplitudes for m in e.members])
    weights = np.asarray(e.weights, dtype=float)
    rho = np.einsum("k,ki,kj->ij", weights, vectors, vectors.conj())
    logger.debug("density_from_ensemble: %d members, d=%d", len(e.members), e.dimension)
    return validate_density(rho, provenance=f"ensemble[{len(e.members)}]")


def ensemble_average(operator, e: Ensemble) -> float:
    """sum_i w_i <Q_i|A|Q_i> for Hermitian A"""
    a = as_matrix(operator)
    require_square(a, "operator")
    if a.shape[0] != e.dimension:
        raise DimensionMismatchError(
            f"operator is {a.shape[0]}x{a.shape[0]}, ensemble dimension is {e.dimension}"
        )
    require_hermitian(a)
    values = [np.vdot(m.amplitudes, a @ m.amplitudes) for m in e.members]
    return float(np.real(np.dot(e.weights, values)))


def purity(rho: DensityMatrix) -> float:
    return rho.purity


def omega_entropy(rho: DensityMatrix) -> float:
    """-sum_k lambda_k ln lambda_k over the spectrum; tiny eigenvalues count as 0"""
    eigenvalues = np.clip(rho.eigenvalues, 0.0, None)
    eigenvalues[eigenvalues < settings.ENTROPY_ZERO_CUTOFF] = 0.0
    return float(np.sum(entr(eigenvalues)))


def shannon_bits(d: int) -> float:
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    return float(np.log2(d))


def product_density(factors: Sequence[DensityMatrix]) -> DensityMatrix:
    """Density of independent q-numbers: the Kronecker product of the factors"""
    if not factors:
        raise DomainError("product_density needs at least one factor")
    matrix = reduce(kron, (f.matrix for f in factors))
    provenance = " x ".join(f.provenance for f in factors)
    return validate_density(matrix, provenance=provenance)


def mixed_qu2it_density(r: Sequence[float]) -> DensityMatrix:
    """(I + r.sigma)/2 for a Bloch vector with |r| <= 1; |r| < 1 is mixed"""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise DimensionMismatchError(f"Bloch vector needs 3 components, got {r.shape}")
    length = float(np.linalg.norm(r))
    if length > 1.0 + settings.STATE_TOL:
        raise DomainError(f"Bloch vector length {length} exceeds 1")
    matrix = 0.5 * (np.eye(2) + sum(x * s for x, s in zip(r, PAULI)))
    return validate_density(matrix, provenance="bloch")


def density_from_spec(spec: dict[str, Any]) -> DensityMatrix:
    """
    Build the product density described by an entropy spec document.

    Args:
        spec: {"factors": [{"members": [[amp, ...], ...], "weights": [...],
              "normalize": false}, ...]}; an amplitude is a number or [re, im]

    Returns:
        DensityMatrix: product of the factor densities
    """
    factors = spec.get("factors") if isinstance(spec, dict) else None
    if not factors:
        raise DomainError("entropy spec needs a non-empty 'factors' list")
    densities = []
    for index, factor in enumerate(factors):
        try:
            members = [
                Qunit(amplitudes=[parse_amplitude(a) for a in member])
                for member in factor["members"]
            ]
            ensemble = Ensemble(
                members=members,
                weights=factor["weights"],
                normalize=bool(factor.get("normalize", False)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"factor {index}: {exc}") from exc
        densities.append(density_from_ensemble(ensemble))
    return product_density(densities)
