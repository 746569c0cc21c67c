"""
State models: qunits, sector states, ensembles and density matrices
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator
from pydantic_core import PydanticCustomError

from app.config.settings import settings
from app.models.representation import Parity, Space

WEIGHT_TOL = 1e-12


class Qunit(BaseModel):
    """
    Coefficient vector over a labeled QNSV basis.

    Natural basis: labels 0, 1, ..., len-1 (truncation = last label).
    Integer basis: labels m = n, n-1, ..., -n, matching the descending Z3
    ordering.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    basis: Space = Space.NATURAL
    amplitudes: np.ndarray
    integer_n: Optional[Fraction] = None

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_vector(cls, v):
        arr = np.asarray(v, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("amplitudes must be a non-empty 1-D vector")
        return arr

    @model_validator(mode="after")
    def _check_basis(self):
        if self.basis is Space.INTEGER:
            if self.integer_n is None or self.integer_n.denominator > 2:
                raise ValueError("integer basis needs an integer or half-integer n")
            if len(self.amplitudes) != 2 * self.integer_n + 1:
                raise ValueError(
                    f"integer basis n={self.integer_n} needs {2 * self.integer_n + 1} amplitudes"
                )
        return self

    @property
    def dimension(self) -> int:
        return int(self.amplitudes.shape[0])

    @property
    def labels(self) -> list:
        if self.basis is Space.INTEGER:
            return [self.integer_n - k for k in range(self.dimension)]
        return list(range(self.dimension))

    @property
    def truncation(self):
        return self.labels[0] if self.basis is Space.INTEGER else self.dimension - 1

    def index_of(self, label) -> int:
        if self.basis is Space.INTEGER:
            key = Fraction(label)
            if abs(key) > self.integer_n or (self.integer_n - key).denominator != 1:
                raise IndexError(f"label {label} not in the |{self.integer_n}, m> basis")
            return int(self.integer_n - key)
        if not 0 <= int(label) < self.dimension or int(label) != label:
            raise IndexError(f"label {label} outside truncation 0..{self.dimension - 1}")
        return int(label)

    def amplitude(self, label) -> complex:
        return complex(self.amplitudes[self.index_of(label)])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> Qunit:
        norm = self.norm
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return self.model_copy(update={"amplitudes": self.amplitudes / norm})


class SectorState(BaseModel):
    """N+ eigenstate restricted to one parity sector"""

    model_config = ConfigDict(frozen=True)

    q: complex
    sector: Parity
    normalization: float = Field(ge=0)  # c0 (even) or c1 (odd)

    @field_validator("sector")
    @classmethod
    def _block_only(cls, v: Parity) -> Parity:
        if v is Parity.FULL:
            raise ValueError("sector must be even or odd")
        return v

    @property
    def lam(self) -> float:
        """Poisson mean |q|^2 / 2"""
        return abs(self.q) ** 2 / 2


class Ensemble(BaseModel):
    """Weighted collection of qunits of a common dimension"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    members: list[Qunit]
    weights: list[float]
    normalize: bool = False

    @model_validator(mode="after")
    def _check_weights(self):
        if not self.members:
            raise ValueError("ensemble needs at least one member")
        if len(self.members) != len(self.weights):
            raise ValueError(
                f"{len(self.members)} members but {len(self.weights)} weights"
            )
        if len({m.dimension for m in self.members}) != 1:
            raise ValueError("ensemble members must share one dimension")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        total = float(np.sum(self.weights))
        if self.normalize:
            if total <= 0:
                raise ValueError("weights sum to zero")
            object.__setattr__(self, "weights", [w / total for w in self.weights])
        elif abs(total - 1.0) > WEIGHT_TOL:
            raise ValueError(f"weights sum to {total!r}, expected 1")
        return self

    @property
    def dimension(self) -> int:
        return self.members[0].dimension


def state_violation(m: np.ndarray, psd_tol: float | None = None) -> str | None:
    """Why m is not a density matrix, or None when it is one"""
    tol = settings.STATE_TOL
    psd_tol = tol if psd_tol is None else psd_tol
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    asymmetry = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if asymmetry > settings.HERMITIAN_RTOL * (1.0 + scale):
        return f"not Hermitian, max |A - A^H| = {asymmetry:.3e}"
    trace = np.trace(m)
    if abs(trace - 1.0) > tol:
        return f"trace {trace.real:.15g} != 1"
    smallest = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
    if smallest < -psd_tol:
        return f"eigenvalue {smallest:.3e} < 0"
    return None


class DensityMatrix(BaseModel):
    """
    Hermitian, unit-trace, positive-semidefinite matrix with provenance.

    The eigenvalue floor defaults to -STATE_TOL; pass {"psd_tol": ...} as
    validation context to widen it.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray
    provenance: str = "matrix"

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_square(cls, v):
        m = np.asarray(v, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        return m

    @model_validator(mode="after")
    def _check_state(self, info: ValidationInfo):
        reason = state_violation(self.matrix, (info.context or {}).get("psd_tol"))
        if reason is not None:
            raise PydanticCustomError("not_a_state", "not a state: {reason}", {"reason": reason})
        return self

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def eigenvalues(self) -> np.ndarray:
        """Real spectrum, descending"""
        return np.linalg.eigvalsh(self.matrix)[::-1]

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


class StirlingEstimate(BaseModel):
    """Stirling approximation of the odd/even probability ratio at one n"""

    model_config = ConfigDict(frozen=True)

    variant: str
    n: int
    factor: float
    approximate_ratio: float
    exact_ratio: float

    @property
    def relative_error(self) -> float:
        return abs(self.approximate_ratio - self.exact_ratio) / self.exact_ratio
