"""
SU(3) / SU(n) generator models
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


class GellMannSet(BaseModel):
    """Eight 3x3 generators; lambdas[0] is lambda_1"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    lambdas: tuple[np.ndarray, ...]

    @field_validator("lambdas", mode="before")
    @classmethod
    def _eight_3x3(cls, v):
        if len(v) != 8 or any(np.shape(m) != (3, 3) for m in v):
            raise ValueError("a Gell-Mann set holds eight 3x3 matrices")
        return tuple(np.asarray(m, dtype=np.complex128) for m in v)

    def __getitem__(self, a: int) -> np.ndarray:
        """1-based access: g[1] is lambda_1"""
        if not 1 <= a <= 8:
            raise IndexError(f"Gell-Mann index must be 1..8, got {a}")
        return self.lambdas[a - 1]

    def stacked(self) -> np.ndarray:
        return np.stack(self.lambdas)


class StructureConstants(BaseModel):
    """f (antisymmetric) and d (symmetric) as 8x8x8 real arrays, 0-based"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    f: np.ndarray
    dsym: np.ndarray

    def f_at(self, a: int, b: int, c: int) -> float:
        return float(self.f[a - 1, b - 1, c - 1])

    def d_at(self, a: int, b: int, c: int) -> float:
        return float(self.dsym[a - 1, b - 1, c - 1])
