"""
Representation models for the natural and integer q-numbers
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Space(str, Enum):
    NATURAL = "natural"
    INTEGER = "integer"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"
    FULL = "full"


class Direction(str, Enum):
    RAISE = "raise"
    LOWER = "lower"


class RepSpec(BaseModel):
    """Descriptor of a representation"""

    model_config = ConfigDict(frozen=True)

    space: Space
    parity: Optional[Parity] = None  # natural space only
    label: Optional[Fraction] = None  # integer space: n, with d = 2n + 1
    dim: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_label(self):
        if self.space is Space.INTEGER:
            expected = Fraction(self.dim - 1, 2)
            if self.label is None:
                object.__setattr__(self, "label", expected)
            elif self.label != expected:
                raise ValueError(f"label {self.label} inconsistent with dim {self.dim}")
        return self


class NaturalRepSpec(BaseModel):
    """Truncated natural representation: parity block and its dimension"""

    model_config = ConfigDict(frozen=True)

    parity: Parity
    dim: int = Field(ge=1)

    @property
    def block_dim(self) -> int:
        return self.dim // 2 if self.parity is Parity.FULL else self.dim

    @model_validator(mode="after")
    def _check_full_dim(self):
        if self.parity is Parity.FULL and self.dim % 2:
            raise ValueError("full-parity dimension must be 2 * block dimension")
        return self


class LadderCoefficient(BaseModel):
    """Square root of a natural number, produced by N+ or N-"""

    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0)

    @field_validator("value")
    @classmethod
    def _square_is_natural(cls, v: float) -> float:
        if abs(v * v - round(v * v)) > 1e-12 * max(1.0, v * v):
            raise ValueError(f"{v}^2 is not a natural number")
        return v

    @classmethod
    def from_square(cls, k: int) -> LadderCoefficient:
        return cls(value=math.sqrt(k))

    @property
    def square(self) -> int:
        return round(self.value * self.value)


class LadderAction(BaseModel):
    """Result of a symbolic ladder step on |n>"""

    model_config = ConfigDict(frozen=True)

    coefficient: LadderCoefficient
    target: Optional[int]  # None when the label leaves the naturals
    absorbed: bool = False  # True: the resulting ket is the zero vector


class QNSVSeed(BaseModel):
    """|n> = coefficient * (N-)^power |seed>"""

    model_config = ConfigDict(frozen=True)

    seed: Literal[0, 1]
    power: int = Field(ge=0)
    double_factorial: int = Field(ge=1)
    coefficient: float = Field(gt=0)


class ZRep(BaseModel):
    """The three components of Z in dimension d = 2n + 1"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: Fraction
    d: int = Field(ge=2)
    z1: np.ndarray
    z2: np.ndarray
    z3: np.ndarray

    @property
    def components(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.z1, self.z2, self.z3

    @property
    def casimir(self) -> np.ndarray:
        return self.z1 @ self.z1 + self.z2 @ self.z2 + self.z3 @ self.z3


class ZEigenvector(BaseModel):
    """Eigenvector of Z_p with its first nonzero component fixed to 1"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    component: int = Field(ge=1, le=3)
    eigenvalue: Fraction
    vector: np.ndarray
    norm: float = Field(gt=0)

    @property
    def unit_vector(self) -> np.ndarray:
        return self.vector / self.norm


class QMapping(BaseModel):
    """q-mapping T_p from dimension d_from to d_to (same parity)"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p: int = Field(ge=1, le=3)
    d_from: int = Field(ge=2)
    d_to: int
    matrix: np.ndarray

    @model_validator(mode="after")
    def _check_shape(self):
        if self.d_to <= self.d_from or (self.d_to - self.d_from) % 2:
            raise ValueError("d_to must exceed d_from by a positive even number")
        if self.matrix.shape != (self.d_to, self.d_from):
            raise ValueError(
                f"matrix shape {self.matrix.shape} != ({self.d_to}, {self.d_from})"
            )
        return self


class RTableRow(BaseModel):
    """One eigenvalue of R_p: formula, norm-ratio oracle and computed diagonal"""

    model_config = ConfigDict(frozen=True)

    m: Fraction
    formula: Fraction
    oracle: Fraction
    numeric: float
