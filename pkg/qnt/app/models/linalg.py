"""
Linear algebra models: eigen-systems and exact rational polynomials
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

Rational = Union[int, Fraction]


class BracketKind(str, Enum):
    """Which Lie bracket to form"""

    COMMUTATOR = "commutator"
    ANTICOMMUTATOR = "anticommutator"


class EigenSystem(BaseModel):
    """Eigenvalues (real, descending) and orthonormal eigenvector columns"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.eigenvalues.shape[0])

    def pairs(self):
        """Yield (eigenvalue, eigenvector) pairs in descending order"""
        for k in range(self.dimension):
            yield float(self.eigenvalues[k]), self.eigenvectors[:, k]


@dataclass(frozen=True)
class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients, ascending degree"""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: Rational) -> RationalPolynomial:
        return cls((Fraction(value),))

    @classmethod
    def product(cls, factors: Iterable[RationalPolynomial]) -> RationalPolynomial:
        return reduce(lambda acc, f: acc * f, factors, cls.constant(1))

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return self.coefficients == (Fraction(0),)

    def __add__(self, other: RationalPolynomial | Rational) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: RationalPolynomial | Rational) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other: RationalPolynomial | Rational) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial(
                tuple(c * Fraction(other) for c in self.coefficients)
            )
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x: Rational) -> Fraction:
        """Exact Horner evaluation"""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def as_strings(self) -> list[str]:
        """Coefficients as exact 'num/den' strings, ascending degree"""
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"({mag})*{var}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text
