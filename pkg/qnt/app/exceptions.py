"""
Exception hierarchy for the toolkit.

The CLI maps these onto exit codes: domain errors are usage errors (1),
identity violations and numerical failures are internal failures (3).
"""


class QNTError(Exception):
    """Base class for all toolkit errors"""


class DomainError(QNTError, ValueError):
    """A parameter lies outside the domain of the operation"""


class DimensionMismatchError(DomainError):
    """Operands have incompatible shapes"""


class NotHermitianError(DomainError):
    """A matrix required to be Hermitian is not"""

    def __init__(self, max_asymmetry: float, tolerance: float):
        self.max_asymmetry = max_asymmetry
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not Hermitian: max |A - A^H| = {max_asymmetry:.3e} "
            f"exceeds {tolerance:.3e}"
        )


class NotAStateError(DomainError):
    """A density matrix violates trace, Hermiticity or positivity"""


class IdentityViolationError(QNTError):
    """An algebraic identity failed beyond tolerance"""

    def __init__(self, identity: str, residual: float, threshold: float):
        self.identity = identity
        self.residual = residual
        self.threshold = threshold
        super().__init__(
            f"{identity} violated: residual {residual:.3e} > {threshold:.3e}"
        )


class NumericalFailure(QNTError):
    """Internal numerical failure (e.g. an eigenvalue off its lattice)"""
