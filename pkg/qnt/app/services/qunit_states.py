"""
Qunit states in the natural basis: N+ eigenstate sectors, their number
distributions, prime qunits, projections and qu2it geometry
"""

import logging
import math
from fractions import Fraction
from typing import Iterable

import numpy as np
from scipy.special import erf, gammaln
from scipy.stats import poisson

from app.exceptions import DomainError
from app.models.representation import Parity, Space
from app.models.states import DensityMatrix, Qunit, SectorState, StirlingEstimate
from app.services.ensemble_density import validate_density
from app.services.matrix_core import PAULI

logger = logging.getLogger(__name__)

SQRT_HALF_PI = math.sqrt(math.pi / 2)
LOG_SPACE_FROM = 30  # above this n the odd distribution is evaluated in log space
NORM_TOL = 1e-9
PRIME_QUNIT_MAX_EXPONENT = 20  # labels up to 2^20

# (2n+1)!! for n = 0..LOG_SPACE_FROM, built from exact integers
ODD_DOUBLE_FACTORIALS = np.array(
    [float(math.prod(range(2 * n + 1, 0, -2))) for n in range(LOG_SPACE_FROM + 1)]
)


def sector_index(n) -> np.ndarray:
    """Integer sector indices n >= 0 as an int64 array (0-d for a scalar)"""
    index = np.asarray(n)
    if not np.issubdtype(index.dtype, np.integer):
        raise DomainError(f"sector index must be an integer, got {n!r}")
    if np.any(index < 0):
        raise DomainError(f"n must be >= 0, got {n}")
    return index.astype(np.int64)


def _scalar_or_array(values):
    return float(values) if np.ndim(values) == 0 else np.asarray(values, dtype=np.float64)


def _lam(q: complex) -> float:
    return abs(q) ** 2 / 2


def _require_nonzero(q: complex) -> float:
    x = abs(q)
    if x == 0:
        raise DomainError("the odd sector is empty at q = 0")
    return x


def _odd_denominator(x: float) -> float:
    """sqrt(pi/2) * erf(|q|/sqrt(2))"""
    return SQRT_HALF_PI * float(erf(x / math.sqrt(2)))


def default_truncation(q: complex) -> int:
    """Sector index cutoff ceil(8*lambda) + 40, lambda = |q|^2/2"""
    return math.ceil(8 * _lam(q)) + 40


# --- coefficient recursion and sector states ---


def coefficient_recursion(q: complex, c0: complex, c1: complex, nmax: int) -> Qunit:
    """
    Amplitudes c_0..c_nmax from c_{k+2} = q c_k / sqrt(k+2).

    Equivalently c_2n = q^n c0 / sqrt((2n)!!) and c_2n+1 = q^n c1 / sqrt((2n+1)!!).
    """
    if nmax < 1:
        raise DomainError(f"nmax must be >= 1, got {nmax}")
    c = np.zeros(nmax + 1, dtype=np.complex128)
    c[0], c[1] = c0, c1
    for k in range(nmax - 1):
        c[k + 2] = q * c[k] / math.sqrt(k + 2)
    return Qunit(amplitudes=c)


def normalize_even_sector(q: complex) -> SectorState:
    return SectorState(q=q, sector=Parity.EVEN, normalization=math.exp(-abs(q) ** 2 / 4))


def normalize_odd_sector(q: complex) -> SectorState:
    """c1 = sqrt(|q| / (sqrt(pi/2) erf(|q|/sqrt2))) * exp(-|q|^2/4)"""
    x = _require_nonzero(q)
    f = math.sqrt(x / _odd_denominator(x))
    return SectorState(q=q, sector=Parity.ODD, normalization=f * math.exp(-x * x / 4))


def even_sector_state(q: complex, nmax: int | None = None) -> Qunit:
    """Normalized even-sector N+ eigenstate over labels 0..2*nmax+1"""
    nmax = default_truncation(q) if nmax is None else nmax
    c0 = normalize_even_sector(q).normalization
    return coefficient_recursion(q, c0, 0.0, 2 * nmax + 1)


def odd_sector_state(q: complex, nmax: int | None = None) -> Qunit:
    nmax = default_truncation(q) if nmax is None else nmax
    c1 = normalize_odd_sector(q).normalization
    return coefficient_recursion(q, 0.0, c1, 2 * nmax + 1)


def sector_block(state: Qunit, parity: Parity | str) -> np.ndarray:
    """Amplitudes on labels of one parity, in label order"""
    parity = Parity(parity)
    if state.basis is not Space.NATURAL or parity is Parity.FULL:
        raise DomainError("sector blocks exist for natural-basis states and even/odd parity")
    start = 0 if parity is Parity.EVEN else 1
    return state.amplitudes[start::2]


def parity_decomposition(state: Qunit) -> tuple[Qunit, Qunit]:
    """Split |Q> = |Q_even> + |Q_odd>; the parts are orthogonal"""
    if state.basis is not Space.NATURAL:
        raise DomainError("parity decomposition applies to the natural basis")
    even = np.zeros_like(state.amplitudes)
    odd = np.zeros_like(state.amplitudes)
    even[0::2] = state.amplitudes[0::2]
    odd[1::2] = state.amplitudes[1::2]
    return Qunit(amplitudes=even), Qunit(amplitudes=odd)


# --- distributions ---


def p_even(q: complex, n):
    """Probability of |2n> in the even sector: Poisson(|q|^2/2) at n"""
    return _scalar_or_array(poisson.pmf(sector_index(n), _lam(q)))


def p_odd(q: complex, n):
    """
    Probability of |2n+1> in the odd sector, for a scalar or an array of n:

        |q|^(2n+1) e^(-|q|^2/2) 2^n n! / ((2n+1)! sqrt(pi/2) erf(|q|/sqrt2))

    2^n n! / (2n+1)! = 1 / (2n+1)!!, taken from the exact table up to
    LOG_SPACE_FROM and from gammaln above it.
    """
    index = sector_index(n)
    x = _require_nonzero(q)
    exponent = (2 * index + 1) * math.log(x) - x * x / 2
    small = index <= LOG_SPACE_FROM
    direct = np.exp(np.where(small, exponent, 0.0)) / ODD_DOUBLE_FACTORIALS[np.where(small, index, 0)]
    log_double_factorial = gammaln(2 * index + 2) - index * math.log(2) - gammaln(index + 1)
    logged = np.exp(np.where(small, 0.0, exponent - log_double_factorial))
    return _scalar_or_array(np.where(small, direct, logged) / _odd_denominator(x))


def p_odd_poisson_form(q: complex, n):
    """
    The odd distribution written as a Poisson term times a correction:

        P_odd(n) = Poisson(|q|^2/2)(n) * |q| 4^n (n!)^2 / ((2n+1)! sqrt(pi/2) erf(|q|/sqrt2))
    """
    index = sector_index(n)
    x = _require_nonzero(q)
    correction = x * np.exp(_log_central_factor(index)) / _odd_denominator(x)
    return _scalar_or_array(poisson.pmf(index, _lam(q)) * correction)


def _log_central_factor(n):
    """log of 4^n (n!)^2 / (2n+1)!"""
    return 2 * n * math.log(2) + 2 * gammaln(n + 1) - gammaln(2 * n + 2)


def distribution_table(q: complex, nmax: int, sectors: Iterable[Parity]) -> list[tuple]:
    """Rows (n, p_even, p_odd); a sector not requested is None"""
    sectors = set(sectors)
    index = np.arange(nmax + 1)
    even = p_even(q, index) if Parity.EVEN in sectors else None
    odd = p_odd(q, index) if Parity.ODD in sectors else None
    return [
        (
            int(k),
            None if even is None else float(even[k]),
            None if odd is None else float(odd[k]),
        )
        for k in index
    ]


def sector_mean_n(q: complex, nmax: int | None = None) -> float:
    """sum_n p_even(n) * 2n; tends to |q|^2"""
    nmax = default_truncation(q) if nmax is None else nmax
    n = np.arange(nmax + 1)
    return float(np.sum(p_even(q, n) * 2 * n))


def sector_mean_n_star(q: complex, nmax: int | None = None) -> float:
    """sum_n p_even(n) * (2n + 1), the N* eigenvalue of |2n>; tends to |q|^2 + 1"""
    nmax = default_truncation(q) if nmax is None else nmax
    n = np.arange(nmax + 1)
    return float(np.sum(p_even(q, n) * (2 * n + 1)))


def stirling_ratio(q: complex, n: int, variant: str = "B") -> StirlingEstimate:
    """
    Stirling estimate of P_odd(n) / P_even(n).

    Variant A replaces (n!)^2 only:
        A_n = pi (2n)^(2n+1) e^(-2n) / (2n+1)!,   ratio ~ |q| A_n / (sqrt(pi/2) erf)
    Variant B also replaces (2n+1)!:
        B_n = (e / sqrt(2n+1)) (2n/(2n+1))^(2n+1),   ratio ~ |q| B_n / erf
    """
    index = sector_index(n)
    if index.ndim:
        raise DomainError("stirling_ratio takes a single sector index")
    n = int(index)
    if n < 1:
        raise DomainError(f"Stirling approximation needs n >= 1, got {n}")
    x = _require_nonzero(q)
    variant = variant.upper()
    erf_value = float(erf(x / math.sqrt(2)))
    if variant == "A":
        factor = math.exp(
            math.log(math.pi) + (2 * n + 1) * math.log(2 * n) - 2 * n - gammaln(2 * n + 2)
        )
        approximate = x * factor / (SQRT_HALF_PI * erf_value)
    elif variant == "B":
        factor = math.e / math.sqrt(2 * n + 1) * (2 * n / (2 * n + 1)) ** (2 * n + 1)
        approximate = x * factor / erf_value
    else:
        raise DomainError(f"variant must be 'A' or 'B', got {variant!r}")
    return StirlingEstimate(
        variant=variant,
        n=n,
        factor=factor,
        approximate_ratio=approximate,
        exact_ratio=exact_odd_even_ratio(q, n),
    )


def exact_odd_even_ratio(q: complex, n):
    """P_odd(n) / P_even(n) = |q| 4^n (n!)^2 / ((2n+1)! sqrt(pi/2) erf(|q|/sqrt2))"""
    index = sector_index(n)
    x = _require_nonzero(q)
    return _scalar_or_array(x * np.exp(_log_central_factor(index)) / _odd_denominator(x))


# --- primes ---


def primes_up_to(limit: int) -> np.ndarray:
    """Sieve of Eratosthenes over a boolean array"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def prime_counting(x: int) -> int:
    return int(primes_up_to(x).size)


def prime_qunit(n: int) -> Qunit:
    """Equal superposition of the prime labels p <= 2^n"""
    if not 2 <= n <= PRIME_QUNIT_MAX_EXPONENT:
        raise DomainError(f"prime qunit needs 2 <= n <= {PRIME_QUNIT_MAX_EXPONENT}, got {n}")
    limit = 2**n
    primes = primes_up_to(limit)
    amplitudes = np.zeros(limit + 1, dtype=np.complex128)
    amplitudes[primes] = 1.0 / math.sqrt(primes.size)
    logger.debug("prime_qunit: n=%d, pi(2^n)=%d", n, primes.size)
    return Qunit(amplitudes=amplitudes)


def integer_qunit(n, amplitudes) -> Qunit:
    """Qunit over the |n, m> basis, m = n..-n"""
    return Qunit(basis=Space.INTEGER, integer_n=Fraction(n), amplitudes=amplitudes)


def projection_probability(state: Qunit, label) -> float:
    """|<label|Q>|^2"""
    try:
        amplitude = state.amplitude(label)
    except IndexError as exc:
        raise DomainError(str(exc)) from exc
    return abs(amplitude) ** 2


# --- qu2it geometry ---


def qu2it_from_angles(gamma: float, theta: float, phi: float) -> Qunit:
    """e^(i gamma) (cos(theta/2)|0> + e^(i phi) sin(theta/2)|1>)"""
    two_pi = 2 * math.pi
    if not (0 <= gamma < two_pi and 0 <= phi < two_pi and 0 <= theta <= math.pi):
        raise DomainError(
            f"angles out of range: gamma={gamma}, theta={theta}, phi={phi}"
        )
    phase = np.exp(1j * gamma)
    amplitudes = phase * np.array(
        [math.cos(theta / 2), np.exp(1j * phi) * math.sin(theta / 2)]
    )
    return Qunit(amplitudes=amplitudes)


def _require_qu2it(state: Qunit) -> tuple[complex, complex]:
    if state.basis is not Space.NATURAL or state.dimension != 2:
        raise DomainError("expected a qu2it over |0>, |1>")
    if abs(state.norm - 1.0) > NORM_TOL:
        raise DomainError(f"qu2it is not normalized (norm {state.norm!r})")
    return complex(state.amplitudes[0]), complex(state.amplitudes[1])


def embed_R3(state: Qunit, tol: float = 1e-12) -> np.ndarray:
    """(cos(theta/2), cos(phi) sin(theta/2), sin(phi) sin(theta/2)) for gamma = 0"""
    c0, c1 = _require_qu2it(state)
    if abs(c0.imag) > tol or c0.real < -tol:
        raise DomainError("global phase must be zero to embed in R^3")
    return np.array([c0.real, c1.real, c1.imag])


def bloch_vector(state: Qunit) -> np.ndarray:
    """Hopf map: (sin th cos ph, sin th sin ph, cos th)"""
    c0, c1 = _require_qu2it(state)
    cross = c0.conjugate() * c1
    return np.array([2 * cross.real, 2 * cross.imag, abs(c0) ** 2 - abs(c1) ** 2])


def bloch_density(state: Qunit) -> DensityMatrix:
    """(I + x.sigma) / 2 with x the Bloch vector"""
    x = bloch_vector(state)
    matrix = 0.5 * (np.eye(2) + sum(xk * s for xk, s in zip(x, PAULI)))
    return validate_density(matrix, provenance="qu2it")
