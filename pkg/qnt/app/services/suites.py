"""
Identity suites: each collects residual checks into a SuiteReport.

Base thresholds are calibrated for the default tolerance 1e-10 and scale
linearly with the requested tolerance; exact-arithmetic checks keep a
zero threshold.
"""

import asyncio
import logging
import math
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.special import erf

from app.config.settings import settings
from app.exceptions import DomainError
from app.models.linalg import RationalPolynomial
from app.models.report import SuiteReport
from app.models.representation import Direction, Parity
from app.models.states import Ensemble, Qunit
from app.services import (
    ensemble_density,
    integer_rep,
    natural_rep,
    qmap,
    qunit_states,
    su_n,
)
from app.services.matrix_core import (
    char_poly_exact,
    commutator,
    hermitian_eigen,
    max_abs,
    reconstruction_residual,
)

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
NATURAL_BLOCK_DIM = 12
NORM_DIM_MAX = 11
QMAP_DIMS = (3, 5, 7, 9)
HOMOMORPHISM_DIMS = (3, 5, 7)
GGM_DIMS = (2, 3, 4, 5)
DIST_Q_SQUARED = (1, 2, 4, 8)


def _F(text: str) -> Fraction:
    return Fraction(text)


# reference D(x) expansions, ascending coefficients
PRINTED_CHAR_POLYS: dict[Fraction, tuple[Fraction, ...]] = {
    Fraction(1, 2): (_F("-1/4"), _F(0), _F(1)),
    Fraction(1): (_F(0), _F(1), _F(0), _F(-1)),
    Fraction(3, 2): (_F("9/16"), _F(0), _F("-5/2"), _F(0), _F(1)),
    Fraction(2): (_F(0), _F(-4), _F(0), _F(5), _F(0), _F(-1)),
    Fraction(5, 2): (_F("-225/64"), _F(0), _F("259/16"), _F(0), _F("-35/4"), _F(0), _F(1)),
    Fraction(3): (_F(0), _F(36), _F(0), _F(-49), _F(0), _F(14), _F(0), _F(-1)),
}


def _scale(tol: float | None) -> float:
    tol = settings.QNT_TOL if tol is None else tol
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    return tol / DEFAULT_TOL


def _exact(flag: bool) -> float:
    """Exact checks report residual 0 (holds) or 1 (fails)"""
    return 0.0 if flag else 1.0


def natural_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    scale = _scale(tol)
    report = SuiteReport(suite="natural")
    d = NATURAL_BLOCK_DIM
    eye = np.eye(d - 1)
    interior = natural_rep.interior
    for parity in (Parity.EVEN, Parity.ODD):
        plus = natural_rep.ladder_matrix(Direction.RAISE, parity, d)
        minus = natural_rep.ladder_matrix(Direction.LOWER, parity, d)
        if parity is Parity.EVEN:
            number = minus @ plus
            bracket = plus @ minus - minus @ plus
            note = None
        else:
            number = natural_rep.regularized_number_matrix(parity, d)
            bracket = plus @ minus - number
            note = "odd block uses the regularized number operator diag(1,3,5,...)"
        p = parity.value
        report.add(
            f"[N,N+] = -2N+ ({p})",
            max_abs(interior(commutator(number, plus) + 2 * plus)),
            1e-12 * scale,
            note,
        )
        report.add(
            f"[N,N-] = 2N- ({p})",
            max_abs(interior(commutator(number, minus) - 2 * minus)),
            1e-12 * scale,
            note,
        )
        report.add(
            f"[N+,N-] = 2I ({p})", max_abs(interior(bracket) - 2 * eye), 1e-12 * scale, note
        )

    plus = natural_rep.ladder_matrix(Direction.RAISE, Parity.EVEN, d)
    minus = natural_rep.ladder_matrix(Direction.LOWER, Parity.EVEN, d)
    report.add(
        "number_matrix(even) = N-N+",
        max_abs(interior(natural_rep.number_matrix(Parity.EVEN, d) - minus @ plus)),
        1e-12 * scale,
    )
    n1, n2 = natural_rep.heisenberg_components(Parity.EVEN, d)
    report.add(
        "[N1,N2] = iI (even)", max_abs(interior(commutator(n1, n2)) - 1j * eye), 1e-12 * scale
    )
    report.add(
        "N1^2 + N2^2 = N* (even)",
        max_abs(interior(n1 @ n1 + n2 @ n2 - natural_rep.n_star_matrix(Parity.EVEN, d))),
        1e-12 * scale,
    )

    for b in range(1, 9):
        full = natural_rep.assemble_full_N(b)
        expected = np.diag(np.arange(2 * b, dtype=float))
        report.add(f"spectrum assemble_full_N({b}) = 0..{2 * b - 1}", max_abs(full - expected), 0.0)

    worst = max(
        abs(natural_rep.qnsv_from_seed(n).coefficient ** 2 * natural_rep.qnsv_from_seed(n).double_factorial - 1)
        for n in range(2, 21)
    )
    report.add("qnsv coefficient^2 * n!! = 1", worst, 1e-14 * scale)
    return report


def integer_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    scale = _scale(tol)
    dim_max = settings.DEFAULT_DIM_MAX if dim_max is None else dim_max
    if dim_max < 2:
        raise DomainError(f"dim_max must be >= 2, got {dim_max}")
    report = SuiteReport(suite="integer")
    for d in range(2, dim_max + 1):
        n = integer_rep.label_for_dim(d)
        lattice = np.array([float(n - k) for k in range(d)])
        report.add(
            f"[Zi,Zj] = i eps_ijk Zk (d={d})",
            integer_rep.z_commutator_residual(d),
            1e-12 * d * scale,
        )
        for identity, residual in integer_rep.casimir_residuals(d).items():
            report.add(f"{identity} (d={d})", residual, 1e-12 * d * scale)
        for p in (1, 2, 3):
            z = integer_rep.build_Z(p, d)
            system = hermitian_eigen(z)
            report.add(
                f"spectrum Z{p} = -n..n (d={d})",
                float(np.max(np.abs(system.eigenvalues - lattice))),
                1e-10 * scale,
            )
            report.add(
                f"eigen reconstruction Z{p} (d={d})",
                reconstruction_residual(z, system),
                1e-10 * (1 + max_abs(z)) * scale,
            )
        report.add(
            f"ladder coefficients (d={d})",
            integer_rep.ladder_coefficient_residual(d),
            1e-12 * d * scale,
        )
        exact_poly = char_poly_exact(integer_rep.build_Z(3, d, exact=True))
        product = integer_rep.char_poly_D(n)
        report.add(f"char_poly_exact(Z3) = D(x) (d={d})", _exact(exact_poly == product), 0.0)
        roots_vanish = all(product(n - k) == 0 for k in range(d))
        report.add(f"D(m) = 0 on the spectrum (d={d})", _exact(roots_vanish), 0.0)
        if d <= NORM_DIM_MAX:
            for p in (1, 2):
                worst = max(
                    abs(v.norm - integer_rep.expected_norm(n, v.eigenvalue))
                    / integer_rep.expected_norm(n, v.eigenvalue)
                    for v in integer_rep.z_eigensystem(p, d)
                )
                report.add(f"eigenvector norm formula Z{p} (d={d})", worst, 1e-9 * scale)
    return report


def charpoly_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    report = SuiteReport(suite="charpoly")
    for n, coefficients in PRINTED_CHAR_POLYS.items():
        report.add(
            f"D(x) reference case n={n}",
            _exact(integer_rep.char_poly_D(n) == RationalPolynomial(coefficients)),
            0.0,
        )
    for twice_n in range(1, 11):
        n = Fraction(twice_n, 2)
        d = integer_rep.dim_for_label(n)
        matrix_poly = char_poly_exact(integer_rep.build_Z(3, d, exact=True))
        report.add(
            f"char_poly_exact(Z3) = prod(k - x) n={n}",
            _exact(matrix_poly == integer_rep.char_poly_D(n)),
            0.0,
        )
    return report


def qmap_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    scale = _scale(tol)
    report = SuiteReport(suite="qmap")
    for d in range(2, 16):
        r3 = qmap.build_R(3, d)
        report.add(f"R3 = I (d={d})", max_abs(r3 - np.eye(d)), 0.0)
    for d in QMAP_DIMS:
        n = integer_rep.label_for_dim(d)
        for p in (1, 2):
            transported, _ = qmap.transported_R(p, d)
            off_diagonal = transported - np.diag(np.diag(transported))
            report.add(f"R{p} diagonal in Z{p} eigenbasis (d={d})", max_abs(off_diagonal), 1e-12 * scale)
            rows = qmap.r_table(p, d)
            report.add(
                f"R{p} diagonal = r(m) (d={d})",
                max(abs(row.numeric - float(row.formula)) for row in rows),
                1e-10 * scale,
            )
            report.add(
                f"r(m) = norm ratio (d={d}, p={p})",
                _exact(all(row.formula == row.oracle for row in rows)),
                0.0,
            )
        symmetric = all(
            qmap.r_eigenvalue(d, n - k) == qmap.r_eigenvalue(d, -(n - k)) for k in range(d)
        )
        report.add(f"r(m) = r(-m) (d={d})", _exact(symmetric), 0.0)
        boundary = qmap.boundary_r(d)
        report.add(
            f"boundary r(|m|=n) = 4/(d+1) (d={d})",
            _exact(boundary == Fraction(4, d + 1)),
            0.0,
            note=(
                f"r = {boundary}; the value 4/(d-1) = {Fraction(4, d - 1)} "
                "is inconsistent with the closed form and the norm ratio"
            ),
        )
    for p in (1, 2, 3):
        for d in HOMOMORPHISM_DIMS:
            report.add(
                f"Z{p}(d+2) T{p} v = m T{p} v (d={d})",
                max(qmap.homomorphism_residuals(p, d).values()),
                1e-8 * scale,
            )
    r1 = np.linalg.eigvalsh(qmap.build_R(1, 3))
    r2 = np.linalg.eigvalsh(qmap.build_R(2, 3))
    report.add("spectrum R1 = spectrum R2 (d=3)", float(np.max(np.abs(r1 - r2))), 1e-12 * scale)
    return report


def sun_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    scale = _scale(tol)
    report = SuiteReport(suite="sun")
    rebuilt = su_n.gellmann_from_Z()
    standard = su_n.standard_gellmann()
    report.add(
        "lambda from Z = standard Gell-Mann",
        max_abs(rebuilt.stacked() - standard.stacked()),
        1e-14 * scale,
        note="{Z2,Z3} is computed from Z2, Z3; its (2,3) entry is +i/sqrt2, -i/sqrt2 breaks Hermiticity",
    )
    report.add("Tr(la lb) = 2 delta_ab", su_n.trace_orthogonality_residual(rebuilt), 1e-12 * scale)
    constants = su_n.structure_constants(rebuilt)
    comm, anti = su_n.closure_residuals(rebuilt, constants)
    note = "closure uses [la,lb] = 2i f_abc lc, the normalization implied by the trace formula"
    report.add("[la,lb] = 2i f_abc lc", comm, 1e-10 * scale, note)
    report.add("{la,lb} = 2 d_abc lc + 4/3 delta_ab I", anti, 1e-10 * scale)
    f_sym, d_sym = su_n.symmetry_residuals(constants)
    report.add("f totally antisymmetric", f_sym, 1e-12 * scale)
    report.add("d totally symmetric", d_sym, 1e-12 * scale)
    metric, inverse = su_n.cartan_killing(constants)
    report.add("g_ab = 3 delta_ab", max_abs(metric - 3 * np.eye(8)), 1e-10 * scale)
    report.add("g g^-1 = I", max_abs(metric @ inverse - np.eye(8)), 1e-10 * scale)
    casimir = su_n.casimir_su3(rebuilt)
    report.add("C2 = (4/3) I", max_abs(casimir - (4 / 3) * np.eye(3)), 1e-12 * scale)
    report.add(
        "[la, C2] = 0",
        max(max_abs(commutator(lam, casimir)) for lam in rebuilt.lambdas),
        1e-12 * scale,
    )
    for d in GGM_DIMS:
        report.add(f"ggm commutation exact (d={d})", float(su_n.ggm_commutation_violations(d)), 0.0)
        report.add(
            f"sum_l Z_l^l = 0 (d={d})", _exact(bool(np.all(su_n.ggm_trace_sum(d) == 0))), 0.0
        )
        report.add(f"(Z_l^k)^H = Z_k^l (d={d})", su_n.ggm_hermiticity_residual(d), 0.0)
        report.add(f"rank = d^2 - 1 (d={d})", float(abs(su_n.ggm_rank(d) - (d * d - 1))), 0.0)
        report.add(
            f"Casimir coefficient (d^2-1)/(2d) (d={d})",
            abs(su_n.casimir_coefficient(d) - (d * d - 1) / (2 * d)),
            1e-12 * scale,
        )
    return report


def _local_maxima(values: np.ndarray) -> int:
    """Count strict peaks, ignoring differences below float noise"""
    diffs = np.diff(values)
    noise = 1e-15 * float(np.max(values))
    signs = np.sign(np.where(np.abs(diffs) <= noise, 0.0, diffs))
    signs = signs[signs != 0]
    return int(np.sum((signs[:-1] > 0) & (signs[1:] < 0))) + int(signs.size > 0 and signs[0] < 0)


def dist_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    scale = _scale(tol)
    report = SuiteReport(suite="dist")
    for q_squared in DIST_Q_SQUARED:
        q = math.sqrt(q_squared)
        nmax = qunit_states.default_truncation(q)
        n = np.arange(nmax + 1)
        even = qunit_states.p_even(q, n)
        odd = qunit_states.p_odd(q, n)
        report.add(f"sum p_even = 1 (|q|^2={q_squared})", abs(even.sum() - 1), 1e-9 * scale)
        report.add(f"sum p_odd = 1 (|q|^2={q_squared})", abs(odd.sum() - 1), 1e-9 * scale)
        report.add(
            f"<N> = |q|^2 (|q|^2={q_squared})",
            abs(qunit_states.sector_mean_n(q) - q_squared),
            1e-9 * scale,
        )
        report.add(
            f"<N*> = |q|^2 + 1 (|q|^2={q_squared})",
            abs(qunit_states.sector_mean_n_star(q) - (q_squared + 1)),
            1e-9 * scale,
            note="weight (2n+1) is the N* eigenvalue of |2n>",
        )
    for x in (0.5, 1.0, 2.0):
        worst = max(
            abs(qunit_states.p_odd(x, k) - qunit_states.p_odd_poisson_form(x, k)) for k in range(21)
        )
        report.add(f"p_odd direct = Poisson form (|q|={x})", worst, 1e-14 * scale)
    grid = np.linspace(0.0, 6.0, 601)
    report.add(
        "erf against reference",
        max(abs(float(erf(v)) - math.erf(v)) for v in grid),
        1e-14 * scale,
    )
    for lam in (1, 2, 4):
        q = math.sqrt(2 * lam)
        n = np.arange(qunit_states.default_truncation(q) + 1)
        for name, values in (
            ("even", qunit_states.p_even(q, n)),
            ("odd", qunit_states.p_odd(q, n)),
        ):
            report.add(f"{name} distribution unimodal (lambda={lam})", float(_local_maxima(values) - 1), 0.0)
            mode = int(np.argmax(values))
            report.add(
                f"{name} mode within floor(lambda)+-1 (lambda={lam})",
                float(max(0, abs(mode - lam) - 1)),
                0.0,
            )
    for q in (1.0, 1 + 1j, 2.0):
        state = qunit_states.even_sector_state(q, qunit_states.default_truncation(q))
        block = qunit_states.sector_block(state, Parity.EVEN)
        ladder = natural_rep.ladder_matrix(Direction.RAISE, Parity.EVEN, block.size)
        report.add(
            f"N+ |Q> = q |Q> on the even sector (q={q})",
            max_abs((ladder @ block - q * block)[:-1]),
            1e-8 * scale,
        )
        report.add(f"even sector state norm (q={q})", abs(state.norm - 1), 1e-9 * scale)
    errors = [qunit_states.stirling_ratio(2.0, k, "B").relative_error for k in range(5, 31)]
    report.add(
        "Stirling B error decreasing (|q|=2, n=5..30)",
        float(np.sum(np.diff(errors) >= 0)),
        0.0,
    )
    report.add(
        "Stirling A and B within 5% (n>=10)",
        max(
            abs(
                qunit_states.stirling_ratio(2.0, k, "A").approximate_ratio
                / qunit_states.stirling_ratio(2.0, k, "B").approximate_ratio
                - 1
            )
            for k in range(10, 31)
        ),
        0.05,
    )
    return report


def entropy_suite(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    scale = _scale(tol)
    report = SuiteReport(suite="entropy")
    rng = np.random.default_rng(20240601)

    def random_state(d: int) -> Qunit:
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        return Qunit(amplitudes=v / np.linalg.norm(v))

    for d in range(2, 9):
        rho = ensemble_density.density_from_ensemble(ensemble_density.random_ensemble(d))
        report.add(
            f"Omega(I/d) = ln d (d={d})",
            abs(ensemble_density.omega_entropy(rho) - math.log(d)),
            1e-12 * scale,
        )
        pure = ensemble_density.density_from_ensemble(
            ensemble_density.pure_ensemble(random_state(d))
        )
        report.add(f"Omega(pure) = 0 (d={d})", ensemble_density.omega_entropy(pure), 1e-12 * scale)
        report.add(f"Tr rho^2 = 1 for pure (d={d})", abs(pure.purity - 1), 1e-10 * scale)
        report.add(
            f"single unit eigenvalue for pure (d={d})",
            float(np.max(np.abs(pure.eigenvalues - np.eye(d)[0]))),
            1e-10 * scale,
        )

    mixtures = []
    for d in (2, 3):
        members = [random_state(d) for _ in range(4)]
        weights = rng.random(4)
        mixtures.append(
            ensemble_density.density_from_ensemble(
                Ensemble(members=members, weights=list(weights), normalize=True)
            )
        )
    product = ensemble_density.product_density(mixtures)
    additivity = abs(
        ensemble_density.omega_entropy(product)
        - sum(ensemble_density.omega_entropy(m) for m in mixtures)
    )
    report.add("Omega additive over products", additivity, 1e-10 * scale)
    report.add("Tr(product) = 1", abs(np.trace(product.matrix) - 1), 1e-12 * scale)

    members = [random_state(4) for _ in range(5)]
    ensemble = Ensemble(members=members, weights=list(rng.random(5)), normalize=True)
    rho = ensemble_density.density_from_ensemble(ensemble)
    observable = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    observable = observable + observable.conj().T
    report.add(
        "ensemble average = Tr(rho A)",
        abs(ensemble_density.ensemble_average(observable, ensemble) - np.real(np.trace(rho.matrix @ observable))),
        1e-10 * scale,
    )
    for k in range(0, 11):
        report.add(f"log2(2^{k}) = {k}", abs(ensemble_density.shannon_bits(2**k) - k), 0.0)
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "natural": natural_suite,
    "integer": integer_suite,
    "charpoly": charpoly_suite,
    "qmap": qmap_suite,
    "sun": sun_suite,
    "dist": dist_suite,
    "entropy": entropy_suite,
}


def run_suite(name: str, tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    report = SUITES[name](tol=tol, dim_max=dim_max)
    logger.info(
        "suite %s: %d checks, %d failed", name, len(report.checks), len(report.failures())
    )
    return report


async def run_all(tol: float | None = None, dim_max: int | None = None) -> SuiteReport:
    """Run every suite in worker threads; merge in registry order"""
    reports = await asyncio.gather(
        *(asyncio.to_thread(run_suite, name, tol, dim_max) for name in SUITES)
    )
    return SuiteReport.merge("all", list(reports))
