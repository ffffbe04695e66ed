"""Run every invariant of the class algebra and the Hurwitz engine into one report."""
import random
from typing import Optional

from ...app.config import settings
from ..class_algebra import (
    check_against_convolution,
    check_associativity,
    check_commutativity,
    check_four_trace_expansion,
    check_identity_coefficients,
)
from ..errors import IntegralityViolation, WorkCapExceeded
from ..ratfunc import RatMatrix, mat_inverse, neumann_inverse, series_expand
from ..utils.logging_config import get_logger
from ..utils.validation import VerificationReport
from .engine import (
    HurwitzContext,
    build_A,
    determinant_check,
    generating_function_matrix,
    hurwitz_series,
    ode_check,
)
from .oracles import brute_force_h, one_part_coeffs

logger = get_logger(__name__)

# above these class counts the cubic/quartic suites are sampled or skipped
FULL_TRIPLES_MAX_CLASSES = 8
FOUR_TRACE_MAX_CLASSES = 5


def _file_failures(report: VerificationReport, location: str, failures) -> None:
    report.record(not failures, location, "; ".join(failures[:5]) + (" ..." if len(failures) > 5 else ""))


def verify_algebra(ctx: HurwitzContext, rng: random.Random, report: VerificationReport) -> None:
    sc = ctx.sc
    _file_failures(report, "algebra/identity-coefficients", check_identity_coefficients(sc))
    _file_failures(report, "algebra/commutativity", check_commutativity(sc))
    samples = None if ctx.n <= FULL_TRIPLES_MAX_CLASSES else 200
    _file_failures(report, "algebra/associativity", check_associativity(sc, rng=rng, samples=samples))
    if ctx.n <= FOUR_TRACE_MAX_CLASSES:
        _file_failures(report, "algebra/four-trace", check_four_trace_expansion(sc))
    else:
        report.add_info("algebra/four-trace", f"skipped for {ctx.n} classes")
    if ctx.order <= settings.ORACLE_MAX_ORDER:
        _file_failures(report, "algebra/convolution-oracle", check_against_convolution(ctx.group, ctx.classes, sc))
    else:
        report.add_info("algebra/convolution-oracle", f"skipped for group order {ctx.order}")


def verify_matrix(ctx: HurwitzContext, tau: int, max_r: int, report: VerificationReport) -> None:
    d, b, a = build_A(ctx, tau)
    if ctx.classes.all_self_inverse:
        report.record(a == a.transpose(), "matrix/symmetric", "A is not symmetric")
    inverse = mat_inverse(a)
    report.record(a @ inverse == RatMatrix.identity(ctx.n), "matrix/inverse", "A times its inverse is not I")
    neumann = neumann_inverse(d, b, max_r)
    mismatched = [
        (i, j) for i in range(ctx.n) for j in range(ctx.n)
        if series_expand(inverse[i, j], max_r) != neumann[i][j]
    ]
    report.record(not mismatched, "matrix/neumann", f"series of the inverse differ from the Neumann series at {mismatched[:5]}")
    report.merge(determinant_check(ctx, tau))


def verify_hurwitz(ctx: HurwitzContext, tau: int, max_r: int, report: VerificationReport, work_cap: Optional[int]) -> None:
    labels = ctx.classes.labels
    n = ctx.n
    h = generating_function_matrix(ctx, tau)
    if ctx.classes.all_self_inverse:
        report.record(h == h.transpose(), "hurwitz/symmetry", "h[mu][nu] != h[nu][mu]")

    for mu in range(n):
        for nu in range(n):
            where = f"hurwitz/({labels[mu]};{labels[nu]})"
            try:
                result = hurwitz_series(ctx, mu, nu, tau, max_r)
            except IntegralityViolation as e:
                report.record(False, where + "/integrality", str(e))
                continue
            report.checks_run += 1

            check = ode_check(ctx, mu, nu, tau)
            report.record(check.passed, where + "/ode", f"residual {check.residual}")

            # the count starts in mu^-1
            start = ctx.sc.inverse[mu]
            for r in range(max_r + 1):
                try:
                    expected = brute_force_h(ctx.group, ctx.classes, start, nu, tau, r, work_cap=work_cap)
                except WorkCapExceeded as e:
                    report.add_warning(where + f"/oracle r={r}", f"skipped: {e}")
                    break
                report.record(
                    result.coeffs[r] == expected,
                    where + f"/oracle r={r}",
                    f"series gives {result.coeffs[r]}, tuple count gives {expected}",
                )


def verify_one_part(ctx: HurwitzContext, tau: int, max_r: int, report: VerificationReport) -> None:
    if ctx.degree is None or ctx.degree < 2 or tau != ctx.transposition_class():
        report.add_info("one-part", "needs S_d with tau the transpositions")
        return
    cycle = ctx.full_cycle_class()
    series = hurwitz_series(ctx, cycle, cycle, tau, max_r).coeffs
    expected = one_part_coeffs(ctx.degree, max_r)
    report.record(
        list(series) == expected,
        "one-part",
        f"series {[str(c) for c in series]} differ from the closed form {[str(c) for c in expected]}",
    )


def verify_suite(
    ctx: HurwitzContext,
    tau: int,
    max_r: int = 4,
    seed: Optional[int] = None,
    work_cap: Optional[int] = None,
) -> VerificationReport:
    """
    Check the class algebra, the matrix A, its inverse, the generating
    functions (tuple oracle, differential equation, integrality, symmetry)
    and, for symmetric groups, the one-part formula.

    Args:
        ctx: Group context
        tau: Branch class
        max_r: Highest series coefficient compared with the tuple oracle
        seed: Seed for sampled suites (defaults to settings.DEFAULT_SEED)
        work_cap: Cap for each tuple enumeration; larger instances are skipped and noted

    Returns:
        VerificationReport
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    rng = random.Random(seed)
    report = VerificationReport(seed=seed)
    ctx.check_class(tau)
    logger.info(f"Verifying group of order {ctx.order}, tau = {ctx.classes[tau].label}, r <= {max_r}")

    verify_algebra(ctx, rng, report)
    verify_matrix(ctx, tau, max_r, report)
    verify_hurwitz(ctx, tau, max_r, report, work_cap)
    verify_one_part(ctx, tau, max_r, report)

    logger.info(report.summary())
    return report
