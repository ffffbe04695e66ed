"""Generating functions of Hurwitz-type bundle counts.

For classes mu, nu, tau the generating function

    h(beta) = sum_r beta^r / |G| * #{(a, t_1..t_r, b) : a in mu^-1, t_i in tau, b in nu, a t_1 .. t_r b = 1}

is ``size(mu) size(nu) / |G| * (A^-1)[mu, nu]`` where
``A[mu, nu] = tr(f_{mu^-1} f_nu (1 - beta f_tau))``. For symmetric groups every
class is self-inverse and ``mu^-1 = mu``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ...app.config import settings
from ..class_algebra import StructureConstants, structure_constants, trace_product
from ..errors import IntegralityViolation, InvalidInput
from ..finite_group import ClassTable, FiniteGroup, symmetric_group
from ..ratfunc import (
    Poly,
    PowerSeries,
    RatFunc,
    RatMatrix,
    determinant,
    determinant_by_minors,
    mat_inverse,
    series_expand,
)
from ..utils.logging_config import get_logger
from ..utils.validation import VerificationReport

logger = get_logger(__name__)


@dataclass(eq=False)
class HurwitzContext:
    """A group with its classes and structure constants, plus per-tau caches."""

    group: FiniteGroup
    classes: ClassTable
    sc: StructureConstants
    degree: Optional[int] = None  # set for S_d
    _matrices: Dict[int, Tuple[List[List[Fraction]], List[List[int]], RatMatrix]] = field(default_factory=dict, init=False, repr=False)
    _inverses: Dict[int, RatMatrix] = field(default_factory=dict, init=False, repr=False)

    @classmethod
    def from_group(cls, group: FiniteGroup, classes: ClassTable, degree: Optional[int] = None) -> "HurwitzContext":
        return cls(group=group, classes=classes, sc=structure_constants(group, classes), degree=degree)

    @classmethod
    def symmetric(cls, d: int, order_cap: Optional[int] = None) -> "HurwitzContext":
        group, classes = symmetric_group(d, order_cap=order_cap)
        return cls.from_group(group, classes, degree=d)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def n(self) -> int:
        return len(self.classes)

    def class_id(self, label: str) -> int:
        return self.classes.by_label(label)

    def check_class(self, class_id: int) -> int:
        if not 0 <= class_id < self.n:
            raise InvalidInput(f"Class id {class_id} out of range 0..{self.n - 1}")
        return class_id

    def transposition_class(self) -> int:
        """Class of (0 1) in S_d."""
        if self.degree is None or self.degree < 2:
            raise InvalidInput("Transpositions need a symmetric group of degree at least 2")
        return self.class_id(",".join(["1"] * (self.degree - 2) + ["2"]))

    def full_cycle_class(self) -> int:
        if self.degree is None:
            raise InvalidInput("Full cycles need a symmetric group")
        return self.class_id(str(self.degree))


@dataclass(frozen=True)
class HurwitzResult:
    """Generating function, its series and the raw tuple counts ``|G| * coeff``."""

    mu: int
    nu: int
    tau: int
    gf: RatFunc
    coeffs: PowerSeries
    raw_counts: Tuple[int, ...]


@dataclass(frozen=True)
class OdeCheck:
    mu: int
    nu: int
    residual: RatFunc

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()


def build_A(ctx: HurwitzContext, tau: int) -> Tuple[List[List[Fraction]], List[List[int]], RatMatrix]:
    """
    ``A = D - beta B`` with ``D[mu][nu] = tr(f_{mu^-1} f_nu)`` and
    ``B[mu][nu] = tr(f_{mu^-1} f_nu f_tau)``.

    Returns:
        Tuple of (D, B, A); D is diagonal with the class sizes
    """
    ctx.check_class(tau)
    if tau in ctx._matrices:
        return ctx._matrices[tau]
    n, sc = ctx.n, ctx.sc
    d = [[Fraction(trace_product([sc.inverse[mu], nu], sc)) for nu in range(n)] for mu in range(n)]
    b = [[trace_product([sc.inverse[mu], nu, tau], sc) for nu in range(n)] for mu in range(n)]
    a = RatMatrix(tuple(
        tuple(RatFunc(Poly((d[mu][nu], -b[mu][nu]))) for nu in range(n))
        for mu in range(n)
    ))
    logger.info(f"Built {n}x{n} matrix A for tau = {ctx.classes[tau].label}")
    ctx._matrices[tau] = (d, b, a)
    return d, b, a


def inverse_A(ctx: HurwitzContext, tau: int) -> RatMatrix:
    """Cached exact inverse of A."""
    if tau not in ctx._inverses:
        _, _, a = build_A(ctx, tau)
        ctx._inverses[tau] = mat_inverse(a)
    return ctx._inverses[tau]


def generating_function_matrix(ctx: HurwitzContext, tau: int) -> RatMatrix:
    """``h[mu][nu]`` for all class pairs at once."""
    inv = inverse_A(ctx, tau)
    sizes, order = ctx.classes.sizes, ctx.order
    return RatMatrix(tuple(
        tuple(inv[mu, nu] * Fraction(sizes[mu] * sizes[nu], order) for nu in range(ctx.n))
        for mu in range(ctx.n)
    ))


def hurwitz_gf(ctx: HurwitzContext, mu: int, nu: int, tau: int) -> RatFunc:
    """``size(mu) size(nu) / |G| * (A^-1)[mu, nu]``."""
    ctx.check_class(mu)
    ctx.check_class(nu)
    sizes = ctx.classes.sizes
    return inverse_A(ctx, tau)[mu, nu] * Fraction(sizes[mu] * sizes[nu], ctx.order)


def hurwitz_series(ctx: HurwitzContext, mu: int, nu: int, tau: int, order: Optional[int] = None) -> HurwitzResult:
    """
    Expand the generating function and recover the integer tuple counts.

    Raises:
        InvalidInput: If order is negative
        IntegralityViolation: If some ``|G| * coeff`` is not a nonnegative integer
    """
    order = settings.DEFAULT_SERIES_ORDER if order is None else order
    if order < 0:
        raise InvalidInput(f"Series order must be nonnegative, got {order}")
    gf = hurwitz_gf(ctx, mu, nu, tau)
    coeffs = series_expand(gf, order)
    raw = []
    for r, c in enumerate(coeffs):
        count = c * ctx.order
        if count.denominator != 1 or count < 0:
            raise IntegralityViolation(
                f"|G| * [beta^{r}] h = {count} for ({ctx.classes[mu].label}, {ctx.classes[nu].label})"
            )
        raw.append(int(count))
    return HurwitzResult(mu=mu, nu=nu, tau=tau, gf=gf, coeffs=coeffs, raw_counts=tuple(raw))


def ode_check(ctx: HurwitzContext, mu: int, nu: int, tau: int) -> OdeCheck:
    """
    Residual of ``h + beta h' - |G| sum_lam h[mu][lam] h[lam][nu] / size(lam)``.
    """
    h = generating_function_matrix(ctx, tau)
    beta = RatFunc.beta()
    left = h[mu, nu] + beta * h[mu, nu].derivative()
    right = RatFunc.const(0)
    for lam, size in enumerate(ctx.classes.sizes):
        right = right + h[mu, lam] * h[lam, nu] * Fraction(ctx.order, size)
    return OdeCheck(mu=mu, nu=nu, residual=left - right)


def determinant_check(ctx: HurwitzContext, tau: int, max_minor_dimension: int = 6) -> VerificationReport:
    """
    ``A(0) = D`` and ``det A = det D * det(I - beta D^-1 B)``; small matrices
    also compare the Bareiss determinant with the one by minors.
    """
    report = VerificationReport()
    d, b, a = build_A(ctx, tau)
    n = ctx.n
    report.record(
        a.evaluate(0) == d,
        "determinant/A(0)",
        "A(0) differs from the diagonal of class sizes",
    )
    det_d = Fraction(1)
    for i in range(n):
        det_d *= d[i][i]
    reduced = RatMatrix(tuple(
        tuple(RatFunc(Poly((1 if i == j else 0, -Fraction(b[i][j]) / d[i][i]))) for j in range(n))
        for i in range(n)
    ))
    det_a = determinant(a)
    report.record(
        det_a == determinant(reduced) * det_d,
        "determinant/factorization",
        f"det A = {det_a} is not det D * det(I - beta D^-1 B)",
    )
    if n <= max_minor_dimension:
        report.record(
            det_a == determinant_by_minors(a),
            "determinant/minors",
            "Bareiss and minor expansions of det A disagree",
        )
    report.record(det_a(0) == det_d, "determinant/at-zero", f"det A(0) = {det_a(0)}, expected {det_d}")
    return report
