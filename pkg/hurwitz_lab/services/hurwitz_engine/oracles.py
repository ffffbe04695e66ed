"""Independent answers for the generating functions: tuple counts and the one-part formula."""
from fractions import Fraction
from math import factorial
from typing import List, Optional

import numpy as np

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, WorkCapExceeded
from ..finite_group import ClassTable, FiniteGroup
from ..ratfunc import PowerSeries
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# partial products held in memory at once
CHUNK = 1 << 21


def tuple_work(table: ClassTable, mu: int, tau: int, r: int) -> int:
    """Multiplications needed to enumerate ``(a, t_1..t_r)``."""
    return table[mu].size * table[tau].size ** r * max(r, 1)


def brute_force_h(
    group: FiniteGroup,
    table: ClassTable,
    mu: int,
    nu: int,
    tau: int,
    r: int,
    work_cap: Optional[int] = None,
) -> Fraction:
    """
    ``#{(a, t_1..t_r, b) : a in mu, t_i in tau, b in nu, a t_1 .. t_r b = 1} / |G|``.

    Enumerates every ``a t_1 .. t_r`` and tests whether its inverse lies in nu.

    Raises:
        InvalidInput: If r is negative
        WorkCapExceeded: If ``size(mu) * size(tau)^r * r`` exceeds the cap
    """
    if r < 0:
        raise InvalidInput(f"Number of branch points must be nonnegative, got {r}")
    cap = resolve_cap(work_cap, settings.WORK_CAP)
    estimate = tuple_work(table, mu, tau, r)
    if estimate > cap:
        logger.warning(f"Tuple count for r={r} needs {estimate} steps, cap {cap}")
        raise WorkCapExceeded(estimate, cap, f"tuple enumeration (r={r})")

    in_nu = table.class_of == nu
    taus = np.array(table[tau].members, dtype=np.int64)
    mul, inv = group.mul, group.inv

    def count(products: np.ndarray, remaining: int) -> int:
        if remaining == 0:
            return int(np.count_nonzero(in_nu[inv[products]]))
        if products.size * taus.size > CHUNK and products.size > 1:
            step = max(1, CHUNK // taus.size)
            return sum(count(products[i:i + step], remaining) for i in range(0, products.size, step))
        return count(mul[products[:, None], taus[None, :]].ravel(), remaining - 1)

    total = count(np.array(table[mu].members, dtype=np.int64), r)
    logger.debug(f"r={r}: {total} tuples")
    return Fraction(total, group.order)


def _sinh_unit(c: int, order: int) -> PowerSeries:
    """``(e^{cz/2} - e^{-cz/2}) / z`` through ``z^order``."""
    coeffs = [Fraction(0)] * (order + 1)
    half = Fraction(c, 2)
    for j in range(order // 2 + 1):
        coeffs[2 * j] = 2 * half ** (2 * j + 1) / factorial(2 * j + 1)
    return PowerSeries(tuple(coeffs), order)


def one_part_coeffs(d: int, r_max: int) -> List[Fraction]:
    """
    One-part numbers ``r! [z^r] (1/d^2) s(d^2 z) / s(d z)`` with
    ``s(z) = e^{z/2} - e^{-z/2}``, for ``r = 0..r_max``.

    Raises:
        InvalidInput: If d < 1 or r_max < 0
    """
    if d < 1:
        raise InvalidInput(f"Degree must be positive, got {d}")
    if r_max < 0:
        raise InvalidInput(f"r_max must be nonnegative, got {r_max}")
    ratio = _sinh_unit(d * d, r_max) / _sinh_unit(d, r_max)
    return [c * factorial(r) / (d * d) for r, c in enumerate(ratio)]


def one_part_closed_form(d: int, r: int) -> Fraction:
    """``(1/d^2) sum_j (d(d-1)/2 - d j)^r`` over ``j = 0..d-1``."""
    return Fraction(sum((d * (d - 1) // 2 - d * j) ** r for j in range(d)), d * d)
