"""Truncated power series with exact coefficients."""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ..errors import InvalidInput, PoleAtOrigin
from .poly import Poly
from .ratfunc import RatFunc

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    """
    Coefficients of ``beta^0 .. beta^order``; terms past ``order`` are unknown.

    Binary operations truncate to the smaller order and never invent terms.
    """

    coeffs: Tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise InvalidInput(f"Series order must be nonnegative, got {self.order}")
        coeffs = [Fraction(c) for c in self.coeffs[: self.order + 1]]
        coeffs += [Fraction(0)] * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "PowerSeries":
        return cls(tuple(p[k] for k in range(order + 1)), order)

    @classmethod
    def const(cls, c: Scalar, order: int) -> "PowerSeries":
        return cls((c,), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise InvalidInput(f"Cannot extend a series known to order {self.order} to order {order}")
        return PowerSeries(self.coeffs, order)

    def _pair(self, other: "PowerSeries") -> Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        n = min(self.order, other.order)
        return n, self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n, a, b = self._pair(other)
        return PowerSeries(tuple(x + y for x, y in zip(a, b)), n)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n, a, b = self._pair(other)
        return PowerSeries(tuple(x - y for x, y in zip(a, b)), n)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs), self.order)

    def scale(self, factor: Scalar) -> "PowerSeries":
        return PowerSeries(tuple(c * factor for c in self.coeffs), self.order)

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n, a, b = self._pair(other)
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b[j]
        return PowerSeries(tuple(out), n)

    __rmul__ = __mul__

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        """
        Raises:
            PoleAtOrigin: If the divisor has zero constant term
        """
        n, a, b = self._pair(other)
        return PowerSeries(tuple(_divide(a, b, n)), n)


def _divide(num: Sequence[Fraction], den: Sequence[Fraction], order: int) -> List[Fraction]:
    if not den or den[0] == 0:
        raise PoleAtOrigin("Denominator vanishes at beta = 0")
    out: List[Fraction] = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return out


def series_expand(f: RatFunc, order: int) -> PowerSeries:
    """
    Taylor coefficients of ``f`` at ``beta = 0`` through ``beta^order``.

    Raises:
        PoleAtOrigin: If the reduced denominator vanishes at zero
    """
    if order < 0:
        raise InvalidInput(f"Series order must be nonnegative, got {order}")
    return PowerSeries(tuple(_divide(f.num.coeffs, f.den.coeffs, order)), order)
