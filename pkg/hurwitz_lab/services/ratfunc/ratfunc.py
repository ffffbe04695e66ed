"""Rational functions in the formal variable beta."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import DivisionByZeroFunction
from .poly import Poly, poly_gcd

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class RatFunc:
    """
    ``num / den`` kept reduced with a monic denominator.

    Equality is by cross-multiplication, so ``RatFunc(6 - 120b^2, 864b^4 - 240b^2 + 6)``
    equals the canonical form it reduces to.
    """

    num: Poly
    den: Poly = Poly((1,))

    def __post_init__(self):
        num = self.num if isinstance(self.num, Poly) else Poly.const(self.num)
        den = self.den if isinstance(self.den, Poly) else Poly.const(self.den)
        if den.is_zero():
            raise DivisionByZeroFunction("Rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            scale = 1 / den.lead
            num, den = num * scale, den * scale
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls(Poly.const(c))

    @classmethod
    def beta(cls) -> "RatFunc":
        return cls(Poly.beta())

    @staticmethod
    def lift(value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return RatFunc(value)
        if isinstance(value, (int, Fraction)):
            return RatFunc.const(value)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = RatFunc.lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other) -> "RatFunc":
        other = RatFunc.lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = RatFunc.lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = RatFunc.lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = RatFunc.lift(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZeroFunction(f"Division of {self} by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.lift(other) / self

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at a rational point."""
        d = self.den(x)
        if d == 0:
            raise DivisionByZeroFunction(f"{self} has a pole at {x}")
        return self.num(x) / d

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __str__(self):
        from .formatting import ratfunc_to_text

        return ratfunc_to_text(self)
