"""Text, LaTeX and JSON renderings of polynomials, rational functions and matrices.

Displayed rational functions use integer coefficients with no common factor
and a positive leading denominator coefficient, e.g. ``(-20β^2 + 1)/(576β^4 - 160β^2 + 4)``.
"""
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple

from ..errors import InvalidInput
from ..utils.storage import rational_from_str, rational_to_str
from .matrix import RatMatrix
from .poly import Poly
from .ratfunc import RatFunc
from .series import PowerSeries

TEXT_VAR = "β"
LATEX_VAR = r"\beta"


def integer_form(f: RatFunc) -> Tuple[Poly, Poly]:
    """Scale ``num/den`` to integer-primitive polynomials with positive leading denominator."""
    scale = lcm(f.num.denominator_lcm(), f.den.denominator_lcm())
    num, den = f.num * scale, f.den * scale
    content = 0
    for c in num.coeffs + den.coeffs:
        content = gcd(content, int(c))
    if den.lead < 0:
        content = -content
    return num * Fraction(1, content), den * Fraction(1, content)


def _terms(p: Poly, var: str, power: str) -> List[Tuple[Fraction, str]]:
    out = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            monomial = ""
        elif k == 1:
            monomial = var
        else:
            monomial = var + power.format(k)
        out.append((c, monomial))
    return out


def _join(terms: List[Tuple[Fraction, str]], coefficient) -> str:
    if not terms:
        return "0"
    pieces = []
    for i, (c, monomial) in enumerate(terms):
        magnitude = abs(c)
        body = monomial if magnitude == 1 and monomial else coefficient(magnitude) + monomial
        if i == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


def _text_coefficient(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"({c})"


def _latex_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def poly_to_text(p: Poly, var: str = TEXT_VAR) -> str:
    """Descending powers, e.g. ``864β^4 - 240β^2 + 6``."""
    return _join(_terms(p, var, "^{}"), _text_coefficient)


def poly_to_latex(p: Poly, var: str = LATEX_VAR) -> str:
    return _join(_terms(p, var, "^{{{}}}"), _latex_coefficient)


def ratfunc_to_text(f: RatFunc, var: str = TEXT_VAR) -> str:
    if f.is_polynomial():
        return poly_to_text(f.num, var)
    num, den = integer_form(f)
    return f"({poly_to_text(num, var)})/({poly_to_text(den, var)})"


def ratfunc_to_latex(f: RatFunc, var: str = LATEX_VAR) -> str:
    if f.is_polynomial():
        return poly_to_latex(f.num, var)
    num, den = integer_form(f)
    return rf"\frac{{{poly_to_latex(num, var)}}}{{{poly_to_latex(den, var)}}}"


def matrix_to_text(m: RatMatrix) -> str:
    """Rows of right-aligned cells, one row per line."""
    cells = [[ratfunc_to_text(f) for f in row] for row in m.entries]
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    return "\n".join(
        "[ " + "  ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)) + " ]"
        for row in cells
    )


def matrix_to_latex(m: RatMatrix) -> str:
    body = " \\\\\n".join(" & ".join(ratfunc_to_latex(f) for f in row) for row in m.entries)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def ratfunc_to_json(f: RatFunc) -> Dict[str, List[str]]:
    return {
        "num": [rational_to_str(c) for c in f.num.coeffs],
        "den": [rational_to_str(c) for c in f.den.coeffs],
    }


def ratfunc_from_json(data: Dict[str, Sequence[str]]) -> RatFunc:
    try:
        num = Poly(tuple(rational_from_str(c) for c in data["num"]))
        den = Poly(tuple(rational_from_str(c) for c in data["den"]))
    except (KeyError, TypeError) as e:
        raise InvalidInput(f"Rational function JSON needs 'num' and 'den' lists: {e}") from e
    return RatFunc(num, den)


def matrix_to_json(m: RatMatrix) -> List[List[Dict[str, List[str]]]]:
    return [[ratfunc_to_json(f) for f in row] for row in m.entries]


def series_to_json(s: PowerSeries) -> List[str]:
    return [rational_to_str(c) for c in s.coeffs]
