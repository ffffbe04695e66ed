"""Exact polynomials, rational functions, power series and matrices in beta."""
from .formatting import (
    integer_form,
    matrix_to_json,
    matrix_to_latex,
    matrix_to_text,
    poly_to_text,
    ratfunc_from_json,
    ratfunc_to_json,
    ratfunc_to_latex,
    ratfunc_to_text,
    series_to_json,
)
from .matrix import (
    RatMatrix,
    adjugate_inverse,
    determinant,
    determinant_by_minors,
    mat_inverse,
    neumann_inverse,
    split_linear,
)
from .poly import Poly, poly_gcd, poly_lcm
from .ratfunc import RatFunc
from .series import PowerSeries, series_expand

__all__ = [
    "Poly",
    "PowerSeries",
    "RatFunc",
    "RatMatrix",
    "adjugate_inverse",
    "determinant",
    "determinant_by_minors",
    "integer_form",
    "mat_inverse",
    "matrix_to_json",
    "matrix_to_latex",
    "matrix_to_text",
    "neumann_inverse",
    "poly_gcd",
    "poly_lcm",
    "poly_to_text",
    "ratfunc_from_json",
    "ratfunc_to_json",
    "ratfunc_to_latex",
    "ratfunc_to_text",
    "series_expand",
    "series_to_json",
    "split_linear",
]
