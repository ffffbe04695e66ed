"""Generating functions for Hurwitz-type counts and their oracles."""
from .engine import (
    HurwitzContext,
    HurwitzResult,
    OdeCheck,
    build_A,
    determinant_check,
    generating_function_matrix,
    hurwitz_gf,
    hurwitz_series,
    inverse_A,
    ode_check,
)
from .oracles import brute_force_h, one_part_closed_form, one_part_coeffs
from .verification import verify_suite

__all__ = [
    "HurwitzContext",
    "HurwitzResult",
    "OdeCheck",
    "brute_force_h",
    "build_A",
    "determinant_check",
    "generating_function_matrix",
    "hurwitz_gf",
    "hurwitz_series",
    "inverse_A",
    "ode_check",
    "one_part_closed_form",
    "one_part_coeffs",
    "verify_suite",
]
