"""Class algebra: structure constants, convolution, traces."""
from .algebra import (
    ClassVector,
    StructureConstants,
    basis_product,
    convolve,
    handle_element,
    structure_constants,
    structure_constants_by_convolution,
    surface_correlator,
    trace,
    trace_product,
)
from .identities import (
    check_against_convolution,
    check_associativity,
    check_commutativity,
    check_four_trace_expansion,
    check_identity_coefficients,
)

__all__ = [
    "ClassVector",
    "StructureConstants",
    "basis_product",
    "check_against_convolution",
    "check_associativity",
    "check_commutativity",
    "check_four_trace_expansion",
    "check_identity_coefficients",
    "convolve",
    "handle_element",
    "structure_constants",
    "structure_constants_by_convolution",
    "surface_correlator",
    "trace",
    "trace_product",
]
