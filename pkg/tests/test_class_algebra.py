import random
from fractions import Fraction

import pytest

from hurwitz_lab.services.class_algebra import (
    ClassVector,
    basis_product,
    check_against_convolution,
    check_associativity,
    check_commutativity,
    check_four_trace_expansion,
    check_identity_coefficients,
    convolve,
    handle_element,
    structure_constants_by_convolution,
    surface_correlator,
    trace,
    trace_product,
)
from hurwitz_lab.services.errors import InvalidInput, WorkCapExceeded
from hurwitz_lab.services.graph_count import count_homs_surface

# S_3 classes: 0 identity, 1 transpositions, 2 three-cycles
E, T, C = 0, 1, 2


def test_s3_structure_constants(s3):
    table = s3.sc.table
    assert table[T][T] == [3, 0, 3]
    assert table[T][C] == [0, 2, 0]
    assert table[C][C] == [2, 0, 1]
    assert table[E][C] == [0, 0, 1]


@pytest.mark.parametrize("name", ["s2", "s3", "s4", "z3"])
def test_property_suites(name, request):
    ctx = request.getfixturevalue(name)
    sc = ctx.sc
    assert check_identity_coefficients(sc) == []
    assert check_commutativity(sc) == []
    assert check_associativity(sc) == []
    assert check_associativity(sc, rng=random.Random(7), samples=20) == []
    assert check_four_trace_expansion(sc) == []
    assert check_against_convolution(ctx.group, ctx.classes, sc) == []


def test_convolution_oracle_is_capped(s4):
    assert structure_constants_by_convolution(s4.group, s4.classes) == s4.sc
    with pytest.raises(WorkCapExceeded):
        structure_constants_by_convolution(s4.group, s4.classes, max_order=10)


def test_convolve_and_trace(s3):
    ft = s3.sc.basis(T)
    product = convolve(ft, ft, s3.sc)
    assert product == ClassVector((3, 0, 3))
    assert trace(product, s3.sc) == 3
    assert convolve(s3.sc.unit(), ft, s3.sc) == ft


@pytest.mark.parametrize(
    "classes,expected",
    [([T, T], 3), ([C, C], 2), ([T, C], 0), ([T, T, C], 6), ([T, T, T, T], 27), ([E], 1)],
)
def test_trace_product_counts_tuples(s3, classes, expected):
    assert trace_product(classes, s3.sc) == expected


def test_trace_product_needs_a_class(s3):
    with pytest.raises(InvalidInput):
        trace_product([], s3.sc)
    assert basis_product([], s3.sc) == [1, 0, 0]


def test_handle_element(s3):
    assert handle_element(s3.sc) == ClassVector((3, 0, Fraction(3, 2)))


def test_torus_correlator_counts_commuting_pairs(s3, s4):
    # |Hom(Z^2, G)| = |G| * number of classes
    assert surface_correlator(1, [], s3.sc) == 18
    assert surface_correlator(1, [], s4.sc) == 120


@pytest.mark.parametrize(
    "genus,classes",
    [(0, [T, T, C]), (1, [T]), (1, [C]), (1, [T, T]), (2, []), (2, [C])],
)
def test_correlator_matches_surface_count(s3, genus, classes):
    assert surface_correlator(genus, classes, s3.sc) == count_homs_surface(genus, classes, s3.group, s3.classes)


def test_correlator_on_cyclic_group(z3):
    # abelian: boundary product must vanish, handles contribute |G|^2 each
    assert surface_correlator(1, [1, 2], z3.sc) == 9
    assert surface_correlator(1, [1, 1], z3.sc) == 0
    assert count_homs_surface(1, [1, 2], z3.group, z3.classes) == 9


def test_negative_genus(s3):
    with pytest.raises(InvalidInput):
        surface_correlator(-1, [], s3.sc)
