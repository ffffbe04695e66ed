from fractions import Fraction

import pytest

from hurwitz_lab.services.errors import InvalidInput, WorkCapExceeded
from hurwitz_lab.services.hurwitz_engine import (
    HurwitzContext,
    brute_force_h,
    build_A,
    determinant_check,
    generating_function_matrix,
    hurwitz_gf,
    hurwitz_series,
    inverse_A,
    one_part_closed_form,
    one_part_coeffs,
    ode_check,
    verify_suite,
)
from hurwitz_lab.services.ratfunc import Poly, RatFunc, RatMatrix

BETA = RatFunc.beta()


# ============================================================================
# The matrix A
# ============================================================================
def test_s2_matrix(s2):
    _, _, a = build_A(s2, s2.transposition_class())
    assert a == RatMatrix.from_rows([[1, -BETA], [-BETA, 1]])


def test_s3_matrix(s3):
    d, b, a = build_A(s3, s3.transposition_class())
    assert d == [[1, 0, 0], [0, 3, 0], [0, 0, 2]]
    assert b == [[0, 3, 0], [3, 0, 6], [0, 6, 0]]
    assert a == a.transpose()


def test_s4_matrix_diagonal_is_class_sizes(s4):
    d, b, a = build_A(s4, s4.transposition_class())
    assert [d[i][i] for i in range(5)] == [1, 6, 3, 8, 6]
    assert a.evaluate(0) == d
    assert build_A(s4, s4.transposition_class()) is build_A(s4, s4.transposition_class())


def test_s3_matrix_and_inverse_against_reference_tables(s3):
    tau, b = s3.transposition_class(), BETA
    _, _, a = build_A(s3, tau)
    assert a == RatMatrix.from_rows([[1, -3 * b, 0], [-3 * b, 3, -6 * b], [0, -6 * b, 2]])
    q = 9 * b * b - 1
    tabulated = [
        [(6 * b * b - 1) / q, -b / q, -3 * b * b / q],
        [-b / q, -1 / (27 * b * b - 3), -b / q],
        [-3 * b * b / q, -b / q, (3 * b * b - 1) / q],
    ]
    inverse = inverse_A(s3, tau)
    for i in range(3):
        for j in range(3):
            if (i, j) == (2, 2):
                # the tabulated (3),(3) entry is twice the true value
                assert inverse[i, j] == tabulated[i][j] / 2
                assert inverse[i, j](0) == Fraction(1, 2)
            else:
                assert inverse[i, j] == tabulated[i][j]


def test_s4_matrix_and_inverse_against_reference_tables(s4):
    tau, b = s4.transposition_class(), BETA
    _, _, a = build_A(s4, tau)
    assert a == RatMatrix.from_rows([
        [1, -6 * b, 0, 0, 0],
        [-6 * b, 6, -6 * b, -24 * b, 0],
        [0, -6 * b, 3, 0, -12 * b],
        [0, -24 * b, 0, 8, -24 * b],
        [0, 0, -12 * b, -24 * b, 6],
    ])
    b2 = b * b
    b3, b4 = b2 * b, b2 * b2
    p = 144 * b4 - 40 * b * b + 1
    s = 432 * b4 - 120 * b * b + 3
    t = 864 * b4 - 240 * b * b + 6
    u = 36 * b * b - 1
    v = 72 * b * b - 2
    tabulated = [
        [(24 * b4 - 34 * b * b + 1) / p, -(20 * b3 - b) / p, (24 * b4 + 2 * b * b) / p, -3 * b * b / u, 16 * b3 / p],
        [-(20 * b3 - b) / p, -(20 * b * b - 1) / t, (12 * b3 + b) / s, -b / v, 8 * b * b / s],
        [(24 * b4 + 2 * b * b) / p, (12 * b3 + b) / s, (72 * b4 - 30 * b * b + 1) / s, -3 * b * b / u, -(24 * b3 - 2 * b) / s],
        [-3 * b * b / u, -b / v, -3 * b * b / u, (12 * b * b - 1) / (288 * b * b - 8), -b / v],
        # the tabulated (22),(4) denominator drops a square on beta; s is the corrected one
        [16 * b3 / p, 8 * b * b / s, -(24 * b3 - 2 * b) / s, -b / v, -(20 * b * b - 1) / t],
    ]
    assert inverse_A(s4, tau) == RatMatrix.from_rows(tabulated)


def test_determinant_check(s3, s4, z3):
    assert determinant_check(s3, s3.transposition_class()).is_valid()
    assert determinant_check(s4, s4.transposition_class()).is_valid()
    assert determinant_check(z3, 1).is_valid()


# ============================================================================
# Generating functions
# ============================================================================
def test_headline_s4_full_cycles(s4):
    full, tau = s4.full_cycle_class(), s4.transposition_class()
    gf = hurwitz_gf(s4, full, full, tau)
    assert gf == RatFunc(Poly((Fraction(3, 2), 0, -30)), Poly((6, 0, -240, 0, 864)))

    result = hurwitz_series(s4, full, full, tau, order=6)
    assert list(result.coeffs) == [Fraction(1, 4), 0, 5, 0, 164, 0, Fraction(36 ** 3 + 4 ** 3, 8)]
    assert result.raw_counts == (6, 0, 120, 0, 3936, 0, 3 * (36 ** 3 + 4 ** 3))


def test_s2_series(s2):
    t = s2.transposition_class()
    assert list(hurwitz_series(s2, t, t, t, order=3).coeffs) == [Fraction(1, 2), 0, Fraction(1, 2), 0]
    assert list(hurwitz_series(s2, 0, t, t, order=3).coeffs) == [0, Fraction(1, 2), 0, Fraction(1, 2)]


def test_s3_three_cycles(s3):
    c, t = s3.full_cycle_class(), s3.transposition_class()
    result = hurwitz_series(s3, c, c, t, order=4)
    assert list(result.coeffs) == [Fraction(1, 3), 0, 2, 0, 18]
    assert hurwitz_gf(s3, c, c, t) == Fraction(1, 3) * (1 - 3 * BETA * BETA) / (1 - 9 * BETA * BETA)


def test_cyclic_group_pairs_with_inverse_class(z3):
    # a in mu^-1, every t the generator, b in nu: nonzero only when r = 2 mod 3
    result = hurwitz_series(z3, 1, 2, 1, order=5)
    assert list(result.coeffs) == [0, 0, Fraction(1, 3), 0, 0, Fraction(1, 3)]
    assert result.raw_counts == (0, 0, 1, 0, 0, 1)
    assert hurwitz_gf(z3, 1, 2, 1) == Fraction(1, 3) * BETA * BETA / (1 - BETA * BETA * BETA)


def test_generating_function_matrix_is_symmetric(s4):
    h = generating_function_matrix(s4, s4.transposition_class())
    assert h == h.transpose()


@pytest.mark.parametrize("name", ["s2", "s3", "s4"])
def test_series_match_tuple_counts(name, request):
    ctx = request.getfixturevalue(name)
    tau = ctx.transposition_class()
    for mu in range(ctx.n):
        for nu in range(ctx.n):
            result = hurwitz_series(ctx, mu, nu, tau, order=4)
            for r in range(5):
                assert result.coeffs[r] == brute_force_h(ctx.group, ctx.classes, mu, nu, tau, r)


def test_ode(s2, s3, s4, z3):
    cases = [(s2, s2.transposition_class()), (s3, s3.transposition_class()), (s4, s4.transposition_class()), (z3, 1)]
    for ctx, tau in cases:
        for mu in range(ctx.n):
            for nu in range(ctx.n):
                assert ode_check(ctx, mu, nu, tau).passed


def test_bad_arguments(s3):
    with pytest.raises(InvalidInput):
        hurwitz_series(s3, 0, 0, 1, order=-1)
    with pytest.raises(InvalidInput):
        hurwitz_gf(s3, 0, 7, 1)
    with pytest.raises(InvalidInput):
        HurwitzContext.symmetric(1).transposition_class()


# ============================================================================
# Oracles
# ============================================================================
def test_brute_force_values(s3):
    c, t = s3.full_cycle_class(), s3.transposition_class()
    assert brute_force_h(s3.group, s3.classes, c, c, t, 0) == Fraction(1, 3)
    assert brute_force_h(s3.group, s3.classes, c, c, t, 2) == 2
    assert brute_force_h(s3.group, s3.classes, t, t, t, 3) == 0
    with pytest.raises(WorkCapExceeded):
        brute_force_h(s3.group, s3.classes, c, c, t, 4, work_cap=10)
    with pytest.raises(InvalidInput):
        brute_force_h(s3.group, s3.classes, c, c, t, -1)


@pytest.mark.parametrize(
    "d,expected",
    [
        (1, [1, 0, 0, 0, 0]),
        (2, [Fraction(1, 2), 0, Fraction(1, 2), 0, Fraction(1, 2)]),
        (3, [Fraction(1, 3), 0, 2, 0, 18]),
        (4, [Fraction(1, 4), 0, 5, 0, 164]),
    ],
)
def test_one_part_values(d, expected):
    assert one_part_coeffs(d, 4) == expected


def test_one_part_closed_form_agrees():
    for d in range(1, 7):
        assert one_part_coeffs(d, 7) == [one_part_closed_form(d, r) for r in range(8)]


def test_one_part_matches_engine(s4):
    full = s4.full_cycle_class()
    series = hurwitz_series(s4, full, full, s4.transposition_class(), order=8)
    assert list(series.coeffs) == one_part_coeffs(4, 8)


def test_one_part_rejects_bad_degree():
    with pytest.raises(InvalidInput):
        one_part_coeffs(0, 3)
    with pytest.raises(InvalidInput):
        one_part_coeffs(3, -1)


# ============================================================================
# Verification suite
# ============================================================================
def test_verify_suite_s3(s3):
    report = verify_suite(s3, s3.transposition_class(), max_r=4, seed=3)
    assert report.is_valid(), report.errors
    assert report.seed == 3
    assert report.warnings == []
    assert report.checks_run > 0


def test_verify_suite_records_skips(s4):
    report = verify_suite(s4, s4.transposition_class(), max_r=3, work_cap=50)
    assert report.is_valid(), report.errors
    assert report.warnings
    assert all("/oracle r=" in w.location and "skipped" in w.message for w in report.warnings)


def test_verify_suite_general_group(z3):
    report = verify_suite(z3, 1, max_r=5)
    assert report.is_valid(), report.errors
    assert any(issue.location == "one-part" for issue in report.info)


# ============================================================================
# Larger groups
# ============================================================================
def test_headline_closed_form_through_k_10(s4):
    full = s4.full_cycle_class()
    coeffs = hurwitz_series(s4, full, full, s4.transposition_class(), order=20).coeffs
    for k in range(11):
        assert coeffs[2 * k] == Fraction(36 ** k, 8) + Fraction(4 ** k, 8)
        if k < 10:
            assert coeffs[2 * k + 1] == 0


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_one_part_engine_agreement(d):
    ctx = HurwitzContext.symmetric(d)
    full = ctx.full_cycle_class()
    series = hurwitz_series(ctx, full, full, ctx.transposition_class(), order=8)
    assert list(series.coeffs) == one_part_coeffs(d, 8)


def test_s5_inverse():
    ctx = HurwitzContext.symmetric(5)
    tau = ctx.transposition_class()
    _, _, a = build_A(ctx, tau)
    assert a.shape == (7, 7)
    assert a @ inverse_A(ctx, tau) == RatMatrix.identity(7)
