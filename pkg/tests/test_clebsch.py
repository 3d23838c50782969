from fractions import Fraction

import pytest

from s2quant.clebsch import (admissible_grid, bracket_coeffs_direct, bracket_coeffs_recursion,
                             cg, cg_l_l_00, cg_stretched, nonvanishing_report, product_decompose,
                             ratio_bound_check, ratio_grid_maximum, ratio_value)
from s2quant.exactnum import GaussRational, ONE, ZERO, coeff_is_zero, pi_power, s_power, sqrt_rational, term
from s2quant.harmonics import coefficient_of_ylm, harmonic_decompose, ylm
from s2quant.properties import suite_cg
from s2quant.sphere_poly import SpherePoly


def test_cg_examples():
    for l in range(1, 5):
        for j in range(1, 2 * l + 1, 2):
            assert cg(l, l, 0, 0, j, 0) == ZERO
        assert cg(l, l, l, l, 2 * l, 2 * l) == ONE
    assert cg(1, 1, 0, 0, 2, 0) == sqrt_rational(Fraction(2, 3))
    with pytest.raises(ValueError):
        cg(1, 1, 2, 0, 2, 2)


def test_cg_selection_rules():
    assert cg(2, 1, 1, 1, 3, 1) == ZERO
    assert cg(1, 1, 1, 0, 3, 1) == ZERO


def test_cg_orthogonality():
    assert all(ok for _, ok, _ in suite_cg(4))


def test_closed_forms_match_racah():
    assert cg_l_l_00(1, 1) == sqrt_rational(Fraction(2, 3))
    for l in range(9):
        for k in range(l + 1):
            assert cg_l_l_00(l, k) == cg(l, l, 0, 0, 2 * k, 0)
        for j in range(1, 2 * l + 1):
            for k in range(l + 1):
                if abs(2 * l - j + 1) <= 2 * k:
                    assert cg_stretched(l, j, k) == cg(l, l, l - j + 1, l, 2 * k, 2 * l - j + 1)


def test_product_decompose_against_multiplication():
    assert product_decompose(0, 0, 3, 1) == {3: term(Fraction(1, 2), 1, -1)}
    assert list(product_decompose(1, 1, 1, 1)) == [2]
    assert set(product_decompose(1, 0, 1, 0)) == {0, 2}
    for l1 in range(5):
        for l2 in range(5):
            for m1 in range(-l1, l1 + 1):
                for m2 in range(-l2, l2 + 1):
                    coeffs = product_decompose(l1, m1, l2, m2)
                    d = harmonic_decompose(ylm(l1, m1).poly * ylm(l2, m2).poly)
                    for L in range(l1 + l2 + 1):
                        comp = d.component(L)
                        got = coefficient_of_ylm(comp, L, m1 + m2) if comp else ZERO
                        assert got == coeffs.get(L, ZERO)


def test_sin_theta_bridge():
    X, Y = SpherePoly.var(0), SpherePoly.var(1)
    lhs = (X + Y * GaussRational(0, 1)) * s_power(-1)
    assert lhs == ylm(1, 1).poly * (-sqrt_rational(Fraction(8, 3)) * pi_power(1))


def test_direct_bracket_examples():
    c = bracket_coeffs_direct(1, 0, 1)
    assert set(c) == {1} and c[1]
    for l in range(1, 5):
        for m in range(-l, l + 1):
            assert all(coeff_is_zero(v) for v in bracket_coeffs_direct(l, m, m).values())


@pytest.mark.parametrize("l", range(1, 9))
def test_recursion_equals_direct(l):
    for j in range(1, 2 * l + 1):
        row = bracket_coeffs_recursion(l, j)
        assert row.ytilde[l + 1] == ZERO
        assert row.y == bracket_coeffs_direct(l, l - j, l)


def test_recursion_rejects_out_of_range():
    with pytest.raises(ValueError):
        bracket_coeffs_recursion(3, 7)


def test_nonvanishing_examples():
    assert not coeff_is_zero(bracket_coeffs_recursion(3, 1).y[3])
    assert not coeff_is_zero(bracket_coeffs_direct(2, 1, 2)[2])
    rep = nonvanishing_report(5)
    assert rep["top_coefficient_nonzero"] and rep["vanishing_below_threshold"]
    assert rep["closed_form_solution"] and rep["alternating_terms_increase"]


def test_ratio_bound():
    best, where = ratio_grid_maximum(40)
    assert best == Fraction(18, 25)
    assert all(ratio_bound_check(l, k) for l, k in admissible_grid(40))
    r = ratio_value(5, 5)
    assert r == Fraction(9, 85) and r < 1
