from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from s2quant.exactnum import (ONE, ZERO, Coefficient, GaussRational, coeff_is_zero, coeff_mul,
                              is_squarefree, pi_power, render, s_power, sqrt_rational,
                              squarefree_split, term)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussRational, rationals, rationals)
squarefree = st.integers(1, 10 ** 6).filter(is_squarefree)
keys = st.tuples(st.sampled_from([1, 2, 3, 5, 6, 7, 10, 15, 30]), st.integers(-2, 2),
                 st.integers(-2, 3))
coeffs = st.dictionaries(keys, gauss, max_size=4).map(Coefficient)


def root(d):
    return term(1, d)


def test_spec_products():
    assert coeff_mul(root(2), root(3)) == root(6)
    assert coeff_mul(root(6), root(10)) == term(2, 15)
    assert coeff_mul(pi_power(-1), pi_power(-1)) == pi_power(-2)


def test_zero_tests():
    assert coeff_is_zero(root(2) - root(2))
    assert not coeff_is_zero(root(2) + root(3))
    assert coeff_is_zero(term(2, 15) - sqrt_rational(60))


def test_gauss_canonical():
    z = GaussRational(Fraction(2, 4), Fraction(-6, 8))
    assert (z.re, z.im) == (Fraction(1, 2), Fraction(-3, 4))
    assert GaussRational(0) == 0 and not GaussRational(0)
    assert GaussRational(0, 1) * GaussRational(0, 1) == -1


@given(gauss, gauss, gauss)
def test_gauss_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x.conjugate().conjugate() == x
    if y:
        assert (x / y) * y == x


@settings(max_examples=60)
@given(coeffs, coeffs, coeffs)
def test_coefficient_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == ZERO


@given(coeffs)
def test_canonical_idempotent(x):
    assert Coefficient(x.terms) == x
    assert all(v for v in x.terms.values())
    assert all(is_squarefree(d) for d, _, _ in x.terms)


@settings(max_examples=1000)
@given(squarefree)
def test_root_squares_to_radicand(d):
    assert root(d) * root(d) == d


@settings(deadline=None)
@given(st.integers(1, 10 ** 9))
def test_squarefree_split(n):
    g, d = squarefree_split(n)
    assert g * g * d == n and is_squarefree(d)


def test_single_term_inverse():
    x = term(Fraction(3, 4), 6, -1, 2)
    assert x * x.inverse() == ONE
    with pytest.raises(ZeroDivisionError):
        (root(2) + root(3)).inverse()


def test_render():
    x = term(Fraction(3, 4), 6, -1, 2) + GaussRational(0, Fraction(1, 2))
    assert render(x) == "3/4*sqrt(6)*pi^(-1/2)*s^2 + i*1/2"
    assert render(ZERO) == "0"
    assert render(s_power(2)) == "s^2"


def test_kernels_agree(kernels):
    G, C = kernels.GaussRational, kernels.Coefficient
    x = G(Fraction(1, 3), 2)
    y = G(-5, Fraction(7, 2))
    z = x * y + x - y
    assert (z.re, z.im) == (Fraction(-10, 3), Fraction(-31, 3))
    c = C({(2, 0, 0): G(1), (3, 1, 0): G(0, 1)})
    sq = c * c
    assert sq.terms == {(1, 0, 0): G(2), (6, 1, 0): G(0, 2), (1, 2, 0): G(-3)}
    assert kernels.poly_mul({(1, 0): G(1), (0, 1): G(1)}, {(1, 0): G(1), (0, 1): G(-1)}) \
        == {(2, 0): G(1), (0, 2): G(-1)}


@settings(max_examples=50)
@given(st.lists(st.tuples(rationals, rationals), min_size=2, max_size=6))
def test_backends_match(pairs):
    from s2quant._backend import load
    try:
        fast = load("cython")
    except ImportError:
        pytest.skip("compiled kernel not built")
    slow = load("python")
    acc = [slow.GaussRational(0), fast.GaussRational(0)]
    for a, b in pairs:
        acc[0] = acc[0] * slow.GaussRational(a, b) + slow.GaussRational(b, a)
        acc[1] = acc[1] * fast.GaussRational(a, b) + fast.GaussRational(b, a)
    assert (acc[0].re, acc[0].im) == (acc[1].re, acc[1].im)


def test_pure_python_switch():
    import os
    import subprocess
    import sys
    env = dict(os.environ, S2QUANT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import s2quant; print(s2quant.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
