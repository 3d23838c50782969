from fractions import Fraction
from itertools import product

import pytest

from s2quant import identities as ids
from s2quant.exactnum import GaussRational, s_power, sqrt_rational
from s2quant.sphere_poly import Poly3, poisson_raw
from s2quant.spinrep import (A, C, P0, PolyAC, SpinMatrix, TwoJ, commutator, derivation_chain,
                             matrix_element, projector_vn_forms, quantize_repr,
                             representative_consistency, spin_matrices, substitute_s2,
                             verify_bracket_identity)

I = GaussRational(0, 1)
x, y, z = (Poly3.var(i) for i in range(3))
s2 = Poly3.const(s_power(2))
SPINS = range(13)
MONOS = [e for e in product(range(4), repeat=3) if sum(e) <= 3]


def ident(tj, v=1):
    return SpinMatrix.identity(tj + 1, v)


def test_twoj():
    t = TwoJ.parse("3/2")
    assert (t.twoj, t.dim, t.kappa, str(t)) == (3, 4, Fraction(15, 4), "3/2")
    assert t.ms() == [Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]
    with pytest.raises(ValueError):
        TwoJ.parse("1/3")
    with pytest.raises(ValueError):
        TwoJ(-1)


def test_spin_half():
    J3 = spin_matrices(1)[2]
    assert matrix_element(J3, Fraction(-1, 2), Fraction(-1, 2)) == PolyAC.const(Fraction(-1, 2))
    assert matrix_element(J3, Fraction(1, 2), Fraction(1, 2)) == PolyAC.const(Fraction(1, 2))
    assert J3 == J3.adjoint()


@pytest.mark.parametrize("tj", SPINS)
def test_commutation_and_casimir(tj):
    J1, J2, J3 = spin_matrices(tj)
    assert commutator(J1, J2) == J3 * I
    assert commutator(J2, J3) == J1 * I
    assert commutator(J3, J1) == J2 * I
    assert J1 * J1 + J2 * J2 + J3 * J3 == ident(tj, TwoJ(tj).kappa)
    j = TwoJ(tj).j
    assert matrix_element(J3, j, j) == PolyAC.const(j)


def test_rule_examples():
    tj = 5
    J = spin_matrices(tj)
    assert quantize_repr(z * z, tj) == J[2] * J[2] * A + ident(tj) * C
    assert quantize_repr(Poly3.const(1), tj) == ident(tj)
    want = J[0] * J[1] * J[2] * A + (J[0] * J[0] - J[1] * J[1] + J[2] * J[2]) * A \
        * GaussRational(0, Fraction(-1, 2))
    assert quantize_repr(x * y * z, tj) == want
    with pytest.raises(ValueError):
        quantize_repr(x ** 4, tj)


@pytest.mark.parametrize("tj", SPINS)
def test_representative_consistency(tj):
    k = TwoJ(tj).kappa
    r = representative_consistency(x * x + y * y + z * z, s2, tj)
    assert r == ident(tj) * (A * k + C * 3 - PolyAC.const(s_power(2)))
    assert substitute_s2(r, A * k + C * 3).is_zero()
    r3 = representative_consistency((x * x + y * y + z * z) * z, s2 * z, tj)
    js = A * (k - Fraction(1, 3)) + C * Fraction(5, 3)
    assert substitute_s2(r3, js).is_zero()
    assert not substitute_s2(r3, A * k + C * 3).is_zero() or tj == 0
    assert representative_consistency(x * y, x * y, tj).is_zero()
    with pytest.raises(ValueError):
        representative_consistency(x, y, tj)


@pytest.mark.parametrize("tj", SPINS)
def test_equivariance_and_adjointness(tj):
    J = spin_matrices(tj)
    for e in MONOS:
        p = Poly3.monomial(e)
        Q = quantize_repr(p, tj)
        assert Q.adjoint() == Q
        for i in range(3):
            lhs = quantize_repr(poisson_raw(Poly3.var(i), p), tj)
            assert lhs == commutator(J[i], Q) * GaussRational(0, -1)


@pytest.mark.parametrize("tj", SPINS)
def test_s3j(tj):
    J = spin_matrices(tj)
    k = TwoJ(tj).kappa
    for l in range(3):
        tot = J[0] * J[l] * J[0] + J[1] * J[l] * J[1] + J[2] * J[l] * J[2]
        assert tot == J[l] * (k - 1)


def test_matrix_elements():
    B = ids.B_OPERATOR
    X = ids.X_OPERATOR
    for tj in range(1, 13):
        j = TwoJ(tj).j
        got = matrix_element(B.evaluate(tj), j, j - 1)
        assert got == PolyAC.const(sqrt_rational(2 * j) * GaussRational(0, Fraction(1, 2) - j))
        if tj >= 2:
            got = matrix_element(X.evaluate(tj), j - 2, j)
            want = sqrt_rational(j * (2 * j - 1)) * GaussRational(0, Fraction(-1, 2) * (1 - j))
            assert got == PolyAC.const(want)


@pytest.mark.parametrize("name", "abcd")
def test_residual_closed_forms(name):
    terms, rhs = ids.identity(name)
    for tj in (1, 2, 3, 4, 7):
        assert verify_bracket_identity(terms, rhs, tj) == ids.residual_closed_form(name).evaluate(tj)


def test_identity_guard():
    terms, rhs = ids.identity("a")
    with pytest.raises(ValueError):
        verify_bracket_identity(terms, rhs * 2, 2)


def test_projectors():
    assert P0((0, 0)) == Fraction(1, 3)
    assert P0((0, 1)) == 0
    for tj in range(7):
        for e in MONOS:
            if sum(e) in (2, 3):
                kind = "quadratic" if sum(e) == 2 else "cubic"
                assert projector_vn_forms(kind, e, tj) == quantize_repr(Poly3.monomial(e), tj)
    with pytest.raises(ValueError):
        projector_vn_forms("quadratic", (1, 1, 1), 2)


@pytest.mark.parametrize("tj", SPINS)
def test_derivations(tj):
    chain = derivation_chain(tj)
    assert chain and all(d["match"] for d in chain)
