"""The four classical bracket identities and their quantum residual closed forms.

Closed forms are word polynomials with symbolic kappa = j(j+1) and sigma = s^2,
so the same object is reduced in the PBW engine and evaluated in spin matrices.
"""
from fractions import Fraction

from .exactnum import GaussRational, s_power
from .pbw import A, C, KAPPA, SIGMA, NCPoly, SymScalar
from .sphere_poly import Poly3
from .spinrep import Bracket, PolyAC

__all__ = ["IDENTITIES", "identity", "residual_closed_form", "cubic_raw_j_form",
           "js_value", "X_OPERATOR", "B_OPERATOR", "CC1_OPERATOR"]

_x, _y, _z = (Poly3.var(i) for i in range(3))
_s2 = Poly3.const(s_power(2))
_X = [NCPoly.gen(i) for i in range(3)]
_I = GaussRational(0, 1)


def _identity_a():
    return [(1, _x * _x - _y * _y, _x * _y), (-1, _y * _z, _z * _x)], _s2 * _z


def _identity_b():
    return ([(1, _y * _y, Bracket(_x * _y, _x * _z)),
             (Fraction(-3, 4), _x * _x, Bracket(_x * _x, _y * _z))], 2 * _s2 * _y * _z)


def _identity_c():
    x, y, z = _x, _y, _z
    terms = [(4, x ** 3, y * z ** 2), (-4, y ** 3, z ** 2 * x), (1, y ** 2 * x, y ** 3),
             (-1, y * x ** 2, x ** 3), (-6, y ** 3, x ** 3), (-3, y * z ** 2, z ** 2 * x)]
    return terms, 3 * _s2 * _s2 * z


def _identity_d():
    x, y, z = _x, _y, _z
    terms = [(1, x ** 3, y ** 2 * x), (1, y ** 3, z ** 2 * y), (1, z ** 3, x ** 2 * z)]
    return terms, 6 * _s2 * x * y * z


IDENTITIES = {"a": _identity_a, "b": _identity_b, "c": _identity_c, "d": _identity_d}


def identity(name):
    """``(terms, rhs)`` for identity ``"a"`` ... ``"d"``."""
    return IDENTITIES[name]()


# 2 X2 X3 - i X1, nonzero matrix element used in the quadratic argument
B_OPERATOR = _X[1] * _X[2] * 2 - _X[0] * _I
# X1 X2 X3 + (1/2i)(X1^2 - X2^2 + X3^2)
X_OPERATOR = _X[0] * _X[1] * _X[2] + (_X[0] * _X[0] - _X[1] * _X[1] + _X[2] * _X[2]) \
    * GaussRational(0, Fraction(-1, 2))


def js_value():
    """s^2 forced by the cubic rules: a(kappa - 1/3) + 5c/3."""
    return A * (KAPPA - Fraction(1, 3)) + C * Fraction(5, 3)


def _cc1_operator():
    x3 = _X[2]
    lin = (A * 2 - C) * (A + C) * Fraction(4, 3) - A * (A * 7 + C * 4) * KAPPA
    return x3 * lin + x3 * x3 * x3 * (A * (A * 10 + C * 4))


CC1_OPERATOR = _cc1_operator()


def residual_closed_form(name, substituted=False):
    """Expected residual (brackets minus quantized right side) as an NCPoly.

    For ``"c"`` with ``substituted=True`` the s^2 relation from the cubic
    rules has been applied; the result is then minus the cubic constraint.
    """
    x3 = _X[2]
    if name == "a":
        return x3 * (A * A * (KAPPA - Fraction(3, 4)) - SIGMA)
    if name == "b":
        return B_OPERATOR * (A ** 3 * (KAPPA - Fraction(9, 4)) - A * SIGMA)
    if name == "c":
        if substituted:
            return -CC1_OPERATOR
        big = (A * A * KAPPA * KAPPA * 3 + A * A * KAPPA * 5 + A * C * KAPPA * 14
               + C * C * Fraction(29, 3) - A * C * Fraction(14, 3) - A * A * Fraction(7, 3))
        return x3 * (big - SIGMA * SIGMA * 3) - x3 * x3 * x3 * (A * A * 10 + A * C * 4)
    if name == "d":
        return X_OPERATOR * (A * (C - A * 2 + A * KAPPA - SIGMA) * 6)
    raise KeyError(name)


def cubic_raw_j_form(j):
    """The scalar multiplying Q(S3) in the cubic residual, as a literal polynomial in j.

    Returned as a PolyAC at the given numeric j (Fraction), without s.
    """
    j = Fraction(j)
    a = PolyAC.var(0)
    c = PolyAC.var(1)
    return (a * a * 3 * j ** 4 + a * a * 6 * j ** 3 + a * c * 14 * j ** 2 + a * a * 8 * j ** 2
            + a * c * 14 * j + a * a * 5 * j + c * c * Fraction(29, 3) - a * c * Fraction(14, 3)
            - a * a * Fraction(7, 3))


def sym(x):
    return x if isinstance(x, SymScalar) else SymScalar.const(x)
