"""Exact spherical harmonics, sphere integration and harmonic decomposition.

Harmonics are built as polynomials in ``S_i/s`` with the Condon-Shortley
phase, so ``Y_1^1 = -sqrt(3/(8 pi)) (S1 + i S2)/s``.  Two independent
decomposition algorithms are provided: :func:`harmonic_decompose` peels off
harmonic pieces with repeated Laplacians (no integration), while
:func:`component_by_projection` integrates against conjugate harmonics.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactnum import (Coefficient, GaussRational, ZERO, pi_power, s_power,
                       sqrt_rational)
from .sphere_poly import Poly3, SpherePoly, canonicalize, poisson, shift_s

__all__ = [
    "Ylm", "ylm", "ylm_homogeneous", "sphere_integral", "HarmonicDecomp",
    "harmonic_decompose", "component_by_projection", "laplacian",
    "ladder", "beta", "coefficient_of_ylm", "real_imag_parts",
]


@dataclass(frozen=True)
class Ylm:
    l: int
    m: int
    poly: SpherePoly
    homogeneous: Poly3 = field(repr=False, compare=False)

    def conj(self):
        return self.poly.conjugate()


def _legendre_derivative(l, m):
    """Rational coefficients c_t of d^m/dx^m P_l(x) = sum c_t x^t."""
    # (x^2 - 1)^l = sum_v C(l, v) (-1)^(l-v) x^(2v)
    coeffs = {}
    for v in range(l + 1):
        t = 2 * v
        order = l + m
        if t < order:
            continue
        c = comb(l, v) * (-1) ** (l - v) * factorial(t) // factorial(t - order)
        coeffs[t - order] = Fraction(c, 2 ** l * factorial(l))
    return coeffs


@lru_cache(maxsize=None)
def ylm(l, m):
    """The harmonic ``Y_l^m`` as an exact sphere polynomial."""
    if l < 0 or abs(m) > l:
        raise ValueError("need 0 <= |m| <= l, got l=%r m=%r" % (l, m))
    if m < 0:
        pos = ylm(l, -m)
        sgn = -1 if (-m) & 1 else 1
        return Ylm(l, m, pos.poly.conjugate() * sgn, pos.homogeneous.conjugate() * sgn)
    norm = sqrt_rational(Fraction((2 * l + 1) * factorial(l - m), 4 * factorial(l + m)))
    norm = norm * pi_power(-1) * s_power(-l)
    if m & 1:
        norm = -norm
    x, y, z = (Poly3.var(i) for i in range(3))
    r2 = x * x + y * y + z * z
    plus = (x + y * GaussRational(0, 1)) ** m
    body = Poly3.zero()
    for t, c in _legendre_derivative(l, m).items():
        body = body + z ** t * r2 ** ((l - m - t) // 2) * c
    homog = plus * body * norm
    return Ylm(l, m, canonicalize(homog), homog)


def real_imag_parts(p):
    """(R, I) with p = R + i*I, taking the literal real and imaginary coefficient parts.

    sqrt(d), pi and s count as real, so both parts of Y_l^m stay in H_l.
    """
    half = Fraction(1, 2)
    conj = p.conjugate()
    return (p + conj) * half, (p - conj) * GaussRational(0, -half)


def ylm_homogeneous(l, m):
    """Homogeneous harmonic degree-l representative of ``Y_l^m``."""
    return ylm(l, m).homogeneous


def beta(l, m):
    """Ladder coefficient sqrt((l+m+1)(l-m)) as an exact surd."""
    return sqrt_rational((l + m + 1) * (l - m))


def ladder(kind, p):
    """Angular-momentum generators in the Y-eigenbasis convention.

    ``kind`` is one of ``"3"``, ``"+"``, ``"-"``; the generators are
    ``L_i = {p, S_i}`` so that ``L_3 Y_l^m = i m Y_l^m`` and
    ``L_+ Y_l^m = i beta_{l,m} Y_l^{m+1}``.
    """
    i_unit = GaussRational(0, 1)
    sv = [SpherePoly.var(i) for i in range(3)]
    if kind == "3":
        return poisson(p, sv[2])
    l1, l2 = poisson(p, sv[0]), poisson(p, sv[1])
    if kind == "+":
        return l1 + l2 * i_unit
    if kind == "-":
        return l1 - l2 * i_unit
    raise ValueError("ladder kind must be '3', '+' or '-'")


@lru_cache(maxsize=None)
def _double_factorial(n):
    return 1 if n <= 0 else n * _double_factorial(n - 2)


@lru_cache(maxsize=None)
def _monomial_integral(a, b, c):
    """Integral of S1^a S2^b S3^c over the radius-s sphere."""
    if a & 1 or b & 1 or c & 1:
        return ZERO
    q = Fraction(4 * _double_factorial(a - 1) * _double_factorial(b - 1)
                 * _double_factorial(c - 1), _double_factorial(a + b + c + 1))
    return Coefficient({(1, 2, 2 + a + b + c): GaussRational(q)})


def sphere_integral(p):
    """Exact integral of a polynomial over the sphere of radius s (area form)."""
    total = ZERO
    for e, c in p.terms.items():
        m = _monomial_integral(*e)
        if m:
            total = total + c * m
    return total


def laplacian(p):
    """Euclidean Laplacian of a Poly3 (representative, not a sphere class)."""
    out = Poly3.zero()
    for i in range(3):
        out = out + p.diff(i).diff(i)
    return Poly3._from_terms(out.terms)


@dataclass
class HarmonicDecomp:
    """Components ``p_l`` of a sphere polynomial, keyed by degree ``l``.

    ``harmonic[l]`` is the homogeneous harmonic degree-l lift of ``p_l``.
    """

    source: SpherePoly
    components: dict
    harmonic: dict

    def component(self, l):
        return self.components.get(l, SpherePoly.zero())

    def total(self):
        out = SpherePoly.zero()
        for c in self.components.values():
            out = out + c
        return out

    def degrees(self):
        return sorted(l for l, c in self.components.items() if c)


def _split_homogeneous(h, n):
    """Write homogeneous degree-n h as sum_k r^{2k} h_{n-2k}; return {n-2k: h}."""
    x, y, z = (Poly3.var(i) for i in range(3))
    r2 = x * x + y * y + z * z
    rem = Poly3._from_terms(dict(h.terms))
    pieces = {}
    for k in range(n // 2, -1, -1):
        if not rem:
            break
        m = n - 2 * k
        lap = rem
        for _ in range(k):
            lap = laplacian(lap)
        if not lap:
            continue
        # Laplacian^k (r^{2k} h_m) = prod_i 2i(2i + 2m + 1) h_m in three dimensions
        scale = 1
        for i in range(1, k + 1):
            scale *= 2 * i * (2 * i + 2 * m + 1)
        piece = lap * Fraction(1, scale)
        pieces[m] = piece
        rem = rem - piece * r2 ** k
    if rem:
        raise ArithmeticError("harmonic split left a nonzero remainder")
    return pieces


def harmonic_decompose(p):
    """Decompose a sphere polynomial into spherical-harmonic components.

    Each homogeneous part of the representative is split into
    ``r^{2k} h_{n-2k}`` pieces by repeated Laplacians; on the sphere
    ``r^2 = s^2``, so the piece contributes ``s^{2k} h_{n-2k}`` to degree
    ``n - 2k``.
    """
    source = p if isinstance(p, SpherePoly) else canonicalize(p)
    harm = {}
    for n, h in Poly3._from_terms(dict(source.terms)).homogeneous_parts().items():
        for m, piece in _split_homogeneous(h, n).items():
            k = (n - m) // 2
            if k:
                piece = piece.map_coefficients(lambda c, k=k: shift_s(c, 2 * k))
            harm[m] = harm[m] + piece if m in harm else piece
    harm = {l: h for l, h in harm.items() if h}
    comps = {l: canonicalize(h) for l, h in sorted(harm.items())}
    return HarmonicDecomp(source, comps, dict(sorted(harm.items())))


def component_by_projection(p, l):
    """``p_l = s^-2 sum_m (int conj(Y_l^m) p) Y_l^m`` computed exactly."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    inv_s2 = s_power(-2)
    out = SpherePoly.zero()
    for m in range(-l, l + 1):
        y = ylm(l, m).poly
        w = sphere_integral(y.conjugate() * p)
        if w:
            out = out + y * (w * inv_s2)
    return out


def coefficient_of_ylm(component, l, m):
    """The scalar ``c`` with ``component == c * Y_l^m``; raises if not proportional."""
    if not component:
        return ZERO
    y = ylm(l, m).poly
    # pick the first monomial of Y and divide by its (single-term) coefficient
    e, yc = max(y.terms.items())
    c = component.coeff(e) * yc.inverse()
    if y * c != component:
        raise ArithmeticError("component is not a multiple of Y_%d^%d" % (l, m))
    return c
