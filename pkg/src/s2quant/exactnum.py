"""Exact scalar tower: rationals, Gaussian rationals and the surd ring.

A :class:`Coefficient` is a finite sum of terms ``q * sqrt(d) * pi^(p/2) * s^k``
with ``q`` a Gaussian rational, ``d`` a squarefree positive integer and ``s``
the formal sphere radius.  Terms with distinct ``(d, p, k)`` are linearly
independent over the Gaussian rationals, so zero testing is syntactic.

The arithmetic classes live in the kernel backend (compiled or pure Python);
this module adds constructors, rendering and a handful of helpers.
"""
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ._backend import kernels

Rational = Fraction
GaussRational = kernels.GaussRational
Coefficient = kernels.Coefficient
radical_product = kernels.radical_product
as_coefficient = kernels.as_coefficient

ZERO = kernels.ZERO_C
ONE = kernels.ONE_C
I = Coefficient({(1, 0, 0): kernels.I_G})

_SMALL_PRIMES = []


def _primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(n + 1) if sieve[p]]


_SMALL_PRIMES = _primes_upto(2000)


@lru_cache(maxsize=65536)
def squarefree_split(n):
    """Return ``(f, r)`` with ``n == f*f*r`` and ``r`` squarefree (``n > 0``)."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer, got %d" % n)
    f, r = 1, 1
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        f *= p ** (e // 2)
        if e & 1:
            r *= p
    if n > 1:
        q = isqrt(n)
        if q * q == n:
            f *= q
        elif n < _SMALL_PRIMES[-1] ** 2:
            r *= n
        else:
            # large cofactor with no small prime factors
            from sympy import factorint
            for p, e in factorint(n).items():
                f *= p ** (e // 2)
                if e & 1:
                    r *= p
    return f, r


def is_squarefree(n):
    return n > 0 and squarefree_split(n)[0] == 1


def gauss(re=0, im=0):
    return GaussRational(re, im)


def rational(q):
    """Coefficient for an int/Fraction/GaussRational constant."""
    return as_coefficient(q if not isinstance(q, str) else Fraction(q))


def sqrt_rational(q):
    """Exact ``sqrt(q)`` for a nonnegative rational ``q``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative rational %s" % q)
    if q == 0:
        return ZERO
    f, r = squarefree_split(q.numerator * q.denominator)
    return Coefficient({(r, 0, 0): GaussRational(Fraction(f, q.denominator))})


def pi_power(half_exponent):
    """``pi^(half_exponent/2)``."""
    return Coefficient({(1, half_exponent, 0): GaussRational(1)})


def s_power(k):
    return Coefficient({(1, 0, k): GaussRational(1)})


def term(q, d=1, p=0, k=0):
    """Single term ``q*sqrt(d)*pi^(p/2)*s^k``; ``d`` need not be squarefree."""
    if d <= 0:
        raise ValueError("radicand must be positive")
    f, r = squarefree_split(d)
    g = q if isinstance(q, GaussRational) else GaussRational(Fraction(q))
    return Coefficient({(r, p, k): g * f})


def coeff_mul(x, y):
    return x * y


def coeff_is_zero(x):
    return not x


def conj(x):
    return x.conjugate()


def single_term(x):
    """Unpack a single-term coefficient as ``(value, d, p, k)``."""
    if len(x.terms) != 1:
        raise ValueError("expected a single-term coefficient, got %d terms" % len(x.terms))
    (d, p, k), v = next(iter(x.terms.items()))
    return v, d, p, k


def to_rational(x):
    """The rational value of a coefficient with no surd, pi, s or i content."""
    if not x:
        return Fraction(0)
    v, d, p, k = single_term(x)
    if d != 1 or p or k or v.b:
        raise ValueError("coefficient %s is not rational" % render(x))
    return v.re


def is_rational(x):
    try:
        to_rational(x)
    except ValueError:
        return False
    return True


def square_as_rational(x):
    """For a real single-term surd ``q*sqrt(d)`` return the rational ``q^2*d``."""
    if not x:
        return Fraction(0)
    v, d, p, k = single_term(x)
    if p or k or v.b:
        raise ValueError("not a real surd: %s" % render(x))
    return v.re * v.re * d


def sign(x):
    """Sign of a real single-term surd."""
    if not x:
        return 0
    v, d, p, k = single_term(x)
    if v.b:
        raise ValueError("sign of non-real coefficient %s" % render(x))
    return 1 if v.a > 0 else -1


def substitute_s(x, s_value):
    """Replace the radius symbol by ``s_value`` (a Coefficient) in ``x``.

    Negative powers of ``s`` require ``s_value`` to be single-term.
    """
    out = ZERO
    for (d, p, k), v in x.terms.items():
        base = Coefficient({(d, p, 0): v})
        if k >= 0:
            out = out + base * s_value ** k
        else:
            out = out + base * s_value.inverse() ** (-k)
    return out


# -- rendering ---------------------------------------------------------------

def _frac_text(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _pi_text(p):
    if p % 2 == 0:
        e = p // 2
        if e == 1:
            return "pi"
        return "pi^%d" % e if e > 0 else "pi^(%d)" % e
    return "pi^(%d/2)" % p


def _s_text(k):
    if k == 1:
        return "s"
    return "s^%d" % k if k > 0 else "s^(%d)" % k


def _term_text(v, d, p, k):
    """Render one term; returns (negative, text) with the sign split off."""
    factors = []
    if d != 1:
        factors.append("sqrt(%d)" % d)
    if p:
        factors.append(_pi_text(p))
    if k:
        factors.append(_s_text(k))
    re, im = v.re, v.im
    neg = False
    if im == 0:
        if re < 0:
            neg, re = True, -re
        lead = [] if (re == 1 and factors) else [_frac_text(re)]
    elif re == 0:
        if im < 0:
            neg, im = True, -im
        lead = ["i"] if im == 1 else ["i", _frac_text(im)]
    else:
        lead = ["(%s %s i*%s)" % (_frac_text(re) if re >= 0 else "-" + _frac_text(-re),
                                   "+" if im > 0 else "-", _frac_text(abs(im)))]
    return neg, "*".join(lead + factors)


def render(x):
    """Canonical text form, e.g. ``3/4*sqrt(6)*pi^(-1/2)*s^2 + i*1/2``."""
    if not x:
        return "0"
    parts = []
    for key in sorted(x.terms, reverse=True):
        neg, text = _term_text(x.terms[key], *key)
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


def render_surd(x):
    """Render a real single-term surd as ``sqrt(q)`` / ``-sqrt(q)`` / integer."""
    if not x:
        return "0"
    sq = square_as_rational(x)
    sg = "-" if sign(x) < 0 else ""
    r = isqrt(sq.numerator)
    if r * r == sq.numerator:
        t = isqrt(sq.denominator)
        if t * t == sq.denominator:
            return sg + _frac_text(Fraction(r, t))
    return "%ssqrt(%s)" % (sg, _frac_text(sq))


def approx(x, s=1.0):
    """Complex float value (cross-checks only; never used in verification)."""
    import math
    total = 0j
    for (d, p, k), v in x.terms.items():
        total += complex(float(v.re), float(v.im)) * math.sqrt(d) * math.pi ** (p / 2) * s ** k
    return total
