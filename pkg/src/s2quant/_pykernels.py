"""Pure-Python arithmetic kernels.

This is the reference implementation of the hot inner loops: Gaussian
rationals, surd-ring coefficients and sparse polynomial convolution.
``_ckernels.pyx`` mirrors this module name for name; ``_backend`` picks one
at import time.
"""
from fractions import Fraction
from math import gcd

BACKEND = "python"


def _split(x):
    """Return (numerator, denominator) of an int or Fraction."""
    if isinstance(x, int):
        return x, 1
    if isinstance(x, Fraction):
        return x.numerator, x.denominator
    raise TypeError("expected int or Fraction, got %r" % type(x).__name__)


class GaussRational:
    """Exact complex rational ``(a + b*i) / d`` in lowest terms, ``d > 0``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        rn, rd = _split(re)
        imn, imd = _split(im)
        d = rd * imd // gcd(rd, imd)
        _set(self, rn * (d // rd), imn * (d // imd), d)

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __neg__(self):
        return _raw(-self.a, -self.b, self.d)

    def __add__(self, other):
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if self.d == other.d:
            return _make(self.a + other.a, self.b + other.b, self.d)
        return _make(self.a * other.d + other.a * self.d,
                     self.b * other.d + other.b * self.d,
                     self.d * other.d)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _raw(0, 0, 1)
            return _make(self.a * other, self.b * other, self.d)
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return _make(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self.d * other.d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        return _make(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def conjugate(self):
        return _raw(self.a, -self.b, self.d)

    def is_real(self):
        return self.b == 0

    def __repr__(self):
        return "GaussRational(%s, %s)" % (self.re, self.im)

    def __reduce__(self):
        return (GaussRational, (self.re, self.im))


def _set(z, a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    z.a, z.b, z.d = a, b, d


def _make(a, b, d):
    z = GaussRational.__new__(GaussRational)
    _set(z, a, b, d)
    return z


def _raw(a, b, d):
    z = GaussRational.__new__(GaussRational)
    z.a, z.b, z.d = a, b, d
    return z


def _coerce(x):
    if isinstance(x, int):
        return _raw(x, 0, 1)
    if isinstance(x, Fraction):
        return _raw(x.numerator, 0, x.denominator)
    return None


def gauss(re=0, im=0):
    return GaussRational(re, im)


ZERO_G = _raw(0, 0, 1)
ONE_G = _raw(1, 0, 1)
I_G = _raw(0, 1, 1)


def radical_product(d1, d2):
    """sqrt(d1)*sqrt(d2) = g*sqrt(d) for squarefree d1, d2; returns (g, d)."""
    g = gcd(d1, d2)
    return g, (d1 // g) * (d2 // g)


class Coefficient:
    """Finite sum of ``value * sqrt(d) * pi^(p/2) * s^k`` terms.

    ``terms`` maps keys ``(d, p, k)`` (``d`` squarefree, positive) to nonzero
    GaussRational values.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    @staticmethod
    def _wrap(terms):
        c = Coefficient.__new__(Coefficient)
        c.terms = terms
        c._hash = None
        return c

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Coefficient):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.terms == _scalar_terms(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return Coefficient._wrap({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            other = as_coefficient(other)
            if other is None:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            if w is None:
                out[k] = v
            else:
                w = w + v
                if w:
                    out[k] = w
                else:
                    del out[k]
        return Coefficient._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Coefficient):
            other = as_coefficient(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Fraction, GaussRational)):
                return self.scale(other)
            return NotImplemented
        return Coefficient._wrap(coeff_mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, g):
        if not isinstance(g, GaussRational):
            g = _coerce(g)
        if not g:
            return Coefficient._wrap({})
        return Coefficient._wrap({k: v * g for k, v in self.terms.items()})

    def conjugate(self):
        return Coefficient._wrap({k: v.conjugate() for k, v in self.terms.items()})

    def is_single_term(self):
        return len(self.terms) == 1

    def inverse(self):
        """Inverse of a single-term coefficient ``q*sqrt(d)*pi^(p/2)*s^k``."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(
                "only single-term coefficients are invertible (got %d terms)"
                % len(self.terms))
        (d, p, k), v = next(iter(self.terms.items()))
        return Coefficient._wrap({(d, -p, -k): v.inverse() * Fraction(1, d)})

    def __truediv__(self, other):
        if isinstance(other, Coefficient):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if isinstance(other, GaussRational):
            return self.scale(other.inverse())
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ONE_C
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __repr__(self):
        from .exactnum import render
        return "Coefficient(%r)" % render(self)

    def __str__(self):
        from .exactnum import render
        return render(self)

    def __reduce__(self):
        return (Coefficient, (self.terms,))


def _scalar_terms(x):
    g = x if isinstance(x, GaussRational) else _coerce(x)
    return {(1, 0, 0): g} if g else {}


def as_coefficient(x):
    if isinstance(x, Coefficient):
        return x
    if isinstance(x, (int, Fraction, GaussRational)):
        return Coefficient._wrap(_scalar_terms(x))
    return None


ZERO_C = Coefficient._wrap({})
ONE_C = Coefficient._wrap({(1, 0, 0): ONE_G})


def coeff_mul_terms(x, y):
    """Product of two coefficient term maps with radicand reduction."""
    out = {}
    for (d1, p1, k1), v1 in x.items():
        for (d2, p2, k2), v2 in y.items():
            if d1 == 1:
                g, d = 1, d2
            elif d2 == 1:
                g, d = 1, d1
            else:
                g = gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
            v = v1 * v2
            if g != 1:
                v = v * g
            key = (d, p1 + p2, k1 + k2)
            w = out.get(key)
            out[key] = v if w is None else w + v
    return {k: v for k, v in out.items() if v}


def poly_add(x, y, sign=1):
    """x + sign*y for term maps {exponent tuple: ring element}."""
    out = dict(x)
    for e, v in y.items():
        if sign < 0:
            v = -v
        w = out.get(e)
        if w is None:
            out[e] = v
        else:
            w = w + v
            if w:
                out[e] = w
            else:
                del out[e]
    return out


def poly_mul(x, y):
    """Sparse convolution of two term maps keyed by exponent tuples."""
    out = {}
    for ex, cx in x.items():
        for ey, cy in y.items():
            e = tuple([a + b for a, b in zip(ex, ey)])
            v = cx * cy
            w = out.get(e)
            out[e] = v if w is None else w + v
    return {e: v for e, v in out.items() if v}


def poly_scale(x, c):
    """Multiply every value of a term map by the ring element ``c``."""
    out = {}
    for e, v in x.items():
        w = v * c
        if w:
            out[e] = w
    return out
