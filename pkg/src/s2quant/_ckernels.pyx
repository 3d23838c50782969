# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled arithmetic kernels; same names and semantics as ``_pykernels``."""
from fractions import Fraction
from math import gcd

BACKEND = "cython"

cdef object _Fraction = Fraction


cdef inline tuple _split(object x):
    if isinstance(x, int):
        return x, 1
    if isinstance(x, _Fraction):
        return x.numerator, x.denominator
    raise TypeError("expected int or Fraction, got %r" % type(x).__name__)


cdef class GaussRational:
    """Exact complex rational ``(a + b*i) / d`` in lowest terms, ``d > 0``."""

    cdef public object a
    cdef public object b
    cdef public object d

    def __init__(self, re=0, im=0):
        rn, rd = _split(re)
        imn, imd = _split(im)
        d = rd * imd // gcd(rd, imd)
        _set(self, rn * (d // rd), imn * (d // imd), d)

    @property
    def re(self):
        return _Fraction(self.a, self.d)

    @property
    def im(self):
        return _Fraction(self.b, self.d)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            o = <GaussRational>other
            return self.a == o.a and self.b == o.b and self.d == o.d
        if isinstance(other, (int, _Fraction)):
            return self.b == 0 and _Fraction(self.a, self.d) == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        if self.b == 0:
            return hash(_Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __neg__(self):
        return _raw(-self.a, -self.b, self.d)

    def __add__(self, other):
        cdef GaussRational x, y
        x = self
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        y = <GaussRational>other
        if x.d == y.d:
            return _make(x.a + y.a, x.b + y.b, x.d)
        return _make(x.a * y.d + y.a * x.d, x.b * y.d + y.b * x.d, x.d * y.d)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef GaussRational x, y
        x = self
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        y = <GaussRational>other
        if x.d == y.d:
            return _make(x.a - y.a, x.b - y.b, x.d)
        return _make(x.a * y.d - y.a * x.d, x.b * y.d - y.b * x.d, x.d * y.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        cdef GaussRational x, y
        x = self
        if isinstance(other, int):
            if other == 0:
                return _raw(0, 0, 1)
            return _make(x.a * other, x.b * other, x.d)
        if not isinstance(other, GaussRational):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        y = <GaussRational>other
        return _make(x.a * y.a - x.b * y.b, x.a * y.b + y.a * x.b, x.d * y.d)

    def __rmul__(self, other):
        return self.__mul__(other)

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


cdef inline void _set(GaussRational z, object a, object b, object d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(a, b, d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    z.a = a
    z.b = b
    z.d = d


cdef inline GaussRational _make(object a, object b, object d):
    cdef GaussRational z = GaussRational.__new__(GaussRational)
    _set(z, a, b, d)
    return z


cdef inline GaussRational _raw(object a, object b, object d):
    cdef GaussRational z = GaussRational.__new__(GaussRational)
    z.a = a
    z.b = b
    z.d = d
    return z


cdef object _coerce(object x):
    if isinstance(x, int):
        return _raw(x, 0, 1)
    if isinstance(x, _Fraction):
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


cdef class Coefficient:
    """Finite sum of ``value * sqrt(d) * pi^(p/2) * s^k`` terms."""

    cdef public dict terms
    cdef object _hash

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    @staticmethod
    def _wrap(dict terms):
        return _wrapc(terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Coefficient):
            return self.terms == (<Coefficient>other).terms
        if isinstance(other, (int, _Fraction, GaussRational)):
            return self.terms == _scalar_terms(other)
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        if r is NotImplemented:
            return r
        return not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return _wrapc({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            other = as_coefficient(other)
            if other is None:
                return NotImplemented
        return _wrapc(_dict_add(self.terms, (<Coefficient>other).terms, 1))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if not isinstance(other, Coefficient):
            other = as_coefficient(other)
            if other is None:
                return NotImplemented
        return _wrapc(_dict_add(self.terms, (<Coefficient>other).terms, -1))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, _Fraction, GaussRational)):
                return self.scale(other)
            return NotImplemented
        return _wrapc(coeff_mul_terms(self.terms, (<Coefficient>other).terms))

    def __rmul__(self, other):
        if isinstance(other, (int, _Fraction, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, g):
        if not isinstance(g, GaussRational):
            g = _coerce(g)
        if not g:
            return _wrapc({})
        return _wrapc({k: v * g for k, v in self.terms.items()})

    def conjugate(self):
        return _wrapc({k: v.conjugate() for k, v in self.terms.items()})

    def is_single_term(self):
        return len(self.terms) == 1

    def inverse(self):
        """Inverse of a single-term coefficient ``q*sqrt(d)*pi^(p/2)*s^k``."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(
                "only single-term coefficients are invertible (got %d terms)"
                % len(self.terms))
        (d, p, k), v = next(iter(self.terms.items()))
        return _wrapc({(d, -p, -k): v.inverse() * _Fraction(1, d)})

    def __truediv__(self, other):
        if isinstance(other, Coefficient):
            return self * other.inverse()
        if isinstance(other, (int, _Fraction)):
            other = _coerce(other)
        if isinstance(other, GaussRational):
            return self.scale(other.inverse())
        return NotImplemented

    def __pow__(self, n, mod=None):
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


cdef inline Coefficient _wrapc(dict terms):
    cdef Coefficient c = Coefficient.__new__(Coefficient)
    c.terms = terms
    c._hash = None
    return c


cdef dict _dict_add(dict x, dict y, int sign):
    if not y:
        return x
    if not x and sign > 0:
        return y
    cdef dict out = dict(x)
    for k, v in y.items():
        if sign < 0:
            v = -v
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


cdef dict _scalar_terms(object x):
    g = x if isinstance(x, GaussRational) else _coerce(x)
    return {(1, 0, 0): g} if g else {}


def as_coefficient(x):
    if isinstance(x, Coefficient):
        return x
    if isinstance(x, (int, _Fraction, GaussRational)):
        return _wrapc(_scalar_terms(x))
    return None


ZERO_C = _wrapc({})
ONE_C = _wrapc({(1, 0, 0): ONE_G})


def coeff_mul_terms(dict x, dict y):
    """Product of two coefficient term maps with radicand reduction."""
    cdef dict out = {}
    cdef tuple kx, ky
    for kx, v1 in x.items():
        d1, p1, k1 = kx
        for ky, v2 in y.items():
            d2, p2, k2 = ky
            if d1 == 1:
                g = 1
                d = d2
            elif d2 == 1:
                g = 1
                d = d1
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


def poly_add(dict x, dict y, sign=1):
    """x + sign*y for term maps {exponent tuple: ring element}."""
    cdef dict out = dict(x)
    cdef bint neg = sign < 0
    for e, v in y.items():
        if neg:
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


cdef inline tuple _add_exps(tuple ex, tuple ey):
    cdef Py_ssize_t n = len(ex), i
    if n == 2:
        return (<long>ex[0] + <long>ey[0], <long>ex[1] + <long>ey[1])
    if n == 3:
        return (<long>ex[0] + <long>ey[0], <long>ex[1] + <long>ey[1], <long>ex[2] + <long>ey[2])
    return tuple([<long>ex[i] + <long>ey[i] for i in range(n)])


def poly_mul(dict x, dict y):
    """Sparse convolution of two term maps keyed by exponent tuples."""
    cdef dict out = {}
    cdef tuple ex, ey, e
    for ex, cx in x.items():
        for ey, cy in y.items():
            e = _add_exps(ex, ey)
            v = cx * cy
            w = out.get(e)
            out[e] = v if w is None else w + v
    return {e: v for e, v in out.items() if v}


def poly_scale(dict x, c):
    """Multiply every value of a term map by the ring element ``c``."""
    cdef dict out = {}
    for e, v in x.items():
        w = v * c
        if w:
            out[e] = w
    return out
