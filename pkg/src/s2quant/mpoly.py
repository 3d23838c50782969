"""Sparse commutative multivariate polynomials over an exact coefficient ring.

Subclasses fix the variable names and the coefficient ring; the term map
``{exponent tuple: coefficient}`` never stores zeros.
"""
from fractions import Fraction

from ._backend import kernels
from .exactnum import Coefficient, GaussRational, as_coefficient, render

_poly_mul = kernels.poly_mul
_poly_add = kernels.poly_add
_poly_scale = kernels.poly_scale


class MPoly:
    VARS = ()
    _zero_exp = ()

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {self._zero_exp: self._coerce(terms)}
        self.terms = {e: self._coerce(c) for e, c in terms.items() if c}
        self._hash = None

    # -- ring hooks --------------------------------------------------------
    @staticmethod
    def _coerce(c):
        out = as_coefficient(c)
        if out is None:
            raise TypeError("cannot use %r as a coefficient" % (c,))
        return out

    @classmethod
    def _is_scalar(cls, x):
        return isinstance(x, (int, Fraction, GaussRational, Coefficient))

    @classmethod
    def _from_terms(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._from_terms({})

    @classmethod
    def const(cls, c):
        c = cls._coerce(c)
        return cls._from_terms({cls._zero_exp: c} if c else {})

    @classmethod
    def var(cls, i, power=1):
        e = [0] * len(cls.VARS)
        e[i] = power
        return cls._from_terms({tuple(e): cls._coerce(1)})

    @classmethod
    def monomial(cls, exps, c=1):
        c = cls._coerce(c)
        return cls._from_terms({tuple(exps): c} if c else {})

    # -- arithmetic --------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        if self._is_scalar(other):
            return type(self).const(other)
        return None

    def _result_cls(self, other):
        return type(self)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._result_cls(o)._from_terms(_poly_add(self.terms, o.terms))

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._result_cls(o)._from_terms(_poly_add(self.terms, o.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return type(self)._from_terms({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return self._result_cls(other)._from_terms(_poly_mul(self.terms, other.terms))
        if self._is_scalar(other):
            c = self._coerce(other) if not isinstance(other, (int, Fraction)) else other
            return type(self)._from_terms(_poly_scale(self.terms, c))
        return NotImplemented

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = type(self).const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- structure ---------------------------------------------------------
    def coeff(self, exps):
        c = self.terms.get(tuple(exps))
        return c if c is not None else self._coerce(0)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_parts(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {n: type(self)._from_terms(t) for n, t in sorted(parts.items())}

    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            n = e[i]
            if n:
                f = list(e)
                f[i] = n - 1
                out[tuple(f)] = c * n
        return type(self)._from_terms(out)

    def conjugate(self):
        return type(self)._from_terms({e: c.conjugate() for e, c in self.terms.items()})

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return type(self)._from_terms(out)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.coeff(self._zero_exp)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    # -- text --------------------------------------------------------------
    @classmethod
    def _coeff_text(cls, c):
        return render(c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            mono = "*".join(
                v if n == 1 else "%s^%d" % (v, n) for v, n in zip(self.VARS, e) if n)
            ctext = self._coeff_text(self.terms[e])
            if not mono:
                parts.append(ctext if len(ctext.split()) == 1 else "(%s)" % ctext)
            elif ctext == "1":
                parts.append(mono)
            elif ctext == "-1":
                parts.append("-" + mono)
            elif len(ctext.split()) == 1:
                parts.append("%s*%s" % (ctext, mono))
            else:
                parts.append("(%s)*%s" % (ctext, mono))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self)

    def __reduce__(self):
        return (type(self), (self.terms,))


class GaussMPoly(MPoly):
    """MPoly variant whose coefficients are bare Gaussian rationals."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, GaussRational):
            return c
        if isinstance(c, (int, Fraction)):
            return GaussRational(c)
        raise TypeError("cannot use %r as a Gaussian-rational coefficient" % (c,))

    @classmethod
    def _is_scalar(cls, x):
        return isinstance(x, (int, Fraction, GaussRational))

    @classmethod
    def _coeff_text(cls, c):
        return render(as_coefficient(c))
