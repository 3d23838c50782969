"""Polynomials in the spin components S1, S2, S3 and the sphere Poisson algebra.

``Poly3`` is a plain polynomial on R^3.  ``SpherePoly`` is its class modulo
``S1^2 + S2^2 + S3^2 - s^2``, stored in the canonical form where every
monomial has ``S3`` exponent at most one.
"""
from functools import lru_cache
from math import factorial

from .exactnum import Coefficient, ONE
from .mpoly import MPoly

__all__ = [
    "Poly3", "SpherePoly", "S1", "S2", "S3", "canonicalize", "poisson",
    "poisson_raw", "rot_action", "degree", "sphere_relation",
]


def shift_s(c, k):
    """Multiply a coefficient by ``s^k``."""
    if not k:
        return c
    return Coefficient({(d, p, kk + k): v for (d, p, kk), v in c.terms.items()})


class Poly3(MPoly):
    """Polynomial in S1, S2, S3 over the surd ring (a representative)."""

    VARS = ("S1", "S2", "S3")
    _zero_exp = (0, 0, 0)
    __slots__ = ()

    def _result_cls(self, other):
        if isinstance(other, SpherePoly):
            return SpherePoly
        return type(self)

    def as_sphere(self):
        return canonicalize(self)

    def as_poly3(self):
        return Poly3._from_terms(dict(self.terms))


class SpherePoly(Poly3):
    """Canonical representative of a class in the sphere Poisson algebra."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        self.terms = _canonical_terms(self.terms)

    @classmethod
    def _from_terms(cls, terms):
        p = MPoly._from_terms.__func__(cls, terms)
        if any(e[2] > 1 for e in terms):
            p.terms = _canonical_terms(terms)
        return p

    def _result_cls(self, other):
        return SpherePoly


@lru_cache(maxsize=None)
def _relation_power(q):
    """Terms of (s^2 - S1^2 - S2^2)^q as (multiplier, s-exponent, e1, e2)."""
    out = []
    for u in range(q + 1):
        for v in range(q - u + 1):
            w = q - u - v
            mult = factorial(q) // (factorial(u) * factorial(v) * factorial(w))
            if (v + w) & 1:
                mult = -mult
            out.append((mult, 2 * u, 2 * v, 2 * w))
    return tuple(out)


def _canonical_terms(terms):
    if all(e[2] <= 1 for e in terms):
        return terms
    out = {}
    for (a, b, c), v in terms.items():
        if c <= 1:
            w = out.get((a, b, c))
            out[(a, b, c)] = v if w is None else w + v
            continue
        eps = c & 1
        for mult, sk, e1, e2 in _relation_power(c >> 1):
            key = (a + e1, b + e2, eps)
            t = shift_s(v, sk) * mult
            w = out.get(key)
            out[key] = t if w is None else w + t
    return {e: v for e, v in out.items() if v}


def canonicalize(p):
    """Reduce a Poly3 modulo the sphere relation to the S3-degree <= 1 form."""
    return SpherePoly._from_terms(_canonical_terms(dict(p.terms)))


S1 = SpherePoly.var(0)
S2 = SpherePoly.var(1)
S3 = SpherePoly.var(2)


def sphere_relation():
    """The Poly3 ``S1^2 + S2^2 + S3^2 - s^2`` generating the sphere ideal."""
    from .exactnum import s_power
    x, y, z = (Poly3.var(i) for i in range(3))
    return x * x + y * y + z * z - Poly3.const(s_power(2))


_EPS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def poisson_raw(f, g):
    """sum eps_ijk S_i (d_j f)(d_k g) on representatives, no reduction.

    Returns the same polynomial class as ``f`` (so a Poly3 stays a Poly3).
    """
    df = [f.diff(i) for i in range(3)]
    dg = [g.diff(i) for i in range(3)]
    cls = Poly3 if not isinstance(f, SpherePoly) else SpherePoly
    out = cls.zero()
    acc = {}
    from ._backend import kernels
    for i, j, k in _EPS:
        inner = kernels.poly_add(kernels.poly_mul(df[j].terms, dg[k].terms),
                                 kernels.poly_mul(df[k].terms, dg[j].terms), -1)
        if not inner:
            continue
        shifted = {}
        for e, c in inner.items():
            e2 = list(e)
            e2[i] += 1
            shifted[tuple(e2)] = c
        acc = kernels.poly_add(acc, shifted)
    out = cls._from_terms(acc) if cls is Poly3 else canonicalize(Poly3._from_terms(acc))
    return out


def poisson(f, g):
    """Poisson bracket of sphere polynomials, canonicalized."""
    return canonicalize(poisson_raw(Poly3._from_terms(f.terms), Poly3._from_terms(g.terms)))


def rot_action(i, p):
    """Infinitesimal rotation about axis ``i`` (1, 2 or 3): ``{S_i, p}``."""
    if i not in (1, 2, 3):
        raise ValueError("axis index must be 1, 2 or 3, got %r" % (i,))
    return poisson(SpherePoly.var(i - 1), p)


def degree(p):
    """Harmonic degree of a sphere polynomial; -1 for the zero class."""
    from .harmonics import harmonic_decompose
    comps = harmonic_decompose(p).components
    return max((l for l, c in comps.items() if c), default=-1)


def one():
    return SpherePoly.const(ONE)
