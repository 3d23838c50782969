"""Spin-j matrices and the parameterized quantization rules on degree <= 3.

Matrices are sparse row maps over ``PolyAC`` (polynomials in the real
constants a, c with surd-ring coefficients), so every identity is checked
identically in a and c.  The basis is ordered |j,-j>, ..., |j,j>.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .exactnum import Coefficient, GaussRational, sqrt_rational
from .mpoly import MPoly
from .sphere_poly import Poly3, canonicalize, poisson, poisson_raw

__all__ = [
    "TwoJ", "PolyAC", "SpinMatrix", "spin_matrices", "quantize_repr", "quantize_monomial",
    "representative_consistency", "matrix_element", "Bracket", "classical_value",
    "verify_bracket_identity", "projector_vn_forms", "P2", "P0", "P3", "P1",
    "substitute_s2", "derive_by_equivariance", "commutator", "jprod", "quantum_value", "derivation_chain",
]

I_UNIT = GaussRational(0, 1)


@dataclass(frozen=True)
class TwoJ:
    """Twice the spin quantum number."""

    twoj: int

    def __post_init__(self):
        if not isinstance(self.twoj, int) or self.twoj < 0:
            raise ValueError("2j must be a nonnegative integer, got %r" % (self.twoj,))

    @classmethod
    def parse(cls, text):
        """Read ``"3/2"``, ``"2"`` or ``"1.5"`` style spin labels."""
        j = Fraction(str(text))
        if j < 0 or (2 * j).denominator != 1:
            raise ValueError("j must be a nonnegative half-integer, got %s" % text)
        return cls(int(2 * j))

    @property
    def j(self):
        return Fraction(self.twoj, 2)

    @property
    def dim(self):
        return self.twoj + 1

    @property
    def kappa(self):
        """j(j+1)."""
        j = self.j
        return j * (j + 1)

    def ms(self):
        return [Fraction(i - self.twoj, 2) + 0 for i in range(0, 2 * self.twoj + 1, 2)]

    def index(self, m):
        m = Fraction(m)
        i = m + self.j
        if i.denominator != 1 or not 0 <= i <= self.twoj:
            raise ValueError("m=%s out of range for j=%s" % (m, self.j))
        return int(i)

    def __str__(self):
        j = self.j
        return str(j.numerator) if j.denominator == 1 else "%d/%d" % (j.numerator, j.denominator)


def _as_twoj(j):
    return j if isinstance(j, TwoJ) else TwoJ(j)


class PolyAC(MPoly):
    """Polynomial in the quantization constants a, c over the surd ring."""

    VARS = ("a", "c")
    _zero_exp = (0, 0)
    __slots__ = ()


A = PolyAC.var(0)
C = PolyAC.var(1)


def _pac(x):
    if isinstance(x, PolyAC):
        return x
    return PolyAC.const(x)


class SpinMatrix:
    """Square matrix with PolyAC entries, stored as a list of sparse rows."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim, rows=None):
        self.dim = dim
        self.rows = rows if rows is not None else [dict() for _ in range(dim)]

    @classmethod
    def identity(cls, dim, value=1):
        v = _pac(value)
        return cls(dim, [{i: v} if v else {} for i in range(dim)])

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    def entry(self, r, c):
        return self.rows[r].get(c, PolyAC.zero())

    def _check(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch %d vs %d" % (self.dim, other.dim))

    def __add__(self, other):
        if not isinstance(other, SpinMatrix):
            return NotImplemented
        self._check(other)
        rows = []
        for ra, rb in zip(self.rows, other.rows):
            out = dict(ra)
            for c, v in rb.items():
                w = out.get(c)
                w = v if w is None else w + v
                if w:
                    out[c] = w
                else:
                    out.pop(c, None)
            rows.append(out)
        return SpinMatrix(self.dim, rows)

    def __neg__(self):
        return SpinMatrix(self.dim, [{c: -v for c, v in r.items()} for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SpinMatrix):
            self._check(other)
            rows = []
            orows = other.rows
            for ra in self.rows:
                acc = {}
                for k, a in ra.items():
                    for c, b in orows[k].items():
                        t = a * b
                        w = acc.get(c)
                        acc[c] = t if w is None else w + t
                rows.append({c: v for c, v in acc.items() if v})
            return SpinMatrix(self.dim, rows)
        if isinstance(other, (int, Fraction, GaussRational, Coefficient, PolyAC)):
            rows = []
            for r in self.rows:
                out = {}
                for c, v in r.items():
                    w = v * other
                    if w:
                        out[c] = w
                rows.append(out)
            return SpinMatrix(self.dim, rows)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, Coefficient, PolyAC)):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        out = SpinMatrix.identity(self.dim)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SpinMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, tuple(frozenset(r.items()) for r in self.rows)))

    def is_zero(self):
        return not any(self.rows)

    def __bool__(self):
        return not self.is_zero()

    def adjoint(self):
        """Conjugate transpose, treating a and c as real symbols."""
        rows = [dict() for _ in range(self.dim)]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                rows[c][r] = v.conjugate()
        return SpinMatrix(self.dim, rows)

    def map_entries(self, fn):
        rows = []
        for r in self.rows:
            out = {}
            for c, v in r.items():
                w = fn(v)
                if w:
                    out[c] = w
            rows.append(out)
        return SpinMatrix(self.dim, rows)

    def proportionality(self, basis):
        """Return ``lam`` (PolyAC) with ``self == lam * basis``, or None."""
        if basis.is_zero():
            return PolyAC.zero() if self.is_zero() else None
        for r, row in enumerate(basis.rows):
            for c, b in row.items():
                if b.is_constant():
                    inv = b.constant_term().inverse()
                    lam = self.entry(r, c) * inv
                    return lam if self == basis * lam else None
        return None

    def __repr__(self):
        return "SpinMatrix(dim=%d, nnz=%d)" % (self.dim, sum(len(r) for r in self.rows))

    def to_text(self):
        return "\n".join(
            "[" + ", ".join(str(self.entry(r, c)) for c in range(self.dim)) + "]"
            for r in range(self.dim))


def commutator(x, y):
    return x * y - y * x


@lru_cache(maxsize=None)
def spin_matrices(j):
    """(J1, J2, J3) for spin j (given as TwoJ or 2j)."""
    tj = _as_twoj(j)
    n = tj.dim
    jj = tj.j
    J3 = SpinMatrix(n, [{i: PolyAC.const(m)} if m else {} for i, m in enumerate(tj.ms())])
    plus = SpinMatrix(n)
    for i, m in enumerate(tj.ms()[:-1]):
        # J+ |m> = sqrt((j-m)(j+m+1)) |m+1>
        plus.rows[i + 1][i] = PolyAC.const(sqrt_rational((jj - m) * (jj + m + 1)))
    minus = plus.adjoint()
    half = Fraction(1, 2)
    J1 = (plus + minus) * half
    J2 = (plus - minus) * GaussRational(0, Fraction(-1, 2))
    return J1, J2, J3


@lru_cache(maxsize=None)
def _products(twoj, idx):
    J = spin_matrices(twoj)
    out = SpinMatrix.identity(twoj + 1)
    for i in idx:
        out = out * J[i]
    return out


def jprod(j, *idx):
    """Product J_{i1} J_{i2} ... with 0-based axis indices (cached)."""
    return _products(_as_twoj(j).twoj, tuple(idx))


@lru_cache(maxsize=None)
def quantize_monomial(j, exps):
    """Quantization rule for the monomial S1^n1 S2^n2 S3^n3 (degree <= 3)."""
    tj = _as_twoj(j)
    n = tj.dim
    deg = sum(exps)
    idx = [i for i in range(3) for _ in range(exps[i])]
    if deg == 0:
        return SpinMatrix.identity(n)
    if deg == 1:
        return jprod(tj, idx[0])
    if deg == 2:
        i, l = idx
        if i == l:
            return jprod(tj, i, i) * A + SpinMatrix.identity(n, C)
        return (jprod(tj, i, l) + jprod(tj, l, i)) * (A * Fraction(1, 2))
    if deg == 3:
        if len(set(idx)) == 1:
            i = idx[0]
            return jprod(tj, i, i, i) * A + jprod(tj, i) * C
        if len(set(idx)) == 2:
            i = [x for x in idx if idx.count(x) == 2][0]
            l = [x for x in idx if idx.count(x) == 1][0]
            return jprod(tj, i, l, i) * A + jprod(tj, l) * ((A + C) * Fraction(1, 3))
        sq = jprod(tj, 0, 0) - jprod(tj, 1, 1) + jprod(tj, 2, 2)
        # a/(2i) = -a*i/2
        return jprod(tj, 0, 1, 2) * A + sq * (A * GaussRational(0, Fraction(-1, 2)))
    raise ValueError("no quantization rule for degree %d monomials" % deg)


def quantize_repr(p, j):
    """Apply the degree <= 3 quantization rules to the representative ``p``."""
    tj = _as_twoj(j)
    out = SpinMatrix.zero(tj.dim)
    for e, c in p.terms.items():
        if sum(e) > 3:
            raise ValueError("cannot quantize monomial of degree %d" % sum(e))
        out = out + quantize_monomial(tj, e) * c
    return out


def representative_consistency(p, q, j):
    """quantize_repr(p) - quantize_repr(q) for two representatives of one class."""
    if canonicalize(p) != canonicalize(q):
        raise ValueError("representatives are not equivalent modulo the sphere relation")
    return quantize_repr(p, j) - quantize_repr(q, j)


def matrix_element(M, m1, m2, j=None):
    """<j,m1| M |j,m2>."""
    tj = _as_twoj(j) if j is not None else TwoJ(M.dim - 1)
    return M.entry(tj.index(m1), tj.index(m2))


def substitute_s2(x, value):
    """Replace s^2 by the PolyAC ``value`` throughout a PolyAC or SpinMatrix."""
    if isinstance(x, SpinMatrix):
        return x.map_entries(lambda v: substitute_s2(v, value))
    out = PolyAC.zero()
    powers = {0: PolyAC.const(1)}
    for e, c in x.terms.items():
        for (d, p, k), v in c.terms.items():
            if k < 0 or k & 1:
                raise ValueError("odd or negative power of s cannot be rewritten via s^2")
            h = k // 2
            if h not in powers:
                powers[h] = value ** h
            out = out + PolyAC.monomial(e, Coefficient({(d, p, 0): v})) * powers[h]
    return out


# -- bracket identities --------------------------------------------------------

@dataclass(frozen=True)
class Bracket:
    """Formal Poisson bracket {f, g}; f and g may themselves be Brackets."""

    f: object
    g: object


def classical_value(x):
    """Evaluate a Poly3 or nested Bracket classically (as a sphere class)."""
    if isinstance(x, Bracket):
        return poisson(classical_value(x.f), classical_value(x.g))
    return canonicalize(x)


def quantum_value(x, j):
    """Quantize a Poly3 (by the rules) or a Bracket (as -i times the commutator)."""
    if isinstance(x, Bracket):
        return commutator(quantum_value(x.f, j), quantum_value(x.g, j)) * GaussRational(0, -1)
    return quantize_repr(x, j)


def verify_bracket_identity(terms, rhs, j):
    """Residual sum coeff*(-i)[Q f, Q g] - Q(rhs) of a classical bracket identity.

    ``terms`` is a list of ``(coefficient, f, g)``; ``f``/``g`` are Poly3 or
    nested Bracket values.  Raises ValueError if the classical identity
    sum coeff*{f, g} = rhs does not hold exactly.
    """
    lhs = None
    for coeff, f, g in terms:
        t = classical_value(Bracket(f, g)) * coeff
        lhs = t if lhs is None else lhs + t
    if lhs is None or lhs != canonicalize(rhs):
        raise ValueError("classical identity does not hold")
    tj = _as_twoj(j)
    acc = SpinMatrix.zero(tj.dim)
    for coeff, f, g in terms:
        acc = acc + quantum_value(Bracket(f, g), tj) * coeff
    return acc - quantize_repr(rhs, tj)


# -- projector forms ------------------------------------------------------------

def _d(a, b):
    return 1 if a == b else 0


def P2(m, n):
    i, l = m
    p, q = n
    return Fraction(_d(i, p) * _d(l, q) + _d(i, q) * _d(l, p), 2) - Fraction(_d(i, l) * _d(p, q), 3)


def P0(m):
    i, l = m
    return Fraction(_d(i, l), 3)


def P3(m, n):
    p, q, r = n
    total = Fraction(0)
    for i, k, l in permutations(m):
        total += Fraction(_d(i, p) * _d(k, q) * _d(l, r), 6)
        total -= Fraction(_d(i, k) * (_d(p, q) * _d(l, r) + _d(p, r) * _d(l, q)
                                      + _d(q, r) * _d(l, p)), 30)
    return total


def P1(m, p):
    i, k, l = m
    return Fraction(_d(i, k) * _d(l, p) + _d(k, l) * _d(i, p) + _d(l, i) * _d(k, p), 15)


def _symmetrized(tj, idx):
    perms = list(permutations(idx))
    out = SpinMatrix.zero(tj.dim)
    for p in perms:
        out = out + jprod(tj, *p)
    return out * Fraction(1, len(perms))


def projector_vn_forms(kind, m, j):
    """Evaluate the projector reconstruction of Q(S^m) for |m| = 2 or 3.

    ``m`` is a multi-index (n1, n2, n3).  The free constant b is eliminated
    by b = 3c + a j(j+1) (quadratic) or b = 5c + 3a(j(j+1) - 1/3) (cubic).
    """
    tj = _as_twoj(j)
    idx = tuple(i for i in range(3) for _ in range(m[i]))
    kappa = tj.kappa
    if kind == "quadratic":
        if len(idx) != 2:
            raise ValueError("quadratic form needs |m| = 2")
        b = C * 3 + A * kappa
        out = SpinMatrix.zero(tj.dim)
        for n in product(range(3), repeat=2):
            w = P2(idx, n)
            if w:
                out = out + _symmetrized(tj, n) * (A * w)
        return out + SpinMatrix.identity(tj.dim, b * P0(idx))
    if kind == "cubic":
        if len(idx) != 3:
            raise ValueError("cubic form needs |m| = 3")
        b = C * 5 + A * (3 * (kappa - Fraction(1, 3)))
        out = SpinMatrix.zero(tj.dim)
        for n in product(range(3), repeat=3):
            w = P3(idx, n)
            if w:
                out = out + _symmetrized(tj, n) * (A * w)
        for p in range(3):
            w = P1(idx, p)
            if w:
                out = out + jprod(tj, p) * (b * w)
        return out
    raise ValueError("kind must be 'quadratic' or 'cubic'")


# -- equivariance derivations -----------------------------------------------------

def _single_monomial(p):
    if len(p.terms) != 1:
        return None
    (e, c), = p.terms.items()
    return e, c


def derive_by_equivariance(base, axis, base_q, j):
    """From Q(base), obtain Q(t) where {S_axis, base} = lam * t (one monomial).

    Returns ``(t_exponents, derived_matrix)`` using Q({S_k, p}) = -i[J_k, Q(p)].
    """
    tj = _as_twoj(j)
    br = poisson_raw(Poly3.var(axis), base)
    mono = _single_monomial(br)
    if mono is None:
        raise ValueError("bracket is not a single monomial")
    e, lam = mono
    q = commutator(jprod(tj, axis), base_q) * GaussRational(0, -1)
    return e, q * lam.inverse()


def derivation_chain(j):
    """Rebuild the mixed rules from the pure-power ones by equivariance.

    Yields dicts ``{"rule", "target", "base", "axis", "match"}``: S_iS_l from
    S_i^2, S_i^2 S_l from S_i^3, and S1S2S3 from the *derived* S_i^2 S_l.
    """
    tj = _as_twoj(j)
    out = []
    derived = {}
    for power, rule in ((2, "pr"), (3, "iji")):
        for i in range(3):
            e = [0, 0, 0]
            e[i] = power
            base = Poly3.monomial(e)
            for k in range(3):
                if k == i:
                    continue
                t, q = derive_by_equivariance(base, k, quantize_monomial(tj, tuple(e)), tj)
                if rule == "iji":
                    derived[t] = q
                out.append({"rule": rule, "target": t, "base": tuple(e), "axis": k,
                            "match": q == quantize_monomial(tj, t)})
    for e, q in sorted(derived.items()):
        l = [i for i in range(3) if e[i] == 1][0]
        t, q2 = derive_by_equivariance(Poly3.monomial(e), l, q, tj)
        out.append({"rule": "123", "target": t, "base": e, "axis": l,
                    "match": t == (1, 1, 1) and q2 == quantize_monomial(tj, t)})
    return out
