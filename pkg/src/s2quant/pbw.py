"""Normal ordering in the enveloping algebra of su(2), with Casimir reduction.

Generators X1, X2, X3 satisfy [X_i, X_j] = i eps_ijk X_k and the Casimir
X1^2 + X2^2 + X3^2 acts as the symbol kappa.  Reduced elements live on the
basis X1^al X2^be X3^ga with ga <= 1.  Coefficients are ``SymScalar``
polynomials in a, c, kappa, sigma (sigma standing for s^2), so the bracket
identities are checked for every j at once.
"""
from fractions import Fraction
from functools import lru_cache

from .exactnum import Coefficient, GaussRational
from .mpoly import GaussMPoly
from .sphere_poly import Poly3, canonicalize

__all__ = [
    "SymScalar", "NCPoly", "PbwPoly", "normal_order", "casimir_reduce", "reduce",
    "rewrite", "quantize_symbolic", "verify_symbolic", "sym_from_coefficient",
    "A", "C", "KAPPA", "SIGMA", "sym_from_polyac", "divide_by_symbol",
]

_I = GaussRational(0, 1)
_ONE = GaussRational(1)


class SymScalar(GaussMPoly):
    """Commutative polynomial in a, c, kappa, sigma over Gaussian rationals."""

    VARS = ("a", "c", "kappa", "sigma")
    _zero_exp = (0, 0, 0, 0)
    __slots__ = ()

    def subs(self, **values):
        """Substitute symbols by SymScalars or numbers."""
        idx = {n: i for i, n in enumerate(self.VARS)}
        vals = {idx[k]: (v if isinstance(v, SymScalar) else SymScalar.const(v))
                for k, v in values.items()}
        out = SymScalar.zero()
        cache = {}
        for e, c in self.terms.items():
            keep = list(e)
            term = SymScalar.const(c)
            for i, v in vals.items():
                if e[i]:
                    key = (i, e[i])
                    if key not in cache:
                        cache[key] = v ** e[i]
                    term = term * cache[key]
                    keep[i] = 0
            out = out + term * SymScalar.monomial(keep)
        return out

    def to_polyac(self, kappa):
        """Evaluate at kappa and read sigma as s^2; returns a spinrep PolyAC."""
        from .spinrep import PolyAC
        kappa = Fraction(kappa)
        out = {}
        for (ea, ec, ek, es), g in self.terms.items():
            c = Coefficient({(1, 0, 2 * es): g * kappa ** ek}) if ek else \
                Coefficient({(1, 0, 2 * es): g})
            if not c:
                continue
            key = (ea, ec)
            out[key] = out[key] + c if key in out else c
        return PolyAC({e: c for e, c in out.items() if c})


A = SymScalar.var(0)
C = SymScalar.var(1)
KAPPA = SymScalar.var(2)
SIGMA = SymScalar.var(3)


def sym_from_coefficient(c):
    """Read a rational-times-s^(2k) Coefficient as a SymScalar in sigma."""
    if isinstance(c, (int, Fraction, GaussRational)):
        return SymScalar.const(c)
    out = SymScalar.zero()
    for (d, p, k), v in c.terms.items():
        if d != 1 or p != 0 or k < 0 or k & 1:
            raise ValueError("coefficient is not a polynomial in s^2 over Q(i): %s" % c)
        out = out + SymScalar.monomial((0, 0, 0, k // 2), v)
    return out


def _sym(x):
    if isinstance(x, SymScalar):
        return x
    if isinstance(x, Coefficient):
        return sym_from_coefficient(x)
    return SymScalar.const(x)


def _acc(d, key, val):
    w = d.get(key)
    w = val if w is None else w + val
    if w:
        d[key] = w
    else:
        d.pop(key, None)


class NCPoly:
    """Noncommutative word polynomial: {word (tuple of 0,1,2): SymScalar}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(w): _sym(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, i):
        return cls({(i,): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def word(cls, *idx):
        return cls({tuple(idx): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in _ncp(other).terms.items():
            _acc(out, w, c)
        return _raw_nc(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw_nc({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_ncp(other))

    def __rsub__(self, other):
        return _ncp(other) - self

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    _acc(out, w1 + w2, c1 * c2)
            return _raw_nc(out)
        s = _sym(other)
        return _raw_nc({w: c * s for w, c in self.terms.items() if c * s})

    def __rmul__(self, other):
        s = _sym(other)
        return _raw_nc({w: s * c for w, c in self.terms.items() if s * c})

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def evaluate(self, j):
        """Direct evaluation in the spin-j matrices (a, c stay symbolic)."""
        from .spinrep import SpinMatrix, TwoJ, jprod
        tj = j if isinstance(j, TwoJ) else TwoJ(j)
        out = SpinMatrix.zero(tj.dim)
        for w, c in self.terms.items():
            out = out + jprod(tj, *w) * c.to_polyac(tj.kappa)
        return out

    def __repr__(self):
        return "NCPoly(%r)" % ({w: str(c) for w, c in self.terms.items()},)


def _raw_nc(terms):
    p = NCPoly.__new__(NCPoly)
    p.terms = terms
    return p


def _ncp(x):
    if isinstance(x, NCPoly):
        return x
    if isinstance(x, PbwPoly):
        return x.to_nc()
    return NCPoly.const(x)


# eps_ijk for 0-based axes; [X_b, X_a] = i eps_bak X_k
def _eps(i, j, k):
    return (i - j) * (j - k) * (k - i) // 2


def _third(a, b):
    return 3 - a - b


def _exps(word):
    return (word.count(0), word.count(1), word.count(2))


@lru_cache(maxsize=None)
def _order_word(word):
    """Leftmost-first normal ordering of a word; {exps: GaussRational}."""
    for t in range(len(word) - 1):
        b, a = word[t], word[t + 1]
        if b > a:
            out = dict(_order_word(word[:t] + (a, b) + word[t + 2:]))
            k = _third(a, b)
            coef = _I * _eps(b, a, k)
            for e, c in _order_word(word[:t] + (k,) + word[t + 2:]).items():
                _acc(out, e, c * coef)
            return out
    return {_exps(word): _ONE}


def _pbw_word(e):
    return (0,) * e[0] + (1,) * e[1] + (2,) * e[2]


@lru_cache(maxsize=None)
def _casimir_exps(e):
    """Reduce X1^al X2^be X3^ga to ga <= 1; {exps: SymScalar (in kappa)}."""
    al, be, ga = e
    if ga <= 1:
        return {e: SymScalar.const(1)}
    out = {}
    rest = (0,) * al + (1,) * be
    tail = (2,) * (ga - 2)
    # X3^2 = kappa - X1^2 - X2^2, the Casimir being central
    for e2, c2 in _casimir_exps((al, be, ga - 2)).items():
        _acc(out, e2, c2 * KAPPA)
    for sq in ((0, 0), (1, 1)):
        for e1, c1 in _order_word(rest + sq + tail).items():
            for e2, c2 in _casimir_exps(e1).items():
                _acc(out, e2, c2 * (-c1))
    return out


class PbwPoly:
    """Element on the ordered basis X1^al X2^be X3^ga with SymScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(e): _sym(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls):
        return cls()

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in _pbw(other).terms.items():
            _acc(out, e, c)
        return _raw_pbw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw_pbw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_pbw(other))

    def __mul__(self, other):
        if isinstance(other, (PbwPoly, NCPoly)):
            return reduce(self.to_nc() * _ncp(other))
        s = _sym(other)
        return _raw_pbw({e: c * s for e, c in self.terms.items() if c * s})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, PbwPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_reduced(self):
        return all(e[2] <= 1 for e in self.terms)

    def to_nc(self):
        return _raw_nc({_pbw_word(e): c for e, c in self.terms.items()})

    def subs(self, **values):
        out = {}
        for e, c in self.terms.items():
            _acc(out, e, c.subs(**values))
        return _raw_pbw(out)

    def coefficient(self, e):
        return self.terms.get(tuple(e), SymScalar.zero())

    def proportionality(self, basis):
        """SymScalar lam with self == lam * basis when basis has a constant coefficient."""
        for e, b in basis.terms.items():
            if b.is_constant():
                lam = self.coefficient(e) * b.constant_term().inverse()
                return lam if self == basis * lam else None
        return None

    def evaluate(self, j):
        return self.to_nc().evaluate(j)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), e)):
            mono = "*".join(("X%d" % (i + 1)) + ("^%d" % n if n > 1 else "")
                            for i, n in enumerate(e) if n) or "1"
            parts.append("(%s)*%s" % (self.terms[e], mono))
        return " + ".join(parts)

    def __repr__(self):
        return "PbwPoly(%s)" % self


def _raw_pbw(terms):
    p = PbwPoly.__new__(PbwPoly)
    p.terms = terms
    return p


def _pbw(x):
    if isinstance(x, PbwPoly):
        return x
    if isinstance(x, NCPoly):
        return reduce(x)
    return PbwPoly({(0, 0, 0): x})


def normal_order(expr):
    """Rewrite a word polynomial onto ordered monomials (no Casimir step)."""
    out = {}
    for w, c in _ncp(expr).terms.items():
        for e, g in _order_word(w).items():
            _acc(out, e, c * g)
    return _raw_pbw(out)


def casimir_reduce(p):
    """Eliminate X3^2 from a normal-ordered PbwPoly."""
    out = {}
    for e, c in p.terms.items():
        for e2, c2 in _casimir_exps(e).items():
            _acc(out, e2, c * c2)
    return _raw_pbw(out)


def reduce(expr):
    """normal_order followed by casimir_reduce."""
    return casimir_reduce(normal_order(expr))


def _redexes(word):
    out = [("swap", t) for t in range(len(word) - 1) if word[t] > word[t + 1]]
    out += [("cas", t) for t in range(len(word) - 1) if word[t] == word[t + 1] == 2]
    return out


def rewrite(expr, rng=None, max_steps=10 ** 6):
    """Reduce by applying single rewrite steps in an arbitrary order.

    With ``rng`` the word and the redex inside it are chosen at random;
    otherwise the rightmost redex of the last word is used.  This is the
    slow path used to test that the fast reduction is order independent.
    """
    pending = dict(_ncp(expr).terms)
    done = {}
    steps = 0
    while pending:
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewriting did not terminate")
        words = list(pending)
        w = rng.choice(words) if rng else words[-1]
        c = pending.pop(w)
        reds = _redexes(w)
        if not reds:
            _acc(done, _exps(w), c)
            continue
        kind, t = rng.choice(reds) if rng else reds[-1]
        if kind == "swap":
            b, a = w[t], w[t + 1]
            _acc(pending, w[:t] + (a, b) + w[t + 2:], c)
            k = _third(a, b)
            _acc(pending, w[:t] + (k,) + w[t + 2:], c * (_I * _eps(b, a, k)))
        else:
            _acc(pending, w[:t] + w[t + 2:], c * KAPPA)
            _acc(pending, w[:t] + (0, 0) + w[t + 2:], -c)
            _acc(pending, w[:t] + (1, 1) + w[t + 2:], -c)
    return _raw_pbw(done)


# -- symbolic quantization --------------------------------------------------------

def _x(*idx):
    return NCPoly.word(*idx)


@lru_cache(maxsize=None)
def _quantize_exps(e):
    deg = sum(e)
    idx = [i for i in range(3) for _ in range(e[i])]
    if deg == 0:
        return NCPoly.const(1)
    if deg == 1:
        return _x(idx[0])
    if deg == 2:
        i, l = idx
        if i == l:
            return _x(i, i) * A + NCPoly.const(C)
        return (_x(i, l) + _x(l, i)) * (A * Fraction(1, 2))
    if deg == 3:
        if len(set(idx)) == 1:
            i = idx[0]
            return _x(i, i, i) * A + _x(i) * C
        if len(set(idx)) == 2:
            i = [v for v in idx if idx.count(v) == 2][0]
            l = [v for v in idx if idx.count(v) == 1][0]
            return _x(i, l, i) * A + _x(l) * ((A + C) * Fraction(1, 3))
        sq = _x(0, 0) - _x(1, 1) + _x(2, 2)
        return _x(0, 1, 2) * A + sq * (A * GaussRational(0, Fraction(-1, 2)))
    raise ValueError("no quantization rule for degree %d monomials" % deg)


def quantize_symbolic(p):
    """The degree <= 3 rules as a word polynomial with symbolic a, c."""
    out = NCPoly()
    for e, c in p.terms.items():
        out = out + _quantize_exps(e) * sym_from_coefficient(c)
    return out


def _qvalue(x):
    from .spinrep import Bracket
    if isinstance(x, Bracket):
        f, g = _qvalue(x.f), _qvalue(x.g)
        return (f * g - g * f) * GaussRational(0, -1)
    return quantize_symbolic(x)


def _check_classical(x):
    from .spinrep import Bracket
    if isinstance(x, Bracket):
        _check_classical(x.f)
        _check_classical(x.g)
    elif not isinstance(x, Poly3):
        raise ValueError("verify_symbolic takes polynomials in S1, S2, S3, got %s"
                         % type(x).__name__)


def verify_symbolic(terms, rhs):
    """Residual of a bracket identity with kappa and sigma symbolic, fully reduced."""
    from .spinrep import classical_value, Bracket
    for _, f, g in terms:
        _check_classical(Bracket(f, g))
    _check_classical(rhs)
    lhs = canonicalize(Poly3.zero())
    for coeff, f, g in terms:
        lhs = lhs + classical_value(Bracket(f, g)) * coeff
    if lhs != canonicalize(rhs):
        raise ValueError("classical identity does not hold")
    acc = NCPoly()
    for coeff, f, g in terms:
        acc = acc + _qvalue(Bracket(f, g)) * _sym(coeff)
    acc = acc - quantize_symbolic(rhs)
    return reduce(acc)


def sym_from_polyac(p):
    """Inverse of ``SymScalar.to_polyac`` on kappa-free values (s^2 read as sigma)."""
    out = {}
    for (ea, ec), c in p.terms.items():
        for (d, pp, k), v in c.terms.items():
            if d != 1 or pp != 0 or k < 0 or k & 1:
                raise ValueError("entry is not a polynomial in a, c, s^2 over Q(i)")
            _acc(out, (ea, ec, 0, k // 2), v)
    return SymScalar._from_terms(out)


def divide_by_symbol(p, name):
    """Exact quotient p / symbol, or None when some term lacks the symbol."""
    i = SymScalar.VARS.index(name)
    out = {}
    for e, c in p.terms.items():
        if not e[i]:
            return None
        f = list(e)
        f[i] -= 1
        out[tuple(f)] = c
    return SymScalar._from_terms(out)
