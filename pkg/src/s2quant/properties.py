"""Randomized and exhaustive property suites shared by the tests and ``selftest``.

Every suite returns a list of ``(name, ok, detail)`` triples; nothing here
uses tolerances.
"""
import random
from fractions import Fraction
from itertools import product

from .clebsch import cg
from .exactnum import GaussRational, ONE, ZERO, s_power
from .harmonics import component_by_projection, harmonic_decompose, sphere_integral, ylm
from .pbw import NCPoly, reduce, rewrite, A as SA, C as SC
from .sphere_poly import Poly3, SpherePoly, canonicalize, poisson, poisson_raw
from .spinrep import (SpinMatrix, TwoJ, commutator, derivation_chain, projector_vn_forms,
                      quantize_repr, spin_matrices)

__all__ = ["random_poly3", "random_ncpoly", "SUITES", "run_suite", "run_all"]

_MONOS3 = [e for e in product(range(4), repeat=3) if sum(e) <= 3]


def _rand_rational(rng, span=5):
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def random_poly3(rng, max_degree=3, max_terms=4, complex_coeffs=False, s_powers=False):
    """A random Poly3 with small rational (or Gaussian) coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        a = rng.randint(0, d)
        b = rng.randint(0, d - a)
        e = (a, b, d - a - b)
        v = GaussRational(_rand_rational(rng), _rand_rational(rng) if complex_coeffs else 0)
        c = ONE * v
        if s_powers:
            c = c * s_power(2 * rng.randint(0, 1))
        terms[e] = terms.get(e, ZERO) + c
    return Poly3(terms)


def random_ncpoly(rng, max_degree=4, max_terms=5, symbols=True):
    """A random word polynomial in X1, X2, X3 with Gaussian-rational coefficients."""
    out = NCPoly()
    for _ in range(rng.randint(1, max_terms)):
        n = rng.randint(0, max_degree)
        w = tuple(rng.randrange(3) for _ in range(n))
        c = GaussRational(_rand_rational(rng), _rand_rational(rng))
        term = NCPoly({w: c})
        if symbols and rng.random() < 0.3:
            term = term * rng.choice([SA, SC])
        out = out + term
    return out


# -- classical -----------------------------------------------------------------

def suite_poisson(n=40, seed=1):
    rng = random.Random(seed)
    out = []
    anti = jac = leib = True
    for _ in range(n):
        f, g, h = (canonicalize(random_poly3(rng, 3, 3, True)) for _ in range(3))
        if poisson(f, g) != -poisson(g, f):
            anti = False
        jsum = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g))
        if jsum:
            jac = False
        if poisson(f, g * h) != poisson(f, g) * h + g * poisson(f, h):
            leib = False
    out.append(("bracket antisymmetry", anti, "%d triples" % n))
    out.append(("Jacobi identity", jac, "%d triples" % n))
    out.append(("Leibniz rule", leib, "%d triples" % n))
    x, y, z = (SpherePoly.var(i) for i in range(3))
    out.append(("{S1,S2} = S3 cyclic", poisson(x, y) == z and poisson(y, z) == x
                and poisson(z, x) == y, ""))
    return out


def suite_harmonics(n=15, seed=2, lmax=3):
    rng = random.Random(seed)
    ortho = True
    for l1 in range(lmax + 1):
        for m1 in range(-l1, l1 + 1):
            for l2 in range(lmax + 1):
                for m2 in range(-l2, l2 + 1):
                    v = sphere_integral(ylm(l1, m1).poly.conjugate() * ylm(l2, m2).poly)
                    want = s_power(2) if (l1, m1) == (l2, m2) else ZERO
                    if v != want:
                        ortho = False
    agree = True
    for _ in range(n):
        p = canonicalize(random_poly3(rng, 4, 4, True, True))
        d = harmonic_decompose(p)
        if d.total() != p:
            agree = False
        for l in range(0, 5):
            if d.component(l) != component_by_projection(p, l):
                agree = False
    return [("harmonic orthonormality l<=%d" % lmax, ortho, ""),
            ("decomposition == projection", agree, "%d random inputs" % n)]


def suite_trivial(n=50, seed=3, max_degree=6):
    from .nogo import trivial_quantization
    rng = random.Random(seed)
    ok = True
    for _ in range(n):
        p = random_poly3(rng, max_degree, 4, True)
        q = random_poly3(rng, max_degree, 4, True)
        if trivial_quantization(poisson(canonicalize(p), canonicalize(q))) != ZERO:
            ok = False
    x, y, z = (SpherePoly.var(i) for i in range(3))
    third = s_power(2) * Fraction(1, 3)
    sq = all(trivial_quantization(v * v) == third for v in (x, y, z))
    return [("brackets have zero constant component", ok, "%d random pairs" % n),
            ("Q0(S_i^2) = s^2/3", sq, "")]


def suite_cg(lmax=4):
    ok = True
    count = 0
    for l1 in range(lmax + 1):
        for l2 in range(lmax + 1):
            for L in range(abs(l1 - l2), l1 + l2 + 1):
                for L2 in range(abs(l1 - l2), l1 + l2 + 1):
                    for M in range(-min(L, L2), min(L, L2) + 1):
                        tot = ZERO
                        for m1 in range(-l1, l1 + 1):
                            m2 = M - m1
                            if abs(m2) > l2:
                                continue
                            tot = tot + cg(l1, l2, m1, m2, L, M) * cg(l1, l2, m1, m2, L2, M)
                        count += 1
                        if tot != (ONE if L == L2 else ZERO):
                            ok = False
    return [("CG orthogonality l1,l2<=%d" % lmax, ok, "%d sums" % count)]


# -- quantum ------------------------------------------------------------------

def suite_spin(jmax_twice=12):
    comm = cas = True
    iu = GaussRational(0, 1)
    for tj in range(jmax_twice + 1):
        J1, J2, J3 = spin_matrices(tj)
        if commutator(J1, J2) != J3 * iu or commutator(J2, J3) != J1 * iu \
                or commutator(J3, J1) != J2 * iu:
            comm = False
        if J1 * J1 + J2 * J2 + J3 * J3 != SpinMatrix.identity(tj + 1, TwoJ(tj).kappa):
            cas = False
    return [("[J_i,J_j] = i eps J_k", comm, "2j<=%d" % jmax_twice),
            ("sum J_i^2 = j(j+1) I", cas, "2j<=%d" % jmax_twice)]


def suite_rules(jmax_twice=12):
    equi = adj = proj = s3j = deriv = True
    x = [Poly3.var(i) for i in range(3)]
    miu = GaussRational(0, -1)
    for tj in range(jmax_twice + 1):
        J = spin_matrices(tj)
        k = TwoJ(tj).kappa
        for e in _MONOS3:
            p = Poly3.monomial(e)
            Q = quantize_repr(p, tj)
            if Q.adjoint() != Q:
                adj = False
            for i in range(3):
                if quantize_repr(poisson_raw(x[i], p), tj) != commutator(J[i], Q) * miu:
                    equi = False
            if sum(e) in (2, 3):
                kind = "quadratic" if sum(e) == 2 else "cubic"
                if projector_vn_forms(kind, e, tj) != Q:
                    proj = False
        for l in range(3):
            tot = SpinMatrix.zero(tj + 1)
            for i in range(3):
                tot = tot + J[i] * J[l] * J[i]
            if tot != J[l] * (k - 1):
                s3j = False
        if not all(d["match"] for d in derivation_chain(tj)):
            deriv = False
    tag = "2j<=%d" % jmax_twice
    return [("equivariance of the rules", equi, tag), ("self-adjointness", adj, tag),
            ("projector reconstruction", proj, tag), ("sum J_i J_l J_i = (k-1) J_l", s3j, tag),
            ("mixed rules from pure powers", deriv, tag)]


def suite_pbw(n=100, seed=4, spins=(1, 2, 3, 4), orderings=200):
    rng = random.Random(seed)
    hom = True
    for _ in range(n):
        p = random_ncpoly(rng)
        red = reduce(p)
        for tj in spins:
            if red.evaluate(tj) != p.evaluate(tj):
                hom = False
    conf = True
    for t in range(orderings):
        p = random_ncpoly(rng)
        if rewrite(p, random.Random(seed * 1000 + t)) != reduce(p) or rewrite(p) != reduce(p):
            conf = False
    X = [NCPoly.gen(i) for i in range(3)]
    cas = X[0] * X[0] + X[1] * X[1] + X[2] * X[2]
    cent = all(reduce(X[i] * cas) == reduce(cas * X[i]) for i in range(3))
    return [("evaluation homomorphism", hom, "%d inputs x %d spins" % (n, len(spins))),
            ("order independence", conf, "%d inputs" % orderings),
            ("Casimir centrality", cent, "")]


SUITES = {
    "poisson": suite_poisson,
    "harmonics": suite_harmonics,
    "trivial": suite_trivial,
    "cg": suite_cg,
    "spin": suite_spin,
    "rules": suite_rules,
    "pbw": suite_pbw,
}


def run_suite(name, **kw):
    return SUITES[name](**kw)


def run_all():
    out = []
    for name in SUITES:
        out.extend((name, *r) for r in SUITES[name]())
    return out
