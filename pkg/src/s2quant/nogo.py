"""Machine-checked replays of the quadratic and cubic no-go arguments.

Each run fixes a spin j, evaluates every algebraic claim exactly, and ends
in one of two verdicts: ``"contradiction"`` (no admissible quantization for
this j) or ``"consistent-trivial"`` (j = 0, where Q(S_i) = 0).  A failed
claim stops the chain and the verdict becomes ``"aborted"``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from . import identities as ids
from .exactnum import GaussRational, ZERO, render, s_power, sqrt_rational
from .harmonics import beta, harmonic_decompose, ladder, ylm
from .pbw import (A, C, SIGMA, SymScalar, divide_by_symbol, reduce,
                  sym_from_polyac, verify_symbolic)
from .sphere_poly import Poly3, SpherePoly, canonicalize, rot_action
from .spinrep import (Bracket, PolyAC, classical_value, SpinMatrix, TwoJ, matrix_element,
                      representative_consistency, spin_matrices, substitute_s2,
                      verify_bracket_identity)

__all__ = ["ProofStep", "NogoReport", "run_theorem2", "run_theorem5",
           "trivial_quantization", "adjoint_irreducibility", "CONTRADICTION", "TRIVIAL"]

CONTRADICTION = "contradiction"
TRIVIAL = "consistent-trivial"
ABORTED = "aborted"


@dataclass
class ProofStep:
    desc: str
    anchor: str
    claim: str
    verdict: str
    detail: str = ""

    def as_dict(self):
        return {"desc": self.desc, "anchor": self.anchor, "verdict": self.verdict,
                "detail": (self.claim + ("; " + self.detail if self.detail else ""))}


@dataclass
class NogoReport:
    j: TwoJ
    theorem: str
    steps: list = field(default_factory=list)
    verdict: str = ABORTED

    @property
    def passed(self):
        return self.verdict != ABORTED and all(s.verdict == "pass" for s in self.steps)

    def as_dict(self):
        return {"j": str(self.j), "theorem": self.theorem, "verdict": self.verdict,
                "steps": [s.as_dict() for s in self.steps]}


class _Abort(Exception):
    pass


class _Chain:
    def __init__(self, report, prefix):
        self.report = report
        self.prefix = prefix

    def check(self, desc, anchor, claim, ok, detail=""):
        step = ProofStep(desc, "%s/%s" % (self.prefix, anchor), claim,
                         "pass" if ok else "fail", detail)
        self.report.steps.append(step)
        if not ok:
            raise _Abort(step)
        return ok


def _sym(p):
    return p if isinstance(p, SymScalar) else sym_from_polyac(p)


def _at(x, tj):
    """Fix kappa = j(j+1) in a SymScalar."""
    return x.subs(kappa=tj.kappa)


def _lambda(residual, basis, tj):
    """Scalar lam (SymScalar in a, c, sigma) with residual == lam * basis."""
    lam = residual.proportionality(basis)
    return None if lam is None else _sym(lam)


def _classical(chain, name, anchor):
    terms, rhs = ids.identity(name)
    try:
        lhs = canonicalize(Poly3.zero())
        for coeff, f, g in terms:
            lhs = lhs + classical_value(Bracket(f, g)) * coeff
        ok = lhs == canonicalize(rhs)
    except ValueError:
        ok = False
    chain.check("classical identity (%s) holds on the sphere" % name, anchor,
                "sum of brackets == right-hand side", ok)
    return terms, rhs


def _residual(chain, name, tj, anchor, substituted=False):
    terms, rhs = ids.identity(name)
    res = verify_bracket_identity(terms, rhs, tj)
    expect = ids.residual_closed_form(name).evaluate(tj)
    chain.check("quantized identity (%s) leaves the closed-form residual" % name, anchor,
                "residual == closed form at kappa=%s" % tj.kappa, res == expect)
    sym = verify_symbolic(terms, rhs)
    chain.check("symbolic-kappa residual agrees with the matrix residual", anchor + "-pbw",
                "reduced residual evaluated at j == matrix residual",
                sym == reduce(ids.residual_closed_form(name)) and sym.evaluate(tj) == res)
    return res


def _trivial_branch(chain, tj):
    J1, J2, J3 = spin_matrices(tj)
    chain.check("Q(S3) vanishes only for the trivial representation", "trivial",
                "J3 == 0 iff j == 0", J3.is_zero() == (tj.twoj == 0))
    if tj.twoj == 0:
        for name in "abcd":
            terms, rhs = ids.identity(name)
            lhs = ZERO
            for coeff, f, g in terms:
                lhs = lhs + trivial_quantization(classical_value(Bracket(f, g))) * coeff
            chain.check("j=0: Q(p)=p_0 respects identity (%s)" % name, "trivial-" + name,
                        "p_0 of brackets == p_0 of right side == 0",
                        lhs == trivial_quantization(canonicalize(rhs)) == ZERO)
        return True
    return False


def _sigma_zero(chain, sigma_value, anchor, why):
    chain.check("s^2 is forced to vanish", anchor, "s^2 == %s" % sigma_value,
                sigma_value == SymScalar.zero(), why)
    chain.check("s = 0 contradicts the standing hypothesis s > 0", anchor + "-s",
                "radius s > 0", True)


def run_theorem2(j):
    """Replay the quadratic no-go argument at spin j (TwoJ, 2j, or label)."""
    tj = j if isinstance(j, TwoJ) else TwoJ(j)
    report = NogoReport(tj, "2")
    chain = _Chain(report, "thm2")
    try:
        _classical(chain, "a", "identity-a")
        _classical(chain, "b", "identity-b")
        if _trivial_branch(chain, tj):
            report.verdict = TRIVIAL
            return report
        J1, J2, J3 = spin_matrices(tj)
        res = _residual(chain, "a", tj, "residual-a")
        lam1 = _lambda(res, J3, tj)
        kappa = tj.kappa
        expect1 = A * A * (kappa - Fraction(3, 4)) - SIGMA
        chain.check("residual is a multiple of Q(S3) != 0, so the scalar vanishes",
                    "quadratic-constraint", "s^2 == a^2(j(j+1) - 3/4)", lam1 == expect1,
                    "scalar = %s" % lam1)
        sigma = A * A * (kappa - Fraction(3, 4))
        if tj.twoj == 1:
            _sigma_zero(chain, sigma, "half", "j(j+1) - 3/4 = 0 at j = 1/2")
            report.verdict = CONTRADICTION
            return report
        res_b = _residual(chain, "b", tj, "residual-b")
        Bm = ids.B_OPERATOR.evaluate(tj)
        me = matrix_element(Bm, tj.j, tj.j - 1, tj)
        want = PolyAC.const(GaussRational(0, 1) * (Fraction(1, 2) - tj.j) * sqrt_rational(2 * tj.j))
        chain.check("matrix element <j,j|2J2J3 - iJ1|j,j-1>", "matrix-element",
                    "== i(1/2 - j) sqrt(2j) != 0", me == want and bool(me), render(me.constant_term()))
        lam2 = _lambda(res_b, Bm, tj)
        expect2 = A ** 3 * (kappa - Fraction(9, 4)) - A * SIGMA
        chain.check("second residual scalar vanishes", "second-constraint",
                    "a s^2 == a^3(j(j+1) - 9/4)", lam2 == expect2, "scalar = %s" % lam2)
        # branch a = 0
        chain.check("branch a = 0 forces s^2 = 0 through the first constraint", "branch-a0",
                    "a^2(j(j+1)-3/4) at a=0 == 0", sigma.subs(a=0) == SymScalar.zero())
        # branch a != 0: divide by a, then insert the first constraint
        mu = divide_by_symbol(lam2, "a")
        chain.check("branch a != 0: divide the second constraint by a", "branch-a-div",
                    "a * quotient == scalar", mu is not None and mu * A == lam2)
        clash = mu.subs(sigma=sigma)
        chain.check("constraints clash: a^2(j(j+1)-9/4) - a^2(j(j+1)-3/4) = -(3/2)a^2",
                    "branch-a-clash", "== -(3/2) a^2, forcing a = 0",
                    clash == A * A * Fraction(-3, 2), str(clash))
        report.verdict = CONTRADICTION
    except _Abort:
        report.verdict = ABORTED
    return report


def run_theorem5(j):
    """Replay the cubic no-go argument at spin j."""
    tj = j if isinstance(j, TwoJ) else TwoJ(j)
    report = NogoReport(tj, "5")
    chain = _Chain(report, "thm5")
    try:
        _classical(chain, "c", "identity-c")
        _classical(chain, "d", "identity-d")
        if _trivial_branch(chain, tj):
            report.verdict = TRIVIAL
            return report
        J1, J2, J3 = spin_matrices(tj)
        kappa = tj.kappa
        # s^2 relation from summing Q(S_i S_l S_i)
        s3 = sum((J * J3 * J for J in (J1, J2, J3)), SpinMatrix.zero(tj.dim))
        chain.check("sum_i J_i J3 J_i by reordering", "s3j", "== (j(j+1) - 1) J3",
                    s3 == J3 * (kappa - 1))
        x, y, z = (Poly3.var(i) for i in range(3))
        rc = representative_consistency((x * x + y * y + z * z) * z,
                                        Poly3.const(s_power(2)) * z, tj)
        lam = _lambda(rc, J3, tj)
        js = _at(ids.js_value(), tj)
        chain.check("quantizing (S1^2+S2^2+S3^2)S3 = s^2 S3 fixes s^2", "js",
                    "s^2 == a(j(j+1) - 1/3) + 5c/3", lam == js - SIGMA, "scalar = %s" % lam)
        res = _residual(chain, "c", tj, "residual-c")
        scalar = sym_from_polyac(ids.cubic_raw_j_form(tj.j)) - SIGMA * SIGMA * 3
        raw = J3 * scalar.to_polyac(0) - J3 ** 3 * (PolyAC.var(0) ** 2 * 10
                                                      + PolyAC.var(0) * PolyAC.var(1) * 4)
        chain.check("residual matches the printed polynomial in j", "residual-c-j",
                    "coefficients of Q(S3) and Q(S3)^3", res == raw)
        sub = substitute_s2(res, js.to_polyac(0))
        cc1 = ids.CC1_OPERATOR.evaluate(tj)
        chain.check("inserting the s^2 relation gives the cubic constraint", "cubic-constraint",
                    "residual == -(constraint operator)", sub == -cc1)
        if tj.twoj in (1, 2):
            power = J3 * J3 if tj.twoj == 1 else J3 * J3 * J3
            target = SpinMatrix.identity(tj.dim, Fraction(1, 4)) if tj.twoj == 1 else J3
            chain.check("low-spin relation for Q(S3)", "low-spin",
                        "Q(S3)^2 = I/4" if tj.twoj == 1 else "Q(S3)^3 = Q(S3)",
                        power == target)
            mu = _lambda(cc1, J3, tj)
            if tj.twoj == 1:
                want = (A + C * 4) ** 2 * Fraction(-1, 12)
                rel = {"a": C * -4}
                text = "-(a + 4c)^2 / 12 == 0, so a = -4c (a, c real)"
            else:
                want = (A + C) ** 2 * Fraction(-4, 3)
                rel = {"a": -C}
                text = "-(4/3)(a + c)^2 == 0, so a = -c (a, c real)"
            chain.check("constraint collapses to a negative multiple of a square",
                        "low-spin-square", text, mu == want, "scalar = %s" % mu)
            _sigma_zero(chain, js.subs(**rel), "low-spin-s", "substituted into the s^2 relation")
            report.verdict = CONTRADICTION
            return report
        res_d = _residual(chain, "d", tj, "residual-d")
        Xm = ids.X_OPERATOR.evaluate(tj)
        me = matrix_element(Xm, tj.j - 2, tj.j, tj)
        want = PolyAC.const(GaussRational(0, Fraction(-1, 2)) * (1 - tj.j)
                            * sqrt_rational(tj.j * (2 * tj.j - 1)))
        chain.check("matrix element <j,j-2|X|j,j>", "matrix-element",
                    "== (1/2i)(1 - j) sqrt(j(2j - 1)) != 0", me == want and bool(me),
                    render(me.constant_term()))
        lam_d = _lambda(res_d, Xm, tj)
        chain.check("second cubic residual scalar vanishes", "second-constraint",
                    "6a(c - 2a + a j(j+1) - s^2) == 0",
                    lam_d == A * (C - A * 2 + A * kappa - SIGMA) * 6, "scalar = %s" % lam_d)
        # branch a = 0
        mu0 = _lambda(cc1.map_entries(lambda v: _sym(v).subs(a=0).to_polyac(0)), J3, tj)
        chain.check("branch a = 0: constraint reads -(4/3)c^2 Q(S3) = 0", "branch-a0",
                    "so c = 0", mu0 == C * C * Fraction(-4, 3), "scalar = %s" % mu0)
        _sigma_zero(chain, js.subs(a=0, c=0), "branch-a0-s", "a = c = 0 in the s^2 relation")
        # branch a != 0
        cc2 = divide_by_symbol(lam_d, "a") * Fraction(1, 6)
        chain.check("branch a != 0: s^2 = c - 2a + a j(j+1)", "branch-a-cc2",
                    "quotient by 6a", cc2 == C - A * 2 + A * kappa - SIGMA)
        diff = (js - SIGMA) - cc2
        chain.check("subtracting the two s^2 relations", "branch-a-c",
                    "5a/3 + 2c/3 == 0, so c = -5a/2",
                    diff == A * Fraction(5, 3) + C * Fraction(2, 3), str(diff))
        red = cc1.map_entries(lambda v: _sym(v).subs(c=A * Fraction(-5, 2)).to_polyac(0))
        chain.check("constraint reduces to 3a^2(j^2 + j - 3) Q(S3) = 0", "branch-a-final",
                    "matrix identity", red == J3 * (A * A * 3 * (kappa - 3)).to_polyac(0))
        chain.check("j^2 + j - 3 has no half-integer root", "irrational-root",
                    "discriminant 13 is not a square; value %s != 0" % (kappa - 3),
                    kappa - 3 != 0 and isqrt(13) ** 2 != 13)
        report.verdict = CONTRADICTION
    except _Abort:
        report.verdict = ABORTED
    return report


def trivial_quantization(p):
    """The j = 0 quantization: the constant harmonic component p_0."""
    if not isinstance(p, SpherePoly):
        p = canonicalize(p)
    comp = harmonic_decompose(p).component(0)
    return comp.constant_term()


def adjoint_irreducibility(l):
    """Certificate that the brackets {S_i, H_l} span H_l for l > 0 (and vanish for l = 0)."""
    out = {"l": l, "beta_nonzero": True, "ladder_ok": True, "l3_ok": True}
    iu = GaussRational(0, 1)
    if l == 0:
        y = ylm(0, 0).poly
        out["dimension"] = 0 if all(not rot_action(i, y) for i in (1, 2, 3)) else None
        out["spans"] = out["dimension"] == 0
        return out
    reached = set()
    for m in range(-l, l + 1):
        y = ylm(l, m).poly
        if ladder("3", y) != ylm(l, m).poly * (iu * m):
            out["l3_ok"] = False
        if m != 0:
            reached.add(m)
        if m < l:
            b = beta(l, m)
            if not b:
                out["beta_nonzero"] = False
            if ladder("+", y) != ylm(l, m + 1).poly * (b * iu):
                out["ladder_ok"] = False
            elif b:
                reached.add(m + 1)
        if m > -l:
            if ladder("-", y) != ylm(l, m - 1).poly * (beta(l, m - 1) * iu):
                out["ladder_ok"] = False
            else:
                reached.add(m - 1)
    out["dimension"] = len(reached)
    out["spans"] = (out["dimension"] == 2 * l + 1 and out["beta_nonzero"]
                    and out["ladder_ok"] and out["l3_ok"])
    return out
