"""Acceptance checks, one test per criterion; every comparison is exact."""
import random
import time
from fractions import Fraction

from s2quant import identities as ids
from s2quant.clebsch import (admissible_grid, bracket_coeffs_direct, bracket_coeffs_recursion,
                             claimed_range, ratio_bound_check, ratio_grid_maximum)
from s2quant.cli.main import build_parser, dispatch
from s2quant.exactnum import GaussRational, ZERO, coeff_is_zero, s_power, sqrt_rational
from s2quant.nogo import CONTRADICTION, TRIVIAL, trivial_quantization
from s2quant.pbw import reduce, verify_symbolic
from s2quant.properties import random_poly3, suite_cg, suite_pbw, suite_rules
from s2quant.sphere_poly import SpherePoly, canonicalize, poisson
from s2quant.spinrep import (PolyAC, TwoJ, matrix_element, substitute_s2,
                             verify_bracket_identity)

x, y, z = (SpherePoly.var(i) for i in range(3))
s2 = SpherePoly.const(s_power(2))
SPINS = range(1, 13)


def pb(f, g):
    return poisson(f, g)


def test_criterion_1_classical_identities(criterion):
    checks = {
        "a": lambda: pb(x * x - y * y, x * y) - pb(y * z, z * x) == s2 * z,
        "b": lambda: pb(y * y, pb(x * y, x * z)) - pb(x * x, pb(x * x, y * z)) * Fraction(3, 4)
        == s2 * y * z * 2,
        "c": lambda: (pb(x ** 3, y * z * z) * 4 - pb(y ** 3, z * z * x) * 4
                      + pb(y * y * x, y ** 3) - pb(y * x * x, x ** 3) - pb(y ** 3, x ** 3) * 6
                      - pb(y * z * z, z * z * x) * 3) == s2 * s2 * z * 3,
        "d": lambda: pb(x ** 3, y * y * x) + pb(y ** 3, z * z * y) + pb(z ** 3, x * x * z)
        == s2 * x * y * z * 6,
    }
    times = {}
    ok = True
    for name, check in checks.items():
        t = time.perf_counter()
        ok = check() and ok
        times[name] = time.perf_counter() - t
    slow = max(times.values())
    criterion(1, ok and slow < 1,
              "identities (a)-(d) hold exactly; slowest %.1f ms" % (1000 * slow))


def test_criterion_2_quantum_residuals(criterion):
    t = time.perf_counter()
    bad = []
    for tj in SPINS:
        for name in "abcd":
            terms, rhs = ids.identity(name)
            res = verify_bracket_identity(terms, rhs, tj)
            if res != ids.residual_closed_form(name).evaluate(tj):
                bad.append((name, tj))
            if name == "c":
                js = ids.js_value().to_polyac(TwoJ(tj).kappa)
                if substitute_s2(res, js) != ids.residual_closed_form("c", True).evaluate(tj):
                    bad.append(("c after s^2 relation", tj))
    symbolic = all(verify_symbolic(*ids.identity(n)) == reduce(ids.residual_closed_form(n))
                   for n in "abcd")
    elapsed = time.perf_counter() - t
    criterion(2, not bad and symbolic and elapsed <= 60,
              "residuals match closed forms for 2j = 1..12 and with symbolic kappa "
              "(%.1f s, mismatches %s)" % (elapsed, bad or "none"))


def test_criterion_3_matrix_elements(criterion):
    bad = []
    for tj in SPINS:
        j = TwoJ(tj).j
        me = matrix_element(ids.B_OPERATOR.evaluate(tj), j, j - 1)
        if me != PolyAC.const(sqrt_rational(2 * j) * GaussRational(0, Fraction(1, 2) - j)):
            bad.append(("B", str(j)))
        if tj >= 2:
            me = matrix_element(ids.X_OPERATOR.evaluate(tj), j - 2, j)
            if me != PolyAC.const(sqrt_rational(j * (2 * j - 1)) * GaussRational(0, (j - 1) / 2)):
                bad.append(("X", str(j)))
    criterion(3, not bad, "both matrix elements exact for j <= 6 (mismatches %s)" % (bad or "none"))


def test_criterion_4_nogo_verdicts(criterion):
    args = build_parser().parse_args(["nogo", "--jmax", "6"])
    code, rep = dispatch("nogo", args)
    summary = rep["result"]
    spins = [str(TwoJ(tj)) for tj in range(13)]
    verdicts_ok = all(summary[j]["2"] == summary[j]["5"] == (TRIVIAL if j == "0" else CONTRADICTION)
                      for j in spins)
    failed = [s["anchor"] for s in rep["steps"] if s["verdict"] != "pass"]
    criterion(4, code == 0 and verdicts_ok and not failed and len(summary) == 13,
              "12 spins give contradiction under both theorems, j=0 trivial; "
              "%d steps, %d failed" % (len(rep["steps"]), len(failed)))


def test_criterion_5_recursion_oracle(criterion):
    t = time.perf_counter()
    bad = [(l, j) for l in range(1, 9) for j in range(1, 2 * l + 1)
           if bracket_coeffs_recursion(l, j).y != bracket_coeffs_direct(l, l - j, l)]
    elapsed = time.perf_counter() - t
    criterion(5, not bad and elapsed <= 300,
              "recursion equals direct bracket decomposition for l <= 8 "
              "(%.1f s, mismatches %s)" % (elapsed, bad or "none"))


def test_criterion_6_nonvanishing(criterion):
    def y(l, j, k):
        return bracket_coeffs_recursion(l, j).y[k]

    top = all(not coeff_is_zero(y(l, 1, l)) for l in range(1, 10))
    zero_in_range = [(l, j, k) for l in range(5, 9) for j, k in claimed_range(l)
                     if coeff_is_zero(y(l, j, k))]
    vanish = all(coeff_is_zero(y(l, j, k)) for l in range(1, 10) for j in range(1, 2 * l + 1)
                 for k in range(1, l + 1) if 2 * k - 1 <= 2 * l - j - 2)
    criterion(6, top and not zero_in_range and vanish,
              "top coefficients nonzero for l <= 9: %s; vanishing below threshold: %s; "
              "stated range zero at (l, j, k) = %s" % (top, vanish, zero_in_range or "none"))


def test_criterion_7_ratio_bound(criterion):
    grid = list(admissible_grid(40))
    ok = all(ratio_bound_check(l, k) for l, k in grid)
    best, where = ratio_grid_maximum(40)
    criterion(7, ok and best == Fraction(18, 25),
              "ratio < 1 on %d grid points, maximum %s at (l, k) = %s" % (len(grid), best, where))


def test_criterion_8_trivial_quantization(criterion):
    rng = random.Random(2024)
    pairs = 200
    nonzero = 0
    for _ in range(pairs):
        p, q = (canonicalize(random_poly3(rng, 6, 4, True, True)) for _ in range(2))
        if trivial_quantization(poisson(p, q)) != ZERO:
            nonzero += 1
    third = s_power(2) * Fraction(1, 3)
    squares = all(trivial_quantization(v * v) == third for v in (x, y, z))
    criterion(8, nonzero == 0 and squares,
              "%d random brackets have zero constant part (%d failures); Q0(S_i^2) = s^2/3: %s"
              % (pairs, nonzero, squares))


def test_criterion_9_structural(criterion):
    results = suite_cg(4) + suite_rules(12) + suite_pbw(n=100, spins=(1, 2, 3, 4), orderings=0)
    failed = [name for name, ok, _ in results if not ok]
    criterion(9, not failed, "%d structural certificates, failed: %s"
              % (len(results), failed or "none"))
