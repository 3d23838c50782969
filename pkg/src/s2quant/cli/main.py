"""``s2quant`` command-line entry point."""
import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .expr import EvalError, ParseError, evaluate, parse
from .schema import REPORT_SCHEMA_VERSION

__all__ = ["main", "dispatch", "build_parser"]


class Report:
    def __init__(self, command, params):
        self.command = command
        self.params = params
        self.steps = []
        self.result = None
        self.error = None

    def step(self, desc, anchor, ok, detail=""):
        self.steps.append({"desc": desc, "anchor": anchor,
                           "verdict": "pass" if ok else "fail", "detail": str(detail)})
        return ok

    @property
    def ok(self):
        return self.error is None and all(s["verdict"] == "pass" for s in self.steps)

    def as_dict(self):
        out = {"version": REPORT_SCHEMA_VERSION, "command": self.command, "params": self.params,
               "steps": self.steps,
               "verdict": "error" if self.error else ("pass" if self.ok else "fail")}
        if self.result is not None:
            out["result"] = self.result
        return out


def _threads():
    raw = os.environ.get("NOGO_THREADS")
    cap = os.cpu_count() or 1
    if raw:
        try:
            cap = max(1, int(raw))
        except ValueError:
            pass
    return cap


def _pmap(fn, items):
    items = list(items)
    n = min(_threads(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _poly(text):
    from ..sphere_poly import canonicalize
    return canonicalize(evaluate(parse(text)))


# -- commands ----------------------------------------------------------------------

def cmd_bracket(args, rep):
    from ..sphere_poly import poisson
    f, g = _poly(args.f), _poly(args.g)
    out = poisson(f, g)
    rep.result = str(out)
    rep.step("canonical bracket", "bracket", out == -poisson(g, f), "antisymmetry checked")


def cmd_hdecomp(args, rep):
    from ..harmonics import component_by_projection, harmonic_decompose
    p = _poly(args.expr)
    d = harmonic_decompose(p)
    rep.result = {str(l): str(c) for l, c in d.components.items()}
    rep.step("components sum to the input", "hdecomp/total", d.total() == p)
    top = max(d.components, default=0)
    for l in range(top + 1):
        rep.step("degree %d matches the projection oracle" % l, "hdecomp/l%d" % l,
                 d.component(l) == component_by_projection(p, l))


def cmd_cg(args, rep):
    from ..clebsch import cg
    from ..exactnum import render_surd
    v = cg(args.l1, args.l2, args.m1, args.m2, args.L, args.M)
    rep.result = render_surd(v)
    rep.step("Racah formula evaluated exactly", "cg", True, rep.result)


def cmd_ylbracket(args, rep):
    from ..clebsch import bracket_coeffs_direct, bracket_coeffs_recursion
    from ..exactnum import render
    l, j = args.l, args.j
    if l < 1 or not 1 <= j <= 2 * l:
        raise ValueError("need l >= 1 and 1 <= j <= 2l")
    row = bracket_coeffs_recursion(l, j)
    direct = bracket_coeffs_direct(l, l - j, l)
    table = {}
    for k in range(1, l + 1):
        r, d = row.y[k], direct[k]
        table[str(2 * k - 1)] = {"recursion": render(r), "direct": render(d)}
        rep.step("coefficient of Y_%d^%d" % (2 * k - 1, 2 * l - j), "ylbracket/k%d" % k, r == d,
                 "recursion=%s direct=%s" % (render(r), render(d)))
    rep.result = table


def cmd_verify_classical(args, rep):
    from .. import identities as ids
    from ..sphere_poly import Poly3, canonicalize
    from ..spinrep import Bracket, classical_value
    names = "abcd" if args.identity == "all" else args.identity
    for n in names:
        terms, rhs = ids.identity(n)
        lhs = canonicalize(Poly3.zero())
        for coeff, f, g in terms:
            lhs = lhs + classical_value(Bracket(f, g)) * coeff
        rep.step("classical identity (%s)" % n, "classical/%s" % n, lhs == canonicalize(rhs),
                 "rhs = %s" % canonicalize(rhs))


def _quantum_steps(tj, theorem):
    from .. import identities as ids
    from ..exactnum import GaussRational, render, sqrt_rational
    from ..pbw import reduce, verify_symbolic
    from ..spinrep import PolyAC, matrix_element, substitute_s2, verify_bracket_identity
    from fractions import Fraction
    steps = []

    def add(desc, anchor, ok, detail=""):
        steps.append({"desc": desc, "anchor": "j=%s/%s" % (tj, anchor),
                      "verdict": "pass" if ok else "fail", "detail": str(detail)})

    names = "ab" if theorem == "2" else "cd"
    for n in names:
        terms, rhs = ids.identity(n)
        res = verify_bracket_identity(terms, rhs, tj)
        add("residual of identity (%s) equals its closed form" % n, "residual-%s" % n,
            res == ids.residual_closed_form(n).evaluate(tj))
        sym = verify_symbolic(terms, rhs)
        add("symbolic residual of identity (%s), kappa free" % n, "pbw-%s" % n,
            sym == reduce(ids.residual_closed_form(n)) and sym.evaluate(tj) == res, str(sym))
        if n == "c":
            sub = substitute_s2(res, ids.js_value().subs(kappa=tj.kappa).to_polyac(0))
            add("with s^2 eliminated, residual is minus the cubic constraint", "constraint-c",
                sub == -ids.CC1_OPERATOR.evaluate(tj))
    iu = GaussRational(0, 1)
    if theorem == "2" and tj.twoj >= 2:
        me = matrix_element(ids.B_OPERATOR.evaluate(tj), tj.j, tj.j - 1, tj)
        want = iu * (Fraction(1, 2) - tj.j) * sqrt_rational(2 * tj.j)
        add("<j,j|2J2J3 - iJ1|j,j-1> = i(1/2 - j)sqrt(2j)", "matrix-element",
            me == PolyAC.const(want), render(want))
    if theorem == "5" and tj.twoj >= 4:
        me = matrix_element(ids.X_OPERATOR.evaluate(tj), tj.j - 2, tj.j, tj)
        want = GaussRational(0, Fraction(-1, 2)) * (1 - tj.j) * sqrt_rational(tj.j * (2 * tj.j - 1))
        add("<j,j-2|X|j,j> = (1/2i)(1 - j)sqrt(j(2j - 1))", "matrix-element",
            me == PolyAC.const(want), render(want))
    return steps


def cmd_verify_quantum(args, rep):
    from ..spinrep import TwoJ
    tj = TwoJ.parse(args.j)
    rep.steps.extend(_quantum_steps(tj, args.theorem))


def _nogo_one(job):
    from ..nogo import run_theorem2, run_theorem5
    twoj, theorem = job
    r = (run_theorem2 if theorem == "2" else run_theorem5)(twoj)
    return twoj, theorem, r.verdict, [s.as_dict() for s in r.steps]


def cmd_nogo(args, rep):
    from ..nogo import CONTRADICTION, TRIVIAL
    from ..spinrep import TwoJ
    top = TwoJ.parse(args.jmax)
    jobs = [(tj, th) for tj in range(top.twoj + 1) for th in ("2", "5")]
    summary = {}
    for twoj, th, verdict, steps in sorted(_pmap(_nogo_one, jobs)):
        label = str(TwoJ(twoj))
        for s in steps:
            s = dict(s)
            s["anchor"] = "j=%s/%s" % (label, s["anchor"])
            rep.steps.append(s)
        want = TRIVIAL if twoj == 0 else CONTRADICTION
        rep.step("theorem %s at j=%s: %s" % (th, label, verdict), "j=%s/thm%s/verdict" % (label, th),
                 verdict == want, "expected %s" % want)
        summary.setdefault(label, {})[th] = verdict
    rep.result = summary


def _appendixb_l(l):
    from ..clebsch import (bracket_coeffs_direct, bracket_coeffs_recursion, cg, cg_l_l_00,
                           cg_stretched, nonvanishing_report)
    from ..nogo import adjoint_irreducibility
    steps = []

    def add(desc, anchor, ok, detail=""):
        steps.append({"desc": desc, "anchor": "l=%d/%s" % (l, anchor),
                      "verdict": "pass" if ok else "fail", "detail": str(detail)})

    bad = [j for j in range(1, 2 * l + 1)
           if bracket_coeffs_recursion(l, j).y != bracket_coeffs_direct(l, l - j, l)]
    add("recursion equals direct bracket decomposition for all j", "oracle", not bad,
        "mismatch at j=%s" % bad if bad else "%d values of j" % (2 * l))
    ok00 = all(cg_l_l_00(l, k) == cg(l, l, 0, 0, 2 * k, 0) for k in range(0, l + 1))
    oks = all(cg_stretched(l, j, k) == cg(l, l, l - j + 1, l, 2 * k, 2 * l - j + 1)
              for j in range(1, 2 * l + 1) for k in range(1, l + 1)
              if abs(2 * l - j + 1) <= 2 * k)
    add("closed-form <l l 0 0|2k 0> equals Racah", "cg-00", ok00)
    add("closed-form stretched coefficients equal Racah", "cg-stretched", oks)
    rpt = nonvanishing_report(l)
    add("top coefficient y_{2l-1}(l-1, l) is nonzero", "top", rpt["top_coefficient_nonzero"])
    add("coefficients vanish for 2k-1 <= 2l-j-2", "vanishing", rpt["vanishing_below_threshold"])
    add("backward recursion solved by the alternating sum", "closed-form",
        rpt["closed_form_solution"])
    if l >= 5:
        add("nonzero on the stated range wherever Y_{2k-1}^{2l-j} exists", "range",
            rpt["stated_range_selection_rule_nonzero"] and rpt["stated_range_exceptions_vanish"],
            "boundary points with 2k-1 < 2l-j (forced zero): %s" % rpt["stated_range_exceptions"])
        add("alternating terms strictly increase", "growth", rpt["alternating_terms_increase"],
            "%d ratios" % rpt["alternating_ratios_checked"])
    adj = adjoint_irreducibility(l)
    add("brackets with S_i span H_l", "adjoint", adj["spans"], "dimension %s" % adj["dimension"])
    return l, steps


def cmd_appendixb(args, rep):
    from ..clebsch import admissible_grid, ratio_bound_check, ratio_grid_maximum
    for l, steps in sorted(_pmap(_appendixb_l, range(1, args.lmax + 1))):
        rep.steps.extend(steps)
    grid = list(admissible_grid(args.ratio_lmax))
    ok = all(ratio_bound_check(l, k) for l, k in grid)
    rep.step("ratio below 1 on the admissible grid", "ratio/bound", ok,
             "%d grid points, l <= %d" % (len(grid), args.ratio_lmax))
    mx, at = ratio_grid_maximum(args.ratio_lmax)
    rep.step("grid maximum of the ratio", "ratio/max", str(mx) == "18/25", "%s at %s" % (mx, at))


def cmd_selftest(args, rep):
    from ..properties import run_all
    for suite, name, ok, detail in run_all():
        rep.step(name, "selftest/%s" % suite, ok, detail)


COMMANDS = {
    "bracket": cmd_bracket, "hdecomp": cmd_hdecomp, "cg": cmd_cg, "ylbracket": cmd_ylbracket,
    "verify-classical": cmd_verify_classical, "verify-quantum": cmd_verify_quantum,
    "nogo": cmd_nogo, "appendixb": cmd_appendixb, "selftest": cmd_selftest,
}


def build_parser():
    p = argparse.ArgumentParser(prog="s2quant", description="Exact checks of the sphere no-go argument.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)
    b = sub.add_parser("bracket", help="canonical Poisson bracket of two expressions")
    b.add_argument("f")
    b.add_argument("g")
    h = sub.add_parser("hdecomp", help="harmonic decomposition")
    h.add_argument("expr")
    c = sub.add_parser("cg", help="Clebsch-Gordan coefficient <l1 l2 m1 m2|L M>")
    for name in ("l1", "l2", "m1", "m2", "L", "M"):
        c.add_argument(name, type=int)
    y = sub.add_parser("ylbracket", help="recursion vs direct coefficients of {Y_l^(l-j), Y_l^l}")
    y.add_argument("--l", type=int, required=True)
    y.add_argument("--j", type=int, required=True)
    v = sub.add_parser("verify-classical", help="the four classical bracket identities")
    v.add_argument("--identity", choices=("a", "b", "c", "d", "all"), default="all")
    q = sub.add_parser("verify-quantum", help="quantum residuals at one spin")
    q.add_argument("--j", required=True, help="spin, e.g. 3/2")
    q.add_argument("--theorem", choices=("2", "5"), required=True)
    n = sub.add_parser("nogo", help="run both no-go drivers for j = 0, 1/2, ..., jmax")
    n.add_argument("--jmax", required=True)
    a = sub.add_parser("appendixb", help="recursion, oracle and non-vanishing suite")
    a.add_argument("--lmax", type=int, required=True)
    a.add_argument("--ratio-lmax", type=int, default=40)
    sub.add_parser("selftest", help="run all property suites")
    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return p


def dispatch(command, args):
    """Run one command; returns ``(exit_code, report_dict)``."""
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    rep = Report(command, params)
    try:
        COMMANDS[command](args, rep)
    except (ParseError, EvalError, ValueError, ArithmeticError) as exc:
        rep.error = str(exc)
        rep.steps.append({"desc": "input rejected", "anchor": "%s/input" % command,
                          "verdict": "fail", "detail": str(exc)})
        return 2, rep.as_dict()
    return (0 if rep.ok else 1), rep.as_dict()


def _text(report):
    lines = []
    if "result" in report:
        res = report["result"]
        if isinstance(res, dict):
            for k, v in res.items():
                lines.append("%s: %s" % (k, v if not isinstance(v, dict) else
                                         ", ".join("%s=%s" % kv for kv in v.items())))
        else:
            lines.append(str(res))
    if report["command"] not in ("bracket", "cg") or report["verdict"] != "pass":
        for s in report["steps"]:
            lines.append("[%s] %s: %s%s" % (s["verdict"].upper(), s["anchor"], s["desc"],
                                             " (%s)" % s["detail"] if s["detail"] else ""))
        nfail = sum(s["verdict"] != "pass" for s in report["steps"])
        lines.append("verdict: %s (%d steps, %d failed)" % (report["verdict"],
                                                            len(report["steps"]), nfail))
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    code, report = dispatch(args.command, args)
    if args.format == "json":
        out = json.dumps(report, indent=2, ensure_ascii=False)
    else:
        out = _text(report)
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
