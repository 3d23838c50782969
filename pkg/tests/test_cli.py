import json
import shutil
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from s2quant.cli.expr import (Add, Call, EvalError, Imag, Mul, Neg, Num, ParseError, Pow, Sub,
                              Sym, evaluate, parse, to_text)
from s2quant.cli.main import build_parser, dispatch, main
from s2quant.cli.schema import REPORT_SCHEMA
from s2quant.exactnum import s_power
from s2quant.sphere_poly import Poly3


def run(*argv):
    args = build_parser().parse_args(list(argv))
    code, report = dispatch(args.command, args)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert (code == 0) == all(s["verdict"] == "pass" for s in report["steps"])
    return code, report


# -- parser ------------------------------------------------------------------------

def test_parse_examples():
    S1, S2 = Sym("S1"), Sym("S2")
    e = parse("pb(S1^2 - S2^2, S1*S2)")
    assert e == Call("pb", (Sub(Pow(S1, Fraction(2)), Pow(S2, Fraction(2))), Mul(S1, S2)))
    assert parse("s^2*S3") == Mul(Pow(Sym("s"), Fraction(2)), Sym("S3"))
    assert parse("Y(3,2)") == Call("Y", (3, 2))


def test_precedence_and_associativity():
    a, b, c = Sym("S1"), Sym("S2"), Sym("S3")
    assert parse("S1 - S2 - S3") == Sub(Sub(a, b), c)
    assert parse("S1 + S2*S3^2") == Add(a, Mul(b, Pow(c, Fraction(2))))
    assert parse("-S1^2") == Neg(Pow(a, Fraction(2)))
    assert parse(" 3/4 *\n i ") == Mul(Num(Fraction(3, 4)), Imag())
    assert parse("pi^(-1/2)") == Pow(Sym("pi"), Fraction(-1, 2))


@pytest.mark.parametrize("text,line,col", [
    ("S1 +", 1, 5),
    ("S1 * (S2", 1, 9),
    ("S1\n  + $", 2, 5),
    ("S1^x", 1, 4),
    ("Y(1/2, 0)", 1, 3),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.col) == (line, col)


def test_unknown_symbol():
    with pytest.raises(ParseError) as err:
        parse("S1 + S4")
    assert "S4" in str(err.value) and err.value.col == 6


def _exprs():
    nums = st.fractions(min_value=0, max_value=50, max_denominator=9).map(Num)
    leaves = st.one_of(nums, st.just(Imag()), st.sampled_from(
        ["S1", "S2", "S3", "s", "pi", "a", "c"]).map(Sym),
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)).map(lambda t: Call("Y", t)))
    exps = st.one_of(st.integers(0, 6).map(Fraction),
                     st.fractions(min_value=-5, max_value=5, max_denominator=4))

    def grow(inner):
        return st.one_of(
            st.builds(Add, inner, inner), st.builds(Sub, inner, inner),
            st.builds(Mul, inner, inner), st.builds(Neg, inner),
            st.builds(Pow, inner, exps),
            inner.map(lambda e: Call("sqrt", (e,))),
            st.tuples(inner, inner).map(lambda t: Call("pb", t)))
    return st.recursive(leaves, grow, max_leaves=12)


@settings(max_examples=500)
@given(_exprs())
def test_round_trip(e):
    text = to_text(e)
    assert parse(text) == e
    assert to_text(parse(text)) == text


def test_evaluate():
    x, y, z = (Poly3.var(i) for i in range(3))
    assert evaluate(parse("s^2*S3")) == Poly3.const(s_power(2)) * z
    assert evaluate(parse("pb(S1, S2)")).as_sphere() == z.as_sphere()
    with pytest.raises(EvalError):
        evaluate(parse("a*S1"))
    with pytest.raises(EvalError):
        evaluate(parse("S1^(1/2)"))


# -- commands ------------------------------------------------------------------------

def test_bracket_command():
    code, rep = run("bracket", "S1^2 - S2^2", "S1*S2")
    assert code == 0
    assert rep["result"] == "2*S1^2*S3 + 2*S2^2*S3"


def test_cg_command():
    code, rep = run("cg", "1", "1", "0", "0", "2", "0")
    assert code == 0 and rep["result"] == "sqrt(2/3)"


def test_hdecomp_command():
    code, rep = run("hdecomp", "S3^2")
    assert code == 0 and set(rep["result"]) == {"0", "2"}


def test_ylbracket_command():
    code, rep = run("ylbracket", "--l", "4", "--j", "3")
    assert code == 0


@pytest.mark.parametrize("ident", "abcd")
def test_verify_classical(ident):
    assert run("verify-classical", "--identity", ident)[0] == 0


@pytest.mark.parametrize("j,thm", [("1/2", "2"), ("3/2", "5"), ("2", "2"), ("6", "5")])
def test_verify_quantum(j, thm):
    assert run("verify-quantum", "--j", j, "--theorem", thm)[0] == 0


def test_nogo_command(monkeypatch):
    monkeypatch.setenv("NOGO_THREADS", "1")
    code, rep = run("nogo", "--jmax", "3/2")
    assert code == 0 and rep["verdict"] == "pass"


def test_selftest_command():
    code, rep = run("selftest")
    assert code == 0 and len(rep["steps"]) >= 15


@pytest.mark.parametrize("argv", [
    ["bracket", "S1 +", "S2"],
    ["bracket", "a*S1", "S2"],
    ["cg", "1", "1", "2", "0", "2", "2"],
    ["verify-quantum", "--j", "1/3", "--theorem", "2"],
    ["ylbracket", "--l", "2", "--j", "9"],
])
def test_input_errors_exit_2(argv):
    code, rep = run(*argv)
    assert code == 2 and rep["verdict"] == "error"


def test_main_text_and_json(capsys):
    assert main(["cg", "1", "1", "0", "0", "2", "0"]) == 0
    assert capsys.readouterr().out.strip() == "sqrt(2/3)"
    assert main(["--format", "json", "bracket", "S1", "S2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["result"] == "S3"
    assert main(["verify-classical", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["command"] == "verify-classical"


def test_console_script():
    exe = shutil.which("s2quant")
    cmd = [exe] if exe else [sys.executable, "-m", "s2quant"]
    res = subprocess.run(cmd + ["--format", "json", "bracket", "S1 +", "S2"],
                         capture_output=True, text=True)
    assert res.returncode == 2
    jsonschema.validate(json.loads(res.stdout), REPORT_SCHEMA)
