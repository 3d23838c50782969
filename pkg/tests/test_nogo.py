import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from s2quant import identities as ids
from s2quant.exactnum import ONE, ZERO, s_power
from s2quant.nogo import (ABORTED, CONTRADICTION, TRIVIAL, adjoint_irreducibility, run_theorem2,
                          run_theorem5, trivial_quantization)
from s2quant.properties import random_poly3
from s2quant.sphere_poly import SpherePoly, canonicalize, poisson
from s2quant.spinrep import TwoJ


def anchors(rep):
    return [s.anchor for s in rep.steps]


@pytest.mark.parametrize("tj", range(13))
@pytest.mark.parametrize("run", [run_theorem2, run_theorem5])
def test_verdicts(run, tj):
    rep = run(TwoJ(tj))
    assert rep.passed
    assert rep.verdict == (TRIVIAL if tj == 0 else CONTRADICTION)
    assert all(s.verdict == "pass" for s in rep.steps)


def test_theorem2_branches():
    half = run_theorem2(TwoJ(1))
    assert "thm2/half-s" in anchors(half)
    three_halves = anchors(run_theorem2(TwoJ(3)))
    assert "thm2/matrix-element" in three_halves
    assert any("branch" in a for a in three_halves)


def test_theorem5_branches():
    assert "thm5/low-spin-s-s" in anchors(run_theorem5(TwoJ(1)))
    one = run_theorem5(TwoJ(2))
    assert "a = -c" in " ".join(s.claim + s.detail for s in one.steps)
    two = run_theorem5(TwoJ(4))
    final = [s for s in two.steps if s.anchor == "thm5/branch-a-final"][0]
    assert "j^2 + j - 3" in final.desc
    assert anchors(two)[-1] == "thm5/irrational-root"


def test_failed_step_aborts(monkeypatch):
    real = ids.residual_closed_form

    def wrong(name, substituted=False):
        return real(name, substituted) * 2
    monkeypatch.setattr(ids, "residual_closed_form", wrong)
    rep = run_theorem2(TwoJ(3))
    assert rep.verdict == ABORTED and not rep.passed
    assert rep.steps[-1].verdict == "fail"


def test_report_dict():
    d = run_theorem5(TwoJ(3)).as_dict()
    assert d["j"] == "3/2" and d["theorem"] == "5" and d["verdict"] == CONTRADICTION
    assert set(d["steps"][0]) == {"desc", "anchor", "verdict", "detail"}


def test_trivial_quantization_examples():
    third = s_power(2) * Fraction(1, 3)
    for i in range(3):
        Si = SpherePoly.var(i)
        assert trivial_quantization(Si * Si) == third
    assert trivial_quantization(SpherePoly.const(ONE)) == ONE


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_brackets_have_no_constant_part(seed):
    rng = random.Random(seed)
    p, q = (canonicalize(random_poly3(rng, 6, 4, True, True)) for _ in range(2))
    assert trivial_quantization(poisson(p, q)) == ZERO


def test_adjoint_irreducibility():
    assert adjoint_irreducibility(0)["dimension"] == 0
    for l in range(1, 9):
        rep = adjoint_irreducibility(l)
        assert rep["spans"] and rep["dimension"] == 2 * l + 1
