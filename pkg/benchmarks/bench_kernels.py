"""Compare the compiled and pure-Python arithmetic kernels.

Micro benchmarks call each kernel module directly; macro benchmarks run a
real workload in a subprocess with the backend forced by environment.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import json
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from s2quant._backend import load

MACRO = {
    "quantum residual, j=6, cubic identity": (
        "from s2quant import identities as I; from s2quant.spinrep import verify_bracket_identity",
        "t, r = I.identity('c'); verify_bracket_identity(t, r, 12)"),
    "harmonic decomposition of {Y_6^3, Y_6^6}": (
        "from s2quant.harmonics import ylm, harmonic_decompose; from s2quant.sphere_poly import poisson",
        "harmonic_decompose(poisson(ylm(6, 3).poly, ylm(6, 6).poly))"),
    "Z/W recursion vs direct, l=6": (
        "from s2quant.clebsch import bracket_coeffs_direct, bracket_coeffs_recursion as r",
        "[r.__wrapped__(6, j) == bracket_coeffs_direct(6, 6 - j, 6) for j in range(1, 13)]"),
}


def micro(mod, repeat):
    G = mod.GaussRational
    xs = [G(Fraction(i, 7), Fraction(3 - i, 5)) for i in range(1, 40)]

    def gauss_ops():
        acc = G(0)
        for x in xs:
            for y in xs:
                acc = acc + x * y
        return acc

    C = mod.Coefficient
    cx = C({(d, p, k): G(d + p, k - 1) for d in (1, 2, 3, 6) for p in (0, 1) for k in (0, 2)})

    def coeff_mul():
        return mod.coeff_mul_terms(cx.terms, cx.terms)

    px = {(a, b, c): G(a - b, c + 1) for a in range(4) for b in range(4) for c in range(2)}

    def poly_mul():
        return mod.poly_mul(px, px)

    out = {}
    for name, fn in (("gauss mul+add 39x39", gauss_ops), ("coefficient product 16x16", coeff_mul),
                     ("poly convolution 32x32", poly_mul)):
        out[name] = min(timeit.repeat(fn, number=20, repeat=repeat)) / 20
    return out


def macro(backend, repeat):
    env = dict(os.environ)
    if backend == "python":
        env["S2QUANT_PURE_PYTHON"] = "1"
    else:
        env.pop("S2QUANT_PURE_PYTHON", None)
    code = ("import json, timeit, sys\n"
            "import s2quant\n"
            "assert s2quant.BACKEND == %r, s2quant.BACKEND\n"
            "cases = %r\n"
            "print(json.dumps({k: min(timeit.repeat(stmt, setup, number=1, repeat=%d))"
            " for k, (setup, stmt) in cases.items()}))\n" % (backend, MACRO, repeat))
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    if res.returncode:
        raise RuntimeError(res.stderr)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    try:
        load("cython")
        backends = ("python", "cython")
    except ImportError:
        print("compiled kernel not built; only the Python backend is timed")
        backends = ("python",)
    results = {b: {} for b in backends}
    for b in backends:
        results[b].update(micro(load(b), args.repeat))
        results[b].update(macro(b, args.repeat))
    width = max(len(k) for k in results["python"])
    print("%-*s %12s %12s %8s" % (width, "case", "python [s]", "cython [s]", "speedup"))
    for k, t in results["python"].items():
        c = results.get("cython", {}).get(k)
        print("%-*s %12.6f %12s %8s" % (width, k, t, "%.6f" % c if c else "-",
                                         "%.2fx" % (t / c) if c else "-"))


if __name__ == "__main__":
    main()
