"""Expression language for the command line.

Grammar (whitespace-insensitive)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ("^" exponent)?
    exponent:= INT | "(" "-"? NUMBER ")"
    atom    := NUMBER | "i" | SYMBOL | "(" expr ")" | sqrt(expr) | Y(int, int) | pb(expr, expr)

NUMBER is an integer or a rational literal such as ``3/4``.  Exponents in
parentheses may be negative or fractional so that printed coefficients like
``pi^(-1/2)`` read back in.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["ParseError", "Num", "Imag", "Sym", "Add", "Sub", "Mul", "Neg", "Pow", "Call",
           "parse", "to_text", "evaluate", "SYMBOLS", "EvalError"]

SYMBOLS = ("S1", "S2", "S3", "s", "pi", "a", "c")
FUNCTIONS = {"sqrt": 1, "Y": 2, "pb": 2}


class ParseError(ValueError):
    def __init__(self, msg, line, col):
        super().__init__("line %d, col %d: %s" % (line, col, msg))
        self.msg = msg
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: Fraction


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# -- lexer ----------------------------------------------------------------------

_TOKEN = re.compile(r"(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),])")
_SPACE = re.compile(r"\s*")


def _tokens(text):
    def where(p):
        return text.count("\n", 0, p) + 1, p - (text.rfind("\n", 0, p) + 1) + 1

    out = []
    pos = _SPACE.match(text).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r" % text[pos], *where(pos))
        out.append((m.lastgroup, m.group(), *where(pos)))
        pos = _SPACE.match(text, m.end()).end()
    out.append(("end", "", *where(len(text))))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def expect(self, op):
        t = self.peek()
        if t[0] != "op" or t[1] != op:
            self.error("expected %r, found %s" % (op, repr(t[1]) if t[1] else "end of input"))
        return self.take()

    def at(self, op):
        t = self.peek()
        return t[0] == "op" and t[1] == op

    def parse(self):
        e = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected %r" % self.peek()[1])
        return e

    def expr(self):
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self):
        left = self.unary()
        while self.at("*"):
            self.take()
            left = Mul(left, self.unary())
        return left

    def unary(self):
        if self.at("-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.take()
            return Pow(base, self.exponent())
        return base

    def exponent(self):
        t = self.peek()
        if t[0] == "num":
            self.take()
            v = Fraction(t[1])
            if v.denominator != 1:
                self.error("fractional exponents must be parenthesized", t)
            return v
        if self.at("("):
            self.take()
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            t = self.peek()
            if t[0] != "num":
                self.error("expected a number in exponent")
            self.take()
            self.expect(")")
            return sign * Fraction(t[1])
        self.error("expected an exponent")

    def signed_int(self):
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        t = self.peek()
        if t[0] != "num" or "/" in t[1]:
            self.error("expected an integer")
        self.take()
        return sign * int(t[1])

    def atom(self):
        t = self.peek()
        kind, val = t[0], t[1]
        if kind == "num":
            self.take()
            return Num(Fraction(val))
        if kind == "name":
            self.take()
            if val in FUNCTIONS:
                self.expect("(")
                if val == "Y":
                    l = self.signed_int()
                    self.expect(",")
                    m = self.signed_int()
                    self.expect(")")
                    return Call("Y", (l, m))
                args = [self.expr()]
                for _ in range(FUNCTIONS[val] - 1):
                    self.expect(",")
                    args.append(self.expr())
                self.expect(")")
                return Call(val, tuple(args))
            if val == "i":
                return Imag()
            if val in SYMBOLS:
                return Sym(val)
            self.error("unknown symbol %r" % val, t)
        if kind == "op" and val == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        self.error("unexpected %s" % (repr(val) if val else "end of input"))


def parse(text):
    """Parse an expression; raises ParseError carrying line and column."""
    return _Parser(text).parse()


# -- printer ----------------------------------------------------------------------

def _prec(e):
    if isinstance(e, (Add, Sub)):
        return 1
    if isinstance(e, Mul):
        return 2
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Pow):
        return 4
    return 5


def _wrap(e, need):
    s = to_text(e)
    return s if _prec(e) >= need else "(" + s + ")"


def _frac(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def to_text(e):
    """Print with the fewest parentheses that parse back to the same tree."""
    if isinstance(e, Num):
        return _frac(e.value)
    if isinstance(e, Imag):
        return "i"
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Add):
        return "%s + %s" % (_wrap(e.left, 1), _wrap(e.right, 2))
    if isinstance(e, Sub):
        return "%s - %s" % (_wrap(e.left, 1), _wrap(e.right, 2))
    if isinstance(e, Mul):
        return "%s*%s" % (_wrap(e.left, 2), _wrap(e.right, 3))
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, 3)
    if isinstance(e, Pow):
        x = e.exp
        ex = _frac(x) if x.denominator == 1 and x >= 0 else "(%s)" % _frac(x)
        base = e.base
        if isinstance(base, Num) and base.value.denominator != 1:
            return "(%s)^%s" % (to_text(base), ex)
        return "%s^%s" % (_wrap(base, 5), ex)
    if isinstance(e, Call):
        if e.name == "Y":
            return "Y(%d,%d)" % e.args
        return "%s(%s)" % (e.name, ", ".join(to_text(a) for a in e.args))
    raise TypeError("not an expression: %r" % (e,))


# -- evaluation -------------------------------------------------------------------

def evaluate(e):
    """Evaluate to a Poly3 representative (brackets and harmonics canonicalized).

    The quantization constants a and c have no classical value and are rejected.
    """
    from ..exactnum import GaussRational, pi_power, s_power, sqrt_rational, to_rational
    from ..harmonics import ylm
    from ..sphere_poly import Poly3, canonicalize, poisson

    def ev(x):
        if isinstance(x, Num):
            return Poly3.const(x.value)
        if isinstance(x, Imag):
            return Poly3.const(GaussRational(0, 1))
        if isinstance(x, Sym):
            if x.name in ("S1", "S2", "S3"):
                return Poly3.var(int(x.name[1]) - 1)
            if x.name == "s":
                return Poly3.const(s_power(1))
            if x.name == "pi":
                return Poly3.const(pi_power(2))
            raise EvalError("symbol %s has no classical value" % x.name)
        if isinstance(x, Add):
            return ev(x.left) + ev(x.right)
        if isinstance(x, Sub):
            return ev(x.left) - ev(x.right)
        if isinstance(x, Mul):
            return ev(x.left) * ev(x.right)
        if isinstance(x, Neg):
            return -ev(x.operand)
        if isinstance(x, Pow):
            return _power(x, ev(x.base))
        if isinstance(x, Call):
            if x.name == "Y":
                l, m = x.args
                try:
                    return Poly3._from_terms(dict(ylm(l, m).poly.terms))
                except ValueError as exc:
                    raise EvalError(str(exc))
            if x.name == "pb":
                f, g = (canonicalize(ev(a)) for a in x.args)
                return Poly3._from_terms(dict(poisson(f, g).terms))
            if x.name == "sqrt":
                v = ev(x.args[0])
                if not v.is_constant():
                    raise EvalError("sqrt needs a constant argument")
                q = to_rational(v.constant_term())
                if q is None or q < 0:
                    raise EvalError("sqrt needs a nonnegative rational argument")
                return Poly3.const(sqrt_rational(q))
        raise EvalError("cannot evaluate %r" % (x,))

    def _power(x, base):
        n = x.exp
        if n.denominator == 1 and n >= 0:
            return base ** int(n)
        if isinstance(x.base, Sym) and x.base.name == "pi" and (2 * n).denominator == 1:
            return Poly3.const(pi_power(int(2 * n)))
        if isinstance(x.base, Sym) and x.base.name == "s" and n.denominator == 1:
            return Poly3.const(s_power(int(n)))
        if base.is_constant() and n.denominator == 1 and base.constant_term().is_single_term():
            return Poly3.const(base.constant_term().inverse() ** int(-n))
        raise EvalError("exponent %s is only allowed on pi, s or a nonzero monomial constant"
                        % _frac(n))

    return ev(e)
