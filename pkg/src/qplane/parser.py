"""Recursive descent parser for the published expression grammar.

Atoms are either scalar symbols (r, q, q12, qa1, hbar, i, s2, lam, mu,
lamt, mut, integers) or generator letters (x1, dx1, v, u, z, pd1, pdot,
pcirc, X1, dX1, P1, om, ...).  Operators: + - * / ^ and parentheses;
juxtaposition is not multiplication.  '/' is exact scalar division, which
the canonical printer uses for rational functions.
"""

import re
from fractions import Fraction

from .algebra import Element
from .errors import ExprSyntaxError
from .scalar import Scalar

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<int>\d+)|"
                    r"(?P<op>[-+*/^()]))")

_PLANE_LETTERS = ("x", "dx", "pd")
_BIG_LETTERS = ("X", "dX", "P")


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if m is None or m.lastgroup is None:
                raise ExprSyntaxError("unexpected character %r" % text[pos],
                                      pos + 1)
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind) + 1))
            pos = m.end()
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else (None, None, len(self.text) + 1)

    def next(self):
        tok = self.peek()
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val, col = self.next()
        if kind != "op" or val != op:
            raise ExprSyntaxError("expected %r" % op, col)


class ExpressionParser:
    """Parses into Element over a context; scalar-only mode available."""

    def __init__(self, ctx, allow_letters=True, max_index=None):
        self.ctx = ctx
        self.allow_letters = allow_letters
        self.max_index = max_index if max_index is not None else ctx.N

    # -- atom tables -----------------------------------------------------------

    def _scalar_atom(self, name):
        ctx = self.ctx
        if name == "r":
            return ctx.r
        if name == "hbar":
            return ctx.hbar
        if name == "i":
            return ctx.i
        if name == "s2":
            return ctx.s2
        if name == "lam":
            return ctx.lam
        if name == "mu":
            return ctx.mu
        if name == "q":
            return ctx.q_pair(1, 2)
        if name in ("lamt", "mut"):
            q = ctx.q_pair(1, 2)
            rq = ctx.r / q
            return rq - q / ctx.r if name == "lamt" else rq + q / ctx.r
        m = re.fullmatch(r"q(\d)(\d)", name)
        if m:
            return ctx.q_pair(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"qa(\d+)", name)
        if m:
            return ctx.q_dot(int(m.group(1)))
        return None

    def _letter_atom(self, name):
        if name == "v":
            return ("v", 1)
        if name == "u":
            return ("v", -1)
        if name in ("z", "dv", "du", "dz", "pdot", "pcirc", "om",
                    "wdot", "wcirc", "chidot", "chicirc"):
            return (name, 0)
        m = re.fullmatch(r"(dx|dX|x|X|pd|P|w|chi)(\d+)", name)
        if m:
            kind, idx = m.group(1), int(m.group(2))
            if not 1 <= idx <= self.max_index:
                return "badindex"
            return (kind, idx)
        return None

    # -- grammar ---------------------------------------------------------------

    def parse(self, text):
        toks = _Tokens(text)
        value = self._expr(toks)
        kind, val, col = toks.peek()
        if kind is not None:
            raise ExprSyntaxError("unexpected trailing input", col)
        return value

    def _expr(self, toks):
        value = self._term(toks)
        while True:
            kind, val, col = toks.peek()
            if kind == "op" and val in "+-":
                toks.next()
                rhs = self._term(toks)
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def _term(self, toks):
        negate = False
        while True:
            kind, val, col = toks.peek()
            if kind == "op" and val == "-":
                toks.next()
                negate = not negate
            else:
                break
        value = self._factor(toks)
        while True:
            kind, val, col = toks.peek()
            if kind == "op" and val in "*/":
                toks.next()
                rhs = self._factor(toks)
                if val == "*":
                    value = value * rhs
                else:
                    value = self._divide(value, rhs, col)
            else:
                break
        return -value if negate else value

    def _divide(self, value, rhs, col):
        if isinstance(rhs, Element):
            if len(rhs.terms) == 1 and () in rhs.terms:
                rhs = rhs.terms[()]
            else:
                raise ExprSyntaxError("division by a non-scalar", col)
        if rhs.is_zero():
            raise ExprSyntaxError("division by zero", col)
        return value * rhs.inverse() if isinstance(value, Scalar) \
            else value.scale(rhs.inverse())

    def _factor(self, toks):
        value = self._atom(toks)
        kind, val, col = toks.peek()
        if kind == "op" and val == "^":
            toks.next()
            expo = self._exponent(toks)
            try:
                return value ** expo
            except Exception as exc:
                raise ExprSyntaxError("bad power: %s" % exc, col)
        return value

    def _exponent(self, toks):
        kind, val, col = toks.next()
        sign = 1
        if kind == "op" and val == "-":
            sign = -1
            kind, val, col = toks.next()
        if kind == "int":
            return sign * int(val)
        if kind == "op" and val == "(":
            inner_sign = 1
            kind, val, col = toks.next()
            if kind == "op" and val == "-":
                inner_sign = -1
                kind, val, col = toks.next()
            if kind != "int":
                raise ExprSyntaxError("expected integer exponent", col)
            num = int(val)
            kind, val, col = toks.peek()
            if kind == "op" and val == "/":
                toks.next()
                kind, val, col = toks.next()
                if kind != "int":
                    raise ExprSyntaxError("expected integer denominator", col)
                frac = Fraction(num, int(val))
            else:
                frac = Fraction(num)
            toks.expect_op(")")
            frac *= sign * inner_sign
            return int(frac) if frac.denominator == 1 else frac
        raise ExprSyntaxError("expected exponent", col)

    def _atom(self, toks):
        kind, val, col = toks.next()
        if kind == "int":
            return self.ctx.from_int(int(val))
        if kind == "op" and val == "(":
            value = self._expr(toks)
            nkind, nval, ncol = toks.next()
            if nkind != "op" or nval != ")":
                raise ExprSyntaxError("expected ')'", ncol)
            return value
        if kind == "name":
            s = self._scalar_atom(val)
            if s is not None:
                return s
            if self.allow_letters:
                letter = self._letter_atom(val)
                if letter == "badindex":
                    raise ExprSyntaxError("index out of range in %r" % val, col)
                if letter is not None:
                    return Element.letter(self.ctx, letter[0], letter[1])
            raise ExprSyntaxError("unknown name %r" % val, col)
        if kind is None:
            raise ExprSyntaxError("unexpected end of input", col)
        raise ExprSyntaxError("unexpected token %r" % val, col)


def parse_element(text, ctx, max_index=None):
    value = ExpressionParser(ctx, max_index=max_index).parse(text)
    if isinstance(value, Scalar):
        elem = Element(ctx)
        if not value.is_zero():
            elem.terms[()] = value
        return elem
    return value


def parse_scalar(text, ctx):
    value = ExpressionParser(ctx, allow_letters=False).parse(text)
    if isinstance(value, Element):
        raise ExprSyntaxError("expected a scalar expression", 1)
    return value


def scalar_to_coeff(s):
    """Extract the constant Coeff from a symbol-free scalar."""
    from .errors import DomainError
    zero = (0,) * s.ctx.nsym
    if set(s.num) - {zero} or set(s.den) - {zero}:
        raise DomainError("scalar is not constant")
    num = s.num.get(zero)
    den = s.den.get(zero)
    if num is None:
        from .scalar import C_ZERO
        return C_ZERO
    return num * den.inv()
