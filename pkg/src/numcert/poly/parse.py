"""Text <-> Polynomial conversion.

Grammar (precedence low to high)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom (("^" | "**") INTEGER)?
    atom   := NUMBER | NAME | "ii" | "(" expr ")"

Division is only allowed by a nonzero constant.  ``ii`` is the imaginary unit
unless it is itself declared as a variable name.
"""

from __future__ import annotations

import re
import warnings
from fractions import Fraction
from typing import List, Sequence

from .polynomial import Polynomial
from .scalar import GaussianRational, Mode


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}"
                         + (f": {text[:position]}<!>{text[position:]}" if text else ""))


class UnknownVariableError(PolySyntaxError):
    pass


class InexactConversionWarning(UserWarning):
    """A rational literal was rounded to floating point in approximate mode."""


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*/^()])
""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str], mode: Mode):
        self.text = text
        self.names = {name: j for j, name in enumerate(names)}
        self.n = len(names)
        self.mode = mode
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, tok[2], self.text)

    def const(self, value) -> Polynomial:
        return Polynomial.constant(value, self.n, self.mode)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op_tok = self.take()
            q = self.unary()
            if op_tok[1] == "*":
                p = p * q
            else:
                p = self._divide(p, q, op_tok)
        return p

    def _divide(self, p: Polynomial, q: Polynomial, tok) -> Polynomial:
        if not q.is_constant() or q.is_zero():
            self.fail("division only by a nonzero constant", tok)
        d = next(iter(q.terms.values()))
        if self.mode is Mode.EXACT:
            return p.scale(GaussianRational(1) / d)
        inexact = False
        out = {}
        for m, c in p.terms.items():
            v = c / d
            if d.imag != 0:
                inexact = True
            else:
                for part, res in ((c.real, v.real), (c.imag, v.imag)):
                    if Fraction(part) / Fraction(d.real) != Fraction(res):
                        inexact = True
            out[m] = v
        if inexact:
            warnings.warn(f"rational literal at position {tok[2]} rounded to floating point",
                          InexactConversionWarning, stacklevel=4)
        return Polynomial(self.n, out, self.mode)

    def unary(self) -> Polynomial:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            self.take()
            tok = self.take()
            if tok[0] != "num" or not tok[1].isdigit():
                self.fail("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            if self.mode is Mode.EXACT:
                return self.const(GaussianRational(Fraction(val)))
            return self.const(complex(float(val)))
        if kind == "name":
            if val in self.names:
                return Polynomial.variable(self.names[val], self.n, self.mode)
            if val == "ii":
                return self.const(GaussianRational(0, 1) if self.mode is Mode.EXACT else 1j)
            raise UnknownVariableError(f"unknown variable {val!r}", pos, self.text)
        if val == "(":
            p = self.expr()
            if self.take()[1] != ")":
                self.fail("expected ')'", self.tokens[self.i - 1])
            return p
        self.fail(f"unexpected token {val!r}" if val else "unexpected end of input", tok)


def parse_polynomial(text: str, var_names: Sequence[str], mode: Mode | str = Mode.APPROX) -> Polynomial:
    """Parse ``text`` into the canonical sparse form over ``var_names``."""
    return _Parser(text, list(var_names), Mode(mode)).parse()


def parse_scalar(text: str, mode: Mode | str = Mode.APPROX):
    """Parse a constant expression such as ``-1.27202*ii`` or ``7/2``."""
    mode = Mode(mode)
    p = parse_polynomial(text, [], mode)
    if p.is_zero():
        return GaussianRational(0) if mode is Mode.EXACT else 0j
    return p.terms[()]


def _format_real(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return repr(float(v))


def format_scalar(c) -> str:
    """Render a coefficient so that :func:`parse_scalar` reads it back exactly."""
    if isinstance(c, GaussianRational):
        re_, im_ = c.re, c.im
    else:
        re_, im_ = c.real, c.imag
    if im_ == 0:
        return _format_real(re_)
    if re_ == 0:
        return f"{_format_real(im_)}*ii"
    sign = "-" if im_ < 0 else "+"
    return f"({_format_real(re_)} {sign} {_format_real(abs(im_))}*ii)"


def _is_unit(c) -> int:
    if isinstance(c, GaussianRational):
        if c.im == 0 and abs(c.re) == 1:
            return 1 if c.re > 0 else -1
        return 0
    if c.imag == 0 and abs(c.real) == 1.0:
        return 1 if c.real > 0 else -1
    return 0


def _is_negative_real(c) -> bool:
    if isinstance(c, GaussianRational):
        return c.im == 0 and c.re < 0
    return c.imag == 0 and c.real < 0


def default_names(n: int) -> List[str]:
    return [f"x{j + 1}" for j in range(n)]


def format_polynomial(p: Polynomial, var_names: Sequence[str] | None = None) -> str:
    names = list(var_names) if var_names is not None else default_names(p.num_vars)
    if len(names) != p.num_vars:
        raise ValueError("wrong number of variable names")
    if p.is_zero():
        return "0"
    pieces = []
    for k, (m, c) in enumerate(p.terms.items()):
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        neg = _is_negative_real(c)
        mag = -c if neg else c
        unit = _is_unit(mag)
        if factors:
            body = "*".join(factors) if unit == 1 else f"{format_scalar(mag)}*" + "*".join(factors)
        else:
            body = format_scalar(mag)
        if k == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)
