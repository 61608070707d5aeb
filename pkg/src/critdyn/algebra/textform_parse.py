"""Recursive-descent parser for polynomial and rational-function text.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Coefficients are exact: ``2/3*z`` parses to the rational 2/3 times z.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .mpoly import MPoly


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


@dataclass
class RatFunc:
    """Quotient of two polynomials; no gcd cancellation is attempted."""

    num: MPoly
    den: MPoly

    def __add__(self, o):
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero expression")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __pow__(self, n: int):
        if n >= 0:
            return RatFunc(self.num**n, self.den**n)
        if self.num.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return RatFunc(self.den ** (-n), self.num ** (-n))


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        start = m.start(m.lastindex)
        kind = ("int", "name", "op")[m.lastindex - 1]
        val = m.group(m.lastindex)
        if val == "**":
            val = "^"
        toks.append((kind, val, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, val):
        t = self.take()
        if t[1] != val:
            raise ParseError(f"expected {val!r}, found {t[1] or 'end of input'!r}", t[2], self.text)

    def parse(self) -> RatFunc:
        r = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2], self.text)
        return r

    def expr(self):
        r = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            r = r + rhs if op == "+" else r - rhs
        return r

    def term(self):
        r = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            pos = self.peek()[2]
            rhs = self.unary()
            if op == "*":
                r = r * rhs
            else:
                if rhs.num.is_zero():
                    raise ParseError("division by zero", pos, self.text)
                r = r / rhs
        return r

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            r = self.unary()
            return -r if t[1] == "-" else r
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            t = self.take()
            if t[0] == "int":
                n = int(t[1])
            elif t[1] == "(":
                inner = self.take()
                neg = False
                if inner[1] == "-":
                    neg = True
                    inner = self.take()
                if inner[0] != "int":
                    raise ParseError("exponent must be an integer", inner[2], self.text)
                self.expect(")")
                n = -int(inner[1]) if neg else int(inner[1])
            else:
                raise ParseError("exponent must be an integer", t[2], self.text)
            try:
                return base ** (sign * n)
            except ZeroDivisionError:
                raise ParseError("negative power of zero", t[2], self.text) from None
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return RatFunc(MPoly.const(int(val)), MPoly.const(1))
        if kind == "name":
            return RatFunc(MPoly.var(val), MPoly.const(1))
        if val == "(":
            r = self.expr()
            self.expect(")")
            return r
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos, self.text)


def parse_rational_function(text: str) -> RatFunc:
    return _Parser(text).parse()


def parse_polynomial(text: str) -> MPoly:
    r = parse_rational_function(text)
    den = r.den
    if den.total_degree() > 0:
        raise ParseError("polynomial expected, found a non-constant denominator", 0, text)
    c = den.terms.get((0,) * len(den.vars), 0)
    return r.num / c
