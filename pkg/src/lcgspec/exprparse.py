"""Tiny expression grammars for CLI flags.

Integer mode accepts decimal literals with ^ + - * and parentheses, all in
exact arbitrary-precision arithmetic ("2^32", "10^8+1", "(69068)^6").

Endpoint mode additionally accepts '/', decimal fractions and the constants
pi and e, for interval bounds like "1/pi^2" or "1-1/e".  Decimal literals are
read as IEEE-754 doubles, then handled exactly; this reproduces published
interval counts whose endpoints were binary floats (0.2 reads as the double
just above 1/5).  Expressions involving pi or e are rounded to a configurable
number of decimal digits (default 12) before exact comparison.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ExpressionError

_TOKEN = re.compile(r"(\d+\.\d*|\.\d+)|(\d+)|(pi|e)|([()+*/^-])|(\S)")
_MAX_RESULT_BITS = 4_000_000

SYMBOLIC_DIGITS = 12


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-").replace("×", "*").replace("⋅", "*")
    text = text.replace("**", "^")
    tokens = []
    for m in _TOKEN.finditer(text):
        dec, num, name, op, junk = m.groups()
        if junk:
            raise ExpressionError(f"unexpected character {junk!r} in {text!r}")
        if dec:
            tokens.append(("dec", dec))
        elif num:
            tokens.append(("int", num))
        elif name:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
    if not tokens:
        raise ExpressionError("empty expression")
    return tokens


class _Parser:
    """Recursive descent; values are (Fraction, symbolic_taint)."""

    def __init__(self, text: str, allow_rational: bool):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allow_rational = allow_rational

    def peek_op(self) -> str | None:
        if self.pos < len(self.tokens) and self.tokens[self.pos][0] == "op":
            return self.tokens[self.pos][1]
        return None

    def take(self) -> tuple[str, str]:
        if self.pos >= len(self.tokens):
            raise ExpressionError(f"unexpected end of expression in {self.text!r}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> tuple[Fraction, bool]:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ExpressionError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        v, t = self.term()
        while self.peek_op() in ("+", "-"):
            op = self.take()[1]
            w, wt = self.term()
            v = v + w if op == "+" else v - w
            t = t or wt
        return v, t

    def term(self):
        v, t = self.unary()
        while self.peek_op() in ("*", "/"):
            op = self.take()[1]
            w, wt = self.unary()
            if op == "/":
                if not self.allow_rational:
                    raise ExpressionError("'/' is not valid in an integer expression")
                if w == 0:
                    raise ExpressionError("division by zero")
                v = v / w
            else:
                v = v * w
            t = t or wt
        return v, t

    def unary(self):
        sign = 1
        while self.peek_op() in ("+", "-"):
            if self.take()[1] == "-":
                sign = -sign
        v, t = self.power()
        return sign * v, t

    def power(self):
        v, t = self.atom()
        if self.peek_op() == "^":
            self.take()
            e, et = self.unary()
            if et or e.denominator != 1:
                raise ExpressionError("exponent must be an integer")
            n = e.numerator
            if n < 0 and not self.allow_rational:
                raise ExpressionError("negative exponent in an integer expression")
            if abs(n) > 10_000:
                raise ExpressionError(f"exponent {n} too large")
            base_bits = max(v.numerator.bit_length(), v.denominator.bit_length())
            if base_bits * abs(n) > _MAX_RESULT_BITS:
                raise ExpressionError("expression result too large")
            if v == 0 and n < 0:
                raise ExpressionError("division by zero")
            v = v**n
        return v, t

    def atom(self):
        kind, text = self.take()
        if kind == "int":
            return Fraction(int(text)), False
        if kind == "dec":
            if not self.allow_rational:
                raise ExpressionError("decimal literal in an integer expression")
            return Fraction(float(text)), False
        if kind == "name":
            if not self.allow_rational:
                raise ExpressionError(f"{text!r} is not valid in an integer expression")
            return Fraction(math.pi if text == "pi" else math.e), True
        if kind == "op" and text == "(":
            v = self.expr()
            nk, nt = self.take()
            if (nk, nt) != ("op", ")"):
                raise ExpressionError(f"expected ')' in {self.text!r}")
            return v
        raise ExpressionError(f"unexpected token {text!r} in {self.text!r}")


def parse_int_expr(text: str) -> int:
    """Exact integer value of a flag expression like "2^32" or "10^8+1"."""
    value, _ = _Parser(text, allow_rational=False).parse()
    assert value.denominator == 1
    return value.numerator


def parse_endpoint(text: str, symbolic_digits: int = SYMBOLIC_DIGITS) -> Fraction:
    """Exact rational for an interval endpoint expression."""
    value, tainted = _Parser(text, allow_rational=True).parse()
    if tainted:
        scale = 10**symbolic_digits
        value = Fraction(round(value * scale), scale)
    return value
