"""Parser for polynomial expressions in x, y, z with rational coefficients.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*      # '*' may be omitted before a variable or '('
    factor := ['+'|'-'] power
    power  := atom (('^'|'**') INT)?
    atom   := INT ['/' INT] | 'x' | 'y' | 'z' | '(' expr ')'
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import MilnorError, NotHomogeneous
from .polyring import HomogeneousPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([xyz]))")

Poly = dict[tuple[int, int, int], Fraction]


class PolySyntaxError(MilnorError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError("unexpected character", text, pos + len(text[pos:]) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("num", m.group(1), start))
        elif m.group(2):
            toks.append(("op", "^" if m.group(2) == "**" else m.group(2), start))
        else:
            toks.append(("var", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (a, b, c), u in p.items():
        for (d, e, f), v in q.items():
            k = (a + d, b + e, c + f)
            out[k] = out.get(k, 0) + u * v
    return {k: v for k, v in out.items() if v}


def _add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


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

    def error(self, msg: str):
        raise PolySyntaxError(msg, self.text, self.peek()[2])

    def expect(self, value: str):
        if self.peek()[1] != value:
            self.error(f"expected {value!r}")
        self.take()

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            p = _add(p, self.term(), sign)
        return p

    def term(self) -> Poly:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                p = _mul(p, self.factor())
            elif kind == "var" or val == "(":
                p = _mul(p, self.factor())
            else:
                return p

    def factor(self) -> Poly:
        if self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            return {k: sign * v for k, v in self.factor().items()}
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val, _ = self.peek()
            if kind != "num":
                self.error("exponent must be a non-negative integer")
            self.take()
            result: Poly = {(0, 0, 0): Fraction(1)}
            for _ in range(int(val)):
                result = _mul(result, base)
            return result
        return base

    def atom(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            num = Fraction(int(val))
            if self.peek()[1] == "/":
                self.take()
                k2, v2, _ = self.peek()
                if k2 != "num":
                    self.error("expected denominator")
                if int(v2) == 0:
                    self.error("zero denominator")
                self.take()
                num /= int(v2)
            return {(0, 0, 0): num} if num else {}
        if kind == "var":
            self.take()
            e = [0, 0, 0]
            e["xyz".index(val)] = 1
            return {tuple(e): Fraction(1)}
        if val == "(":
            self.take()
            p = self.expr()
            self.expect(")")
            return p
        self.error("expected a number, variable or '('")


def parse_poly(text: str) -> HomogeneousPoly:
    """Parse ``text`` into an exact homogeneous polynomial.

    Raises PolySyntaxError on malformed input and NotHomogeneous when the
    expanded terms have different degrees (or the expression is zero).
    """
    p = _Parser(text).parse()
    degrees = {sum(m) for m in p}
    if not degrees:
        raise NotHomogeneous("the expression expands to the zero polynomial")
    if len(degrees) > 1:
        raise NotHomogeneous(f"terms of degrees {sorted(degrees)} in {text!r}")
    return HomogeneousPoly(degrees.pop(), p)
