"""Tiny parser for elements of U(so(3)) written with Jx, Jy, Jz.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' unary) | ('/' unary))*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'Jx' | 'Jy' | 'Jz' | '(' expr ')'

Division is only allowed by scalars.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .uea import UeaElement

_TOKEN = re.compile(r"\s*(?:(\d+)|(J[xyz])|(.))")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("gen", "xyz".index(m.group(2)[1]), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> UeaElement:
        out = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> UeaElement:
        out = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.unary()
            if op == "*":
                out = out * rhs
            else:
                if rhs.degree > 0 or rhs.is_zero():
                    raise ParseError("division by a non-scalar or zero", pos)
                out = out / rhs.coefficient((0, 0, 0))
        return out

    def unary(self) -> UeaElement:
        if self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            val = self.unary()
            return -val if op == "-" else val
        return self.power()

    def power(self) -> UeaElement:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            n = self.take("int")[1]
            return base**n
        return base

    def atom(self) -> UeaElement:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return UeaElement.scalar(Fraction(val))
        if kind == "gen":
            self.take()
            return UeaElement.generator(val)
        if kind == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return out
        raise ParseError("expected a number, generator or '('", pos)


def parse_element(text: str) -> UeaElement:
    p = _Parser(text)
    out = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return out
