"""Recursive-descent parser for knot expressions.

    expr := atom ( ".cable(" int "," int ")" )*
    atom := "U" | "T(" int "," int ")" | "(" expr "#" expr ")"

Whitespace is ignored everywhere.  ``T(p,q)`` is sugar for ``U.cable(p,q)``.
"""

from __future__ import annotations

import re

from legcable.atlas import Cable, ConnSum, KnotExpr, Unknot
from legcable.framing import CableParams

_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\s*\d+)|(?P<word>\.\s*cable|[UT])|(?P<punct>[(),#]))")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class ExprSemanticError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ExprSyntaxError("unexpected character", text, pos + _lead(text, pos))
            kind = m.lastgroup
            self.tokens.append((kind, re.sub(r"\s+", "", m.group(kind)), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def expect(self, value: str) -> None:
        if self.peek() != value:
            found = self.peek() or "end of input"
            raise ExprSyntaxError(f"expected {value!r}, found {found!r}", self.text, self.pos())
        self.i += 1

    def integer(self) -> int:
        if self.i >= len(self.tokens) or self.tokens[self.i][0] != "int":
            raise ExprSyntaxError("expected an integer", self.text, self.pos())
        value = int(self.tokens[self.i][1])
        self.i += 1
        return value

    def pair(self) -> tuple[int, int, int]:
        start = self.pos()
        self.expect("(")
        p = self.integer()
        self.expect(",")
        q = self.integer()
        self.expect(")")
        return p, q, start

    def expr(self) -> KnotExpr:
        node = self.atom()
        while self.peek() == ".cable":
            self.i += 1
            p, q, start = self.pair()
            node = Cable(node, _params(p, q, start))
        return node

    def atom(self) -> KnotExpr:
        tok = self.peek()
        if tok == "U":
            self.i += 1
            return Unknot()
        if tok == "T":
            self.i += 1
            p, q, start = self.pair()
            return Cable(Unknot(), _params(p, q, start))
        if tok == "(":
            self.i += 1
            left = self.expr()
            self.expect("#")
            right = self.expr()
            self.expect(")")
            return ConnSum(left, right)
        found = tok or "end of input"
        raise ExprSyntaxError(f"expected 'U', 'T(' or '(', found {found!r}", self.text, self.pos())


def _lead(text: str, pos: int) -> int:
    return len(text[pos:]) - len(text[pos:].lstrip())


def _params(p: int, q: int, pos: int) -> CableParams:
    if q < 2:
        raise ExprSemanticError(f"cable ({p},{q}) at position {pos}: need q >= 2")
    try:
        return CableParams(p, q)
    except ValueError as exc:
        raise ExprSemanticError(f"cable ({p},{q}) at position {pos}: {exc}") from None


def parse(text: str) -> KnotExpr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek() is not None:
        raise ExprSyntaxError(f"trailing input {parser.peek()!r}", text, parser.pos())
    return node
