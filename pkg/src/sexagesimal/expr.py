"""A small precedence parser for arithmetic over sexagesimal literals.

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | primary
    primary := literal | "(" expr ")"

"×", "÷" and "−" are accepted for "*", "/" and "-".  Results are exact
rationals; division may produce a repetend.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .numeral import ParseError, parse_sex
from .rational import rat_add, rat_div, rat_mul, rat_sub, sex_to_rational

_DIGITS = r"\d+(?:, ?\d+)*"
_REP = r"\(" + _DIGITS + r"\)"
_LITERAL = re.compile(
    _DIGITS + r"(?:;(?:" + _REP + "|" + _DIGITS + r"(?:, ?" + _REP + r")?)?)?"
)
_OPS = {"+": "+", "-": "-", "−": "-", "*": "*", "×": "*", "/": "/", "÷": "/"}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in _OPS:
            tokens.append(("op", _OPS[ch], pos))
            pos += 1
        elif ch in "()":
            tokens.append((ch, ch, pos))
            pos += 1
        elif ch.isdigit():
            m = _LITERAL.match(text, pos)
            end = m.end()
            # let a bad trailing separator reach parse_sex for its diagnostic
            while end < len(text) and text[end] in ",;":
                end += 1
                while end < len(text) and text[end].isdigit():
                    end += 1
            lit = text[pos:end]
            try:
                value = sex_to_rational(parse_sex(lit))
            except ParseError as e:
                raise ParseError(e.reason, text, pos + e.position) from None
            tokens.append(("num", value, pos))
            pos = end
        else:
            raise ParseError(f"unexpected character {ch!r}", text, pos)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(self.text[tok[2]])
            raise ParseError(f"expected {kind!r}, found {what}", self.text, tok[2])
        return tok

    def expr(self) -> Fraction:
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = rat_add(value, rhs) if op == "+" else rat_sub(value, rhs)
        return value

    def term(self) -> Fraction:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.unary()
            value = rat_mul(value, rhs) if op == "*" else rat_div(value, rhs)
        return value

    def unary(self) -> Fraction:
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return -self.unary()
        return self.primary()

    def primary(self) -> Fraction:
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return value
        if kind == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if kind == "end" else repr(self.text[pos])
        raise ParseError(f"expected a number, found {what}", self.text, pos)


def evaluate(text: str) -> Fraction:
    """Evaluate ``text`` exactly; raises ``ParseError`` or ``ZeroDivisionError``."""
    p = _Parser(text)
    value = p.expr()
    p.expect("end")
    return value
