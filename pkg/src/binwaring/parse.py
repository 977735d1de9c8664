"""Exact parser for binary forms written as ``1/2*x0^2 - 3*x0*x1 + x1^2``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BinaryForm
from .errors import InputError

_TOKEN = re.compile(r"\s*(?:(\d+)|(x[01])|([-+*/^]))")


class FormParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class FormExpr:
    source: str
    form: BinaryForm


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise FormParseError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("var", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_num(self, what: str) -> int:
        kind, value, pos = self.take()
        if kind != "num":
            raise FormParseError(f"expected {what}", pos)
        return int(value)

    def factor(self, coeff: Fraction, exps: list[int]) -> Fraction:
        kind, value, pos = self.take()
        if kind == "num":
            num = int(value)
            if self.peek()[1] == "/":
                self.take()
                den_pos = self.peek()[2]
                den = self.expect_num("denominator")
                if den == 0:
                    raise FormParseError("malformed rational: zero denominator", den_pos)
                return coeff * Fraction(num, den)
            return coeff * num
        if kind == "var":
            power = 1
            if self.peek()[1] == "^":
                self.take()
                power = self.expect_num("exponent")
            exps[int(value[1])] += power
            return coeff
        raise FormParseError(f"expected a coefficient or variable, got {value or 'end of input'!r}", pos)

    def term(self, sign: int):
        start = self.peek()[2]
        exps = [0, 0]
        coeff = self.factor(Fraction(sign), exps)
        while self.peek()[1] == "*":
            self.take()
            coeff = self.factor(coeff, exps)
        return coeff, exps, start

    def expr(self):
        if self.peek()[0] == "end":
            raise FormParseError("empty input", 0)
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        terms = [self.term(sign)]
        while self.peek()[0] != "end":
            kind, value, pos = self.take()
            if value not in "+-" or kind != "op":
                raise FormParseError(f"expected '+' or '-', got {value!r}", pos)
            terms.append(self.term(-1 if value == "-" else 1))
        return terms


def parse_form(text: str) -> FormExpr:
    """Parse ``text`` into an exact :class:`BinaryForm`.

    All terms must have the same total degree; coefficients are integers or
    ``p/q`` and never pass through floating point.
    """
    terms = _Parser(text).expr()
    degree = sum(terms[0][1])
    coeffs = [Fraction(0)] * (degree + 1)
    for coeff, (i, j), pos in terms:
        if i + j != degree:
            raise FormParseError(f"mixed degrees {degree} and {i + j}", pos)
        coeffs[j] += coeff
    return FormExpr(text, BinaryForm(degree, tuple(coeffs)))
