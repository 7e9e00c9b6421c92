"""Parser for the polynomial text grammar.

Grammar (variables ``x`` and ``y`` only, no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "x" | "y" | "(" expr ")"
"""

from __future__ import annotations

from fractions import Fraction

from .bivariate import BivariatePolynomial


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
        elif ch in "xy":
            tokens.append(("VAR", ch, i))
            i += 1
        elif ch in "+-*^/()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", text, i)
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.k += 1
        return tok

    def parse(self):
        result = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            if tok[0] in ("INT", "VAR", "("):
                raise PolynomialSyntaxError("implicit multiplication is not allowed", self.text, tok[2])
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return result

    def expr(self):
        acc = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            exp = self.take("INT")[1]
            base = base**exp
            if self.peek()[0] == "^":
                raise PolynomialSyntaxError("chained exponents need parentheses", self.text, self.peek()[2])
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("INT")
                if den[1] == 0:
                    raise PolynomialSyntaxError("zero denominator", self.text, den[2])
                value = value / den[1]
            return BivariatePolynomial.constant(value)
        if tok[0] == "VAR":
            self.take()
            return BivariatePolynomial.x() if tok[1] == "x" else BivariatePolynomial.y()
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if tok[0] == "EOF" else repr(tok[1])
        raise PolynomialSyntaxError(f"unexpected {what}", self.text, tok[2])


def parse_polynomial(text: str) -> BivariatePolynomial:
    """Parse e.g. ``"(y^2-x^3)^4 + x^8*y^5"`` into a polynomial over Q."""
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal ``"p/q"`` or ``"p"`` (optional sign)."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    num, _, den = body.partition("/")
    if not num.isdigit() or (den and not den.isdigit()) or (body.count("/") > 1):
        raise ValueError(f"malformed rational {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return -value if s.startswith("-") else value
