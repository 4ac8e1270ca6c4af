"""Text rendering and strict parsing for Laurent polynomials and rationals.

Rendering examples: ``x1``, ``(1 + x2)/x1``, ``y1*y2/(1 + y1)``,
``(1 + x1 + x2)/(x1*x2)``.  Terms appear in the canonical ascending order;
a side of a fraction is parenthesized when it is a sum or a product of more
than one factor.  The parser accepts exactly the integer/variable/`+ - * / ^`
grammar with parentheses and nothing else.
"""

from __future__ import annotations

from .laurent import Exponents, LaurentPoly
from .rational import RationalFunc


def default_names(nvars: int, letter: str = "x") -> tuple[str, ...]:
    return tuple(f"{letter}{i + 1}" for i in range(nvars))


# -- rendering -----------------------------------------------------------


def _render_factor(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


def _render_monomial(exps: Exponents, coeff: int, names: tuple[str, ...]) -> str:
    factors = [_render_factor(names[i], e) for i, e in enumerate(exps) if e]
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    if coeff == -1:
        return "-" + "*".join(factors)
    return "*".join([str(coeff)] + factors)


def render_sum(p: LaurentPoly, names: tuple[str, ...]) -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exps, coeff in p.terms:
        text = _render_monomial(exps, abs(coeff), names)
        if not parts:
            parts.append(text if coeff > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(parts)


def _wrap(text: str, multi: bool) -> str:
    return f"({text})" if multi else text


def render_laurent(p: LaurentPoly, names: tuple[str, ...] | None = None) -> str:
    """Render as numerator over a monomial denominator, e.g. ``(1 + x2)/x1``."""
    names = names or default_names(p.nvars)
    if p.is_zero:
        return "0"
    den_exps = tuple(max(0, -e) for e in p.min_exponents())
    if not any(den_exps):
        return render_sum(p, names)
    num = p.shift(den_exps)
    num_text = render_sum(num, names)
    den_factors = [_render_factor(names[i], e) for i, e in enumerate(den_exps) if e]
    den_text = _wrap("*".join(den_factors), len(den_factors) > 1)
    return f"{_wrap(num_text, len(num.terms) > 1)}/{den_text}"


def render_rational(r: RationalFunc, names: tuple[str, ...] | None = None) -> str:
    names = names or default_names(r.nvars)
    as_laurent = r.as_laurent()
    if as_laurent is not None:
        return render_laurent(as_laurent, names)
    num_text = _wrap(render_sum(r.num, names), len(r.num.terms) > 1)
    den_sum = render_sum(r.den, names)
    den_text = _wrap(den_sum, len(r.den.terms) > 1 or "*" in den_sum)
    return f"{num_text}/{den_text}"


# -- parsing ---------------------------------------------------------------


class ParseError(ValueError):
    """Raised on any input outside the rendering grammar."""


_TOKEN_CHARS = set("+-*/^()")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _TOKEN_CHARS:
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}")
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], names: tuple[str, ...]):
        self.tokens = tokens
        self.pos = 0
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def parse_expr(self) -> RationalFunc:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> RationalFunc:
        value = self.parse_unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_unary(self) -> RationalFunc:
        if self.peek() == "-":
            self.take()
            return -self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> RationalFunc:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"expected integer exponent, got {tok!r}")
            return base ** (sign * int(tok))
        return base

    def parse_atom(self) -> RationalFunc:
        tok = self.take()
        if tok == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        if tok.isdigit():
            return RationalFunc.const(int(tok), self.nvars)
        if tok in self.index:
            return RationalFunc.variable(self.index[tok], self.nvars)
        raise ParseError(f"unknown variable {tok!r}")


def parse_rational(text: str, names: tuple[str, ...]) -> RationalFunc:
    parser = _Parser(_tokenize(text), names)
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at {parser.peek()!r}")
    return value


def parse_laurent(text: str, names: tuple[str, ...]) -> LaurentPoly:
    value = parse_rational(text, names)
    as_laurent = value.as_laurent()
    if as_laurent is None:
        raise ParseError("value is not a Laurent polynomial")
    return as_laurent
