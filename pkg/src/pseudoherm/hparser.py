"""Text front end for operator polynomials.

Grammar (whitespace is ignored)::

    expr     := [+|-] term (('+'|'-') term)*
    term     := power (['*' [+|-]] power)*
    power    := atom ('^' exponent)*
    atom     := NUMBER | 'g' | 'x' | 'p' | '(' expr ')' | '{' expr ',' expr '}'
    exponent := [+|-] INTEGER | '(' expr ')'

NUMBER is ``123``, ``3/2`` or ``0.25`` with an optional ``i`` suffix
(``1i``, ``-2/3i``).  Braces denote the anticommutator.  Factors may
also be juxtaposed (``2g x p``), which is what ``format`` emits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .opalg.coeff import CRational, Coefficient
from .opalg.operators import OperatorPolynomial, XFunction


class ParseError(ValueError):
    """Base class; ``position`` is a byte offset into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class LexError(ParseError):
    pass


class ParseSyntaxError(ParseError):
    pass


class NonIntegerExponentError(ParseError):
    pass


class NegativePowerError(ParseError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, ID, OP, END
    text: str
    pos: int
    value: CRational | None = None


_NUMBER = re.compile(r"(\d+)(?:/(\d+)|\.(\d+))?(i)?")
_OPS = set("+-*^(){},")
_IDENTS = {"g", "x", "p"}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch in " \t\r\n":
            pos += 1
            continue
        if not ch.isascii():
            raise LexError(f"unexpected character {ch!r}", len(text[:pos].encode()))
        m = _NUMBER.match(text, pos)
        if m:
            whole, den, frac, imag = m.groups()
            if den is not None:
                if int(den) == 0:
                    raise LexError("zero denominator", pos)
                mag = Fraction(int(whole), int(den))
            elif frac is not None:
                mag = Fraction(f"{whole}.{frac}")
            else:
                mag = Fraction(int(whole))
            value = CRational(0, mag) if imag else CRational(mag)
            tokens.append(Token("NUM", m.group(0), pos, value))
            pos = m.end()
            continue
        if ch in _IDENTS:
            # reject longer words such as "xp" or "gamma"
            if pos + 1 < n and text[pos + 1].isalpha():
                raise LexError(f"unexpected character {text[pos + 1]!r}", pos + 1)
            tokens.append(Token("ID", ch, pos))
            pos += 1
            continue
        if ch in _OPS:
            tokens.append(Token("OP", ch, pos))
            pos += 1
            continue
        raise LexError(f"unexpected character {ch!r}", pos)
    tokens.append(Token("END", "", n))
    return tokens


_ATOM_START = {"(", "{"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def expect(self, op: str) -> Token:
        if not self.at_op(op):
            raise ParseSyntaxError(f"expected {op!r}, found {self._describe()}", self.tok.pos)
        return self.advance()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "END" else repr(self.tok.text)

    def starts_atom(self) -> bool:
        return self.tok.kind in ("NUM", "ID") or self.at_op(*_ATOM_START)

    # grammar

    def parse(self) -> OperatorPolynomial:
        out = self.expr()
        if self.tok.kind != "END":
            raise ParseSyntaxError(f"expected operator or end of input, found {self._describe()}", self.tok.pos)
        return out

    def expr(self) -> OperatorPolynomial:
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        total = self.term()
        if sign < 0:
            total = -total
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self) -> OperatorPolynomial:
        value = self.power()
        while True:
            if self.at_op("*"):
                self.advance()
                sign = 1
                if self.at_op("+", "-"):
                    sign = -1 if self.advance().text == "-" else 1
                rhs = self.power()
                value = value * (rhs if sign > 0 else -rhs)
            elif self.starts_atom():
                value = value * self.power()
            else:
                return value

    def power(self) -> OperatorPolynomial:
        base_pos = self.tok.pos
        value = self.atom()
        while self.at_op("^"):
            caret = self.advance()
            exp_pos = self.tok.pos
            n = self.exponent(caret.pos)
            value = self._raise(value, n, base_pos, exp_pos)
        return value

    def atom(self) -> OperatorPolynomial:
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            return OperatorPolynomial.const(t.value)
        if t.kind == "ID":
            self.advance()
            if t.text == "g":
                return OperatorPolynomial.const(Coefficient.g())
            return OperatorPolynomial.x() if t.text == "x" else OperatorPolynomial.p()
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if self.at_op("{"):
            self.advance()
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("}")
            return a * b + b * a
        raise ParseSyntaxError(f"expected number, 'g', 'x', 'p', '(' or '{{', found {self._describe()}", t.pos)

    def exponent(self, caret_pos: int) -> int:
        start = self.tok.pos
        if self.at_op("("):
            value = self.atom()
            return self._as_integer(value, start)
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        t = self.tok
        if t.kind != "NUM":
            raise ParseSyntaxError(f"expected integer exponent, found {self._describe()}", t.pos)
        self.advance()
        v = t.value
        if v.im or v.re.denominator != 1:
            raise NonIntegerExponentError(f"exponent {t.text!r} is not an integer", t.pos)
        return sign * int(v.re)

    @staticmethod
    def _as_integer(value: OperatorPolynomial, pos: int) -> int:
        if value.is_zero():
            return 0
        if value.monomials() != [(0, 0)]:
            raise NonIntegerExponentError("exponent is not a constant", pos)
        c = value[(0, 0)]
        if c.powers() != [0] or c[0].im or c[0].re.denominator != 1:
            raise NonIntegerExponentError("exponent is not an integer", pos)
        return int(c[0].re)

    @staticmethod
    def _raise(value: OperatorPolynomial, n: int, base_pos: int, exp_pos: int) -> OperatorPolynomial:
        if n >= 0:
            return value**n
        terms = list(value.items())
        if len(terms) == 1:
            (a, b), c = terms[0]
            if b == 0 and c.powers() == [0]:
                inv = CRational(1) / c.scalar()
                coeff = CRational(1)
                for _ in range(-n):
                    coeff = coeff * inv
                return OperatorPolynomial.x(a * n, coeff)
        raise NegativePowerError("negative exponent is only allowed on a pure power of x", exp_pos)


def parse(text: str) -> OperatorPolynomial:
    return _Parser(text).parse()


# rendering


def _fraction_text(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coefficient_text(c: CRational) -> tuple[int, str]:
    """Sign and body; body is '' for a bare unit."""
    if c.im == 0:
        sign = -1 if c.re < 0 else 1
        mag = abs(c.re)
        if mag == 1:
            return sign, ""
        if mag.denominator == 1:
            return sign, str(mag.numerator)
        return sign, f"({_fraction_text(mag)})"
    if c.re == 0:
        sign = -1 if c.im < 0 else 1
        return sign, f"({_fraction_text(abs(c.im))}i)"
    im_sign = "-" if c.im < 0 else "+"
    return 1, f"({_fraction_text(c.re)}{im_sign}{_fraction_text(abs(c.im))}i)"


def _power_text(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def _render_terms(parts: list[tuple[CRational, list[str]]]) -> str:
    if not parts:
        return "0"
    out = []
    for idx, (c, factors) in enumerate(parts):
        sign, body = _coefficient_text(c)
        if not factors:
            text = body or "1"
        else:
            text = body + " ".join(factors)
        if idx == 0:
            out.append(("-" if sign < 0 else "") + text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)


def _factors(gpow: int, xpow: int, ppow: int) -> list[str]:
    f = []
    if gpow:
        f.append(_power_text("g", gpow))
    if xpow:
        f.append(_power_text("x", xpow))
    if ppow:
        f.append(_power_text("p", ppow))
    return f


def format(A: OperatorPolynomial) -> str:  # noqa: A001 - mirrors the public name
    """Canonical text: (p-power, x-power) descending, then g-power descending."""
    parts = []
    for mono, coeff in sorted(A.items(), key=lambda t: (t[0].ppow, t[0].xpow), reverse=True):
        for gpow, c in sorted(coeff.items(), reverse=True):
            parts.append((c, _factors(gpow, mono.xpow, mono.ppow)))
    return _render_terms(parts)


def format_xfunction(f: XFunction) -> str:
    parts = []
    for xpow, coeff in sorted(f.laurent.items(), reverse=True):
        for gpow, c in sorted(coeff.items(), reverse=True):
            parts.append((c, _factors(gpow, xpow, 0)))
    for gpow, c in sorted(f.logcoeff.items(), reverse=True):
        parts.append((c, _factors(gpow, 0, 0) + ["ln(x)"]))
    return _render_terms(parts)


def term_table(A: OperatorPolynomial) -> list[dict]:
    """One row per (monomial, g-power) with the exact coefficient as strings."""
    rows = []
    for mono, coeff in sorted(A.items(), key=lambda t: (t[0].ppow, t[0].xpow), reverse=True):
        for gpow, c in sorted(coeff.items(), reverse=True):
            rows.append(
                {
                    "xpow": mono.xpow,
                    "ppow": mono.ppow,
                    "gpow": gpow,
                    "re": _fraction_text(c.re),
                    "im": _fraction_text(c.im),
                }
            )
    return rows
