#!/usr/bin/env python3
"""
form_parser.py - Text syntax for constant-coefficient forms

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := number ['i'] | 'i' | '(' expression-of-numbers ')' | monomial
    monomial   := symbol ('^' symbol)*
    symbol     := dq<k> | dp<k>                   (phase space T*R^n)
                | dz<k> | du<k> | dzb<k> | dub<k>  (complex chart basis)

Examples: "dq1^dp1 + dq2^dp2", "1/2 * dp1^dp2 - i*dq1^dq2", "(1+2i) dz1^du2^dzb1^dub2".
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..exceptions import DegreeMismatchError, FormSyntaxError
from .exterior_algebra import I, ONE, Form, Scalar, _Alternating, p_index, q_index

_SYMBOL = re.compile(r"d(zb|ub|z|u|q|p)(\d+)")
_NUMBER = re.compile(r"(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?(/\d+)?")


class _Parser:
    def __init__(self, text: str, dim: int | None):
        self.text = text
        self.pos = 0
        self.chart = re.search(r"d(z|u)\d", text) is not None
        self.dim = dim

    # --- lexing ---------------------------------------------------------------

    def error(self, reason: str) -> FormSyntaxError:
        return FormSyntaxError(self.text, self.pos, reason)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    # --- grammar ----------------------------------------------------------------

    def expression(self, numbers_only: bool = False) -> list[tuple[Scalar, tuple[int, ...] | None]]:
        terms = []
        sign = 1
        if self.take("-"):
            sign = -1
        else:
            self.take("+")
        while True:
            coeff, monomial = self.term(numbers_only)
            terms.append((coeff * sign, monomial))
            if self.take("+"):
                sign = 1
            elif self.take("-"):
                sign = -1
            else:
                return terms

    def term(self, numbers_only: bool) -> tuple[Scalar, tuple[int, ...] | None]:
        coeff = ONE
        monomial: tuple[int, ...] | None = None
        while True:
            start = self.pos
            if not numbers_only and self.peek() == "d":
                if monomial is not None:
                    raise self.error("two monomials in one term")
                monomial = self.monomial()
            else:
                coeff = coeff * self.number_factor()
            self.take("*")
            nxt = self.peek()
            if nxt in ("", "+", "-", ")"):
                return coeff, monomial
            if self.pos == start:
                raise self.error(f"unexpected character '{nxt}'")

    def number_factor(self) -> Scalar:
        char = self.peek()
        if char == "(":
            self.pos += 1
            inner = self.expression(numbers_only=True)
            if not self.take(")"):
                raise self.error("expected ')'")
            total = Scalar()
            for value, _ in inner:
                total = total + value
            return total
        if char == "i":
            self.pos += 1
            return I
        match = _NUMBER.match(self.text, self.pos)
        if not match:
            raise self.error(f"expected a coefficient or basis symbol, got '{char or 'end of input'}'")
        self.pos = match.end()
        mantissa, exponent, denominator = match.groups()
        if "." in mantissa or exponent:
            if denominator:
                raise self.error("fraction of a decimal")
            value = Scalar(approx=complex(float(mantissa + (exponent or ""))))
        else:
            value = Scalar(Fraction(int(mantissa), int(denominator[1:]) if denominator else 1))
        if self.pos < len(self.text) and self.text[self.pos] == "i":
            self.pos += 1
            value = value * I
        return value

    def monomial(self) -> tuple[int, ...]:
        indices = [self.symbol()]
        while self.take("^"):
            indices.append(self.symbol())
        return tuple(indices)

    def symbol(self) -> int:
        self.skip()
        match = _SYMBOL.match(self.text, self.pos)
        if not match:
            raise self.error("expected a basis symbol")
        kind, number = match.group(1), int(match.group(2))
        if number < 1:
            raise self.error(f"unknown basis symbol '{match.group(0)}'")
        if self.chart:
            if kind in ("q", "p") or number > 2:
                raise self.error(f"unknown basis symbol '{match.group(0)}'")
            index = {"z": 0, "u": 2, "zb": 4, "ub": 6}[kind] + number - 1
        else:
            if kind not in ("q", "p"):
                raise self.error(f"unknown basis symbol '{match.group(0)}'")
            index = q_index(number) if kind == "q" else p_index(number)
            if self.dim is not None and index >= self.dim:
                raise self.error(f"unknown basis symbol '{match.group(0)}' in dimension {self.dim}")
        self.pos = match.end()
        return index


def parse_form(text: str, dim: int | None = None) -> Form:
    """Parse an expression; phase-space dimension defaults to 2 * (largest index)."""
    from .complex_structures import COMPLEX_LABELS

    if not text.strip():
        raise FormSyntaxError(text, 0, "empty expression")
    parser = _Parser(text, dim)
    terms = parser.expression()
    if parser.peek():
        raise parser.error(f"unexpected character '{parser.peek()}'")
    if parser.chart:
        dim, labels = 8, COMPLEX_LABELS
    else:
        largest = max((max(m) for _, m in terms if m), default=1)
        dim = dim or max(2, 2 * (largest // 2 + 1))
        labels = ()
    degrees = {len(m) if m else 0 for coeff, m in terms if not coeff.is_zero(0.0)}
    if len(degrees) > 1:
        raise DegreeMismatchError("parse_form", min(degrees), max(degrees))
    degree = degrees.pop() if degrees else 0
    return Form.build(dim, degree, [(m or (), c) for c, m in terms], labels)


# --- printing -----------------------------------------------------------------------


def _magnitude(value: Scalar) -> tuple[int, str]:
    """(sign, text) with the leading sign split off where the value allows it."""
    if value.is_exact:
        if value.im == 0:
            return (1 if value.re > 0 else -1), str(abs(value.re))
        if value.re == 0:
            im = abs(value.im)
            return (1 if value.im > 0 else -1), "i" if im == 1 else f"{im}i"
        return 1, str(value)
    z = complex(value)
    if abs(z.imag) <= 1e-15:
        return (1 if z.real > 0 else -1), f"{abs(z.real):.12g}"
    if abs(z.real) <= 1e-15:
        return (1 if z.imag > 0 else -1), f"{abs(z.imag):.12g}i"
    sign = "+" if z.imag >= 0 else "-"
    return 1, f"({z.real:.12g}{sign}{abs(z.imag):.12g}i)"


def format_form(form: _Alternating) -> str:
    """Canonical text: increasing basis order, explicit signs."""
    if not form.terms:
        return "0"
    prefix = "e_" if not isinstance(form, Form) else "d"
    pieces = []
    for key in sorted(form.terms):
        sign, magnitude = _magnitude(form.terms[key])
        monomial = "^".join(f"{prefix}{form.labels[k]}" for k in key)
        if not monomial:
            body = magnitude
        elif magnitude == "1":
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    text = ("-" if first_sign < 0 else "") + first
    for sign, body in pieces[1:]:
        text += f" {'-' if sign < 0 else '+'} {body}"
    return text
