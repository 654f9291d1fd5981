#!/usr/bin/env python3
"""
Scalar fields for the RTA engine
Exact coefficients in QQ or in the rational function field QQ(q)
"""

import logging
from typing import Any, Tuple

from sympy import QQ, Symbol

from .errors import ScalarParseError, UnsupportedParameterError, WeightError

logger = logging.getLogger(__name__)

Q_SYMBOL = Symbol('q')

RATIONAL = 'rational'
QRAT = 'q'


class ScalarField:
    """One coefficient domain, shared by every element of an algebra"""

    def __init__(self, kind: str = RATIONAL):
        if kind not in (RATIONAL, QRAT):
            raise UnsupportedParameterError(f"unknown scalar field '{kind}'")
        self.kind = kind
        if kind == QRAT:
            self.domain = QQ.frac_field(Q_SYMBOL)
            self.q = self.domain.gens[0]
        else:
            self.domain = QQ
            self.q = None

    def __eq__(self, other) -> bool:
        return isinstance(other, ScalarField) and other.kind == self.kind

    def __hash__(self) -> int:
        return hash(('ScalarField', self.kind))

    def __repr__(self) -> str:
        return f"ScalarField({self.kind!r})"

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def has_q(self) -> bool:
        return self.kind == QRAT

    def convert(self, value: Any):
        """Bring an int, QQ element, Fraction, string or field element into this field"""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise ScalarParseError(f"not a scalar: {value!r}")
        if isinstance(value, int):
            return self.domain.convert(value)
        if self.domain.of_type(value):
            return value
        if QQ.of_type(value):
            return self.domain.convert_from(value, QQ)
        if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
            return self.domain.convert(QQ(int(value.numerator), int(value.denominator)))
        if self.kind == RATIONAL and hasattr(value, 'numer') and hasattr(value, 'denom'):
            raise ScalarParseError("q-dependent value used in a rational algebra")
        try:
            return self.domain.convert(value)
        except Exception as e:
            raise ScalarParseError(f"cannot convert {value!r} to {self.kind}: {e}")

    def fraction(self, numerator: int, denominator: int = 1):
        if denominator == 0:
            raise ScalarParseError("zero denominator")
        return self.domain.convert(QQ(numerator, denominator))

    def is_zero(self, value) -> bool:
        return not value

    def equal(self, a, b) -> bool:
        return not (a - b)

    def power(self, value, exponent: int):
        if exponent < 0 and not value:
            raise ZeroDivisionError("negative power of zero")
        return value ** exponent

    def q_power(self, exponent: int):
        if not self.has_q:
            raise UnsupportedParameterError("q is not available in a rational algebra")
        return self.q ** exponent

    def key(self, value) -> Tuple:
        """Hashable canonical key: lowest terms, monic denominator"""
        if self.kind == RATIONAL:
            return (int(value.numerator), int(value.denominator))
        numer, denom = self._monic(value)
        return (tuple(sorted(numer.terms())), tuple(sorted(denom.terms())))

    def _monic(self, value):
        numer, denom = value.numer, value.denom
        lead = denom.LC
        return numer.quo_ground(lead), denom.quo_ground(lead)

    # ------------------------------------------------------------------
    # textual form

    def render(self, value) -> str:
        """Canonical text, e.g. '3/4' or '(q^2+1)/(q)'"""
        if self.kind == RATIONAL:
            return _render_rational(value)
        if not value:
            return "0"
        numer, denom = self._monic(value)
        if denom.is_ground:
            return _render_poly(numer)
        return f"({_render_poly(numer)})/({_render_poly(denom)})"

    def parse(self, text: str):
        from .expressions import parse_scalar
        return parse_scalar(text, self)

    def is_simple(self, value) -> bool:
        """True when the rendering needs no parentheses inside a product"""
        if self.kind == RATIONAL:
            return True
        numer, denom = self._monic(value)
        return denom.is_ground and len(numer.terms()) <= 1

    # ------------------------------------------------------------------
    # q-analogues

    def q_int(self, n: int, base_exponent: int = 1):
        v = self.q_power(base_exponent)
        return (v ** n - v ** (-n)) / (v - v ** (-1))

    def q_factorial(self, n: int, base_exponent: int = 1):
        result = self.one
        for k in range(1, n + 1):
            result *= self.q_int(k, base_exponent)
        return result

    def q_binomial(self, m: int, l: int, base_exponent: int = 1):
        if l < 0 or l > m:
            return self.zero
        return (self.q_factorial(m, base_exponent)
                / (self.q_factorial(l, base_exponent)
                   * self.q_factorial(m - l, base_exponent)))

    def specialize_q1(self, value):
        """Value at q = 1, cancelling common (q - 1) factors first"""
        if self.kind == RATIONAL:
            return value
        numer, denom = value.numer, value.denom
        q_minus_one = numer.ring.gens[0] - 1
        while numer(1) == 0 and denom(1) == 0:
            numer = numer.exquo(q_minus_one)
            denom = denom.exquo(q_minus_one)
        if denom(1) == 0:
            raise WeightError(f"{self.render(value)} has a pole at q = 1")
        return QQ.convert(numer(1)) / QQ.convert(denom(1))


def _render_rational(value) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def _render_poly(poly) -> str:
    if not poly:
        return "0"
    pieces = []
    for (exponent,), coeff in sorted(poly.terms(), key=lambda t: -t[0][0]):
        if exponent == 0:
            pieces.append(_render_rational(coeff))
            continue
        mono = "q" if exponent == 1 else f"q^{exponent}"
        if coeff == 1:
            pieces.append(mono)
        elif coeff == -1:
            pieces.append("-" + mono)
        else:
            pieces.append(f"{_render_rational(coeff)}*{mono}")
    text = pieces[0]
    for piece in pieces[1:]:
        text += piece if piece.startswith("-") else "+" + piece
    return text


RATIONALS = ScalarField(RATIONAL)
QFUNCTIONS = ScalarField(QRAT)


def field_for(kind: str) -> ScalarField:
    return QFUNCTIONS if kind == QRAT else RATIONALS


def q_int(n: int):
    """Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1)"""
    return QFUNCTIONS.q_int(n)


def q_binomial(m: int, l: int, base_exponent: int = 1):
    """Gaussian binomial in q^base_exponent"""
    return QFUNCTIONS.q_binomial(m, l, base_exponent)
