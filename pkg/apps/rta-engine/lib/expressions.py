#!/usr/bin/env python3
"""
Expression grammar shared by relations, weights and the CLI

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] NUMBER)?
    atom   := NUMBER | NAME | '(' expr ')'

Products of generator names are noncommutative words; division is only
allowed by scalars. Names may carry trailing primes (e', K'').
"""

import logging
import re
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ExpressionError, ScalarParseError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
WordSum = Dict[Word, object]

TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*'*)|(\*\*|[-+*/^()])")


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    """Split text into (kind, value, position) tokens"""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = TOKEN_RE.match(text, pos)
        if not match:
            raise ExpressionError("unexpected character", text[pos], pos)
        number, name, op = match.groups()
        if number is not None:
            tokens.append(('num', number, pos))
        elif name is not None:
            tokens.append(('name', name, pos))
        else:
            tokens.append(('op', '^' if op == '**' else op, pos))
        pos = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


# ----------------------------------------------------------------------
# word-sum arithmetic (noncommutative, unreduced)

def ws_add(a: WordSum, b: WordSum, scale=None) -> WordSum:
    result = dict(a)
    for word, coeff in b.items():
        if scale is not None:
            coeff = coeff * scale
        total = result.get(word)
        total = coeff if total is None else total + coeff
        if total:
            result[word] = total
        else:
            result.pop(word, None)
    return result


def ws_accumulate(target: WordSum, source: WordSum, scale=None) -> WordSum:
    """In-place target += scale * source"""
    for word, coeff in source.items():
        if scale is not None:
            coeff = coeff * scale
        total = target.get(word)
        total = coeff if total is None else total + coeff
        if total:
            target[word] = total
        else:
            target.pop(word, None)
    return target


def ws_scale(a: WordSum, scalar) -> WordSum:
    if not scalar:
        return {}
    return {word: coeff * scalar for word, coeff in a.items()}


def ws_mul(a: WordSum, b: WordSum) -> WordSum:
    result: WordSum = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            word = wa + wb
            total = result.get(word)
            coeff = ca * cb
            total = coeff if total is None else total + coeff
            if total:
                result[word] = total
            else:
                result.pop(word, None)
    return result


def ws_scalar_part(a: WordSum, field):
    """Return the scalar if a has no letters, else None"""
    if not a:
        return field.zero
    if set(a) == {()}:
        return a[()]
    return None


class ExpressionParser:
    """Recursive-descent parser producing unreduced word sums"""

    def __init__(self, text: str, field, symbols: Optional[Mapping[str, int]] = None,
                 constants: Optional[Mapping[str, object]] = None,
                 inverses: Optional[Mapping[int, Word]] = None):
        self.text = text
        self.field = field
        self.symbols = symbols or {}
        self.constants = dict(constants or {})
        if field.has_q and 'q' not in self.symbols:
            self.constants.setdefault('q', field.q)
        self.inverses = inverses or {}
        self.tokens = tokenize(text)
        self.index = 0

    # token helpers
    def _peek(self):
        return self.tokens[self.index]

    def _next(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _expect(self, value: str):
        kind, text, pos = self._next()
        if text != value:
            raise ExpressionError(f"expected '{value}'", text or 'end of input', pos)

    def _fail(self, message: str, token=None):
        kind, text, pos = token or self._peek()
        raise ExpressionError(message, text or 'end of input', pos)

    def parse(self) -> WordSum:
        if self._peek()[0] == 'end':
            self._fail("empty expression")
        result = self._expr()
        if self._peek()[0] != 'end':
            self._fail("unexpected token")
        return result

    def _expr(self) -> WordSum:
        result = self._term()
        while self._peek()[1] in ('+', '-') and self._peek()[0] == 'op':
            op = self._next()[1]
            rhs = self._term()
            result = ws_add(result, rhs, None if op == '+' else -self.field.one)
        return result

    def _term(self) -> WordSum:
        result = self._unary()
        while self._peek()[0] == 'op' and self._peek()[1] in ('*', '/'):
            op_token = self._next()
            rhs = self._unary()
            if op_token[1] == '*':
                result = ws_mul(result, rhs)
                continue
            divisor = ws_scalar_part(rhs, self.field)
            if divisor is None:
                self._fail("division by a non-scalar", op_token)
            if not divisor:
                self._fail("division by zero", op_token)
            result = ws_scale(result, self.field.one / divisor)
        return result

    def _unary(self) -> WordSum:
        kind, text, pos = self._peek()
        if kind == 'op' and text in ('+', '-'):
            self._next()
            inner = self._unary()
            return inner if text == '+' else ws_scale(inner, -self.field.one)
        return self._power()

    def _power(self) -> WordSum:
        base_token = self._peek()
        base = self._atom()
        if not (self._peek()[0] == 'op' and self._peek()[1] == '^'):
            return base
        self._next()
        negative = False
        if self._peek()[1] == '-':
            self._next()
            negative = True
        kind, text, pos = self._next()
        if kind != 'num':
            raise ExpressionError("expected integer exponent", text or 'end of input', pos)
        exponent = int(text)
        scalar = ws_scalar_part(base, self.field)
        if scalar is not None:
            if negative and not scalar:
                self._fail("negative power of zero", base_token)
            value = self.field.one if exponent == 0 else scalar ** (-exponent if negative else exponent)
            return {(): value} if value else {}
        if negative:
            base = self._invert(base, base_token)
        result: WordSum = {(): self.field.one}
        for _ in range(exponent):
            result = ws_mul(result, base)
        return result

    def _invert(self, base: WordSum, token) -> WordSum:
        if len(base) == 1:
            (word, coeff), = base.items()
            if len(word) == 1 and word[0] in self.inverses and coeff == self.field.one:
                return {self.inverses[word[0]]: self.field.one}
        self._fail("negative power of a non-invertible element", token)

    def _atom(self) -> WordSum:
        kind, text, pos = self._next()
        if kind == 'num':
            return {(): self.field.convert(int(text))}
        if kind == 'name':
            if text in self.symbols:
                return {(self.symbols[text],): self.field.one}
            if text in self.constants:
                value = self.constants[text]
                return {(): value} if value else {}
            raise ExpressionError("unknown name", text, pos)
        if kind == 'op' and text == '(':
            inner = self._expr()
            self._expect(')')
            return inner
        raise ExpressionError("unexpected token", text or 'end of input', pos)


def parse_expression(text: str, field, symbols=None, constants=None, inverses=None) -> WordSum:
    return ExpressionParser(text, field, symbols, constants, inverses).parse()


def parse_scalar(text: str, field, constants=None):
    try:
        result = ExpressionParser(text, field, None, constants).parse()
    except ExpressionError as e:
        raise ScalarParseError(f"bad scalar '{text}': {e}")
    value = ws_scalar_part(result, field)
    if value is None:
        raise ScalarParseError(f"bad scalar '{text}'")
    return value


def parse_word(text: str, field, symbols, inverses=None) -> Word:
    """Parse a relation left-hand side: one word with coefficient 1"""
    result = ExpressionParser(text, field, symbols, None, inverses).parse()
    if len(result) != 1:
        raise ExpressionError("left-hand side must be a single word", text, 0)
    (word, coeff), = result.items()
    if coeff != field.one or not word:
        raise ExpressionError("left-hand side must be a monic word", text, 0)
    return word


# ----------------------------------------------------------------------
# rendering, the inverse of parsing

def render_word(word: Sequence[int], names: Sequence[str]) -> str:
    if not word:
        return "1"
    pieces = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = names[word[i]]
        pieces.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(pieces)


def render_coefficient(field, coeff) -> str:
    text = field.render(coeff)
    if field.is_simple(coeff) or (text.startswith('(') and text.endswith(')') and '/(' in text):
        return text
    return f"({text})"


def render_terms(terms: Iterable[Tuple[Word, object]], names: Sequence[str], field) -> str:
    pieces = []
    for word, coeff in terms:
        negative = False
        if field.render(coeff).startswith('-') and field.is_simple(coeff):
            negative = True
            coeff = -coeff
        elif not field.is_simple(coeff) and field.render(-coeff).count('-') < field.render(coeff).count('-'):
            negative = True
            coeff = -coeff
        if not word:
            body = render_coefficient(field, coeff)
        elif coeff == field.one:
            body = render_word(word, names)
        else:
            body = f"{render_coefficient(field, coeff)}*{render_word(word, names)}"
        pieces.append((negative, body))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text
