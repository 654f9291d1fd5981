#!/usr/bin/env python3
"""
Rewriting core for presented triangular algebras

Words are tuples of symbol indices. A Presentation holds a classed
alphabet (lowering < cartan < raising, declaration order inside a class)
and oriented rules lhs -> rhs. Irreducible words are the PBW monomials;
every product is reduced by pushing one letter at a time into an
irreducible prefix, with the results memoized per presentation.
"""

import logging
import threading
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import MissingRuleError, PresentationError, TerminationError, UnknownSymbolError, WeightError
from .expressions import (Word, WordSum, parse_expression, parse_word, render_terms,
                          render_word, ws_accumulate, ws_add, ws_mul, ws_scale)
from .weights import Offset, RootVector, WeightModel

logger = logging.getLogger(__name__)

LOWERING = 'lowering'
CARTAN = 'cartan'
RAISING = 'raising'
CLASS_RANK = {LOWERING: 0, CARTAN: 1, RAISING: 2}


@dataclass
class GeneratorSymbol:
    """One letter of the alphabet"""
    name: str
    cls: str
    root: RootVector
    weight: Offset
    degree: int = 1
    grouplike: bool = False
    inverse: Optional[str] = None
    order: Optional[int] = None
    coordinate: Optional[str] = None
    power: int = 1


@dataclass
class RewriteRule:
    lhs: Word
    rhs: WordSum


@dataclass
class OverlapFailure:
    word: Word
    difference: 'NormalForm'

    def describe(self, presentation: 'Presentation') -> str:
        return f"{presentation.render_word(self.word)}: {self.difference}"


@dataclass
class PBWReport:
    """Result of the bounded overlap check"""
    algebra: str
    max_degree: int
    overlaps_checked: int
    failures: List[OverlapFailure] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def note(self) -> str:
        return (f"local confluence evidence up to filtration degree {self.max_degree}, "
                f"not a proof of the PBW property")


class NormalForm:
    """Reduced linear combination of PBW monomials"""

    __slots__ = ('presentation', 'terms')

    def __init__(self, presentation: 'Presentation', terms: Optional[Dict[Word, object]] = None):
        self.presentation = presentation
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @property
    def field(self):
        return self.presentation.field

    def _coerce(self, other) -> 'NormalForm':
        if isinstance(other, NormalForm):
            if other.presentation is not self.presentation and other.presentation.name != self.presentation.name:
                raise PresentationError(
                    f"elements of {other.presentation.name} and {self.presentation.name} mixed")
            return other
        return self.presentation.scalar(other)

    def __add__(self, other) -> 'NormalForm':
        other = self._coerce(other)
        return NormalForm(self.presentation, ws_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other) -> 'NormalForm':
        other = self._coerce(other)
        return NormalForm(self.presentation, ws_add(self.terms, other.terms, -self.field.one))

    def __rsub__(self, other) -> 'NormalForm':
        return self._coerce(other) - self

    def __neg__(self) -> 'NormalForm':
        return NormalForm(self.presentation, ws_scale(self.terms, -self.field.one))

    def __mul__(self, other) -> 'NormalForm':
        if isinstance(other, NormalForm):
            return self.presentation.multiply(self, self._coerce(other))
        return NormalForm(self.presentation, ws_scale(self.terms, self.field.convert(other)))

    def __rmul__(self, other) -> 'NormalForm':
        return NormalForm(self.presentation, ws_scale(self.terms, self.field.convert(other)))

    def __pow__(self, n: int) -> 'NormalForm':
        result = self.presentation.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, NormalForm):
            return (self - other).is_zero()
        try:
            return (self - self.presentation.scalar(other)).is_zero()
        except Exception:
            return NotImplemented

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word):
        return self.terms.get(tuple(word), self.field.zero)

    def sorted_terms(self) -> List[Tuple[Word, object]]:
        key = self.presentation.word_sort_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]))

    def words(self) -> List[Word]:
        return [w for w, _ in self.sorted_terms()]

    def render(self) -> str:
        return render_terms(self.sorted_terms(), self.presentation.names, self.field)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NormalForm({self.presentation.name}: {self.render()})"


class Presentation:
    """Classed alphabet plus terminating rewrite rules"""

    def __init__(self, name: str, field, model: WeightModel,
                 symbols: Sequence[GeneratorSymbol], rules: Sequence[RewriteRule]):
        self.name = name
        self.field = field
        self.model = model
        self.symbols = list(symbols)
        self.names = [s.name for s in self.symbols]
        self.index = {}
        for i, s in enumerate(self.symbols):
            if s.name in self.index:
                raise PresentationError(f"symbol '{s.name}' declared twice")
            self.index[s.name] = i
        order = sorted(range(len(self.symbols)), key=lambda i: (CLASS_RANK[self.symbols[i].cls], i))
        self.position = {i: p for p, i in enumerate(order)}
        self.rules: Dict[Word, WordSum] = {}
        for rule in rules:
            if rule.lhs in self.rules:
                raise PresentationError(f"two rules for {self.render_word(rule.lhs)}")
            self.rules[rule.lhs] = dict(rule.rhs)
        self._by_last: Dict[int, List[Word]] = {}
        for lhs in self.rules:
            self._by_last.setdefault(lhs[-1], []).append(lhs)
        self.inverses = self._inverse_words()
        self._cache: Dict[Tuple[Word, int], Dict[Word, object]] = {}
        self._lock = threading.Lock()
        self._pbw_degree = 0
        self._validate()

    def __repr__(self) -> str:
        return f"Presentation({self.name}, {len(self.symbols)} symbols, {len(self.rules)} rules)"

    # ------------------------------------------------------------------
    # alphabet

    def symbol(self, name: str) -> GeneratorSymbol:
        return self.symbols[self.lookup(name)]

    def lookup(self, name: str) -> int:
        if name not in self.index:
            raise UnknownSymbolError(name)
        return self.index[name]

    def of_class(self, cls: str) -> List[int]:
        return sorted((i for i, s in enumerate(self.symbols) if s.cls == cls), key=self.position.get)

    @property
    def lowering(self) -> List[int]:
        return self.of_class(LOWERING)

    @property
    def cartan(self) -> List[int]:
        return self.of_class(CARTAN)

    @property
    def raising(self) -> List[int]:
        return self.of_class(RAISING)

    def _inverse_words(self) -> Dict[int, Word]:
        inverses = {}
        for i, s in enumerate(self.symbols):
            if s.inverse is not None:
                inverses[i] = (self.lookup(s.inverse),)
            elif s.order is not None:
                inverses[i] = (i,) * (s.order - 1)
        return inverses

    def _validate(self):
        rank = self.model.root_rank
        for s in self.symbols:
            if s.root.rank != rank:
                raise PresentationError(f"symbol {s.name} has a root of rank {s.root.rank}, expected {rank}")
            if s.cls == CARTAN and not s.root.is_zero():
                raise PresentationError(f"cartan symbol {s.name} must have weight 0")
            if s.cls == RAISING and not s.root.is_positive():
                raise PresentationError(f"raising symbol {s.name} needs a positive root")
            if s.cls == LOWERING and not (-s.root).is_positive():
                raise PresentationError(f"lowering symbol {s.name} needs a negative root")
            if s.degree < 1:
                raise PresentationError(f"symbol {s.name} needs a positive degree")
        for lhs, rhs in self.rules.items():
            bound = self.measure(lhs)
            for word in rhs:
                if not self.measure(word) < bound:
                    raise TerminationError(
                        f"rule {self.render_word(lhs)} -> {self.render_word(word)} does not lower the measure")
        for a in range(len(self.symbols)):
            for b in range(len(self.symbols)):
                if self.position[a] > self.position[b] and (a, b) not in self.rules:
                    raise MissingRuleError((self.names[a], self.names[b]))

    # ------------------------------------------------------------------
    # words

    def degree(self, word: Word) -> int:
        return sum(self.symbols[i].degree for i in word)

    def inversions(self, word: Word) -> int:
        ranks = [self.position[i] for i in word]
        return sum(1 for x in range(len(ranks)) for y in range(x + 1, len(ranks)) if ranks[x] > ranks[y])

    def measure(self, word: Word) -> Tuple[int, int, int]:
        """Disorder measure (filtration degree, length, inversions)"""
        return (self.degree(word), len(word), self.inversions(word))

    def word_sort_key(self, word: Word) -> Tuple:
        return (self.degree(word), len(word), tuple(self.position[i] for i in word))

    def ad_weight(self, word: Word) -> RootVector:
        total = RootVector.zero(self.model.root_rank)
        for i in word:
            total = total + self.symbols[i].root
        return total

    def offset(self, word: Word) -> Offset:
        total = self.model.zero_offset()
        for i in word:
            total = self.model.combine(total, self.symbols[i].weight)
        return total

    def is_irreducible(self, word: Word) -> bool:
        for end in range(1, len(word) + 1):
            for lhs in self._by_last.get(word[end - 1], ()):
                if len(lhs) <= end and word[end - len(lhs):end] == lhs:
                    return False
        return True

    def split(self, word: Word) -> Tuple[Word, Word, Word]:
        """(lowering, cartan, raising) parts of a PBW monomial"""
        parts = {LOWERING: [], CARTAN: [], RAISING: []}
        for i in word:
            parts[self.symbols[i].cls].append(i)
        return tuple(parts[LOWERING]), tuple(parts[CARTAN]), tuple(parts[RAISING])

    def evaluate_cartan(self, word: Word, weight) -> object:
        """lambda(word) for a word in cartan letters"""
        value = self.field.one
        for i in word:
            symbol = self.symbols[i]
            if symbol.cls != CARTAN or symbol.coordinate is None:
                raise WeightError(f"{symbol.name} cannot be evaluated at a weight")
            value = value * self.model.evaluate(weight, symbol.coordinate, symbol.power)
        return value

    def render_word(self, word: Word) -> str:
        return render_word(word, self.names)

    def parse_word(self, text: str) -> Word:
        return parse_word(text, self.field, self.index, self.inverses)

    # ------------------------------------------------------------------
    # reduction

    def _match_tail(self, word: Word) -> Optional[Tuple[int, Word]]:
        best = None
        for lhs in self._by_last.get(word[-1], ()):
            n = len(lhs)
            if n <= len(word) and word[-n:] == lhs:
                start = len(word) - n
                if best is None or start < best[0]:
                    best = (start, lhs)
        return best

    def _mul_letter(self, mono: Word, letter: int) -> Dict[Word, object]:
        key = (mono, letter)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        word = mono + (letter,)
        match = self._match_tail(word)
        if match is None:
            result = {word: self.field.one}
        else:
            start, lhs = match
            prefix = word[:start]
            result = {}
            for rword, coeff in self.rules[lhs].items():
                partial = {prefix: coeff}
                for l in rword:
                    partial = self._mul_terms_letter(partial, l)
                ws_accumulate(result, partial)
        with self._lock:
            return self._cache.setdefault(key, result)

    def _mul_terms_letter(self, terms: Dict[Word, object], letter: int) -> Dict[Word, object]:
        result: Dict[Word, object] = {}
        for mono, coeff in terms.items():
            ws_accumulate(result, self._mul_letter(mono, letter), coeff)
        return result

    def reduce_terms(self, prefix_terms: Dict[Word, object], word: Word) -> Dict[Word, object]:
        """Reduced (sum of irreducible prefixes) * word"""
        terms = prefix_terms
        for letter in word:
            terms = self._mul_terms_letter(terms, letter)
        return terms

    def reduce_word(self, word: Word) -> Dict[Word, object]:
        return self.reduce_terms({(): self.field.one}, tuple(word))

    def normal_form(self, expr: WordSum) -> NormalForm:
        """Reduce a raw linear combination of words"""
        result: Dict[Word, object] = {}
        for word, coeff in expr.items():
            for i in word:
                if not 0 <= i < len(self.symbols):
                    raise UnknownSymbolError(str(i))
            ws_accumulate(result, self.reduce_word(word), coeff)
        return NormalForm(self, result)

    def multiply(self, a: NormalForm, b: NormalForm) -> NormalForm:
        result: Dict[Word, object] = {}
        for wb, cb in b.terms.items():
            partial = self.reduce_terms(a.terms, wb)
            ws_accumulate(result, partial, cb)
        return NormalForm(self, result)

    @property
    def cache_size(self) -> int:
        return len(self._cache)

    # ------------------------------------------------------------------
    # elements

    def scalar(self, value) -> NormalForm:
        value = self.field.convert(value)
        return NormalForm(self, {(): value} if value else {})

    def generator(self, name: str) -> NormalForm:
        return NormalForm(self, {(self.lookup(name),): self.field.one})

    def word_element(self, word: Word) -> NormalForm:
        return self.normal_form({tuple(word): self.field.one})

    def element(self, text: str, constants: Optional[Mapping[str, object]] = None) -> NormalForm:
        return self.normal_form(parse_expression(text, self.field, self.index, constants, self.inverses))

    def commutator(self, a: NormalForm, b: NormalForm) -> NormalForm:
        return a * b - b * a

    def is_homogeneous(self, elem: NormalForm) -> bool:
        weights = {self.ad_weight(w) for w in elem.terms}
        return len(weights) <= 1

    def element_weight(self, elem: NormalForm) -> Optional[RootVector]:
        weights = {self.ad_weight(w) for w in elem.terms}
        if len(weights) != 1:
            return RootVector.zero(self.model.root_rank) if not weights else None
        return weights.pop()

    # ------------------------------------------------------------------
    # maps

    def apply_hom(self, assignment: Mapping[int, NormalForm], elem: NormalForm,
                  target: Optional['Presentation'] = None, anti: bool = False) -> NormalForm:
        """Image of elem under the (anti-)multiplicative extension of assignment"""
        target = target or self
        result = target.scalar(0)
        images: Dict[Word, NormalForm] = {}
        for word, coeff in elem.terms.items():
            image = images.get(word)
            if image is None:
                image = target.scalar(1)
                letters = reversed(word) if anti else word
                for i in letters:
                    if i not in assignment:
                        raise UnknownSymbolError(f"{self.names[i]} (no image assigned)")
                    image = image * assignment[i]
                images[word] = image
            result = result + image * coeff
        return result

    def apply_antihom(self, assignment: Mapping[int, NormalForm], elem: NormalForm,
                      target: Optional['Presentation'] = None) -> NormalForm:
        return self.apply_hom(assignment, elem, target, anti=True)

    def assignment(self, mapping: Mapping[str, Union[str, NormalForm]],
                   target: Optional['Presentation'] = None) -> Dict[int, NormalForm]:
        """Symbol-name map (texts or elements) to an index-keyed assignment"""
        target = target or self
        result = {}
        for name, image in mapping.items():
            result[self.lookup(name)] = image if isinstance(image, NormalForm) else target.element(image)
        return result

    # ------------------------------------------------------------------
    # confluence

    def _one_step(self, word: Word, start: int, lhs: Word) -> WordSum:
        return ws_mul(ws_mul({word[:start]: self.field.one}, self.rules[lhs]),
                      {word[start + len(lhs):]: self.field.one})

    def ambiguities(self, max_degree: int) -> List[Tuple[Word, Tuple[int, Word], Tuple[int, Word]]]:
        """Overlap and inclusion ambiguities of total degree <= max_degree"""
        found = []
        seen = set()
        rules = sorted(self.rules, key=self.word_sort_key)
        for l1 in rules:
            for l2 in rules:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        word = l1 + l2[k:]
                        entry = (word, (0, l1), (len(l1) - k, l2))
                        if self.degree(word) <= max_degree and entry not in seen:
                            seen.add(entry)
                            found.append(entry)
                if len(l2) < len(l1):
                    for p in range(len(l1) - len(l2) + 1):
                        if l1[p:p + len(l2)] == l2:
                            entry = (l1, (0, l1), (p, l2))
                            if self.degree(l1) <= max_degree and entry not in seen:
                                seen.add(entry)
                                found.append(entry)
        return found

    def check_pbw(self, max_degree: int) -> PBWReport:
        """Resolve every ambiguity up to max_degree both ways and compare"""
        if max_degree < 3:
            raise PresentationError("check_pbw needs max_degree >= 3")
        ambiguities = self.ambiguities(max_degree)
        logger.debug("%s: %d ambiguities up to degree %d", self.name, len(ambiguities), max_degree)
        report = PBWReport(self.name, max_degree, len(ambiguities))
        for word, (p1, l1), (p2, l2) in ambiguities:
            left = self.normal_form(self._one_step(word, p1, l1))
            right = self.normal_form(self._one_step(word, p2, l2))
            difference = left - right
            if not difference.is_zero():
                report.failures.append(OverlapFailure(word, difference))
        logger.info("%s: pbw check degree %d, %d ambiguities, %d failures",
                    self.name, max_degree, len(ambiguities), len(report.failures))
        return report

    def ensure_pbw(self, degree: int):
        """Raise unless check_pbw passes at this degree; passing degrees are remembered"""
        degree = max(degree, 3)
        if degree <= self._pbw_degree:
            return
        report = self.check_pbw(degree)
        if not report.passed:
            raise PresentationError(f"{self.name} fails the overlap check at degree {degree}: "
                                    f"{report.failures[0].describe(self)}")
        self._pbw_degree = max(self._pbw_degree, degree)


class PresentationBuilder:
    """Collects symbols and relations, orients them, and builds a Presentation"""

    def __init__(self, name: str, field, model: WeightModel):
        self.name = name
        self.field = field
        self.model = model
        self.symbols: List[GeneratorSymbol] = []
        self.index: Dict[str, int] = {}
        self.rules: Dict[Word, WordSum] = {}

    def add(self, symbol: GeneratorSymbol) -> int:
        if symbol.name in self.index:
            raise PresentationError(f"symbol '{symbol.name}' declared twice")
        self.index[symbol.name] = len(self.symbols)
        self.symbols.append(symbol)
        return self.index[symbol.name]

    def symbol(self, name: str, cls: str, root: Optional[RootVector] = None, weight: Optional[Offset] = None,
               **options) -> int:
        """Declare a symbol; weight defaults to the lattice element of its root"""
        if root is None:
            root = RootVector.zero(self.model.root_rank)
        if weight is None:
            weight = self.model.root_offset(root)
        return self.add(GeneratorSymbol(name, cls, root, tuple(weight), **options))

    def _position(self, i: int) -> Tuple[int, int]:
        return (CLASS_RANK[self.symbols[i].cls], i)

    def _inverses(self) -> Dict[int, Word]:
        inverses = {}
        for i, s in enumerate(self.symbols):
            if s.inverse is not None and s.inverse in self.index:
                inverses[i] = (self.index[s.inverse],)
            elif s.order is not None:
                inverses[i] = (i,) * (s.order - 1)
        return inverses

    def expr(self, value, constants: Optional[Mapping[str, object]] = None) -> WordSum:
        """Accept text, a WordSum, a NormalForm or a scalar"""
        if isinstance(value, str):
            return parse_expression(value, self.field, self.index, constants, self._inverses())
        if isinstance(value, NormalForm):
            return dict(value.terms)
        if isinstance(value, dict):
            return dict(value)
        scalar = self.field.convert(value)
        return {(): scalar} if scalar else {}

    def word(self, value) -> Word:
        if isinstance(value, tuple):
            return value
        if isinstance(value, str) and value in self.index:
            return (self.index[value],)
        return parse_word(value, self.field, self.index, self._inverses())

    def rule(self, lhs, rhs):
        lhs = self.word(lhs)
        if lhs in self.rules:
            raise PresentationError(f"two rules for {render_word(lhs, [s.name for s in self.symbols])}")
        self.rules[lhs] = self.expr(rhs)

    def bracket(self, x: str, y: str, rhs=0):
        """x*y - y*x = rhs"""
        self.qcommute(x, y, 1, rhs)

    def qcommute(self, x: str, y: str, c, rhs=0):
        """x*y - c*y*x = rhs, oriented toward the PBW order"""
        ix, iy = self.index[x], self.index[y]
        c = self.field.convert(c)
        rhs = self.expr(rhs)
        if self._position(ix) > self._position(iy):
            self.rule((ix, iy), ws_add({(iy, ix): c}, rhs))
        else:
            inverse = self.field.one / c
            self.rule((iy, ix), ws_add(ws_scale({(ix, iy): self.field.one}, inverse), rhs, -inverse))

    def commute_remaining(self):
        """Plain commuting rules for every out-of-order pair still without one"""
        for a in range(len(self.symbols)):
            for b in range(len(self.symbols)):
                if self._position(a) > self._position(b) and (a, b) not in self.rules:
                    self.rules[(a, b)] = {(b, a): self.field.one}

    def build(self) -> Presentation:
        rules = [RewriteRule(lhs, rhs) for lhs, rhs in self.rules.items()]
        presentation = Presentation(self.name, self.field, self.model, self.symbols, rules)
        logger.debug("built %r", presentation)
        return presentation
