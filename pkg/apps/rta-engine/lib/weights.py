#!/usr/bin/env python3
"""
Weight sets for the RTA engine

A WeightModel fixes the weight set G (additive functionals on a Cartan
space, or multiplicative characters of a finitely generated abelian group),
the simple roots Delta, and the restriction pi onto G0. Offsets are
elements of the weight lattice P in the same coordinates as G: vectors
that add in the additive case, value tuples that multiply otherwise.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .errors import ModelMismatchError, ScalarParseError, UnsupportedParameterError, WeightError

logger = logging.getLogger(__name__)

ADDITIVE = 'additive'
MULTIPLICATIVE = 'multiplicative'

Offset = Tuple[object, ...]


@dataclass(frozen=True, order=True)
class RootVector:
    """Element of the root lattice ZDelta, one integer per simple root"""
    coefficients: Tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> 'RootVector':
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, index: int, scale: int = 1) -> 'RootVector':
        values = [0] * rank
        values[index] = scale
        return cls(tuple(values))

    def _check(self, other: 'RootVector'):
        if len(other.coefficients) != len(self.coefficients):
            raise ModelMismatchError("root vectors of different rank")

    def __add__(self, other: 'RootVector') -> 'RootVector':
        self._check(other)
        return RootVector(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: 'RootVector') -> 'RootVector':
        self._check(other)
        return RootVector(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> 'RootVector':
        return RootVector(tuple(-a for a in self.coefficients))

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coefficients)

    def is_positive(self) -> bool:
        return self.is_nonnegative() and not self.is_zero()

    def height(self) -> int:
        return sum(self.coefficients)

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.coefficients) + "]"


class Weight:
    """A point of G: one scalar per model coordinate"""

    __slots__ = ('model', 'values', '_key')

    def __init__(self, model: 'WeightModel', values: Sequence):
        self.model = model
        self.values = tuple(values)
        self._key = (model.name, tuple(model.field.key(v) for v in self.values))

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __getitem__(self, coordinate: str):
        return self.values[self.model.index(coordinate)]

    def __repr__(self) -> str:
        return f"Weight({self.model.name}, {self.model.render_weight(self)})"

    def __str__(self) -> str:
        return self.model.render_weight(self)

    def sort_key(self) -> Tuple:
        return self.model.sort_key(self)


class WeightModel:
    """Weight set G with simple roots and restriction to G0"""

    def __init__(self, name: str, kind: str, field, coordinates: Sequence[str],
                 simple_roots: Sequence[Sequence], restriction: Optional[Sequence[Sequence]] = None,
                 torsion: Optional[Dict[str, int]] = None,
                 restricted_names: Optional[Sequence[str]] = None):
        if kind not in (ADDITIVE, MULTIPLICATIVE):
            raise UnsupportedParameterError(f"unknown weight kind '{kind}'")
        self.name = name
        self.kind = kind
        self.field = field
        self.coordinates = tuple(coordinates)
        self._index = {c: i for i, c in enumerate(self.coordinates)}
        self.simple_roots = tuple(tuple(field.convert(v) for v in root) for root in simple_roots)
        self.restriction = None if restriction is None else tuple(tuple(r) for r in restriction)
        self.torsion = dict(torsion or {})
        self.restricted_names = tuple(restricted_names) if restricted_names else None
        self._restricted = None
        self._validate()

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeightModel) and other.name == self.name
                and other.coordinates == self.coordinates)

    def __hash__(self) -> int:
        return hash((self.name, self.coordinates))

    def __repr__(self) -> str:
        return f"WeightModel({self.name!r}, {self.kind}, {list(self.coordinates)})"

    # ------------------------------------------------------------------
    # structure

    @property
    def rank(self) -> int:
        return len(self.coordinates)

    @property
    def root_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def is_additive(self) -> bool:
        return self.kind == ADDITIVE

    @property
    def is_strict(self) -> bool:
        return self.restriction is None

    def index(self, coordinate: str) -> int:
        if coordinate not in self._index:
            raise WeightError(f"model {self.name} has no coordinate '{coordinate}'")
        return self._index[coordinate]

    def _validate(self):
        for root in self.simple_roots:
            if len(root) != self.rank:
                raise WeightError(f"simple root {root} has wrong length for {self.name}")
        for coordinate, order in self.torsion.items():
            if order <= 0:
                raise UnsupportedParameterError(f"torsion order {order} must be positive")
            i = self.index(coordinate)
            for root in self.simple_roots:
                if root[i] ** order != self.field.one:
                    raise WeightError(f"root value on {coordinate} is not an {order}-th root of unity")
        projected = [self.project_offset(root) for root in self.simple_roots]
        if not projected:
            return
        if self.is_additive:
            independent = linalg.rank(projected, len(projected[0]), self.field) == len(projected)
        else:
            rows = self._exponent_rows(projected)
            independent = rows is not None and linalg.rank(rows, len(rows[0]), self.field) == len(rows)
        if not independent:
            raise WeightError(f"simple roots of {self.name} are not independent after restriction")

    def _free_positions(self, length: int) -> List[int]:
        if length != self.rank:
            return list(range(length))
        return [i for i, c in enumerate(self.coordinates) if c not in self.torsion]

    def _exponent_rows(self, values: Sequence[Sequence]) -> Optional[List[List]]:
        """q-exponents of monomial values on the free coordinates"""
        positions = self._free_positions(len(values[0]))
        rows = []
        for vector in values:
            row = []
            for i in positions:
                exponent = q_exponent(self.field, vector[i])
                if exponent is None:
                    return None
                row.append(self.field.convert(exponent))
            rows.append(row)
        return rows

    # ------------------------------------------------------------------
    # offsets (elements of P written in G coordinates)

    def zero_offset(self) -> Offset:
        unit = self.field.zero if self.is_additive else self.field.one
        return (unit,) * self.rank

    def combine(self, a: Offset, b: Offset) -> Offset:
        if self.is_additive:
            return tuple(x + y for x, y in zip(a, b))
        return tuple(x * y for x, y in zip(a, b))

    def offset_power(self, a: Offset, n: int) -> Offset:
        if self.is_additive:
            return tuple(x * n for x in a)
        return tuple(x ** n for x in a)

    def offset_key(self, a: Offset) -> Tuple:
        return tuple(self.field.key(v) for v in a)

    def root_offset(self, theta: RootVector) -> Offset:
        if theta.rank != self.root_rank:
            raise ModelMismatchError(f"root vector of rank {theta.rank} used with {self.name}")
        result = self.zero_offset()
        for n, root in zip(theta.coefficients, self.simple_roots):
            if n:
                result = self.combine(result, self.offset_power(root, n))
        return result

    def shift(self, weight: Weight, offset: Offset) -> Weight:
        self.check(weight)
        return Weight(self, self.combine(weight.values, offset))

    def check(self, weight: Weight):
        if weight.model != self:
            raise ModelMismatchError(f"weight from {weight.model.name} used with {self.name}")

    # ------------------------------------------------------------------
    # weights

    def weight(self, values: Sequence) -> Weight:
        if len(values) != self.rank:
            raise WeightError(f"{self.name} weights need {self.rank} values, got {len(values)}")
        converted = [self.field.convert(v) for v in values]
        if not self.is_additive:
            for c, v in zip(self.coordinates, converted):
                if not v:
                    raise WeightError(f"character value on {c} must be nonzero")
            for c, order in self.torsion.items():
                if converted[self.index(c)] ** order != self.field.one:
                    raise WeightError(f"value on {c} must satisfy x^{order} = 1")
        return Weight(self, converted)

    def act(self, theta: RootVector, weight: Weight) -> Weight:
        """theta * lambda"""
        self.check(weight)
        return self.shift(weight, self.root_offset(theta))

    def evaluate(self, weight: Weight, coordinate: str, power: int = 1):
        """Value of lambda on a cartan symbol"""
        value = weight.values[self.index(coordinate)]
        if self.is_additive:
            if power != 1:
                raise WeightError(f"additive coordinate {coordinate} cannot carry power {power}")
            return value
        return value ** power

    # ------------------------------------------------------------------
    # restriction

    def project_offset(self, values: Sequence) -> Offset:
        if self.restriction is None:
            return tuple(values)
        result = []
        for row in self.restriction:
            if self.is_additive:
                total = self.field.zero
                for c, v in zip(row, values):
                    if c:
                        total += self.field.convert(c) * v
            else:
                total = self.field.one
                for c, v in zip(row, values):
                    if c:
                        total *= v ** int(c)
            result.append(total)
        return tuple(result)

    @property
    def restricted(self) -> 'WeightModel':
        """The model of G0 (the model itself when strict)"""
        if self.restriction is None:
            return self
        if self._restricted is None:
            names = self.restricted_names or tuple(f"h0_{i + 1}" for i in range(len(self.restriction)))
            roots = [self.project_offset(r) for r in self.simple_roots]
            self._restricted = WeightModel(self.name + "/0", self.kind, self.field, names, roots)
        return self._restricted

    def project(self, weight: Weight) -> Weight:
        """pi: G -> G0"""
        self.check(weight)
        if self.restriction is None:
            return weight
        return Weight(self.restricted, self.project_offset(weight.values))

    # ------------------------------------------------------------------
    # order

    def leq(self, mu: Weight, lam: Weight) -> Optional[RootVector]:
        """theta0 >= 0 with theta0 * pi(mu) = pi(lambda), zero when mu == lambda"""
        self.check(mu)
        self.check(lam)
        zero = RootVector.zero(self.root_rank)
        if mu == lam:
            return zero
        if not self.simple_roots:
            return None
        p_mu = self.project_offset(mu.values)
        p_lam = self.project_offset(lam.values)
        roots = [self.project_offset(r) for r in self.simple_roots]
        if self.is_additive:
            rows = [[roots[i][j] for i in range(len(roots))] for j in range(len(p_mu))]
            rhs = [b - a for a, b in zip(p_mu, p_lam)]
        else:
            ratios = [b / a for a, b in zip(p_mu, p_lam)]
            exponent_rows = self._exponent_rows(roots)
            target = self._exponent_rows([ratios])
            if exponent_rows is None or target is None:
                return None
            rows = [[exponent_rows[i][j] for i in range(len(roots))] for j in range(len(target[0]))]
            rhs = target[0]
        solution = linalg.solve(rows, rhs, self.field, len(roots))
        if solution is None:
            return None
        coefficients = []
        for value in solution:
            n = as_integer(self.field, value)
            if n is None or n < 0:
                return None
            coefficients.append(n)
        theta = RootVector(tuple(coefficients))
        if theta.is_zero():
            return None
        shifted = self.combine(p_mu, self.project_offset(self.root_offset(theta)))
        if any(not self.field.equal(a, b) for a, b in zip(shifted, p_lam)):
            return None
        return theta

    def geq(self, lam: Weight, mu: Weight) -> Optional[RootVector]:
        return self.leq(mu, lam)

    # ------------------------------------------------------------------
    # literals

    def render_weight(self, weight: Weight) -> str:
        rendered = [self.field.render(v) for v in weight.values]
        if self.is_additive:
            return "[" + ", ".join(rendered) + "]"
        return "{" + ", ".join(f"{c}: {v}" for c, v in zip(weight.model.coordinates, rendered)) + "}"

    def render_offset(self, offset: Offset) -> str:
        return self.render_weight(Weight(self, offset))

    def parse_weight(self, text: str) -> Weight:
        return self.weight(self.parse_values(text))

    def parse_values(self, text: str) -> List:
        body = text.strip()
        if len(body) < 2 or (body[0], body[-1]) not in (('[', ']'), ('{', '}')):
            raise WeightError(f"malformed weight literal '{text}'")
        items = split_top_level(body[1:-1])
        if body[0] == '[':
            try:
                values = [self.field.parse(item) for item in items if item.strip()]
            except ScalarParseError as e:
                raise WeightError(f"malformed weight literal '{text}': {e}")
            if len(values) != self.rank:
                raise WeightError(f"weight literal '{text}' needs {self.rank} entries")
            return values
        values = [None] * self.rank
        for item in items:
            if not item.strip():
                continue
            if ':' not in item:
                raise WeightError(f"malformed weight entry '{item.strip()}'")
            name, value = item.split(':', 1)
            name = name.strip()
            if name not in self._index:
                raise WeightError(f"unknown coordinate '{name}' in weight literal")
            try:
                values[self._index[name]] = self.field.parse(value)
            except ScalarParseError as e:
                raise WeightError(f"malformed weight literal '{text}': {e}")
        missing = [c for c, v in zip(self.coordinates, values) if v is None]
        if missing:
            raise WeightError(f"weight literal '{text}' misses {', '.join(missing)}")
        return values

    def sort_key(self, weight: Weight) -> Tuple:
        if self.field.has_q:
            return tuple(self.field.render(v) for v in weight.values)
        return tuple(Fraction(int(v.numerator), int(v.denominator)) for v in weight.values)


def split_top_level(text: str) -> List[str]:
    """Split on commas that are not inside parentheses"""
    items, depth, current = [], 0, []
    for ch in text:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == ',' and depth == 0:
            items.append(''.join(current))
            current = []
        else:
            current.append(ch)
    items.append(''.join(current))
    return items


def as_integer(field, value) -> Optional[int]:
    if not value:
        return 0
    if field.has_q:
        if not (value.numer.is_ground and value.denom.is_ground):
            return None
        value = value.numer.LC / value.denom.LC
    if int(value.denominator) != 1:
        return None
    return int(value.numerator)


def q_exponent(field, value) -> Optional[int]:
    """e when value = c * q^e, else None (0 for constants)"""
    if not field.has_q:
        return 0 if value else None
    if not value:
        return None
    numer, denom = value.numer.terms(), value.denom.terms()
    if len(numer) != 1 or len(denom) != 1:
        return None
    return numer[0][0][0] - denom[0][0][0]


def rank1_dot(weight: Weight) -> Weight:
    """s . lambda = -lambda - 2 for rank-one models with alpha(h) = 2"""
    model = weight.model
    two = model.field.convert(2)
    if not (model.is_additive and model.rank == 1 and model.root_rank == 1
            and model.field.equal(model.simple_roots[0][0], two)):
        raise UnsupportedParameterError(f"dot action needs a rank-one sl2-type model, not {model.name}")
    return Weight(model, (-weight.values[0] - two,))
