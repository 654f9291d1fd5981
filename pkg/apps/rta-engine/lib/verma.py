#!/usr/bin/env python3
"""
Truncated Verma modules

A VermaSlice holds the weight spaces of Z(lambda) down to depth D. The
basis of each space is the set of irreducible lowering words of that
weight acting on v_lambda; raising generators act through normal forms of
x * b with the cartan part evaluated at lambda and every term that still
carries a raising letter dropped (it kills v_lambda).

Spaces are keyed by (theta0, offset) where theta0 >= 0 is the depth in the
root lattice and offset the matching element of P, so non-strict models
keep their full G fibers.
"""

import logging
import threading
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Tuple

from . import linalg
from .errors import HypothesisError, PresentationError, UnsupportedParameterError
from .expressions import Word
from .rewriting import NormalForm, Presentation
from .weights import Offset, RootVector, Weight
from .zoo import AlgebraSpec

logger = logging.getLogger(__name__)

SpaceKey = Tuple[Tuple[int, ...], Tuple]


@dataclass
class WeightSpace:
    theta: RootVector
    offset: Offset
    weight: Weight
    basis: List[Word]
    key: SpaceKey

    @property
    def depth(self) -> int:
        return self.theta.height()

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class SingularVector:
    space: WeightSpace
    coefficients: List[object]

    def element(self, presentation: Presentation) -> NormalForm:
        """The vector as b in B_-, so that it equals b v_lambda"""
        terms = {w: c for w, c in zip(self.space.basis, self.coefficients) if c}
        return NormalForm(presentation, terms)


def lowering_monomials(presentation: Presentation, depth: int) -> List[Word]:
    """Irreducible lowering words of height <= depth, the empty word included"""
    letters = presentation.lowering
    heights = {i: (-presentation.symbols[i].root).height() for i in letters}
    found = [()]

    def extend(word: Word, start: int, height: int):
        for k in range(start, len(letters)):
            letter = letters[k]
            total = height + heights[letter]
            if total > depth:
                continue
            candidate = word + (letter,)
            if not presentation.is_irreducible(candidate):
                continue
            found.append(candidate)
            extend(candidate, k, total)

    extend((), 0, 0)
    return found


class VermaSlice:
    """Weight spaces of Z(lambda) to a fixed depth with the raising action"""

    def __init__(self, spec: AlgebraSpec, lam: Weight, depth: int):
        self.spec = spec
        self.presentation = spec.presentation
        self.model = spec.model
        self.field = spec.field
        self.lam = lam
        self.depth = depth
        self.spaces: Dict[SpaceKey, WeightSpace] = {}
        self.raising: Dict[Tuple[int, SpaceKey], Tuple[Optional[SpaceKey], List[list]]] = {}
        self._lowering: Dict[Tuple[int, SpaceKey], Tuple[Optional[SpaceKey], List[list]]] = {}

    def key(self, theta: RootVector, offset: Offset) -> SpaceKey:
        return (theta.coefficients, self.model.offset_key(offset))

    def ordered(self) -> List[WeightSpace]:
        """Spaces top-down: by depth, then by weight"""
        return sorted(self.spaces.values(), key=lambda s: (s.depth, s.theta.coefficients, s.weight.sort_key()))

    def dims_by_depth(self) -> List[int]:
        dims = [0] * (self.depth + 1)
        for space in self.spaces.values():
            dims[space.depth] += space.dim
        return dims

    # ------------------------------------------------------------------
    # action

    def act(self, letter: int, word: Word) -> Dict[Word, object]:
        """letter * word * v_lambda as lowering words with coefficients"""
        p = self.presentation
        result: Dict[Word, object] = {}
        for term, coeff in p.reduce_terms({(letter,): self.field.one}, word).items():
            low, cartan, raising = p.split(term)
            if raising:
                continue
            value = coeff * p.evaluate_cartan(cartan, self.lam)
            if value:
                total = result.get(low, self.field.zero) + value
                if total:
                    result[low] = total
                else:
                    result.pop(low, None)
        return result

    def _matrix(self, letter: int, source: WeightSpace) -> Tuple[Optional[SpaceKey], List[list]]:
        symbol = self.presentation.symbols[letter]
        theta = source.theta - symbol.root
        key = self.key(theta, self.model.combine(source.offset, symbol.weight))
        target = self.spaces.get(key)
        size = target.dim if target else 0
        position = {w: r for r, w in enumerate(target.basis)} if target else {}
        matrix = [[self.field.zero] * source.dim for _ in range(size)]
        for column, word in enumerate(source.basis):
            for image, coeff in self.act(letter, word).items():
                if image not in position:
                    if theta.height() > self.depth:
                        continue
                    raise PresentationError(
                        f"{self.presentation.render_word(image)} is not a basis word of weight {theta}")
                matrix[position[image]][column] = coeff
        return (key if target else None), matrix

    def lowering_matrix(self, letter: int, source: WeightSpace) -> Tuple[Optional[SpaceKey], List[list]]:
        entry = self._lowering.get((letter, source.key))
        if entry is None:
            entry = self._matrix(letter, source)
            self._lowering[(letter, source.key)] = entry
        return entry

    def stacked_raising(self, source: WeightSpace) -> List[list]:
        rows = []
        for letter in self.presentation.raising:
            rows.extend(self.raising[(letter, source.key)][1])
        return rows


def build_verma(spec: AlgebraSpec, lam: Weight, depth: int, check_degree: Optional[int] = None) -> VermaSlice:
    """Weight spaces of Z(lambda) to depth D and every raising matrix

    The presentation must pass the overlap check at check_degree, by default
    D + 2, before any weight space is built.
    """
    if depth < 1:
        raise UnsupportedParameterError(f"depth must be at least 1, got {depth}")
    p, model = spec.presentation, spec.model
    model.check(lam)
    p.ensure_pbw(depth + 2 if check_degree is None else check_degree)

    vslice = VermaSlice(spec, lam, depth)
    for word in lowering_monomials(p, depth):
        theta = -p.ad_weight(word)
        offset = p.offset(word)
        key = vslice.key(theta, offset)
        space = vslice.spaces.get(key)
        if space is None:
            space = WeightSpace(theta, offset, model.shift(lam, offset), [], key)
            vslice.spaces[key] = space
        space.basis.append(word)
    for space in vslice.spaces.values():
        space.basis.sort(key=p.word_sort_key)
    for space in vslice.ordered():
        for letter in p.raising:
            vslice.raising[(letter, space.key)] = vslice._matrix(letter, space)
    logger.info("%s: Verma slice at %s, depth %d, dims %s",
                spec.name, lam, depth, vslice.dims_by_depth())
    logger.debug("%s: %d spaces, rewrite cache %d", spec.name, len(vslice.spaces), p.cache_size)
    return vslice


def singular_vectors(vslice: VermaSlice) -> List[SingularVector]:
    """Basis of the joint kernel of the raising matrices, per space of positive depth"""
    found = []
    for space in vslice.ordered():
        if space.depth == 0:
            continue
        for vector in linalg.kernel(vslice.stacked_raising(space), space.dim, vslice.field):
            found.append(SingularVector(space, vector))
    return found


# ----------------------------------------------------------------------
# submodules

@dataclass
class SubmoduleLayer:
    space: WeightSpace
    basis: List[list]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def quotient_dim(self) -> int:
        return self.space.dim - len(self.basis)


def maximal_submodule(vslice: VermaSlice) -> Dict[SpaceKey, SubmoduleLayer]:
    """Y(lambda) space by space: v lies in Y iff every raising generator sends it into Y"""
    field = vslice.field
    layers: Dict[SpaceKey, SubmoduleLayer] = {}
    functionals: Dict[SpaceKey, List[list]] = {}
    for space in vslice.ordered():
        if space.depth == 0:
            radical = []
        else:
            rows = []
            for letter in vslice.presentation.raising:
                target, matrix = vslice.raising[(letter, space.key)]
                if target is None:
                    continue
                quotient = functionals[target]
                rows.extend(linalg.mat_mul(quotient, matrix, len(matrix), space.dim, field))
            radical = linalg.kernel(rows, space.dim, field)
        layers[space.key] = SubmoduleLayer(space, radical)
        functionals[space.key] = linalg.kernel(radical, space.dim, field)
    return layers


def generated_submodule(vslice: VermaSlice, vectors: Iterable[SingularVector]) -> Dict[SpaceKey, SubmoduleLayer]:
    """Span of B_- applied to weight vectors, within the slice"""
    field = vslice.field
    spans: Dict[SpaceKey, List[list]] = {key: [] for key in vslice.spaces}
    for vector in vectors:
        spans[vector.space.key].append(list(vector.coefficients))
    layers = {}
    for space in vslice.ordered():
        basis = linalg.row_basis(spans[space.key], space.dim, field)
        layers[space.key] = SubmoduleLayer(space, basis)
        if not basis:
            continue
        for letter in vslice.presentation.lowering:
            target, matrix = vslice.lowering_matrix(letter, space)
            if target is None:
                continue
            for vector in basis:
                image = linalg.mat_vec(matrix, vector, field)
                if not linalg.is_zero_vector(image):
                    spans[target].append(image)
    return layers


class CharacterCache:
    """Simple characters keyed by (lambda, depth), shared by closure workers"""

    def __init__(self):
        self._data: Dict[Tuple[Weight, int], Dict] = {}
        self._lock = threading.Lock()

    def get(self, key: Tuple[Weight, int]) -> Optional[Dict]:
        with self._lock:
            return self._data.get(key)

    def put(self, key: Tuple[Weight, int], value: Dict) -> Dict:
        with self._lock:
            return self._data.setdefault(key, value)

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


def simple_character(spec: AlgebraSpec, lam: Weight, depth: int,
                     cache: Optional[CharacterCache] = None) -> Dict[SpaceKey, Tuple[WeightSpace, int]]:
    """dim V(lambda) per space of Z(lambda), to depth D"""
    if depth == 0:
        zero = RootVector.zero(spec.model.root_rank)
        offset = spec.model.zero_offset()
        space = WeightSpace(zero, offset, lam, [()], (zero.coefficients, spec.model.offset_key(offset)))
        return {space.key: (space, 1)}
    cache_key = (lam, depth)
    if cache is not None:
        cached = cache.get(cache_key)
        if cached is not None:
            return cached
    vslice = build_verma(spec, lam, depth)
    result = {key: (layer.space, layer.quotient_dim) for key, layer in maximal_submodule(vslice).items()}
    if cache is not None:
        result = cache.put(cache_key, result)
    return result


# ----------------------------------------------------------------------
# composition multiplicities

@dataclass
class CompositionReport:
    algebra: str
    lam: Weight
    depth: int
    horizon: int
    multiplicities: Dict[Weight, int] = dc_field(default_factory=dict)
    thetas: Dict[Weight, RootVector] = dc_field(default_factory=dict)

    def linked(self) -> List[Weight]:
        return [mu for mu, m in self.multiplicities.items() if m > 0]


def composition_multiplicities(spec: AlgebraSpec, lam: Weight, depth: int, margin: int = 0,
                               cache: Optional[CharacterCache] = None) -> CompositionReport:
    """[Z(lambda) : V(mu)] for mu within the horizon D - margin, by subtracting simple characters top-down"""
    horizon = depth - margin
    if horizon < 0:
        raise UnsupportedParameterError(f"truncation margin {margin} exceeds depth {depth}")
    vslice = build_verma(spec, lam, depth)
    model = spec.model
    report = CompositionReport(spec.name, lam, depth, horizon)
    remaining = {s.key: s.dim for s in vslice.spaces.values() if s.depth <= horizon}
    for space in vslice.ordered():
        if space.depth > horizon:
            break
        count = remaining[space.key]
        if count < 0:
            raise PresentationError(f"negative remainder {count} at {space.weight}")
        if count == 0:
            continue
        report.multiplicities[space.weight] = count
        report.thetas[space.weight] = space.theta
        character = simple_character(spec, space.weight, horizon - space.depth, cache)
        for sub, dim in character.values():
            if not dim:
                continue
            key = vslice.key(space.theta + sub.theta, model.combine(space.offset, sub.offset))
            remaining[key] -= count * dim
    logger.info("%s: composition factors of Z(%s) to depth %d: %d",
                spec.name, lam, horizon, len(report.multiplicities))
    return report


# ----------------------------------------------------------------------
# the every-vector-is-maximal scenario

@dataclass
class LayersReport:
    algebra: str
    lam: Weight
    depth: int
    layers: List[Tuple[WeightSpace, int]] = dc_field(default_factory=list)
    non_maximal: List[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.non_maximal

    @property
    def multiplicities(self) -> Dict[Weight, int]:
        return {space.weight: dim for space, dim in self.layers}


def check_layers_hypothesis(spec: AlgebraSpec, lam: Weight):
    """[x, y] for raising x and lowering y must vanish modulo A N_+ and B_- ker(lambda)"""
    p = spec.presentation
    for x in p.raising:
        for y in p.lowering:
            residue = {}
            for word, coeff in p.commutator(p.word_element((x,)), p.word_element((y,))).terms.items():
                low, cartan, raising = p.split(word)
                if raising:
                    continue
                value = coeff * p.evaluate_cartan(cartan, lam)
                residue[low] = residue.get(low, spec.field.zero) + value
            element = NormalForm(p, residue)
            if not element.is_zero():
                raise HypothesisError((p.names[x], p.names[y]), element.render())


def tcentral_jh(spec: AlgebraSpec, lam: Weight, depth: int) -> LayersReport:
    """Every b_- v_lambda maximal: one-dimensional subquotients with multiplicity dim (B_-)_{-theta}"""
    check_layers_hypothesis(spec, lam)
    vslice = build_verma(spec, lam, depth)
    report = LayersReport(spec.name, lam, depth)
    p = spec.presentation
    for space in vslice.ordered():
        report.layers.append((space, space.dim))
        for letter in p.raising:
            _, matrix = vslice.raising[(letter, space.key)]
            for column, word in enumerate(space.basis):
                if any(row[column] for row in matrix):
                    report.non_maximal.append(f"{p.names[letter]} * {p.render_word(word) or '1'}")
    return report
