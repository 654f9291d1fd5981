#!/usr/bin/env python3
"""
Centre tools: centrality certificates, the Harish-Chandra projection,
central characters and a bounded search for central elements.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import UnsupportedParameterError, WeightError
from .expressions import Word
from .rewriting import CARTAN, NormalForm, Presentation
from .weights import Weight
from .zoo import AlgebraSpec

logger = logging.getLogger(__name__)

MAX_SEARCH_DEGREE = 4


@dataclass
class CentralityCertificate:
    """Reduced commutator of an element with every generator"""
    element: NormalForm
    commutators: List[Tuple[str, NormalForm]] = dc_field(default_factory=list)

    @property
    def central(self) -> bool:
        return all(c.is_zero() for _, c in self.commutators)

    @property
    def counterexample(self) -> Optional[Tuple[str, NormalForm]]:
        for name, commutator in self.commutators:
            if not commutator.is_zero():
                return name, commutator
        return None


def is_central(spec: AlgebraSpec, x: NormalForm) -> CentralityCertificate:
    p = spec.presentation
    certificate = CentralityCertificate(x)
    for name in p.names:
        certificate.commutators.append((name, p.commutator(x, p.generator(name))))
    logger.debug("%s: centrality of %s: %s", spec.name, x, certificate.central)
    return certificate


def _theta_factor(spec: AlgebraSpec, word: Word):
    """gamma_{-rho} on a cartan monomial of quantum sl2, K -> q^-1 K"""
    p, field = spec.presentation, spec.field
    factor = field.one
    for i in word:
        symbol = p.symbols[i]
        if symbol.coordinate == "K":
            factor = factor * field.q_power(-symbol.power)
    return factor


def hc_project(spec: AlgebraSpec, x: NormalForm, theta_twist: bool = False) -> NormalForm:
    """xi: keep only the PBW monomials made of cartan letters"""
    p = spec.presentation
    if theta_twist:
        if spec.family != "uq_sl2":
            raise UnsupportedParameterError("the rho-shifted projection is defined for uq_sl2 only")
        if spec.params.get("lattice") == "coweight" or spec.params.get("nu", 1) != 1:
            raise UnsupportedParameterError("the rho shift needs the coroot lattice or torsion with nu(t) = 1")
    terms = {}
    for word, coeff in x.terms.items():
        if all(p.symbols[i].cls == CARTAN for i in word):
            terms[word] = coeff * _theta_factor(spec, word) if theta_twist else coeff
    return NormalForm(p, terms)


def evaluate(spec: AlgebraSpec, lam: Weight, h: NormalForm):
    """lambda on an element of H"""
    p = spec.presentation
    total = spec.field.zero
    for word, coeff in h.terms.items():
        total += coeff * p.evaluate_cartan(word, lam)
    return total


@dataclass
class CentralCharacter:
    lam: Weight
    values: Dict[str, object]

    def equal(self, other: 'CentralCharacter') -> bool:
        if set(self.values) != set(other.values):
            return False
        field = self.lam.model.field
        return all(field.equal(self.values[k], other.values[k]) for k in self.values)

    def rendered(self) -> Dict[str, str]:
        field = self.lam.model.field
        return {name: field.render(value) for name, value in sorted(self.values.items())}


def central_character(spec: AlgebraSpec, lam: Weight, elements: Mapping[str, NormalForm]) -> CentralCharacter:
    """chi_lambda = lambda o xi on the supplied central elements"""
    spec.model.check(lam)
    values = {name: evaluate(spec, lam, hc_project(spec, x)) for name, x in elements.items()}
    return CentralCharacter(lam, values)


def s4_relative(spec: AlgebraSpec, lam: Weight, candidates: Sequence[Weight],
                elements: Mapping[str, NormalForm]) -> List[Weight]:
    """Candidates whose central character matches chi_lambda on the given elements"""
    reference = central_character(spec, lam, elements)
    return [mu for mu in candidates if central_character(spec, mu, elements).equal(reference)]


# ----------------------------------------------------------------------
# dual pairs

@dataclass
class DualPairReport:
    element: NormalForm
    commutes_with_cartan: bool
    certificate: CentralityCertificate

    @property
    def central(self) -> bool:
        return self.certificate.central


def casimir_from_dual_pair(spec: AlgebraSpec, basis: Sequence[NormalForm],
                           dual_basis: Sequence[NormalForm]) -> DualPairReport:
    """sum_i v_i v_i*, checked against H and then against every generator"""
    if len(basis) != len(dual_basis):
        raise UnsupportedParameterError(f"dual bases of lengths {len(basis)} and {len(dual_basis)}")
    p = spec.presentation
    total = p.scalar(0)
    for v, w in zip(basis, dual_basis):
        if not (p.is_homogeneous(v) and p.is_homogeneous(w)):
            raise WeightError(f"{v} or {w} is not a weight vector")
        wv, ww = p.element_weight(v), p.element_weight(w)
        if wv != -ww:
            raise WeightError(f"weights {wv} of {v} and {ww} of {w} are not inverse")
        total = total + v * w
    commutes = all(p.commutator(total, p.word_element((i,))).is_zero() for i in p.cartan)
    return DualPairReport(total, commutes, is_central(spec, total))


# ----------------------------------------------------------------------
# bounded search

def pbw_monomials(presentation: Presentation, max_degree: int) -> List[Word]:
    """Irreducible words of filtration degree <= max_degree, the empty word included"""
    letters = sorted(range(len(presentation.symbols)), key=presentation.position.get)
    found = [()]

    def extend(word: Word, start: int, degree: int):
        for k in range(start, len(letters)):
            letter = letters[k]
            total = degree + presentation.symbols[letter].degree
            if total > max_degree:
                continue
            candidate = word + (letter,)
            if not presentation.is_irreducible(candidate):
                continue
            found.append(candidate)
            extend(candidate, k, total)

    extend((), 0, 0)
    return found


def center_search(spec: AlgebraSpec, max_degree: int) -> List[NormalForm]:
    """Basis of the central elements spanned by weight-zero PBW monomials of degree <= d"""
    if not 0 <= max_degree <= MAX_SEARCH_DEGREE:
        raise UnsupportedParameterError(f"center search degree must be within 0..{MAX_SEARCH_DEGREE}")
    p, field = spec.presentation, spec.field
    candidates = [w for w in pbw_monomials(p, max_degree) if p.ad_weight(w).is_zero()]
    columns = []
    rows_index: Dict[Tuple[int, Word], int] = {}
    for word in candidates:
        element = p.word_element(word)
        column = {}
        for g in range(len(p.symbols)):
            for term, coeff in p.commutator(element, p.word_element((g,))).terms.items():
                row = rows_index.setdefault((g, term), len(rows_index))
                column[row] = coeff
        columns.append(column)
    rows = [[field.zero] * len(candidates) for _ in range(len(rows_index))]
    for c, column in enumerate(columns):
        for r, value in column.items():
            rows[r][c] = value
    basis = []
    for vector in linalg.kernel(rows, len(candidates), field):
        basis.append(NormalForm(p, {w: v for w, v in zip(candidates, vector) if v}))
    logger.info("%s: %d central elements among %d monomials of degree <= %d",
                spec.name, len(basis), len(candidates), max_degree)
    return basis
