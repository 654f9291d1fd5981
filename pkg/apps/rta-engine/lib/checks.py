#!/usr/bin/env python3
"""
Structure checks for built algebras: anti-involutions, Hopf data and the
integer grading search. Mathematical failures are returned in reports,
never raised.
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import MissingDataError, WeightError, ZeroWeightError
from .rewriting import CARTAN, NormalForm, Presentation
from .weights import Weight, as_integer
from .zoo import AlgebraSpec

logger = logging.getLogger(__name__)

MAX_DUFLO_BOX = 10 ** 6


@dataclass
class CheckFailure:
    check: str
    subject: str
    residue: str

    def describe(self) -> str:
        return f"{self.check}: {self.subject} -> {self.residue}"


@dataclass
class CheckReport:
    algebra: str
    check: str
    items_checked: int = 0
    failures: List[CheckFailure] = dc_field(default_factory=list)
    flags: Dict[str, object] = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect_zero(self, check: str, subject: str, residue: NormalForm):
        self.items_checked += 1
        if not residue.is_zero():
            self.failures.append(CheckFailure(check, subject, residue.render()))

    def expect(self, check: str, subject: str, ok: bool, residue: str = ""):
        self.items_checked += 1
        if not ok:
            self.failures.append(CheckFailure(check, subject, residue))


def _rule_elements(p: Presentation):
    for lhs, rhs in p.rules.items():
        text = f"{p.render_word(lhs)} -> {NormalForm(p, rhs).render() if rhs else '0'}"
        yield text, NormalForm(p, {lhs: p.field.one}), NormalForm(p, rhs)


# ----------------------------------------------------------------------
# anti-involutions

def check_anti_involution(spec: AlgebraSpec, mapping: Optional[Dict[str, str]] = None) -> CheckReport:
    """j is anti-multiplicative on every rule, j^2 = id, j fixes H and negates weights"""
    p = spec.presentation
    if mapping is None:
        j = spec.anti_involution_map()
    else:
        j = p.assignment(mapping)
    report = CheckReport(spec.name, "anti-involution")
    for text, lhs, rhs in _rule_elements(p):
        report.expect_zero("rule", text, p.apply_antihom(j, lhs) - p.apply_antihom(j, rhs))
    for i, symbol in enumerate(p.symbols):
        g = p.generator(symbol.name)
        report.expect_zero("involutive", symbol.name, p.apply_antihom(j, j[i]) - g)
        if symbol.cls == CARTAN:
            report.expect_zero("fixes cartan", symbol.name, j[i] - g)
        else:
            weight = p.element_weight(j[i])
            report.expect("weight", symbol.name, j[i].is_zero() is False and weight == -symbol.root,
                          f"{j[i]} has weight {weight}")
    logger.info("%s: anti-involution check, %d items, %d failures",
                spec.name, report.items_checked, len(report.failures))
    return report


# ----------------------------------------------------------------------
# Hopf data

def _embedding(source: Presentation, target: Presentation, primes: int) -> Dict[int, int]:
    return {i: target.lookup(name + "'" * primes) for i, name in enumerate(source.names)}


def _transport(elem: NormalForm, mapping: Dict[int, int], target: Presentation) -> NormalForm:
    return target.normal_form({tuple(mapping[i] for i in w): c for w, c in elem.terms.items()})


def _copy_of(name: str) -> Tuple[str, int]:
    stripped = name.rstrip("'")
    return stripped, len(name) - len(stripped)


def check_hopf(spec: AlgebraSpec) -> CheckReport:
    """Coassociativity, counit, antipode, Delta on rules, T and ST on generators"""
    if spec.hopf is None:
        raise MissingDataError(f"{spec.name} has no Hopf data")
    hopf = spec.hopf
    p, field = spec.presentation, spec.field
    a2 = spec.tensor_power(2).presentation
    a3 = spec.tensor_power(3).presentation
    report = CheckReport(spec.name, "hopf")

    delta = p.assignment(hopf.delta, target=a2)
    antipode = p.assignment(hopf.antipode)
    involution = p.assignment(hopf.involution)
    counit = {p.lookup(name): field.parse(text) for name, text in hopf.counit.items()}
    for i in range(len(p.symbols)):
        for table, label in ((delta, "delta"), (antipode, "antipode"), (involution, "involution"),
                             (counit, "counit")):
            if i not in table:
                raise MissingDataError(f"{label} of {p.names[i]} missing in {spec.name}")

    low, high = _embedding(a2, a3, 0), _embedding(a2, a3, 1)
    left_assign, right_assign, counit_left, counit_right = {}, {}, {}, {}
    for k, name in enumerate(a2.names):
        base, copy = _copy_of(name)
        i = p.lookup(base)
        if copy == 0:
            left_assign[k] = _transport(delta[i], low, a3)
            right_assign[k] = a3.generator(base)
            counit_left[k] = p.scalar(counit[i])
            counit_right[k] = p.generator(base)
        else:
            left_assign[k] = a3.generator(base + "''")
            right_assign[k] = _transport(delta[i], high, a3)
            counit_left[k] = p.generator(base)
            counit_right[k] = p.scalar(counit[i])

    for i, name in enumerate(p.names):
        g = p.generator(name)
        d = delta[i]
        report.expect_zero("coassociativity", name,
                           a2.apply_hom(left_assign, d, a3) - a2.apply_hom(right_assign, d, a3))
        report.expect_zero("counit (eps x id)", name, a2.apply_hom(counit_left, d, p) - g)
        report.expect_zero("counit (id x eps)", name, a2.apply_hom(counit_right, d, p) - g)
        s_left, s_right = p.scalar(0), p.scalar(0)
        for word, coeff in d.terms.items():
            first, second = [], []
            for k in word:
                base, copy = _copy_of(a2.names[k])
                (first if copy == 0 else second).append(p.lookup(base))
            u, v = p.word_element(first), p.word_element(second)
            s_left = s_left + p.apply_antihom(antipode, u) * v * coeff
            s_right = s_right + u * p.apply_antihom(antipode, v) * coeff
        unit = p.scalar(counit[i])
        report.expect_zero("antipode m(S x id)", name, s_left - unit)
        report.expect_zero("antipode m(id x S)", name, s_right - unit)

    for text, lhs, rhs in _rule_elements(p):
        report.expect_zero("delta on rule", text, p.apply_hom(delta, lhs, a2) - p.apply_hom(delta, rhs, a2))
        report.expect_zero("T on rule", text, p.apply_hom(involution, lhs) - p.apply_hom(involution, rhs))

    st = {i: p.apply_antihom(antipode, involution[i]) for i in range(len(p.symbols))}
    ts = {i: p.apply_hom(involution, antipode[i]) for i in range(len(p.symbols))}
    for text, lhs, rhs in _rule_elements(p):
        report.expect_zero("ST on rule", text, p.apply_antihom(st, lhs) - p.apply_antihom(st, rhs))
    commuting = {}
    for i, symbol in enumerate(p.symbols):
        g = p.generator(symbol.name)
        report.expect_zero("T involutive", symbol.name, p.apply_hom(involution, involution[i]) - g)
        report.expect_zero("ST involutive", symbol.name, p.apply_antihom(st, st[i]) - g)
        if symbol.cls == CARTAN:
            report.expect_zero("ST fixes cartan", symbol.name, st[i] - g)
            if symbol.grouplike:
                report.expect_zero("T inverts grouplike", symbol.name, involution[i] * g - p.scalar(1))
        else:
            weight = p.element_weight(involution[i])
            report.expect("T swaps raising and lowering", symbol.name, weight == -symbol.root,
                          f"{involution[i]} has weight {weight}")
        commuting[symbol.name] = st[i] == ts[i]
    report.flags["st_equals_ts"] = commuting
    logger.info("%s: hopf check, %d items, %d failures", spec.name, report.items_checked, len(report.failures))
    return report


# ----------------------------------------------------------------------
# integer gradings with no zero weights

@dataclass
class DufloResult:
    delta: Optional[Tuple[int, ...]]
    bound: int
    candidate: Optional[Tuple[int, ...]] = None
    candidate_valid: Optional[bool] = None


def generator_weights(spec: AlgebraSpec) -> List[Weight]:
    """Weights in G of every non-cartan generator"""
    model = spec.model
    seen, result = set(), []
    for symbol in spec.presentation.symbols:
        if symbol.cls == CARTAN:
            continue
        weight = Weight(model, symbol.weight)
        if weight not in seen:
            seen.add(weight)
            result.append(weight)
    return result


def default_duflo_candidate(spec: AlgebraSpec) -> Optional[Tuple[int, ...]]:
    """diag(2n-1, 2n-5, ..., 3-2n) for the gl_n Hecke family, None elsewhere"""
    if spec.family != "hecke_gl_n":
        return None
    n = int(spec.params["n"])
    return tuple(2 * n - 1 - 4 * k for k in range(n))


def _integer_vectors(weights: Sequence) -> List[Tuple[int, ...]]:
    vectors = []
    for weight in weights:
        if isinstance(weight, Weight):
            if not weight.model.is_additive:
                raise WeightError("grading search needs additive weights")
            values = [as_integer(weight.model.field, v) for v in weight.values]
        else:
            values = [int(v) for v in weight]
        if any(v is None for v in values):
            raise WeightError(f"weight {weight} has non-integer coordinates")
        if not any(values):
            raise ZeroWeightError("weight list contains the zero weight")
        vectors.append(tuple(values))
    return vectors


def _valid(delta: Sequence[int], vectors: Sequence[Tuple[int, ...]]) -> bool:
    return all(sum(d * v for d, v in zip(delta, vector)) != 0 for vector in vectors)


def find_duflo_delta(weights: Sequence, candidate: Optional[Sequence[int]] = None,
                     max_bound: int = 1024) -> DufloResult:
    """First integer functional (lexicographic, growing box) nonzero on every weight"""
    vectors = _integer_vectors(weights)
    result = DufloResult(None, 0)
    if candidate is not None:
        result.candidate = tuple(int(c) for c in candidate)
        result.candidate_valid = _valid(result.candidate, vectors)
    if not vectors:
        return result
    rank = len(vectors[0])
    bound = 1
    while bound <= max_bound:
        if (2 * bound + 1) ** rank > MAX_DUFLO_BOX:
            logger.warning("grading search stopped at box %d (rank %d)", bound, rank)
            break
        result.bound = bound
        for delta in itertools.product(range(-bound, bound + 1), repeat=rank):
            if _valid(delta, vectors):
                result.delta = delta
                return result
        bound *= 2
    return result
