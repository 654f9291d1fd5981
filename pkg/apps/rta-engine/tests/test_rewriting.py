"""Tests for presentations, reduction to PBW normal form and the overlap check"""

import random

import pytest

from lib import zoo
from lib.errors import (MissingRuleError, PresentationError, TerminationError,
                        UnknownSymbolError, WeightError)
from lib.rewriting import CARTAN, LOWERING, RAISING, PresentationBuilder
from lib.scalars import RATIONALS
from lib.weights import ADDITIVE, RootVector, WeightModel


def sl2_builder(name="sl2_test"):
    model = WeightModel("sl2", ADDITIVE, RATIONALS, ["h"], [[2]])
    builder = PresentationBuilder(name, RATIONALS, model)
    builder.symbol("f", LOWERING, RootVector((-1,)))
    builder.symbol("h", CARTAN, coordinate="h")
    builder.symbol("e", RAISING, RootVector((1,)))
    return builder


def test_normal_form_of_a_product(sl2):
    p = sl2.presentation
    assert p.element("e*f").render() == "h + f*e"
    assert p.element("e*f*f").render() == "-2*f + 2*f*h + f^2*e"
    assert p.element("h*e - e*h") == p.element("2*e")


@pytest.mark.parametrize("family,params", [
    ("u_sl2", {}),
    ("u_gl_n", {"n": 2}),
    ("uq_sl2", {}),
    ("uq_sl2", {"lattice": "coweight"}),
    ("uq_sl2", {"lattice": "torsion", "m": 2, "nu": -1}),
    ("heisenberg_ext", {}),
    ("quiver_rtla", {"quiver": "1-2"}),
    ("hecke_gl_n", {"n": 1}),
    ("hecke_sp_2n", {}),
    ("sympl_osc", {}),
    pytest.param("hecke_gl_n", {"n": 2}, marks=pytest.mark.slow),
])
def test_reduction_is_idempotent_and_keeps_weight(family, params):
    p = zoo.build(family, params).presentation
    rng = random.Random(7)
    letters = list(range(len(p.symbols)))
    for _ in range(25):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, 5)))
        elem = p.word_element(word)
        assert p.normal_form(dict(elem.terms)) == elem
        assert all(p.is_irreducible(w) for w in elem.terms)
        assert all(p.ad_weight(w) == p.ad_weight(word) for w in elem.terms)


def test_pbw_check_passes_for_sl2(sl2):
    report = sl2.presentation.check_pbw(3)
    assert report.passed
    assert report.overlaps_checked > 0
    assert "not a proof" in report.note


def test_corrupted_bracket_fails_the_pbw_check():
    builder = sl2_builder("sl2_corrupted")
    builder.bracket("e", "f", "h")
    builder.bracket("h", "e", "3*e")
    builder.bracket("h", "f", "-2*f")
    report = builder.build().check_pbw(3)
    assert not report.passed
    assert report.failures[0].difference


def test_pbw_check_needs_degree_three(sl2):
    with pytest.raises(PresentationError):
        sl2.presentation.check_pbw(2)


def test_missing_rule_names_the_pair():
    builder = sl2_builder()
    builder.bracket("e", "f", "h")
    builder.bracket("h", "e", "2*e")
    with pytest.raises(MissingRuleError) as caught:
        builder.build()
    assert caught.value.pair == ("h", "f")


def test_rules_must_lower_the_measure():
    builder = sl2_builder()
    builder.rule("e*f", "f*e*e")
    with pytest.raises(TerminationError):
        builder.build()


def test_symbol_classes_are_checked():
    model = WeightModel("sl2", ADDITIVE, RATIONALS, ["h"], [[2]])
    builder = PresentationBuilder("bad", RATIONALS, model)
    builder.symbol("e", RAISING, RootVector((-1,)))
    with pytest.raises(PresentationError):
        builder.build()
    with pytest.raises(PresentationError):
        builder.symbol("e", LOWERING, RootVector((-1,)))


def test_unknown_symbols(sl2):
    with pytest.raises(UnknownSymbolError):
        sl2.presentation.generator("x")


def test_anti_homomorphism(sl2):
    p = sl2.presentation
    sigma = sl2.anti_involution_map()
    assert p.apply_antihom(sigma, p.element("e*h")) == p.element("h*f")
    assert p.apply_antihom(sigma, p.apply_antihom(sigma, p.element("e*f*h"))) == p.element("e*f*h")
    with pytest.raises(UnknownSymbolError):
        p.apply_hom(p.assignment({"e": "f"}), p.element("h"))


def test_evaluate_cartan(sl2):
    p = sl2.presentation
    lam = p.model.parse_weight("[3]")
    h = p.lookup("h")
    assert p.evaluate_cartan((h, h), lam) == 9
    assert p.evaluate_cartan((), lam) == 1
    with pytest.raises(WeightError):
        p.evaluate_cartan((p.lookup("e"),), lam)


def test_commutator_and_weights(sl2):
    p = sl2.presentation
    e, f = p.generator("e"), p.generator("f")
    assert p.commutator(e, f) == p.generator("h")
    assert p.element_weight(e * f) == RootVector((0,))
    assert p.element_weight(e + f) is None
    assert not p.is_homogeneous(e + f)


def test_quantum_relations(uq):
    p = uq.presentation
    assert p.element("e*K") == p.element("q^-2*K*e")
    assert p.element("K*Kinv") == p.scalar(1)
    assert p.element("Kinv^2*K^3") == p.generator("K")
    assert p.check_pbw(3).passed


def test_torsion_generator_has_finite_order(uq_torsion):
    p = uq_torsion.presentation
    assert p.element("t^2") == p.scalar(1)
    assert p.element("t^3") == p.generator("t")
