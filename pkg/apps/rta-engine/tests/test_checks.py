"""Tests for anti-involution, Hopf and grading checks"""

import pytest

from lib import zoo
from lib.checks import check_anti_involution, check_hopf, find_duflo_delta, generator_weights
from lib.errors import MissingDataError, WeightError, ZeroWeightError


@pytest.mark.parametrize("family,params", [
    ("u_sl2", {}),
    ("u_gl_n", {"n": 2}),
    ("uq_sl2", {}),
    ("uq_sl2", {"lattice": "torsion", "m": 2}),
    ("heisenberg_ext", {}),
    ("quiver_rtla", {"quiver": "1-2"}),
    ("takiff_sl2", {}),
    ("hecke_gl_n", {"n": 1}),
    ("hecke_sp_2n", {}),
    ("sympl_osc", {}),
    pytest.param("hecke_gl_n", {"n": 2}, marks=pytest.mark.slow),
])
def test_built_in_anti_involutions(family, params):
    report = check_anti_involution(zoo.build(family, params))
    assert report.passed, [f.describe() for f in report.failures]
    assert report.items_checked > 0


def test_broken_anti_involution_is_reported(hecke_gl1):
    report = check_anti_involution(hecke_gl1, {"E11": "E11", "v1": "w1", "w1": "-v1"})
    assert not report.passed
    assert {f.check for f in report.failures} >= {"involutive"}
    assert {f.subject for f in report.failures if f.check == "involutive"} == {"v1", "w1"}


def test_sign_dropped_on_every_pair_is_still_an_anti_involution(hecke_gl1):
    report = check_anti_involution(hecke_gl1, {"E11": "E11", "v1": "w1", "w1": "v1"})
    assert report.passed


def test_sign_dropped_on_hecke_sp2_breaks_the_mixed_rules(hecke_sp2):
    report = check_anti_involution(hecke_sp2, {"e1": "e2", "e2": "e1", "u11": "u11", "v11": "w11", "w11": "v11"})
    assert not report.passed
    assert {f.check for f in report.failures} == {"rule"}
    subjects = [f.subject for f in report.failures]
    assert any(s.startswith("v11*e2 ->") for s in subjects)
    assert any(s.startswith("e1*w11 ->") for s in subjects)


def test_anti_involution_must_fix_the_cartan(sl2):
    report = check_anti_involution(sl2, {"e": "f", "f": "e", "h": "-h"})
    assert "fixes cartan" in {f.check for f in report.failures}


def test_missing_data():
    takiff = zoo.build("takiff_sl2")
    with pytest.raises(MissingDataError):
        check_hopf(takiff)
    product = zoo.tensor_product([takiff, zoo.build("hecke_sp_2n")])
    assert product.hopf is None
    with pytest.raises(MissingDataError):
        check_hopf(product)


def test_hopf_enveloping_algebra(sl2):
    report = check_hopf(sl2)
    assert report.passed, [f.describe() for f in report.failures]
    assert all(report.flags["st_equals_ts"].values())


@pytest.mark.parametrize("params,main", [
    ({}, "K"),
    ({"lattice": "coweight"}, "L"),
    ({"lattice": "torsion", "m": 2, "nu": -1}, "K"),
])
def test_hopf_quantum_sl2(params, main):
    report = check_hopf(zoo.build("uq_sl2", params))
    assert report.passed, [f.describe() for f in report.failures]
    assert report.flags["st_equals_ts"]["e"] is False
    assert report.flags["st_equals_ts"][main] is True


def test_grading_search_on_hecke_gl2(hecke_gl2):
    weights = generator_weights(hecke_gl2)
    result = find_duflo_delta(weights, candidate=(3, -1))
    assert result.delta == (-1, 1)
    assert result.bound == 1
    assert result.candidate_valid is True
    assert find_duflo_delta(weights, candidate=(1, 1)).candidate_valid is False


def test_grading_search_needs_a_larger_box():
    result = find_duflo_delta([(1, -1), (1, 1), (1, 0), (0, 1), (2, -1), (1, -2)])
    assert result.delta is not None
    assert result.bound == 2


def test_grading_search_rejects_zero_weights(uq):
    with pytest.raises(ZeroWeightError):
        find_duflo_delta([(0, 0), (1, 0)])
    with pytest.raises(WeightError):
        find_duflo_delta(generator_weights(uq))
