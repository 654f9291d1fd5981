"""Tests for centrality, the Harish-Chandra projection and central characters"""

import pytest

from lib import zoo
from lib.center import (casimir_from_dual_pair, center_search, central_character, hc_project,
                        is_central, s4_relative)
from lib.errors import UnsupportedParameterError, WeightError


def weight(spec, text):
    return spec.model.parse_weight(text)


@pytest.mark.parametrize("family,params", [
    ("u_sl2", {}),
    ("u_gl_n", {"n": 2}),
    ("u_gl_n", {"n": 3}),
    ("uq_sl2", {}),
    ("uq_sl2", {"lattice": "torsion", "m": 2}),
    ("heisenberg_ext", {}),
    ("quiver_rtla", {"quiver": "1-2"}),
    ("takiff_sl2", {}),
    ("hecke_gl_n", {"n": 1}),
    ("hecke_gl_n", {"n": 2}),
    ("sympl_osc", {}),
])
def test_named_central_elements(family, params):
    spec = zoo.build(family, params)
    assert spec.central
    for name, element in spec.central_elements().items():
        certificate = is_central(spec, element)
        assert certificate.central, (name, certificate.counterexample)


def test_non_central_element_has_a_counterexample(sl2):
    certificate = is_central(sl2, sl2.element("f*e"))
    assert not certificate.central
    name, commutator = certificate.counterexample
    assert name == "f"
    assert commutator == sl2.element("f*h")


def test_projection_of_the_casimir(sl2):
    omega = sl2.central_elements()["Omega"]
    assert hc_project(sl2, omega) == sl2.element("h + h^2/2")


def test_sl2_central_characters(sl2):
    elements = sl2.central_elements()
    one = central_character(sl2, weight(sl2, "[1]"), elements)
    assert one.rendered() == {"Omega": "3/2"}
    assert one.equal(central_character(sl2, weight(sl2, "[-3]"), elements))
    assert central_character(sl2, weight(sl2, "[0]"), elements).rendered() == {"Omega": "0"}
    linked = s4_relative(sl2, weight(sl2, "[1]"), [weight(sl2, t) for t in ("[-3]", "[0]", "[5]")], elements)
    assert linked == [weight(sl2, "[-3]")]


def test_quantum_casimir_projection(uq):
    c = uq.central_elements()["C"]
    assert hc_project(uq, c, theta_twist=True) == uq.element("(K + Kinv)/(q - q^-1)^2")
    elements = {"C": c}
    for n in range(3):
        lam = weight(uq, f"{{K: q^{n}}}" if n else "{K: 1}")
        mirror = weight(uq, f"{{K: q^{-n - 2}}}")
        assert central_character(uq, lam, elements).equal(central_character(uq, mirror, elements))


def test_twist_is_only_for_quantum_sl2(sl2):
    with pytest.raises(UnsupportedParameterError):
        hc_project(sl2, sl2.element("h"), theta_twist=True)
    coweight = zoo.build("uq_sl2", {"lattice": "coweight"})
    with pytest.raises(UnsupportedParameterError):
        hc_project(coweight, coweight.element("L"), theta_twist=True)


def test_center_search(sl2):
    p = sl2.presentation
    basis = center_search(sl2, 2)
    assert len(basis) == 2
    assert all(is_central(sl2, b).central for b in basis)
    fe = (p.lookup("f"), p.lookup("e"))
    (quadratic,) = [b for b in basis if b.coefficient(fe)]
    omega = sl2.central_elements()["Omega"]
    assert quadratic == omega * (quadratic.coefficient(fe) / 2)
    with pytest.raises(UnsupportedParameterError):
        center_search(sl2, 5)


def test_casimir_from_dual_pair(sl2):
    e, f, h = (sl2.presentation.generator(x) for x in "efh")
    report = casimir_from_dual_pair(sl2, [e, f, h], [f, e, h * sl2.field.fraction(1, 2)])
    assert report.element == sl2.central_elements()["Omega"]
    assert report.commutes_with_cartan
    assert report.central
    with pytest.raises(WeightError):
        casimir_from_dual_pair(sl2, [e], [e])
    with pytest.raises(UnsupportedParameterError):
        casimir_from_dual_pair(sl2, [e, f], [f])
