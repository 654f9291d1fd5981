"""Tests for the algebra families, restriction, tensor products and the Hecke series"""

import pytest

from lib import series, zoo
from lib.errors import ModelMismatchError, SubgroupError, UnsupportedParameterError


def test_unknown_family():
    with pytest.raises(UnsupportedParameterError):
        zoo.build("u_e8")


def test_aliases_and_indexed_names():
    assert zoo.build("uq_sl2_gamma").family == "uq_sl2"
    assert zoo.build("hecke_sp_2").name == "hecke_sp_2"
    assert zoo.build("u_gl_3").params["n"] == 3
    assert zoo.build("hecke_gl_1").family == "hecke_gl_n"
    with pytest.raises(UnsupportedParameterError):
        zoo.build("hecke_gl_3")


@pytest.mark.parametrize("family,params", [
    ("u_sl2", {}),
    ("u_gl_n", {"n": 2}),
    ("takiff_sl2", {}),
    ("heisenberg_ext", {"modes": 2}),
    ("quiver_rtla", {"quiver": "1-2"}),
    ("uq_sl2", {}),
    ("uq_sl2", {"lattice": "coweight"}),
    ("uq_sl2", {"lattice": "torsion", "m": 3}),
    ("uq_sl2", {"lattice": "torsion", "m": 2, "nu": -1}),
    ("hecke_gl_n", {"n": 1}),
    ("hecke_gl_n", {"n": 1, "beta": [1, 1, 2]}),
    ("hecke_gl_n", {"n": 2}),
    ("hecke_sp_2n", {}),
    ("sympl_osc", {}),
    ("hecke_sp_2n", {"beta0": 1, "beta2": 1}),
    ("tensor_product", {"factors": "u_sl2,heisenberg_ext"}),
    ("tensor_product", {"factors": "u_sl2,hecke_gl_1"}),
    pytest.param("hecke_gl_n", {"n": 2, "beta": [1, 0, 1]}, marks=pytest.mark.slow),
    pytest.param("u_gl_n", {"n": 3}, marks=pytest.mark.slow),
    pytest.param("quiver_rtla", {"quiver": "1-2,2-3"}, marks=pytest.mark.slow),
])
def test_zoo_presentations_pass_the_overlap_check(family, params):
    spec = zoo.build(family, params)
    report = spec.presentation.check_pbw(6)
    assert report.passed, [f.describe(spec.presentation) for f in report.failures]


def test_quiver_parameters():
    with pytest.raises(UnsupportedParameterError):
        zoo.build("quiver_rtla", {"quiver": "1-2,2-1"})
    with pytest.raises(UnsupportedParameterError):
        zoo.build("quiver_rtla", {"quiver": "1-1"})
    with pytest.raises(UnsupportedParameterError):
        zoo.build("quiver_rtla", {"quiver": "12"})


def test_quiver_relabelling(quiver):
    assert quiver.params["relabel"] == {"1": 1, "2": 2}
    reversed_quiver = zoo.build("quiver_rtla", {"quiver": "2-1"})
    assert reversed_quiver.params["relabel"] == {"2": 1, "1": 2}


def test_quiver_path_relations():
    spec = zoo.build("quiver_rtla", {"quiver": "1-2,2-3"})
    p = spec.presentation
    assert p.commutator(p.generator("x2"), p.generator("x1")) == p.generator("x1_2")
    assert p.commutator(p.generator("x1"), p.generator("y1")) == 0


def test_uq_lattice_parameters():
    with pytest.raises(UnsupportedParameterError):
        zoo.build("uq_sl2", {"lattice": "torsion", "m": 0})
    with pytest.raises(UnsupportedParameterError):
        zoo.build("uq_sl2", {"lattice": "torsion", "m": 3, "nu": -1})
    with pytest.raises(UnsupportedParameterError):
        zoo.build("uq_sl2", {"lattice": "weights"})
    trivial = zoo.build("uq_sl2", {"lattice": "torsion", "m": 1})
    assert "t" not in trivial.presentation.index
    assert trivial.notes


def test_restriction(uq, uq_torsion):
    assert zoo.restrict(uq_torsion, ["K", "t"]) is uq_torsion
    assert zoo.restrict(uq_torsion, ["K"]).model.coordinates == ("K",)
    coweight = zoo.build("uq_sl2", {"lattice": "coweight"})
    assert zoo.restrict(coweight, ["L"]) is coweight
    assert zoo.restrict(coweight, ["K"]).params["lattice"] == "coroot"
    assert zoo.restrict(uq, ["K"]) is uq
    with pytest.raises(SubgroupError):
        zoo.restrict(uq_torsion, ["t"])
    with pytest.raises(SubgroupError):
        zoo.restrict(uq_torsion, ["e"])
    with pytest.raises(UnsupportedParameterError):
        zoo.restrict(zoo.build("u_sl2"), ["h"])


def test_tensor_product(sl2):
    spec = zoo.tensor_product([sl2, sl2])
    p = spec.presentation
    assert {"e", "e'", "f", "f'", "h", "h'"} <= set(p.names)
    assert p.commutator(p.generator("e"), p.generator("f'")) == 0
    assert p.commutator(p.generator("e'"), p.generator("f'")) == p.generator("h'")
    assert set(spec.central) == {"Omega", "Omega'"}
    assert spec.anti_involution["e'"] == "f'"
    assert sl2.tensor_power(2) is sl2.tensor_power(2)


def test_tensor_factors_must_agree(sl2, uq):
    with pytest.raises(ModelMismatchError):
        zoo.tensor_product([sl2, uq])
    with pytest.raises(UnsupportedParameterError):
        zoo.tensor_product([])


def test_hecke_gl1_relations(hecke_gl1):
    p = hecke_gl1.presentation
    assert p.commutator(p.generator("v1"), p.generator("w1")) == 1
    assert p.symbol("v1").cls == "raising"
    deformed = zoo.build("hecke_gl_1", {"beta": [0, 1]})
    q = deformed.presentation
    assert q.commutator(q.generator("v1"), q.generator("w1")) == q.element("2*E11")


def test_hecke_gl2_is_graded_by_delta(hecke_gl2):
    model = hecke_gl2.model
    assert model.restricted.coordinates == ("delta",)
    assert hecke_gl2.presentation.symbol("E12").root.coefficients == (4,)
    assert hecke_gl2.presentation.symbol("v1").root.coefficients == (3,)


def test_r_series():
    R, gens = series.gl_ring(1)
    (a11,) = gens
    assert series.expand_r_series(1, 1, 1, 3) == [R.one, 2 * a11, 3 * a11 ** 2, 4 * a11 ** 3]
    with pytest.raises(UnsupportedParameterError):
        series.expand_r_series(2, 3, 1, 1)
    with pytest.raises(UnsupportedParameterError):
        series.expand_r_series(1, 1, 1, series.MAX_SERIES_INDEX + 1)


def test_l_series():
    R, matrix = series.sp_matrix()
    (a11, a12), (a21, _) = matrix
    l_terms = series.expand_l_series(1, 1, 2, 2)
    assert l_terms[0] == R.one
    assert l_terms[1] == 2 * (a11 ** 2 + a12 * a21)


def test_series_identities():
    assert series.transpose_identity(2, 3)
    assert series.linv_identity(2)
    assert series.sp_normalization_constant() == -1


def test_symmetrization(gl2):
    R, (a11, a12, a21, a22) = series.gl_ring(2)
    image = zoo.symmetrize(a12 * a21, gl2)
    assert image == gl2.element("E21*E12 + E11/2 - E22/2")
    assert zoo.symmetrize(a11 + a22, gl2) == gl2.element("E11 + E22")
