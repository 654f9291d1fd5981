"""Tests for presentation files"""

import pytest

from lib import zoo
from lib.errors import MissingRuleError, PresentationError
from lib.presentation import export_presentation, load_presentation, parse_presentation, spec_from_selector

SL2_TEXT = """
# sl2 by hand
[meta]
name = sl2_file
note = written by hand

[scalars]
field = rational

[weights]
name = sl2
coordinates = h
root = [2]

[generators]
f | lowering | [-1] | [-2]
h | cartan | [0] | [0] | coordinate=h
e | raising | [1] | [2]

[relations]
e*f -> f*e + h
e*h -> h*e - 2*e
h*f -> f*h - 2*f

[antihom]
e = f
f = e
h = h

[central]
Omega = 2*f*e + h + h^2/2
"""


def test_parse_hand_written_file():
    spec = parse_presentation(SL2_TEXT)
    p = spec.presentation
    assert spec.name == "sl2_file"
    assert spec.family == "presented"
    assert spec.notes == ["written by hand"]
    assert p.element("e*f*f").render() == "-2*f + 2*f*h + f^2*e"
    assert p.check_pbw(3).passed
    assert set(spec.central_elements()) == {"Omega"}


@pytest.mark.parametrize("family,params", [
    ("u_sl2", {}),
    ("uq_sl2", {"lattice": "torsion", "m": 2, "nu": -1}),
    ("hecke_gl_n", {"n": 2}),
    ("quiver_rtla", {"quiver": "1-2"}),
])
def test_export_is_stable(family, params):
    spec = zoo.build(family, params)
    text = export_presentation(spec)
    again = parse_presentation(text)
    assert export_presentation(again) == text
    assert again.presentation.names == spec.presentation.names
    assert again.model.torsion == spec.model.torsion


def test_exported_hopf_data_survives(uq):
    again = parse_presentation(export_presentation(uq))
    assert again.hopf.delta == uq.hopf.delta
    assert again.anti_involution == uq.anti_involution


def test_missing_rule_in_a_file():
    text = SL2_TEXT.replace("h*f -> f*h - 2*f\n", "")
    with pytest.raises(MissingRuleError):
        parse_presentation(text)


@pytest.mark.parametrize("broken", [
    "f = e\n" + SL2_TEXT,
    SL2_TEXT.replace("[central]", "[centre]"),
    SL2_TEXT.replace("[generators]", "[relations2]"),
    SL2_TEXT.replace("h | cartan", "h | neutral"),
    SL2_TEXT.replace("e*h -> h*e - 2*e", "e*h -> h*e - 2*"),
    SL2_TEXT.replace("e*f -> f*e + h", "e*f = f*e + h"),
    SL2_TEXT.replace("f | lowering | [-1]", "f | lowering | [x]"),
    SL2_TEXT.replace("name = sl2_file", "name = sl2_file\nparams = {bad"),
    SL2_TEXT.replace("[meta]", "[meta]\n[meta]"),
])
def test_malformed_files(broken):
    with pytest.raises(PresentationError):
        parse_presentation(broken)


def test_load_missing_file(tmp_path):
    with pytest.raises(PresentationError):
        load_presentation(str(tmp_path / "absent.rta"))


def test_selector_accepts_paths(tmp_path):
    path = tmp_path / "sl2.rta"
    path.write_text(SL2_TEXT)
    assert spec_from_selector(str(path)).name == "sl2_file"
    assert spec_from_selector("u_sl2").name == "u_sl2"


def test_selector_prefers_an_existing_file(tmp_path, monkeypatch):
    (tmp_path / "my_sl2").write_text(SL2_TEXT)
    monkeypatch.chdir(tmp_path)
    assert spec_from_selector("my_sl2").name == "sl2_file"
