"""End-to-end tests for the rta.py command line"""

import json

import pytest

import rta
from lib.config import CONFIG_NAME
from lib.formatter import FAIL_MARK
from lib.ssets import THREADS_ENV

CORRUPTED_SL2 = """
[meta]
name = sl2_corrupted

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
e*h -> h*e - 3*e
h*f -> f*h - 2*f
"""


@pytest.fixture(autouse=True)
def no_thread_override(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)


def run(capsys, *argv):
    code = rta.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_zoo(capsys):
    code, out, _ = run(capsys, "list-zoo")
    assert code == 0
    families = [f["name"] for f in json.loads(out)["families"]]
    assert "u_sl2" in families and "hecke_gl_n" in families


def test_verma_to_file(capsys, tmp_path):
    path = tmp_path / "z1.json"
    code, out, _ = run(capsys, "verma", "--algebra", "u_sl2", "--hw", "[1]", "--depth", "3", "--out", str(path))
    assert code == 0
    assert out == ""
    payload = json.loads(path.read_text())
    assert [s["dim"] for s in payload["weight_spaces"]] == [1, 1, 1, 1]
    (singular,) = payload["singular"]
    assert singular["theta"] == [2]
    assert singular["offset"] == "[-4]"
    assert singular["coeffs"] == {"f^2": "1"}
    assert {m["mu"]: m["m"] for m in payload["multiplicities"]} == {"[1]": 1, "[-3]": 1}


def test_identical_requests_give_identical_files(capsys, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        assert run(capsys, "mult", "--algebra", "u_sl2", "--hw", "[2]", "--depth", "4",
                   "--out", str(path))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_pbw_check(capsys, tmp_path):
    code, out, err = run(capsys, "pbw-check", "--algebra", "u_sl2", "--max-degree", "3")
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert err.startswith("✓")

    path = tmp_path / "corrupted.rta"
    path.write_text(CORRUPTED_SL2)
    code, out, err = run(capsys, "pbw-check", "--algebra", str(path), "--max-degree", "3")
    assert code == 2
    assert json.loads(out)["failures"]
    assert err.startswith("✗")


def test_unknown_family(capsys):
    code, _, err = run(capsys, "show", "--algebra", "u_e8")
    assert code == 1
    assert err.startswith("✗")
    assert "u_e8" in err


def test_usage_errors(capsys):
    assert run(capsys, "verma", "--algebra", "u_sl2")[0] == 1
    assert run(capsys, "verma", "--algebra", "u_sl2", "--hw", "[1]", "--depth", "0")[0] == 1
    assert run(capsys, "verma", "--depth", "x")[0] == 1
    assert run(capsys)[0] == 1


def test_show_with_params(capsys):
    code, out, _ = run(capsys, "show", "--algebra", "uq_sl2", "--param", "lattice=torsion", "--param", "m=3")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == "q"
    assert "t" in [g["name"] for g in payload["generators"]]


def test_tcentral_certificate(capsys):
    code, out, _ = run(capsys, "tcentral", "--algebra", "u_sl2", "--hw", "[1]", "--depth", "2")
    assert code == 2
    assert json.loads(out)["pair"] == ["e", "f"]
    code, out, _ = run(capsys, "tcentral", "--algebra", "heisenberg_ext", "--hw", "[0, 1]", "--depth", "3")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_layers_is_an_alias_of_tcentral(capsys):
    argv = ("--algebra", "heisenberg_ext", "--hw", "[0, 1]", "--depth", "3")
    code, out, _ = run(capsys, "tcentral", *argv)
    alias_code, alias_out, _ = run(capsys, "layers", *argv)
    assert code == alias_code == 0
    assert out == alias_out


def test_central_characters(capsys):
    code, out, _ = run(capsys, "chi", "--algebra", "u_sl2", "--weights", "[1]; [-3]; [0]")
    assert code == 0
    (record,) = json.loads(out)["records"]
    assert record["element_name"] == "Omega"
    assert [c["value"] for c in record["chi"]] == ["3/2", "3/2", "0"]


def test_structure_checks(capsys):
    code, out, err = run(capsys, "hopf-check", "--algebra", "u_sl2")
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert err.startswith("✓")
    code, out, _ = run(capsys, "antihom-check", "--algebra", "u_sl2")
    assert code == 0
    assert json.loads(out)["failures"] == []
    code, _, err = run(capsys, "hopf-check", "--algebra", "hecke_gl_2")
    assert code == 1
    assert "no Hopf data" in err


def test_singular_only(capsys):
    code, out, _ = run(capsys, "singular", "--algebra", "u_sl2", "--hw", "[1]", "--depth", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["weight_spaces"] == []
    assert [v["coeffs"] for v in payload["singular"]] == [{"f^2": "1"}]


def test_verma_text_report(capsys):
    code, out, _ = run(capsys, "verma", "--algebra", "u_sl2", "--hw", "[1]", "--depth", "3", "--format", "text")
    assert code == 0
    assert "VERMA MODULE" in out
    assert "[Z : V([-3])] = 1" in out


def test_hc_with_twist(capsys):
    code, out, _ = run(capsys, "hc", "--algebra", "uq_sl2", "--twist")
    assert code == 0
    (record,) = json.loads(out)["records"]
    assert record["element_name"] == "C"
    assert "theta" in record


def test_sset(capsys):
    code, out, _ = run(capsys, "sset", "--algebra", "u_sl2", "--hw", "[1]", "--depth", "6", "--rounds", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["members"] == ["[1]", "[-3]"]
    assert payload["s1"] == ["[1]", "[-3]"]
    assert payload["status"].startswith("closed")


def test_central_search(capsys):
    code, out, _ = run(capsys, "central", "--algebra", "u_sl2", "--search", "--max-degree", "2")
    assert code == 0
    assert len(json.loads(out)["elements"]) == 2


def test_blocks_as_tsv(capsys):
    code, out, _ = run(capsys, "blocks", "--algebra", "u_sl2", "--weights", "[1];[-3];[1/2]",
                       "--depth", "6", "--rounds", "3", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["cell\tweight", "0\t[1]", "0\t[-3]", "1\t[1/2]"]


def test_duflo_candidate(capsys):
    code, out, _ = run(capsys, "duflo", "--algebra", "hecke_gl_2", "--candidate", "3,-1")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta"] == [-1, 1]
    assert payload["candidate_valid"] is True
    assert run(capsys, "duflo", "--algebra", "hecke_gl_2", "--candidate", "1,1")[0] == 2


def test_duflo_default_candidate(capsys):
    code, out, _ = run(capsys, "duflo", "--algebra", "hecke_gl_2")
    assert code == 0
    payload = json.loads(out)
    assert payload["candidate"] == [3, -1]
    assert payload["candidate_valid"] is True
    code, out, _ = run(capsys, "duflo", "--algebra", "u_gl_2")
    assert json.loads(out)["candidate"] is None


def test_export_round_trip(capsys, tmp_path):
    first, second = tmp_path / "uq.rta", tmp_path / "again.rta"
    assert run(capsys, "export", "--algebra", "uq_sl2", "--out", str(first))[0] == 0
    assert run(capsys, "export", "--algebra", str(first), "--out", str(second))[0] == 0
    assert first.read_text() == second.read_text()


def test_exported_algebra_gives_the_same_verma_payload(capsys, tmp_path):
    exported = tmp_path / "sl2.rta"
    assert run(capsys, "export", "--algebra", "u_sl2", "--out", str(exported))[0] == 0
    argv = ("--hw", "[2]", "--depth", "5")
    code, built_in, _ = run(capsys, "verma", "--algebra", "u_sl2", *argv)
    assert code == 0
    code, reloaded, _ = run(capsys, "verma", "--algebra", str(exported), *argv)
    assert code == 0
    first, second = json.loads(built_in), json.loads(reloaded)
    for key in ("weight_spaces", "singular", "multiplicities"):
        assert first[key] == second[key]


def test_unwritable_output_is_a_usage_error(capsys, tmp_path):
    code, out, err = run(capsys, "show", "--algebra", "u_sl2", "--out", str(tmp_path))
    assert code == 1
    assert out == ""
    assert FAIL_MARK in err


def test_bad_thread_setting(capsys, monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "abc")
    code, _, err = run(capsys, "list-zoo")
    assert code == 1
    assert THREADS_ENV in err


def test_create_config(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(rta, "script_dir", str(tmp_path))
    code, out, _ = run(capsys, "--create-config")
    assert code == 0
    assert (tmp_path / CONFIG_NAME).exists()
    assert json.loads((tmp_path / CONFIG_NAME).read_text())["depth"] == 6
