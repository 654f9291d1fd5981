"""Tests for linkage closures and block partitions"""

import pytest

from lib.center import central_character
from lib.errors import UnsupportedParameterError
from lib.scalars import RATIONALS
from lib.ssets import THREADS_ENV, block_partition, s3_closure, s_sets, thread_count, upward_thetas
from lib.verma import CharacterCache
from lib.weights import ADDITIVE, WeightModel


def weights(spec, *texts):
    return [spec.model.parse_weight(t) for t in texts]


def test_sl2_closure_of_one(sl2):
    report = s3_closure(sl2, *weights(sl2, "[1]"), depth=6, rounds=3)
    assert report.members == weights(sl2, "[1]", "[-3]")
    assert report.edges == [tuple(weights(sl2, "[-3]", "[1]"))]
    assert not report.truncated
    assert report.growth == [2, 2]
    assert report.status.startswith("closed")
    assert report.to_dict()["members"] == ["[1]", "[-3]"]


def test_closure_is_independent_of_threads(sl2):
    serial = s3_closure(sl2, *weights(sl2, "[2]"), depth=6, rounds=2, threads=1)
    pooled = s3_closure(sl2, *weights(sl2, "[2]"), depth=6, rounds=2, threads=4)
    assert serial.members == pooled.members
    assert serial.edges == pooled.edges


def test_s_sets(sl2):
    report = s3_closure(sl2, *weights(sl2, "[1]"), depth=6, rounds=3)
    s1, s2 = s_sets(report)
    assert s1 == weights(sl2, "[1]", "[-3]")
    assert s2 == s1


@pytest.mark.slow
def test_quiver_closure_keeps_growing(quiver):
    report = s3_closure(quiver, *weights(quiver, "[0, 0]"), depth=2, rounds=3)
    assert report.growth == [5, 9, 13]
    assert report.truncated
    assert report.status == "still growing"


@pytest.mark.slow
def test_heisenberg_closure_keeps_growing(heisenberg):
    report = s3_closure(heisenberg, *weights(heisenberg, "[0, 1]"), depth=3, rounds=3)
    assert report.growth == [7, 13, 19]
    assert report.truncated
    assert report.status == "still growing"


def test_closure_shares_one_character_cache(sl2):
    cache = CharacterCache()
    first = s3_closure(sl2, *weights(sl2, "[1]"), depth=6, rounds=3, threads=4, cache=cache)
    filled = len(cache)
    assert filled > 0
    second = s3_closure(sl2, *weights(sl2, "[-3]"), depth=6, rounds=3, threads=4, cache=cache)
    assert set(second.members) == set(first.members)
    assert len(cache) >= filled


def test_closure_parameters(sl2):
    lam = sl2.model.parse_weight("[0]")
    with pytest.raises(UnsupportedParameterError):
        s3_closure(sl2, lam, depth=1, rounds=1)
    with pytest.raises(UnsupportedParameterError):
        s3_closure(sl2, lam, depth=4, rounds=0)


def test_upward_thetas(sl2):
    assert [t.coefficients for t in upward_thetas(sl2.model, 3)] == [(1,), (2,), (3,)]
    gl3 = WeightModel("gl3", ADDITIVE, RATIONALS, ["a", "b", "c"], [[1, -1, 0], [0, 1, -1]])
    assert [t.coefficients for t in upward_thetas(gl3, 2)] == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_sl2_blocks(sl2):
    partition = block_partition(sl2, weights(sl2, "[1]", "[-3]", "[-2]", "[0]", "[1/2]", "[1]"), 6, 3)
    assert partition.to_dict()["cells"] == [["[1]", "[-3]"], ["[-2]", "[0]"], ["[1/2]"]]
    assert partition.truncated_cells == []


def test_block_members_share_central_characters(sl2):
    elements = sl2.central_elements()
    partition = block_partition(sl2, weights(sl2, "[1]", "[-3]", "[-2]", "[0]", "[1/2]"), 6, 3)
    characters = []
    for cell in partition.cells:
        first = central_character(sl2, cell[0], elements)
        assert all(first.equal(central_character(sl2, mu, elements)) for mu in cell[1:])
        characters.append(first)
    assert not characters[0].equal(characters[1])


def test_thread_count(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert thread_count() == 1
    assert thread_count(0) == 1
    monkeypatch.setenv(THREADS_ENV, "4")
    assert thread_count() == 4
    assert thread_count(2) == 2
    monkeypatch.setenv(THREADS_ENV, "abc")
    with pytest.raises(UnsupportedParameterError):
        thread_count()
