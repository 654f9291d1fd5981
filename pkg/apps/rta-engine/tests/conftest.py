"""
Shared fixtures. Algebras are built once per session; their rewrite
caches are shared across tests.
"""

import os
import sys

import pytest

APP_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, APP_DIR)

from lib import zoo  # noqa: E402


@pytest.fixture(scope="session")
def sl2():
    return zoo.build("u_sl2")


@pytest.fixture(scope="session")
def gl2():
    return zoo.build("u_gl_2")


@pytest.fixture(scope="session")
def uq():
    return zoo.build("uq_sl2")


@pytest.fixture(scope="session")
def uq_torsion():
    return zoo.build("uq_sl2", {"lattice": "torsion", "m": 2})


@pytest.fixture(scope="session")
def heisenberg():
    return zoo.build("heisenberg_ext")


@pytest.fixture(scope="session")
def quiver():
    return zoo.build("quiver_rtla", {"quiver": "1-2"})


@pytest.fixture(scope="session")
def hecke_gl1():
    return zoo.build("hecke_gl_1")


@pytest.fixture(scope="session")
def hecke_gl2():
    return zoo.build("hecke_gl_2")


@pytest.fixture(scope="session")
def hecke_sp2():
    return zoo.build("hecke_sp_2n")
