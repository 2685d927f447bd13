from fractions import Fraction

import pytest

from config import Budget
from families.generators import complete, gnp, grid, path
from graph_core.graph import Graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


CORPUS_DENSITIES = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
CORPUS_SIZE = 200


def random_corpus_graph(index: int) -> Graph:
    """Member index of the seeded corpus: n cycles through 4..8, p through the three densities."""
    return gnp(4 + index % 5, CORPUS_DENSITIES[(index // 5) % 3], seed=index)


def random_corpus_indices(fast: int = 15):
    """The first 15 indices cover every (n, p) pair once; later ones carry the slow marker."""
    return [i if i < fast else pytest.param(i, marks=pytest.mark.slow) for i in range(CORPUS_SIZE)]


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def c4() -> Graph:
    """0-1-2-3-0"""
    return cycle(4)


@pytest.fixture
def k3() -> Graph:
    return complete(3)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def k5() -> Graph:
    return complete(5)


@pytest.fixture
def grid3() -> Graph:
    return grid(3, 3)


@pytest.fixture
def wide_budget() -> Budget:
    """Room for the 16-vertex instances."""
    return Budget(tw_vertices=16, sep_guided_vertices=16)


@pytest.fixture(autouse=True)
def no_report_cache(monkeypatch):
    monkeypatch.setattr("config.settings.REPORT_CACHE_DIR", None)
