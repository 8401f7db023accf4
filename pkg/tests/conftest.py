import numpy as np
import pytest

from coexpy.hypergraph import KGraph, binomial, complete_graph
from coexpy.hypergraphon import pair_coordinate_hypergraphon


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive or long statistical runs")


def all_graphs(n, k):
    for mask in range(1 << binomial(n, k)):
        yield KGraph.from_mask(n, k, mask)


def random_graph(rng, n, k, p):
    return KGraph.from_mask(n, k, sum(1 << int(i) for i in np.flatnonzero(rng.random(binomial(n, k)) < p)))


@pytest.fixture
def k4():
    return complete_graph(4, 3)


@pytest.fixture
def k5():
    return complete_graph(5, 3)


@pytest.fixture
def edge3():
    return KGraph(3, 3, [[0, 1, 2]])


@pytest.fixture
def three_edges():
    return KGraph(5, 3, [[0, 1, 2], [0, 1, 3], [2, 3, 4]])


@pytest.fixture
def disjoint_edges():
    return KGraph(6, 3, [[0, 1, 2], [3, 4, 5]])


@pytest.fixture
def pair_w():
    return pair_coordinate_hypergraphon()
