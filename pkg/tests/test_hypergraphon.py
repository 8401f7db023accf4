import json
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np
import pytest

from coexpy.config import Settings
from coexpy.errors import InputError, ParseError, SizeError
from coexpy.hypergraph import (KGraph, degree as graph_degree, edge_power, hom_density,
                               min_positive_degree as graph_min_positive_degree,
                               proper_subsets, rooted_product, single_edge, unlabel)
from coexpy.hypergraphon import (AnalyticHypergraphon, CellPoint, StepHypergraphon, cells, check_symmetry,
                                 constant, degree, density, directed_cycle_hypergraphon, dump_hypergraphon,
                                 edge_density, from_graph, is_family_free, load_hypergraphon, mc_density,
                                 min_degree, min_positive_degree, rooted_density, symmetrize, validate)

from conftest import all_graphs, random_graph

BOOK = KGraph(4, 3, [[0, 1, 2], [0, 1, 3]])


def random_step(rng, k=3, m=2):
    table = np.empty((m,) * len(proper_subsets(k)), dtype=object)
    for index in np.ndindex(*table.shape):
        table[index] = Fraction(int(rng.integers(0, 5)), 4)
    return symmetrize(StepHypergraphon(k, [Fraction(1, m)] * m, table))


def pair_table():
    keys = ["1", "2", "3", "12", "13", "23"]
    entries = [{"assign": dict(zip(keys, singles + (0, 0, 0))), "value": "1"}
               for singles in product(range(2), repeat=3)]
    return {"k": 3, "lengths": ["1/2", "1/2"], "table": entries}


def test_invalid_step_hypergraphons():
    with pytest.raises(InputError):
        StepHypergraphon(2, [Fraction(1, 2), Fraction(1, 3)], np.zeros((2, 2), dtype=object))
    with pytest.raises(InputError):
        StepHypergraphon(2, [1], np.full((1, 1), Fraction(3, 2), dtype=object))
    with pytest.raises(InputError):
        StepHypergraphon(3, [1], np.zeros((1, 1), dtype=object))


def test_validate_and_symmetrize():
    W = StepHypergraphon(2, [Fraction(1, 2)] * 2, [[0, 1], [0, 0]])
    report = validate(W)
    assert not report
    assert report.assignment is not None and report.sigma is not None
    S = symmetrize(W)
    assert validate(S)
    assert S.full_table.tolist() == [[0, Fraction(1, 2)], [Fraction(1, 2), 0]]
    assert symmetrize(S) is S


def test_builtins_are_symmetric(pair_w, k4):
    assert validate(pair_w)
    assert validate(from_graph(k4))
    assert validate(constant(3, Fraction(1, 3)))
    rng = np.random.default_rng(1)
    for _ in range(5):
        assert validate(random_step(rng))


def test_from_graph_densities(k5, edge3):
    W = from_graph(k5)
    assert edge_density(W) == Fraction(6 * 10, 5 ** 3)
    assert density(edge3, W) == hom_density(edge3, k5)
    with pytest.raises(InputError):
        from_graph(KGraph(2, 3))


def test_density_matches_hom_density():
    rng = np.random.default_rng(17)
    for _ in range(100):
        G = random_graph(rng, int(rng.integers(3, 7)), 3, rng.random())
        F = random_graph(rng, int(rng.integers(3, 5)), 3, .5)
        assert density(F, from_graph(G)) == hom_density(F, G)


def test_pair_coordinate_values(pair_w):
    assert edge_density(pair_w) == Fraction(1, 8)
    assert density(BOOK, pair_w) == Fraction(1, 32)
    assert density(unlabel(edge_power(3, 2, 2)), pair_w) == Fraction(1, 32)
    assert degree(pair_w, CellPoint(2, (0, 0, 0))) == Fraction(1, 4)
    assert degree(pair_w, CellPoint(2, (1, 0, 1))) == 0
    assert degree(pair_w, CellPoint(1, (1,))) == Fraction(1, 8)
    assert degree(pair_w, CellPoint(0, ())) == Fraction(1, 8)
    assert min_positive_degree(pair_w, 2) == Fraction(1, 4)
    assert min_degree(pair_w, 2) == 0
    assert not is_family_free(pair_w, [BOOK])
    assert is_family_free(constant(3, 0), [BOOK])


def test_constant_hypergraphon(k4):
    W = constant(3, Fraction(1, 2))
    assert density(k4, W) == Fraction(1, 16)
    assert min_positive_degree(W, 2) == Fraction(1, 2)
    assert min_positive_degree(constant(3, 0), 2) == 0
    cell = CellPoint(2, (0, 0, 0))
    assert rooted_density(rooted_product(single_edge(3, 2), single_edge(3, 2)), W, cell) == Fraction(1, 4)


def test_cells_cover_unit_measure(pair_w):
    for l in range(3):
        assert sum(measure for _, measure in cells(pair_w, l)) == 1
    with pytest.raises(InputError):
        list(cells(pair_w, 3))
    with pytest.raises(InputError):
        CellPoint(2, (0, 0))


def test_rooted_density_of_edge_is_degree(pair_w):
    rng = np.random.default_rng(4)
    for W in [pair_w, random_step(rng)]:
        for l in range(3):
            for cell, _ in cells(W, l):
                assert rooted_density(single_edge(3, l), W, cell) == degree(W, cell)


def test_product_and_power_laws():
    rng = np.random.default_rng(9)
    W = random_step(rng)
    cherry = rooted_product(single_edge(3, 1), single_edge(3, 1))
    for cell, _ in cells(W, 1):
        product_density = rooted_density(rooted_product(cherry, single_edge(3, 1)), W, cell)
        assert product_density == rooted_density(cherry, W, cell) * degree(W, cell)
    for l in range(3):
        for cell, _ in cells(W, l):
            for i in range(4):
                assert rooted_density(edge_power(3, l, i), W, cell) == degree(W, cell) ** i


def test_averaging_law():
    rng = np.random.default_rng(12)
    W = random_step(rng)
    for F in [edge_power(3, 2, 2), edge_power(3, 1, 2), rooted_product(single_edge(3, 2), edge_power(3, 2, 1))]:
        total = sum(measure * rooted_density(F, W, cell) for cell, measure in cells(W, F.roots))
        assert total == density(unlabel(F), W)
        assert 0 <= total <= 1


def _check_degree_scaling(G):
    W = from_graph(G)
    n = G.n
    assert degree(W, CellPoint(0, ())) == Fraction(6 * G.num_edges, n ** 3)
    for u in range(n):
        assert degree(W, CellPoint(1, (u,))) == Fraction(2 * graph_degree(G, [u]), n ** 2)
    for u, v in product(range(n), repeat=2):
        expected = Fraction(graph_degree(G, [u, v]), n) if u != v else 0
        assert degree(W, CellPoint(2, (u, v, 0))) == expected
    for l in (0, 1, 2):
        assert min_positive_degree(W, l) == graph_min_positive_degree(G, l) * Fraction(factorial(3 - l), n ** (3 - l))


@pytest.mark.parametrize("n", [3, 4])
def test_degree_scaling_from_graph(n):
    for G in all_graphs(n, 3):
        _check_degree_scaling(G)


@pytest.mark.slow
def test_degree_scaling_from_graph_on_five_vertices():
    for G in all_graphs(5, 3):
        _check_degree_scaling(G)



def test_rooted_density_checks_roots(pair_w):
    with pytest.raises(InputError):
        rooted_density(single_edge(3, 2), pair_w, CellPoint(1, (0,)))
    with pytest.raises(InputError):
        rooted_density(single_edge(3, 1), pair_w, CellPoint(1, (5,)))


def test_size_budget():
    rng = np.random.default_rng(2)
    W = random_step(rng)
    with pytest.raises(SizeError):
        density(BOOK, W, settings=Settings(term_budget=1))


def test_directed_cycle():
    H = directed_cycle_hypergraphon()
    assert check_symmetry(H) is None
    estimate = mc_density(KGraph(3, 3, [[0, 1, 2]]), H, 10**6, seed=1)
    assert estimate.within(Fraction(1, 8), sigmas=3)
    x = np.array([.1, .2, .3, .4, .9, .2])
    assert H(x[None])[0] == 1.
    assert H(np.array([[.1, .2, .3, .4, .4, .2]]))[0] == 0.


def test_check_symmetry_finds_asymmetry():
    H = AnalyticHypergraphon(3, lambda x: x[..., 0])
    found = check_symmetry(H)
    assert found is not None


def test_step_as_analytic(pair_w):
    estimate = mc_density(BOOK, pair_w.as_analytic(), 10**5, seed=3)
    assert estimate.within(density(BOOK, pair_w), sigmas=4)
    assert mc_density(KGraph(4, 3), pair_w.as_analytic(), 10, seed=0).estimate == 1.


def test_load_hypergraphon(pair_w, tmp_path):
    assert load_hypergraphon(pair_table()) == pair_w
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(pair_table()))
    assert load_hypergraphon(path) == pair_w
    assert load_hypergraphon(dump_hypergraphon(pair_w)) == pair_w


@pytest.mark.parametrize("text", ["{not json", '{"k": 3}', '{"k": 3, "lengths": ["x"], "table": []}'])
def test_load_hypergraphon_parse_errors(text):
    with pytest.raises(ParseError):
        load_hypergraphon(text)


def test_load_asymmetric():
    data = {"k": 2, "lengths": ["1/2", "1/2"], "table": [{"assign": {"1": 0, "2": 1}, "value": "1"}]}
    with pytest.raises(InputError):
        load_hypergraphon(data)
    W = load_hypergraphon(data, strict=False)
    assert W.full_table.tolist() == [[0, Fraction(1, 2)], [Fraction(1, 2), 0]]
