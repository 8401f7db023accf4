from fractions import Fraction

import numpy as np
import pytest

from coexpy.config import Settings
from coexpy.errors import InputError
from coexpy.hypergraph import KGraph
from coexpy.hypergraphon import (StepHypergraphon, constant, directed_cycle_hypergraphon, edge_density,
                                 from_graph, symmetrize)
from coexpy.limits import (CONVERGENCE_COLUMNS, convergence_experiment, graph_q_functional, q_functional,
                           render_value)
from coexpy.penalty import Polynomial

from conftest import random_graph

EDGE = KGraph(3, 3, [[0, 1, 2]])


def random_step(rng):
    table = np.empty((2,) * 6, dtype=object)
    for index in np.ndindex(*table.shape):
        table[index] = Fraction(int(rng.integers(0, 4)), 3)
    return symmetrize(StepHypergraphon(3, [Fraction(1, 4), Fraction(3, 4)], table))


def random_polynomial(rng, degree):
    return Polynomial([Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 5))) for _ in range(degree + 1)])


def test_q_of_constant():
    p = Polynomial([1, Fraction(1, 2), 2])
    for l in range(3):
        q = q_functional(constant(3, Fraction(1, 3)), p, l)
        assert q.path_a == q.path_b == Fraction(25, 18)
        assert q.value == Fraction(25, 18)


def test_q_of_pair_coordinate(pair_w):
    q = q_functional(pair_w, Polynomial([0, 0, 1]), 2)
    assert q.path_a == q.path_b == Fraction(1, 32)
    assert q.as_dict()["q"] == "1/32"
    for l in range(3):
        assert q_functional(pair_w, Polynomial([0, 1]), l).value == edge_density(pair_w)


def test_q_paths_agree_on_random_suite():
    rng = np.random.default_rng(31)
    for _ in range(6):
        W = random_step(rng)
        for l in (1, 2):
            for degree in range(1, 5):
                q = q_functional(W, random_polynomial(rng, degree), l)
                assert q.path_b is not None
                assert q.path_a == q.path_b


def test_q_needs_rational_coefficients(pair_w):
    with pytest.raises(InputError):
        q_functional(pair_w, Polynomial([.5, 1]), 2)
    with pytest.raises(InputError):
        q_functional(pair_w, Polynomial([0, 1]), 3)


def test_q_reports_size_budget(pair_w):
    q = q_functional(pair_w, Polynomial([0, 0, 1]), 2, settings=Settings(term_budget=1))
    assert q.path_a == Fraction(1, 32)
    assert q.path_b is None
    assert "budget" in q.path_b_error


def test_graph_q_matches_blow_up():
    rng = np.random.default_rng(5)
    for _ in range(10):
        G = random_graph(rng, int(rng.integers(3, 6)), 3, .6)
        for l in (1, 2):
            p = random_polynomial(rng, 2)
            assert graph_q_functional(G, p, l) == q_functional(from_graph(G), p, l).value
        p = random_polynomial(rng, 1)
        assert graph_q_functional(G, p, 0) == q_functional(from_graph(G), p, 0).value


def test_convergence_with_full_hypergraphon():
    rows = convergence_experiment(constant(3, 1), 2, [6, 8], trials=3, seed=1)
    assert len(rows) == 1 + 2 * (3 + 3)
    assert rows[0]["kind"] == "reference"
    assert rows[0]["pos_ratio"] == 1
    trial_rows = [row for row in rows if row["kind"] == "trial"]
    assert [(row["n"], row["trial"]) for row in trial_rows] == [(n, t) for n in (6, 8) for t in range(3)]
    assert all(row["pos_ratio"] == 1. and row["min_ratio"] == 1. for row in trial_rows)
    summaries = [row for row in rows if row["kind"] == "summary"]
    assert [row["stat"] for row in summaries] == ["mean", "min", "max"] * 2
    assert all(set(CONVERGENCE_COLUMNS) <= set(row) for row in rows)


def test_convergence_densities(pair_w):
    rows = convergence_experiment(pair_w, 2, [60], trials=10, seed=3, F_list=[EDGE])
    assert rows[0]["t_F0"] == Fraction(1, 8)
    assert rows[0]["pos_ratio"] == Fraction(1, 4)
    mean = next(row for row in rows if row["stat"] == "mean")
    assert abs(mean["t_F0"] - 1 / 8) <= .02


def test_convergence_ignores_jobs(pair_w):
    serial = convergence_experiment(pair_w, 1, [10, 12], trials=3, seed=4, F_list=[EDGE])
    assert serial == convergence_experiment(pair_w, 1, [10, 12], trials=3, seed=4, F_list=[EDGE], jobs=2)


def test_convergence_rejects_bad_input(pair_w):
    with pytest.raises(InputError):
        convergence_experiment(directed_cycle_hypergraphon(), 2, [10], trials=2, seed=0)
    with pytest.raises(InputError):
        convergence_experiment(pair_w, 2, [12, 10], trials=2, seed=0)
    with pytest.raises(InputError):
        convergence_experiment(pair_w, 2, [10], trials=0, seed=0)
    with pytest.raises(InputError):
        convergence_experiment(pair_w, 2, [10], trials=1, seed=0, F_list=[KGraph(2, 2, [[0, 1]])])


def test_render_value():
    assert render_value(Fraction(1, 3)) == "1/3"
    assert render_value(1 / 3) == "0.333333333333"
    assert render_value(7) == 7


@pytest.mark.slow
def test_positive_degree_spread_shrinks():
    rows = convergence_experiment(constant(3, Fraction(1, 2)), 2, [50, 200], trials=50, seed=8)
    spread = {}
    for n in (50, 200):
        stats = {row["stat"]: row["pos_ratio"] for row in rows if row["kind"] == "summary" and row["n"] == n}
        spread[n] = stats["max"] - stats["min"]
    assert spread[200] <= spread[50]
