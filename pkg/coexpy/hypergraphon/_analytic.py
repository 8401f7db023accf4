from dataclasses import dataclass
from functools import partial
from itertools import permutations

import numpy as np

from ..errors import InputError
from ..hypergraph import proper_subsets

__all__ = ["AnalyticHypergraphon", "MonteCarloEstimate", "directed_cycle_hypergraphon",
           "constant_analytic", "mc_density", "check_symmetry"]

DEFAULT_BATCH = 100000


class AnalyticHypergraphon(object):

    '''
    Class represents a k-hypergraphon given by a vectorised callback: func maps an array
    of shape (..., 2^k - 2), columns ordered as proper_subsets(k), to values in [0, 1]
    '''

    def __init__(self, k, func, name="analytic"):
        self.k = int(k)
        self.coords = proper_subsets(self.k)
        self._func = func
        self.name = name

    def __call__(self, x):
        return np.asarray(self._func(np.asarray(x, dtype=float)), dtype=float)

    def __repr__(self):
        return "AnalyticHypergraphon(k={}, name={!r})".format(self.k, self.name)


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    stderr: float
    trials: int

    def within(self, value, sigmas=3.):
        return abs(self.estimate - float(value)) <= sigmas * self.stderr


_PAIR = np.array([[-1, 3, 4], [3, -1, 5], [4, 5, -1]])


def _directed_cycle(x):
    singles = x[..., :3]
    order = np.argsort(singles, axis=-1)
    a, b, c = order[..., 0], order[..., 1], order[..., 2]
    ranked = np.take_along_axis(singles, order, axis=-1)
    distinct = (ranked[..., 0] < ranked[..., 1]) & (ranked[..., 1] < ranked[..., 2])

    def pair(u, v):
        return np.take_along_axis(x, _PAIR[u, v][..., None], axis=-1)[..., 0]

    inside = (pair(a, b) <= .5) & (pair(b, c) <= .5) & (pair(a, c) > .5)
    return (distinct & inside).astype(float)


def directed_cycle_hypergraphon():
    '''
    3-hypergraphon equal to 1 on x with x1<x2<x3, x12, x23 in [0, 1/2], x13 in (1/2, 1]
    and on the images of that region under S_3; ties in the singletons evaluate to 0
    '''
    return AnalyticHypergraphon(3, _directed_cycle, name="directed-cycle")


def _constant(x, p):
    return np.full(x.shape[:-1], p)


def constant_analytic(k, p):
    p = float(p)
    return AnalyticHypergraphon(k, partial(_constant, p=p), name="const:{}".format(p))


def check_symmetry(H, samples=1000, seed=0, atol=0.):
    '''
    Statistical symmetry check: random x against random coordinate permutations.
    Returns the first offending (x, sigma) or None.
    '''
    rng = np.random.default_rng(seed)
    index = {c: j for j, c in enumerate(H.coords)}
    sigmas = list(permutations(range(H.k)))
    x = rng.random((samples, len(H.coords)))
    base = H(x)
    for s in rng.integers(len(sigmas), size=samples // 10 or 1):
        sigma = sigmas[s]
        cols = [index[tuple(sorted(sigma[a] for a in c))] for c in H.coords]
        bad = np.flatnonzero(np.abs(H(x[:, cols]) - base) > atol)
        if bad.size:
            return x[bad[0]], sigma
    return None


def _coordinate_columns(F, k):
    labels = {}
    columns = []
    for e in F.edges.tolist():
        columns.append([labels.setdefault(tuple(e[i] for i in c), len(labels)) for c in proper_subsets(k)])
    return columns, len(labels)


def mc_density(F, H, trials, seed, batch=DEFAULT_BATCH):
    '''
    Monte Carlo estimate of t(F, H) with its sample standard error
    '''
    if F.k != H.k:
        raise InputError("uniformity mismatch: {} vs {}".format(F.k, H.k))
    if trials < 1:
        raise InputError("need at least one trial")
    if not F.num_edges:
        return MonteCarloEstimate(1., 0., trials)
    columns, width = _coordinate_columns(F, H.k)
    rng = np.random.default_rng(seed)
    total = total_sq = 0.
    done = 0
    while done < trials:
        size = min(batch, trials - done)
        x = rng.random((size, width))
        prod = np.ones(size)
        for cols in columns:
            prod *= H(x[:, cols])
        total += prod.sum()
        total_sq += np.square(prod).sum()
        done += size
    mean = total / trials
    if trials == 1:
        return MonteCarloEstimate(mean, 0., 1)
    var = max(total_sq - trials * mean ** 2, 0.) / (trials - 1)
    return MonteCarloEstimate(mean, float(np.sqrt(var / trials)), trials)
