'''
W-random k-graphs G(n, W), random induced subsamples and the closed-form
concentration bounds for degrees and empty l-sets.
'''
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .errors import InputError
from .hypergraph import KGraph, binomial, colex_combinations, colex_rank, induced
from .hypergraphon import MonteCarloEstimate, StepHypergraphon

__all__ = ["SampleConfig", "sample", "sample_many", "sample_batch", "sample_induced",
           "estimate_containment", "azuma_bound_degree", "azuma_bound_empty"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleConfig:
    n: int
    seed: int = 0
    trials: int = 1

    def check(self, k):
        if self.n < k:
            raise InputError("sample size n={} must be at least k={}".format(self.n, k))
        if self.trials < 1:
            raise InputError("need at least one trial")
        return self


def _stream(*key):
    # one independent stream per (seed, trial, coordinate layer)
    return np.random.default_rng(np.random.SeedSequence([int(x) for x in key]))


def _draw_layer(W, rng, shape):
    if isinstance(W, StepHypergraphon):
        return rng.choice(W.m, size=shape, p=[float(x) for x in W.lengths])
    return rng.random(shape)


def _edge_probabilities(W, ksets, n, layers):
    '''
    W evaluated at the drawn coordinates of every k-set; layers[s] holds the draws
    for the s-subsets of range(n) indexed by colex rank (last axis)
    '''
    if isinstance(W, StepHypergraphon):
        index = []
        for j, c in enumerate(W.coords):
            if W.table.shape[j] == 1:
                index.append(0)
            else:
                index.append(layers[len(c)][..., colex_rank(ksets[:, list(c)], n)])
        return W.values[tuple(np.broadcast_arrays(*index))] if index else W.values[()]
    x = np.stack([layers[len(c)][..., colex_rank(ksets[:, list(c)], n)] for c in W.coords], axis=-1)
    return W(x)


def _needed_layers(W):
    if isinstance(W, StepHypergraphon):
        return sorted({len(c) for j, c in enumerate(W.coords) if W.table.shape[j] != 1})
    return list(range(1, W.k))


def sample(n, W, seed, trial=0):
    '''
    Draw G ~ G(n, W): first a coordinate for every vertex subset of size 1..k-1
    (a part index for step W), then each k-set independently with probability W there
    '''
    k = W.k
    SampleConfig(n, seed).check(k)
    layers = {s: _draw_layer(W, _stream(seed, trial, s), binomial(n, s)) for s in _needed_layers(W)}
    ksets = colex_combinations(n, k)
    prob = _edge_probabilities(W, ksets, n, layers)
    keep = _stream(seed, trial, k).random(ksets.shape[0]) < prob
    return KGraph(n, k, ksets[keep])


def sample_many(n, W, trials, seed, jobs=1):
    '''
    Independent samples for trials 0..trials-1; the result does not depend on jobs
    '''
    SampleConfig(n, seed, trials).check(W.k)
    draw = partial(sample, n, W, seed)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(draw, range(trials)))
    return [draw(t) for t in range(trials)]


def sample_batch(n, W, trials, seed, stream=0):
    '''
    Edge inclusion matrix of shape (trials, C(n, k)) for independent samples on n vertices;
    column i is the k-set of colex rank i
    '''
    k = W.k
    SampleConfig(n, seed, trials).check(k)
    layers = {s: _draw_layer(W, _stream(seed, stream, s), (trials, binomial(n, s))) for s in _needed_layers(W)}
    ksets = colex_combinations(n, k)
    prob = np.broadcast_to(_edge_probabilities(W, ksets, n, layers), (trials, ksets.shape[0]))
    return _stream(seed, stream, k).random((trials, ksets.shape[0])) < prob


def sample_induced(G, n, seed):
    '''
    The k-graph induced by a uniformly random n-subset of V(G), relabelled in order
    '''
    if not 0 <= n <= G.n:
        raise InputError("cannot sample {} vertices from a graph on {}".format(n, G.n))
    rng = np.random.default_rng(seed)
    return induced(G, np.sort(rng.choice(G.n, size=n, replace=False)).tolist())


def estimate_containment(F, W, trials, seed, batch=100000):
    '''
    Fraction of samples G ~ G(|V(F)|, W) with E(F) a subset of E(G), an unbiased estimate of t(F, W)
    '''
    if F.k != W.k:
        raise InputError("uniformity mismatch: {} vs {}".format(F.k, W.k))
    if trials < 1:
        raise InputError("need at least one trial")
    hits = 0
    for stream, start in enumerate(range(0, trials, batch)):
        size = min(batch, trials - start)
        included = sample_batch(F.n, W, size, seed, stream=stream)
        hits += int(np.count_nonzero(included[:, F.ranks].all(axis=1)))
    p = hits / trials
    return MonteCarloEstimate(p, float(np.sqrt(p * (1 - p) / trials)), trials)


def _check_unit(name, value):
    if not 0 < value <= 1:
        raise InputError("{} must lie in (0, 1], got {}".format(name, value))


def azuma_bound_degree(eps, n, k, l):
    '''
    exp(-eps^2 n / (9 k^2)): bound on a fixed l-set losing eps of its normalised degree in an n-vertex subsample
    '''
    _check_unit("eps", eps)
    if not 0 <= l <= k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(k - 1, l))
    return float(np.exp(-eps ** 2 * n / (9 * k ** 2)))


def azuma_bound_empty(beta, n, k):
    '''
    exp(-beta^2 n / (3 k^2)): bound on an l-set of a beta-dense host staying uncovered in the subsample
    '''
    _check_unit("beta", beta)
    return float(np.exp(-beta ** 2 * n / (3 * k ** 2)))
