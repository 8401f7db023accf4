from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy.special import comb

__all__ = ["binomial", "binomial_table", "colex_rank", "colex_combinations", "proper_subsets", "nonempty_subsets"]


def binomial(n, r):
    if r < 0 or n < r:
        return 0
    return int(comb(n, r, exact=True))


@lru_cache(maxsize=64)
def binomial_table(n_max, r_max):
    '''
    Table B with B[a, b] = C(a, b) for 0 <= a <= n_max, 0 <= b <= r_max
    '''
    a = np.arange(n_max + 1)[:, None]
    b = np.arange(r_max + 1)[None, :]
    table = np.rint(comb(a, b)).astype(np.int64)
    table.setflags(write=False)
    return table


def colex_rank(subsets, n):
    '''
    Colex ranks of the rows of an (m, r) array of increasing vertex tuples.
    The r-subsets of range(n) get the ranks 0..C(n, r)-1.
    '''
    subsets = np.asarray(subsets, dtype=np.int64)
    if subsets.ndim == 1:
        subsets = subsets[None, :]
    r = subsets.shape[1]
    if r == 0:
        return np.zeros(subsets.shape[0], dtype=np.int64)
    table = binomial_table(max(n, 1), r)
    ranks = np.zeros(subsets.shape[0], dtype=np.int64)
    for i in range(r):
        ranks += table[subsets[:, i], i + 1]
    return ranks


@lru_cache(maxsize=16)
def colex_combinations(n, r):
    '''
    All r-subsets of range(n) as increasing rows, row i having colex rank i
    '''
    if r > n:
        return np.zeros((0, r), dtype=np.int64)
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rows = np.fromiter((v for c in combinations(range(n), r) for v in c),
                       dtype=np.int64, count=binomial(n, r) * r).reshape(-1, r)
    rows = rows[np.argsort(colex_rank(rows, n), kind="stable")]
    rows.setflags(write=False)
    return rows


@lru_cache(maxsize=None)
def nonempty_subsets(r):
    '''
    Nonempty subsets of range(r), ordered by size and then lexicographically
    '''
    return tuple(c for size in range(1, r + 1) for c in combinations(range(r), size))


@lru_cache(maxsize=None)
def proper_subsets(k):
    '''
    Nonempty proper subsets of range(k) in the coordinate order of a k-hypergraphon
    '''
    return tuple(c for c in nonempty_subsets(k) if len(c) < k)
