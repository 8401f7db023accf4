import logging

import numpy as np

from ..base_search import WitnessPool
from ..errors import InputError
from ..hypergraph import (KGraph, binomial, canonical_mask, colex_combinations, copy_masks, mask_key,
                          slot_permutations)
from ._problem import SearchResult

__all__ = ["brute_force", "MAX_BRUTE_SLOTS"]

logger = logging.getLogger(__name__)

MAX_BRUTE_SLOTS = 25
CHUNK = 1 << 16

_BYTE_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def _popcount(x):
    return _BYTE_POPCOUNT[x.view(np.uint8)].reshape(x.shape + (4,)).sum(axis=-1)


def _level_masks(n, k, l):
    ksets = colex_combinations(n, k)
    masks = []
    for L in colex_combinations(n, l).tolist():
        hit = np.isin(ksets, L).sum(axis=1) == len(L)
        masks.append(sum(1 << int(s) for s in np.flatnonzero(hit)))
    return masks


def _classes(n, k, masks):
    '''
    Canonical masks of the isomorphism classes met by masks, a permutation closed set
    '''
    table = slot_permutations(n, k)
    if table is None:
        return {canonical_mask(n, k, mask) for mask in masks}
    seen, classes = set(), set()
    for mask in masks:
        if mask in seen:
            continue
        orbit = table.orbit(mask)
        seen.update(orbit.tolist())
        classes.add(int(orbit.min()))
    return classes


def brute_force(problem):
    '''
    Exact optimum by enumerating all 2^C(n, k) edge sets as bitmasks
    '''
    n, k = problem.n, problem.k
    slots = binomial(n, k)
    if slots > MAX_BRUTE_SLOTS:
        raise InputError("brute force needs C(n, k) <= {}, got C({}, {}) = {}".format(
            MAX_BRUTE_SLOTS, n, k, slots))
    objective = problem.objective
    copies = [np.uint32(c) for c in sorted({c for F in problem.family for c in copy_masks(F, n)})]
    levels = [np.uint32(m) for m in _level_masks(n, k, problem.l)]
    if not levels:
        # fewer than l vertices: every objective is 0
        levels = [np.uint32(0)]
    total = 1 << slots
    best = -1
    attaining = []
    for start in range(0, total, CHUNK):
        masks = np.arange(start, min(total, start + CHUNK), dtype=np.uint32)
        free = np.ones(masks.shape, dtype=bool)
        for c in copies:
            free &= (masks & c) != c
        counts = np.stack([_popcount(masks & m) for m in levels], axis=1)
        values = np.where(free, objective.batch_values(counts), -1)
        top = int(values.max())
        if top > best:
            best, attaining = top, []
        if top == best and best >= 0:
            attaining.append(masks[values == best])
    logger.debug("brute force over %d edge sets: best %d", total, best)
    pool = WitnessPool(problem.settings.witness_cap)
    for canon in _classes(n, k, np.concatenate(attaining).tolist() if attaining else []):
        pool.offer(best, canon, mask_key(canon, slots))
    witnesses = [KGraph.from_mask(n, k, canon) for canon in pool.witnesses()]
    return SearchResult(value=max(best, 0), witnesses=witnesses, nodes=total, prunes=0, exact=True)
