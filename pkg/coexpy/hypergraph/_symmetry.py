'''
Vertex permutations acting on edge masks.

An edge mask has bit s set iff the k-set of colex rank s (its slot) is an edge. With at
most MAX_TABLE_VERTICES vertices and MAX_TABLE_SLOTS slots every permutation image of a
mask is computed at once as a uint64 array; larger graphs fall back to refinement labelling.
'''
from functools import lru_cache
from itertools import permutations

import numpy as np

from ..errors import InputError
from ._canonical import canonical_labelling
from ._combinatorics import binomial, colex_combinations, colex_rank
from ._kgraph import KGraph

__all__ = ["SlotPermutations", "slot_permutations", "canonical_mask", "copy_masks", "mask_slots",
           "mask_key", "MAX_TABLE_VERTICES", "MAX_TABLE_SLOTS"]

MAX_TABLE_VERTICES = 8
MAX_TABLE_SLOTS = 64


def mask_slots(mask):
    '''
    Set bits of mask in increasing order
    '''
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_key(mask, slots):
    '''
    Fixed width big-endian bytes, so byte order agrees with integer order
    '''
    return int(mask).to_bytes((slots + 7) // 8 or 1, "big")


class SlotPermutations(object):
    '''
    Class represents the symmetric group on range(n) as the table images[p, s]: the slot
    of the image of the k-set in slot s under the p-th permutation
    '''
    def __init__(self, n, k):
        self.n = n
        self.k = k
        self.slots = binomial(n, k)
        if n > MAX_TABLE_VERTICES or self.slots > MAX_TABLE_SLOTS:
            raise InputError("permutation table needs n <= {} and C(n, k) <= {}, got n={}, k={}".format(
                MAX_TABLE_VERTICES, MAX_TABLE_SLOTS, n, k))
        perms = np.array(list(permutations(range(n))), dtype=np.int64)
        mapped = np.sort(perms[:, colex_combinations(n, k)], axis=2).reshape(-1, k)
        self.images = colex_rank(mapped, n).reshape(len(perms), self.slots)
        self.bits = np.left_shift(np.uint64(1), np.arange(self.slots, dtype=np.uint64))

    def __len__(self):
        return self.images.shape[0]

    def orbit(self, mask):
        '''
        uint64 array with the image of mask under every permutation, in table order
        '''
        slots = mask_slots(int(mask))
        if not slots:
            return np.zeros(len(self), dtype=np.uint64)
        return np.bitwise_or.reduce(self.bits[self.images[:, slots]], axis=1)

    def canonical(self, mask):
        return int(self.orbit(mask).min())

    def automorphisms(self, mask, orbit=None):
        '''
        Table rows of the permutations fixing mask
        '''
        orbit = self.orbit(mask) if orbit is None else orbit
        return np.flatnonzero(orbit == np.uint64(mask))


@lru_cache(maxsize=8)
def slot_permutations(n, k):
    '''
    Shared permutation table for (n, k), None when it would be too large
    '''
    if n > MAX_TABLE_VERTICES or binomial(n, k) > MAX_TABLE_SLOTS:
        return None
    return SlotPermutations(n, k)


def canonical_mask(n, k, mask):
    '''
    Representative mask of the isomorphism class: the smallest permutation image when the
    permutation table exists, the refinement relabelling otherwise
    '''
    table = slot_permutations(n, k)
    if table is not None:
        return table.canonical(mask)
    G = KGraph.from_mask(n, k, mask)
    _, perm = canonical_labelling(G)
    return G.relabel(perm).mask


def copy_masks(F, n):
    '''
    Sorted edge masks of the injective images of F in range(n)
    '''
    if F.n > n:
        return []
    if not F.num_edges:
        return [0]
    maps = np.array(list(permutations(range(n), F.n)), dtype=np.int64)
    mapped = np.sort(maps[:, F.edges], axis=2).reshape(-1, F.k)
    ranks = np.sort(colex_rank(mapped, n).reshape(len(maps), F.num_edges), axis=1)
    return sorted({sum(1 << r for r in row) for row in np.unique(ranks, axis=0).tolist()})
