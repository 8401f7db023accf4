'''
Isomorph-free generation of family-free k-graphs by canonical augmentation.

Nodes are edge masks over the colex slots of the k-sets. A child G + s is kept iff s
lies in the orbit of the canonically last edge of G + s, so every isomorphism class is
reached along exactly one path from the empty graph. With the permutation table the
options of G are first cut down to one slot per orbit of Aut(G); without it, children
are checked by deleting the canonically last edge and comparing with G.
'''
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

import numpy as np

from ..base_search import GenerationSearch, WitnessPool
from ..budget import Budget
from ..hypergraph import (KGraph, binomial, canonical_labelling, colex_combinations, colex_rank, copy_masks,
                          empty_graph, is_family_free, mask_key, mask_slots, slot_permutations)
from ._problem import SearchResult

__all__ = ["CanonicalAugmentation", "Node", "search", "SPLIT_DEPTH"]

logger = logging.getLogger(__name__)

SPLIT_DEPTH = 2


class Node(object):
    '''
    Class represents a graph of the walk: its edge mask and, when the permutation table
    is used, the images of the mask under every vertex permutation
    '''
    __slots__ = ("mask", "orbit")

    def __init__(self, mask, orbit=None):
        self.mask = mask
        self.orbit = orbit

    def __repr__(self):
        return "Node({:#x})".format(self.mask)


class CanonicalAugmentation(GenerationSearch):
    '''
    Class represents the walk over isomorphism classes of the family-free k-graphs on
    n vertices, one edge added per level
    '''
    def __init__(self, problem, budget=None, **kwargs):
        super().__init__(budget=budget, witness_cap=problem.settings.witness_cap, **kwargs)
        self.problem = problem
        self._objective = problem.objective
        n, k, l = problem.n, problem.k, problem.l
        self._ksets = colex_combinations(n, k)
        self._slots = binomial(n, k)
        self._width = (self._slots + 7) // 8 or 1
        self._full = (1 << self._slots) - 1
        # incidence[L, s] = 1 iff the l-set of rank L lies in the k-set of slot s
        width = binomial(k, l)
        shadow = np.array([colex_rank(np.array(list(combinations(A, l)), dtype=np.int64).reshape(width, l), n)
                           for A in self._ksets.tolist()], dtype=np.int64).reshape(self._slots, width)
        self._incidence = np.zeros((binomial(n, l), self._slots), dtype=np.int64)
        self._incidence[shadow, np.arange(self._slots)[:, None]] = 1
        self._copies = sorted({c for F in problem.family for c in copy_masks(F, n)})
        self._table = slot_permutations(n, k)

    def root(self):
        return Node(0, None if self._table is None else self._table.orbit(0))

    def counts(self, mask):
        raw = np.frombuffer(mask.to_bytes(self._width, "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little")[:self._slots].astype(np.int64)
        return self._incidence @ bits

    def evaluate(self, node):
        return self._objective.value(self.counts(node.mask))

    def node_key(self, node):
        canon = node.mask if node.orbit is None else int(node.orbit.min())
        return mask_key(canon, self._slots)

    def options(self, mask):
        '''
        Slots of the non-edges, increasing, whose addition completes no forbidden copy
        '''
        blocked = mask
        for copy in self._copies:
            missing = copy & ~mask
            if missing and not missing & (missing - 1):
                blocked |= missing
        return mask_slots(self._full & ~blocked)

    def expand(self, node, best):
        options = self.options(node.mask)
        addable = self._incidence[:, options].sum(axis=1)
        if self._objective.upper_bound(self.counts(node.mask), addable) < best:
            return None
        if self._table is None:
            return self._augment_by_refinement(node, options)
        return self._augment_by_table(node, options)

    def _augment_by_table(self, node, options):
        table = self._table
        automorphisms = table.automorphisms(node.mask, node.orbit)
        representatives, covered = [], set()
        for s in options:
            if s not in covered:
                representatives.append(s)
                covered.update(table.images[automorphisms, s].tolist())
        if not representatives:
            return []
        moved = table.images[:, representatives]
        orbits = node.orbit[:, None] | table.bits[moved]
        canon = orbits.min(axis=0)
        tops = np.array([int(c).bit_length() - 1 for c in canon.tolist()], dtype=np.int64)
        # some minimising permutation sends the new edge to the top slot
        accepted = ((orbits == canon) & (moved == tops)).any(axis=0)
        return [Node(node.mask | (1 << s), orbits[:, j].copy())
                for j, s in enumerate(representatives) if accepted[j]]

    def _relabelled(self, G):
        _, perm = canonical_labelling(G)
        return G.relabel(perm).mask, perm

    def _augment_by_refinement(self, node, options):
        n, k = self.problem.n, self.problem.k
        G = KGraph.from_mask(n, k, node.mask)
        seen = set()
        children = []
        for s in options:
            canon, perm = self._relabelled(G.with_edge(self._ksets[s]))
            if canon in seen:
                continue
            top = canon.bit_length() - 1
            image = int(colex_rank(np.sort(np.asarray(perm, dtype=np.int64)[self._ksets[s]])[None, :], n)[0])
            if image != top and self._relabelled(KGraph.from_mask(n, k, canon & ~(1 << top)))[0] != node.mask:
                continue
            seen.add(canon)
            children.append(Node(canon))
        return children


def _node_budgets(max_nodes, used, parts):
    if max_nodes is None:
        return [None] * parts
    left = max(max_nodes - used, 0)
    return [left // parts + (1 if i < left % parts else 0) for i in range(parts)]


def _explore(task):
    problem, node, incumbent, max_nodes, deadline = task
    walker = CanonicalAugmentation(problem, budget=Budget(max_nodes=max_nodes))
    walk = walker.solve([node], incumbent=incumbent, deadline=deadline)
    return walk.pool.value, [key for key, _ in walk.pool.items()], walk.nodes, walk.prunes, walk.exhausted


def search(problem, jobs=1, disp=False):
    '''
    Exact optimum over isomorphism classes. The top levels are expanded first and the
    subtrees below them are walked independently from the same incumbent, so value,
    witnesses and node counts do not depend on jobs.
    '''
    started = time.monotonic()
    settings = problem.settings
    n, k = problem.n, problem.k
    if not is_family_free(empty_graph(n, k), problem.family):
        logger.info("Every graph on %d vertices contains a forbidden graph", n)
        return SearchResult(value=0, nodes=1, exact=True)
    walker = CanonicalAugmentation(problem)
    head, frontier = walker.frontier([walker.root()], SPLIT_DEPTH)
    deadline = Budget(max_seconds=settings.max_seconds).start()
    budgets = _node_budgets(settings.max_nodes, head.nodes, len(frontier))
    tasks = [(problem, node, head.pool.value, cap, deadline) for node, cap in zip(frontier, budgets)]
    if disp:
        logger.info("Split into %d subtrees after %d nodes, incumbent %d", len(tasks), head.nodes, head.pool.value)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_explore, tasks))
    else:
        outcomes = [_explore(task) for task in tasks]
    pool = WitnessPool(settings.witness_cap)
    for key, _ in head.pool.items():
        pool.offer(head.pool.value, key, key)
    nodes, prunes, exhausted = head.nodes, head.prunes, False
    for value, keys, sub_nodes, sub_prunes, sub_exhausted in outcomes:
        for key in keys:
            pool.offer(value, key, key)
        nodes += sub_nodes
        prunes += sub_prunes
        exhausted = exhausted or sub_exhausted
    witnesses = [KGraph.from_mask(n, k, int.from_bytes(key, "big")) for key in pool.witnesses()]
    result = SearchResult(value=max(pool.value, 0), witnesses=witnesses, nodes=nodes, prunes=prunes,
                          seconds=time.monotonic() - started, exact=not exhausted)
    logger.info("co-ex search n=%d k=%d l=%d mode=%s: value %d, exact %s, %d nodes, %d prunes, %.3fs",
                n, k, problem.l, problem.mode, result.value, result.exact, nodes, prunes, result.seconds)
    return result
