from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations

import numpy as np

from ..config import DEFAULT_SETTINGS
from ..errors import InputError, SizeError
from ._combinatorics import binomial, colex_combinations, colex_rank

__all__ = ["KGraph", "complete_graph", "empty_graph", "degree", "degree_counts",
           "min_positive_degree", "min_degree", "shadow_size", "induced",
           "adjacency_tensor", "hom_count", "hom_density", "contains_subgraph",
           "is_family_free"]


class KGraph(object):

    '''
    Class represents a k-uniform hypergraph on the vertices 0..n-1.
    The edge set is an immutable (e, k) array of increasing rows in lexicographic order.
    '''

    def __init__(self, n, k, edges=()):
        self.n = int(n)
        self.k = int(k)
        if self.k < 1:
            raise InputError("uniformity k must be positive, got {}".format(k))
        if self.n < 0:
            raise InputError("vertex count must be nonnegative, got {}".format(n))
        try:
            arr = np.array(edges, dtype=np.int64)
        except (TypeError, ValueError):
            raise InputError("every edge must have exactly {} integer vertices".format(self.k))
        if arr.size == 0:
            arr = np.zeros((0, self.k), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != self.k:
            raise InputError("every edge must have exactly {} vertices".format(self.k))
        arr = np.sort(arr, axis=1)
        if arr.size and (arr.min() < 0 or arr.max() >= self.n):
            raise InputError("edge vertex out of range 0..{}".format(self.n - 1))
        if np.any(arr[:, 1:] == arr[:, :-1]):
            raise InputError("edge with a repeated vertex")
        arr = arr[np.lexsort(arr.T[::-1])]
        if np.any(np.all(arr[1:] == arr[:-1], axis=1)):
            raise InputError("duplicate edge")
        arr.setflags(write=False)
        self.edges = arr

    @classmethod
    def from_mask(cls, n, k, mask):
        '''
        Inverse of KGraph.mask: bit i set iff the k-set of colex rank i is an edge
        '''
        size = binomial(n, k)
        raw = np.frombuffer(int(mask).to_bytes((size + 7) // 8 or 1, "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little")[:size].astype(bool)
        return cls(n, k, colex_combinations(n, k)[bits])

    @property
    def num_edges(self):
        return self.edges.shape[0]

    @cached_property
    def edge_set(self):
        return frozenset(map(tuple, self.edges.tolist()))

    @cached_property
    def ranks(self):
        return colex_rank(self.edges, self.n)

    @cached_property
    def mask(self):
        bits = np.zeros(binomial(self.n, self.k), dtype=bool)
        bits[self.ranks] = True
        return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")

    @cached_property
    def incidence(self):
        inc = [[] for _ in range(self.n)]
        for e in self.edges.tolist():
            for v in e:
                inc[v].append(tuple(e))
        return inc

    def relabel(self, perm):
        '''
        Image of the graph under the vertex map v -> perm[v]
        '''
        perm = np.asarray(perm, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise InputError("relabelling must be a permutation of 0..{}".format(self.n - 1))
        return KGraph(self.n, self.k, perm[self.edges] if self.num_edges else ())

    def with_edge(self, edge):
        return KGraph(self.n, self.k, self.edges.tolist() + [list(edge)])

    def without_edge(self, edge):
        edge = tuple(sorted(edge))
        return KGraph(self.n, self.k, [e for e in self.edges.tolist() if tuple(e) != edge])

    def __eq__(self, other):
        if not isinstance(other, KGraph):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.k, self.edges.tobytes()))

    def __repr__(self):
        return "KGraph(n={}, k={}, edges={})".format(self.n, self.k, [tuple(e) for e in self.edges.tolist()])


def complete_graph(n, k):
    return KGraph(n, k, colex_combinations(n, k))


def empty_graph(n, k):
    return KGraph(n, k)


def _check_level(G, l, upper=None):
    upper = G.k - 1 if upper is None else upper
    if not 0 <= l <= upper:
        raise InputError("l must lie in 0..{}, got {}".format(upper, l))


def _vertex_subset(G, L):
    L = sorted(int(v) for v in L)
    if len(set(L)) != len(L):
        raise InputError("vertex subset has repeated vertices: {}".format(L))
    if L and (L[0] < 0 or L[-1] >= G.n):
        raise InputError("vertex subset {} not inside 0..{}".format(L, G.n - 1))
    return tuple(L)


def degree(G, L):
    '''
    Number of edges of G containing the vertex set L
    '''
    L = _vertex_subset(G, L)
    hit = np.ones(G.num_edges, dtype=bool)
    for v in L:
        hit &= np.any(G.edges == v, axis=1)
    return int(hit.sum())


def degree_counts(G, l):
    '''
    deg_L(G) for every l-subset L of the vertices, indexed by colex rank of L
    '''
    _check_level(G, l, upper=G.k)
    if l == 0:
        return np.array([G.num_edges], dtype=np.int64)
    total = binomial(G.n, l)
    if not G.num_edges:
        return np.zeros(total, dtype=np.int64)
    ranks = np.concatenate([colex_rank(G.edges[:, list(cols)], G.n)
                            for cols in combinations(range(G.k), l)])
    return np.bincount(ranks, minlength=total)


def min_positive_degree(G, l):
    _check_level(G, l)
    if not G.num_edges:
        return 0
    counts = degree_counts(G, l)
    return int(counts[counts > 0].min())


def min_degree(G, l):
    _check_level(G, l)
    counts = degree_counts(G, l)
    return int(counts.min()) if counts.size else 0


def shadow_size(G, l):
    '''
    Number of l-sets covered by at least one edge
    '''
    _check_level(G, l)
    if not G.num_edges:
        return 0
    return int(np.count_nonzero(degree_counts(G, l)))


def induced(G, S):
    S = _vertex_subset(G, S)
    lookup = np.full(G.n, -1, dtype=np.int64)
    lookup[list(S)] = np.arange(len(S))
    if not G.num_edges:
        return KGraph(len(S), G.k)
    image = lookup[G.edges]
    return KGraph(len(S), G.k, image[np.all(image >= 0, axis=1)])


def _same_uniformity(F, G):
    if F.k != G.k:
        raise InputError("uniformity mismatch: {} vs {}".format(F.k, G.k))


def adjacency_tensor(G, dtype=np.int64, settings=DEFAULT_SETTINGS):
    '''
    Dense symmetric 0/1 tensor of shape (n,)*k with A[v_1..v_k] = 1 iff {v_1..v_k} is an edge
    '''
    if G.n ** G.k > settings.term_budget:
        raise SizeError(G.n ** G.k, settings.term_budget, what="adjacency tensor")
    A = np.zeros((G.n,) * G.k, dtype=dtype)
    for perm in permutations(range(G.k)):
        A[tuple(G.edges[:, list(perm)].T)] = 1
    return A


def _hom_count_sparse(F, G):
    '''
    Homomorphism count by extending maps vertex by vertex along the edges of F; each new
    vertex goes to a common neighbour of the images of its earlier edge mates
    '''
    order = _vertex_order(F)
    position = {v: i for i, v in enumerate(order)}
    completes = [[] for _ in order]
    mates = [set() for _ in order]
    for e in F.edges.tolist():
        last = max(position[v] for v in e)
        completes[last].append(e)
        for v in e:
            mates[position[v]].update(u for u in e if position[u] < position[v])
    g_edges = G.edge_set
    neighbours = [set() for _ in range(G.n)]
    for e in G.edges.tolist():
        for v in e:
            neighbours[v].update(u for u in e if u != v)
    active = [v for v in range(G.n) if neighbours[v]]

    def extend(pos, assign):
        if pos == len(order):
            return 1
        v = order[pos]
        if mates[pos]:
            candidates = set.intersection(*(neighbours[assign[u]] for u in mates[pos]))
        else:
            candidates = active
        total = 0
        for w in candidates:
            assign[v] = w
            if all(tuple(sorted(assign[u] for u in e)) in g_edges for e in completes[pos]):
                total += extend(pos + 1, assign)
        assign.pop(v, None)
        return total

    return extend(0, {})


def hom_count(F, G, settings=DEFAULT_SETTINGS):
    '''
    Number of maps V(F) -> V(G), not necessarily injective, sending every edge of F to an edge of G
    '''
    _same_uniformity(F, G)
    if not F.num_edges:
        return G.n ** F.n
    used, local = np.unique(F.edges, return_inverse=True)
    local = local.reshape(F.edges.shape)
    isolated = F.n - used.size
    if G.n ** G.k > settings.term_budget:
        return _hom_count_sparse(F, G) * G.n ** isolated
    # int64 is exact as long as the count cannot reach 2**62
    dtype = np.int64 if G.n ** used.size < 2**62 else object
    A = adjacency_tensor(G, dtype=dtype, settings=settings)
    operands = []
    for row in local.tolist():
        operands.extend([A, row])
    total = np.einsum(*operands, [], optimize=True)
    return int(total) * G.n ** isolated


def hom_density(F, G, settings=DEFAULT_SETTINGS):
    _same_uniformity(F, G)
    if G.n < 1:
        raise InputError("host graph must have at least one vertex")
    return Fraction(hom_count(F, G, settings=settings), G.n ** F.n)


def _vertex_order(F):
    order = []
    for e in F.edges.tolist():
        order.extend(v for v in e if v not in order)
    return order


def contains_subgraph(F, G, through=None):
    '''
    True iff some injective map V(F) -> V(G) sends every edge of F to an edge of G.
    With through=e only embeddings that use the edge e of G are considered.
    '''
    _same_uniformity(F, G)
    if F.n > G.n or F.num_edges > G.num_edges:
        return False
    if not F.num_edges:
        return through is None
    order = _vertex_order(F)
    position = {v: i for i, v in enumerate(order)}
    completes = [[] for _ in order]
    for e in F.edges.tolist():
        completes[max(position[v] for v in e)].append(e)
    fdeg = np.bincount(F.edges.ravel(), minlength=F.n)
    gdeg = np.bincount(G.edges.ravel(), minlength=G.n)
    g_edges = G.edge_set

    def closes(v, assign):
        return all(tuple(sorted(assign[u] for u in e)) in g_edges for e in completes[position[v]])

    def extend(pos, assign, used):
        if pos == len(order):
            return True
        v = order[pos]
        if v in assign:
            return closes(v, assign) and extend(pos + 1, assign, used)
        for w in range(G.n):
            if w in used or gdeg[w] < fdeg[v]:
                continue
            assign[v] = w
            if closes(v, assign):
                used.add(w)
                if extend(pos + 1, assign, used):
                    return True
                used.discard(w)
            del assign[v]
        return False

    if through is None:
        return extend(0, {}, set())
    through = tuple(sorted(through))
    if through not in g_edges:
        raise InputError("edge {} is not an edge of the host graph".format(through))
    for f in F.edges.tolist():
        for image in permutations(through):
            assign = dict(zip(f, image))
            if extend(0, assign, set(image)):
                return True
    return False


def is_family_free(G, family, through=None):
    return not any(contains_subgraph(F, G, through=through) for F in family)
