from dataclasses import dataclass
from functools import reduce

from ..errors import InputError
from ._kgraph import KGraph

__all__ = ["LabelledKGraph", "single_edge", "rooted_product", "edge_power", "unlabel"]


@dataclass(frozen=True)
class LabelledKGraph:
    '''
    A k-graph whose vertices 0..roots-1 are distinguished roots
    '''
    graph: KGraph
    roots: int

    def __post_init__(self):
        if not 0 <= self.roots <= self.graph.k - 1:
            raise InputError("root count must lie in 0..{}, got {}".format(self.graph.k - 1, self.roots))
        if self.roots > self.graph.n:
            raise InputError("graph on {} vertices cannot carry {} roots".format(self.graph.n, self.roots))

    @property
    def k(self):
        return self.graph.k


def single_edge(k, l):
    return LabelledKGraph(KGraph(k, k, [list(range(k))]), l)


def rooted_product(F, G):
    '''
    Disjoint union of F and G glued along their common roots
    '''
    if F.roots != G.roots:
        raise InputError("root mismatch: {} vs {}".format(F.roots, G.roots))
    if F.k != G.k:
        raise InputError("uniformity mismatch: {} vs {}".format(F.k, G.k))
    l = F.roots
    shift = F.graph.n - l
    moved = [[v if v < l else v + shift for v in e] for e in G.graph.edges.tolist()]
    n = F.graph.n + G.graph.n - l
    return LabelledKGraph(KGraph(n, F.k, F.graph.edges.tolist() + moved), l)


def edge_power(k, l, i):
    '''
    The i-fold rooted product of the l-labelled single k-edge
    '''
    if i < 0:
        raise InputError("power must be nonnegative, got {}".format(i))
    unit = LabelledKGraph(KGraph(l, k), l)
    return reduce(rooted_product, [single_edge(k, l)] * i, unit)


def unlabel(F):
    return F.graph
