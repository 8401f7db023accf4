import numpy as np

from ..errors import InputError
from ..hypergraph import degree_counts

__all__ = ["Objective", "PositiveDegree", "MinDegree", "make_objective", "MODES"]


class Objective(object):
    '''
    Base class for the quantities maximised by the extremal search
    '''
    name = None

    def __init__(self, l):
        self.l = int(l)

    def value(self, counts):
        raise NotImplementedError("Value of the objective on a degree vector has to be implemented!")

    def batch_values(self, counts):
        raise NotImplementedError("Vectorised objective has to be implemented!")

    def upper_bound(self, counts, addable):
        '''
        Bound on the objective over all supersets of a graph with degree vector counts,
        where addable[L] counts the non-edges through L that keep the graph admissible
        '''
        raise NotImplementedError("Upper bound for pruning has to be implemented!")

    def of_graph(self, G):
        if not 0 <= self.l <= G.k - 1:
            raise InputError("l must lie in 0..{}, got {}".format(G.k - 1, self.l))
        return self.value(degree_counts(G, self.l))

    def __repr__(self):
        return "{}(l={})".format(type(self).__name__, self.l)


class PositiveDegree(Objective):
    '''
    Class represents the minimum positive l-degree; the empty graph scores 0
    '''
    name = "positive"

    def value(self, counts):
        positive = counts[counts > 0]
        return int(positive.min()) if positive.size else 0

    def batch_values(self, counts):
        masked = np.where(counts > 0, counts, np.iinfo(np.int64).max)
        best = masked.min(axis=1)
        return np.where(best == np.iinfo(np.int64).max, 0, best)

    def upper_bound(self, counts, addable):
        reach = counts + addable
        covered = counts > 0
        # a nonempty descendant covers some l-set, so the loosest reach bounds it
        if not covered.any():
            return int(reach.max()) if reach.size else 0
        return int(reach[covered].min())


class MinDegree(Objective):
    '''
    Class represents the ordinary minimum l-degree
    '''
    name = "min"

    def value(self, counts):
        return int(counts.min()) if counts.size else 0

    def batch_values(self, counts):
        return counts.min(axis=1)

    def upper_bound(self, counts, addable):
        reach = counts + addable
        return int(reach.min()) if reach.size else 0


MODES = {"positive": PositiveDegree, "min": MinDegree}


def make_objective(mode, l):
    try:
        return MODES[mode](l)
    except KeyError:
        raise InputError("unknown mode {!r}, expected one of {}".format(mode, sorted(MODES)))
