import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .errors import DomainError, InputError
from .hypergraph import min_positive_degree

__all__ = ["real_binomial", "invert_real_binomial", "shadow_lower_bound",
           "kk_edge_lower_bound", "check_kk", "KKReport", "BISECTION_TOL", "CHECK_SLACK"]

BISECTION_TOL = 1e-12
CHECK_SLACK = 1e-9


def real_binomial(y, k):
    '''
    y(y-1)...(y-k+1)/k! for real y >= k
    '''
    if k < 0:
        raise InputError("k must be nonnegative, got {}".format(k))
    if y < k:
        raise DomainError("real binomial needs y >= k, got y={} k={}".format(y, k))
    return float(np.prod(y - np.arange(k, dtype=float)) / math.factorial(k))


def invert_real_binomial(e, k):
    '''
    The unique x >= k with real_binomial(x, k) = e, by bisection
    '''
    if k < 1:
        raise InputError("k must be positive, got {}".format(k))
    if e < 1:
        raise DomainError("inverse real binomial needs e >= 1, got {}".format(e))
    if e == 1:
        return float(k)
    lb, ub = float(k), float(k) + 1.
    while real_binomial(ub, k) < e:
        lb, ub = ub, 2 * ub
    return bisect(lambda x: real_binomial(x, k) - e, lb, ub, xtol=BISECTION_TOL, rtol=4 * np.finfo(float).eps)


def shadow_lower_bound(e, k, l):
    '''
    Lovasz form of Kruskal-Katona: e = C(x, k) edges cover at least C(x, l) l-sets
    '''
    if not 0 <= l <= k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(k - 1, l))
    if e < 1:
        raise InputError("edge count must be positive, got {}".format(e))
    if l == 0:
        return 1.
    return real_binomial(invert_real_binomial(e, k), l)


def kk_edge_lower_bound(gamma, m, k, l):
    '''
    gamma^(k/(k-l)) m^k / k!
    '''
    if not 0 <= l <= k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(k - 1, l))
    if m < k:
        raise InputError("need m >= k, got m={} k={}".format(m, k))
    if not 0 <= gamma <= 1:
        raise InputError("gamma must lie in [0, 1], got {}".format(gamma))
    return gamma ** (k / (k - l)) * m ** k / math.factorial(k)


@dataclass(frozen=True)
class KKReport:
    gamma_max: float
    bound: float
    e: int
    holds: bool

    def as_dict(self):
        return {"gamma_max": self.gamma_max, "bound": self.bound, "e": self.e, "holds": self.holds}


def check_kk(G, l):
    '''
    Tightest instance of the edge-count bound for G: gamma is the largest value with
    min positive l-degree >= gamma m^(k-l)/(k-l)!
    '''
    if not G.num_edges:
        raise InputError("the edge-count bound needs a graph with at least one edge")
    m, k = G.n, G.k
    gamma = min_positive_degree(G, l) * math.factorial(k - l) / m ** (k - l)
    bound = kk_edge_lower_bound(min(gamma, 1.), m, k, l)
    return KKReport(gamma_max=gamma, bound=bound, e=G.num_edges, holds=G.num_edges >= bound - CHECK_SLACK)
