from fractions import Fraction

from ..config import DEFAULT_SETTINGS
from ..errors import InputError
from ..hypergraph import binomial
from ._augment import search
from ._problem import SearchProblem

__all__ = ["ratio_table", "turan_number", "RATIO_COLUMNS"]

RATIO_COLUMNS = ["n", "value", "ratio", "ratio_decimal", "exact"]


def ratio_table(k, l, family, n_range, mode, settings=DEFAULT_SETTINGS, jobs=1):
    '''
    One row per n with the optimum and its normalisation by C(n - l, k - l)
    '''
    rows = []
    for n in n_range:
        result = search(SearchProblem(n, k, l, family, mode, settings), jobs=jobs)
        slots = binomial(n - l, k - l)
        ratio = Fraction(result.value, slots) if slots else Fraction(0)
        rows.append({"n": n, "value": result.value, "ratio": ratio,
                     "ratio_decimal": format(float(ratio), ".12g"), "exact": result.exact})
    return rows


def turan_number(n, family, k=None, settings=DEFAULT_SETTINGS, jobs=1):
    '''
    ex(n, family): the largest edge count of a family-free k-graph on n vertices
    '''
    family = list(family)
    if k is None:
        if not family:
            raise InputError("k is needed when the family is empty")
        k = family[0].k
    return search(SearchProblem(n, k, 0, family, "positive", settings), jobs=jobs).value
