from fractions import Fraction

import numpy as np

from ..config import DEFAULT_SETTINGS
from ..errors import InputError, SizeError
from ..hypergraph import KGraph, nonempty_subsets

__all__ = ["density", "rooted_density", "edge_density", "is_family_free"]


def _contract(F, W, fixed, settings):
    '''
    Exact integral over the free coordinates of prod_{A in E(F)} W(x_{r<(A)});
    fixed maps root vertex tuples to their part index
    '''
    if F.k != W.k:
        raise InputError("uniformity mismatch: {} vs {}".format(F.k, W.k))
    labels = {}
    scalar = Fraction(1)
    operands = []
    for e in F.edges.tolist():
        index, subs = [], []
        for j, c in enumerate(W.coords):
            coord = tuple(e[i] for i in c)
            trivial = W.table.shape[j] == 1
            if coord in fixed:
                index.append(0 if trivial else fixed[coord])
            elif trivial:
                index.append(0)
            else:
                index.append(slice(None))
                subs.append(labels.setdefault(coord, len(labels)))
        block = W.table[tuple(index)]
        if subs:
            operands.extend([block, subs])
        else:
            scalar *= block
    if not operands or not scalar:
        return scalar
    terms = W.m ** len(labels)
    if terms > settings.term_budget:
        raise SizeError(terms, settings.term_budget)
    for label in range(len(labels)):
        operands.extend([W.length_vector, [label]])
    total = np.einsum(*operands, [], optimize=True)
    return scalar * Fraction(np.asarray(total, dtype=object).item())


def density(F, W, settings=DEFAULT_SETTINGS):
    '''
    Homomorphism density t(F, W) as an exact rational
    '''
    return _contract(F, W, {}, settings)


def rooted_density(F, W, cell, settings=DEFAULT_SETTINGS):
    '''
    Density of the labelled graph F with the coordinates of its roots fixed to the cell
    '''
    if cell.l != F.roots:
        raise InputError("cell has {} roots, graph has {}".format(cell.l, F.roots))
    for part in cell.assignment:
        if not 0 <= part < W.m:
            raise InputError("part index {} out of range".format(part))
    fixed = dict(zip(nonempty_subsets(cell.l), cell.assignment))
    return _contract(F.graph, W, fixed, settings)


def edge_density(W):
    return density(KGraph(W.k, W.k, [list(range(W.k))]), W)


def is_family_free(W, family, settings=DEFAULT_SETTINGS):
    '''
    True iff t(F, W) = 0 for every member F of the family
    '''
    return all(density(F, W, settings=settings) == 0 for F in family)
