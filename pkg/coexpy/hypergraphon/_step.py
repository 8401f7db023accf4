import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product

import numpy as np

from ..errors import InputError
from ..hypergraph import nonempty_subsets, proper_subsets

__all__ = ["StepHypergraphon", "CellPoint", "ValidationReport", "constant", "from_graph",
           "pair_coordinate_hypergraphon", "validate", "symmetrize", "cells", "degree",
           "min_positive_degree", "min_degree", "symmetry_axes"]

_to_fraction = np.vectorize(Fraction, otypes=[object])


@lru_cache(maxsize=None)
def symmetry_axes(k):
    '''
    For every permutation sigma of range(k), the axis order that maps a coordinate
    table T to the table of x -> T(x^sigma)
    '''
    coords = proper_subsets(k)
    index = {c: j for j, c in enumerate(coords)}
    result = []
    for sigma in permutations(range(k)):
        axes = [0] * len(coords)
        for j, c in enumerate(coords):
            axes[index[tuple(sorted(sigma[a] for a in c))]] = j
        result.append((sigma, tuple(axes)))
    return tuple(result)


class StepHypergraphon(object):

    '''
    Class represents a step k-hypergraphon: [0,1] is cut into parts of the given rational
    lengths (shared by all coordinates) and table[a] is the value on the cell where
    coordinate proper_subsets(k)[j] lies in part a[j].
    A table axis of size 1 means the value does not depend on that coordinate.
    '''

    def __init__(self, k, lengths, table):
        self.k = int(k)
        if self.k < 1:
            raise InputError("uniformity k must be positive, got {}".format(k))
        self.coords = proper_subsets(self.k)
        self.lengths = tuple(Fraction(x) for x in lengths)
        self.m = len(self.lengths)
        if not self.m:
            raise InputError("a step hypergraphon needs at least one part")
        if any(x <= 0 for x in self.lengths):
            raise InputError("part lengths must be positive")
        if sum(self.lengths) != 1:
            raise InputError("part lengths must sum to 1, got {}".format(sum(self.lengths)))
        table = np.asarray(table, dtype=object)
        if table.ndim != len(self.coords):
            raise InputError("table must have {} axes, got {}".format(len(self.coords), table.ndim))
        if any(size not in (1, self.m) for size in table.shape):
            raise InputError("table axes must have size 1 or {}, got {}".format(self.m, table.shape))
        table = _to_fraction(table) if table.size else table
        if table.size and (min(table.flat) < 0 or max(table.flat) > 1):
            raise InputError("table values must lie in [0, 1]")
        table.setflags(write=False)
        self.table = table

    @cached_property
    def full_table(self):
        return np.broadcast_to(self.table, (self.m,) * len(self.coords))

    @cached_property
    def values(self):
        return self.table.astype(float)

    @cached_property
    def length_vector(self):
        return np.array(self.lengths, dtype=object)

    @property
    def is_zero(self):
        return not any(self.table.flat)

    def as_analytic(self):
        from ._analytic import AnalyticHypergraphon

        cuts = np.cumsum([float(x) for x in self.lengths])[:-1]
        values = self.values
        trivial = [size == 1 for size in values.shape]

        def evaluate(x):
            parts = np.searchsorted(cuts, np.asarray(x, dtype=float), side="right")
            index = tuple(np.zeros_like(parts[..., j]) if trivial[j] else parts[..., j]
                          for j in range(len(trivial)))
            return values[index]

        return AnalyticHypergraphon(self.k, evaluate, name="step")

    def __eq__(self, other):
        if not isinstance(other, StepHypergraphon):
            return NotImplemented
        return (self.k, self.lengths) == (other.k, other.lengths) and \
            np.array_equal(self.full_table, other.full_table)

    def __hash__(self):
        return hash((self.k, self.lengths, tuple(self.full_table.flat)))

    def __repr__(self):
        return "StepHypergraphon(k={}, m={}, lengths={})".format(
            self.k, self.m, [str(x) for x in self.lengths])


@dataclass(frozen=True)
class CellPoint:
    '''
    A cell of [0,1]^{nonempty subsets of range(l)}: assignment[j] is the part of
    coordinate nonempty_subsets(l)[j]
    '''
    l: int
    assignment: tuple

    def __post_init__(self):
        if len(self.assignment) != len(nonempty_subsets(self.l)):
            raise InputError("a cell for l={} needs {} part indices, got {}".format(
                self.l, len(nonempty_subsets(self.l)), len(self.assignment)))

    def measure(self, W):
        return math.prod((W.lengths[a] for a in self.assignment), start=Fraction(1))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    reason: str = ""
    assignment: tuple = None
    sigma: tuple = None

    def __bool__(self):
        return self.ok


def constant(k, p):
    p = Fraction(p)
    return StepHypergraphon(k, [1], np.full((1,) * len(proper_subsets(k)), p, dtype=object))


def from_graph(G, lengths=None):
    '''
    W^G: part i of [0,1] stands for vertex i and the value is 1 exactly on cells whose
    singleton coordinates name the vertices of an edge. Unequal lengths give a weighted blow-up.
    '''
    if G.n < G.k:
        raise InputError("graph needs at least k={} vertices, got {}".format(G.k, G.n))
    lengths = [Fraction(1, G.n)] * G.n if lengths is None else lengths
    if len(lengths) != G.n:
        raise InputError("need one part length per vertex")
    d = len(proper_subsets(G.k))
    table = np.full((G.n,) * G.k + (1,) * (d - G.k), Fraction(0), dtype=object)
    one = Fraction(1)
    for e in G.edges.tolist():
        for perm in permutations(e):
            table[perm + (0,) * (d - G.k)] = one
    return StepHypergraphon(G.k, lengths, table)


def pair_coordinate_hypergraphon():
    '''
    k=3 on two halves: 1 iff all three pair coordinates lie in the first half
    '''
    table = np.full((1, 1, 1, 2, 2, 2), Fraction(0), dtype=object)
    table[0, 0, 0, 0, 0, 0] = Fraction(1)
    return StepHypergraphon(3, [Fraction(1, 2), Fraction(1, 2)], table)


def validate(W):
    if sum(W.lengths) != 1 or any(x <= 0 for x in W.lengths):
        return ValidationReport(False, "part lengths must be positive and sum to 1")
    if W.table.size and (min(W.table.flat) < 0 or max(W.table.flat) > 1):
        return ValidationReport(False, "table values must lie in [0, 1]")
    full = W.full_table
    for sigma, axes in symmetry_axes(W.k):
        moved = full.transpose(axes)
        diff = np.argwhere(full != moved)
        if diff.size:
            where = tuple(int(i) for i in diff[0])
            return ValidationReport(False, "W(a) != W(a^sigma)", assignment=where, sigma=sigma)
    return ValidationReport(True)


def symmetrize(W):
    '''
    Average the table over the action of the symmetric group on the coordinates
    '''
    if validate(W):
        return W
    full = np.array(W.full_table, dtype=object)
    total = sum(full.transpose(axes) for _, axes in symmetry_axes(W.k))
    return StepHypergraphon(W.k, W.lengths, total / math.factorial(W.k))


def _check_level(W, l):
    if not 0 <= l <= W.k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(W.k - 1, l))


def cells(W, l):
    '''
    Yields (cell, measure) over all cells of [0,1]^{nonempty subsets of range(l)}
    '''
    _check_level(W, l)
    for assignment in product(range(W.m), repeat=len(nonempty_subsets(l))):
        cell = CellPoint(l, assignment)
        yield cell, cell.measure(W)


def degree(W, cell):
    '''
    Average of W over all extensions of the cell to the coordinates of [0,1]^{r<[k]}
    '''
    _check_level(W, cell.l)
    roots = dict(zip(nonempty_subsets(cell.l), cell.assignment))
    index = []
    for j, c in enumerate(W.coords):
        if c in roots:
            part = roots[c]
            if not 0 <= part < W.m:
                raise InputError("part index {} out of range".format(part))
            index.append(0 if W.table.shape[j] == 1 else part)
        else:
            index.append(slice(None))
    block = np.asarray(W.table[tuple(index)], dtype=object)
    unit = np.array([Fraction(1)], dtype=object)
    while block.ndim:
        weights = W.length_vector if block.shape[0] == W.m else unit
        block = np.asarray(np.tensordot(weights, block, axes=([0], [0])), dtype=object)
    return Fraction(block.item())


def min_positive_degree(W, l):
    _check_level(W, l)
    if W.is_zero:
        return Fraction(0)
    positive = [d for d in (degree(W, cell) for cell, _ in cells(W, l)) if d > 0]
    return min(positive) if positive else Fraction(0)


def min_degree(W, l):
    _check_level(W, l)
    return min(degree(W, cell) for cell, _ in cells(W, l))
