'''
The functional Q_W = int p(t_x(E, W)) dx evaluated exactly in two independent ways, its
finite-graph counterpart, and sampling experiments that compare G(n, W) with W.
'''
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, perm

import numpy as np

from . import hypergraph as hg
from . import hypergraphon as hgon
from .config import DEFAULT_SETTINGS
from .errors import ConsistencyError, InputError, SizeError
from .sampling import sample

__all__ = ["QValue", "q_functional", "graph_q_functional", "convergence_experiment",
           "CONVERGENCE_COLUMNS", "density_columns", "render_value"]

logger = logging.getLogger(__name__)

CONVERGENCE_COLUMNS = ["kind", "n", "trial", "stat", "pos_ratio", "min_ratio"]


@dataclass(frozen=True)
class QValue:
    path_a: Fraction
    path_b: Fraction = None
    path_b_error: str = None

    @property
    def value(self):
        return self.path_a

    def as_dict(self):
        return {"q": str(self.path_a), "q_decimal": float(self.path_a),
                "path_b": None if self.path_b is None else str(self.path_b),
                "path_b_error": self.path_b_error}


def _rational_polynomial(p):
    if not p.is_rational:
        raise InputError("Q needs a polynomial with rational coefficients")
    return p.coefficients


def q_functional(W, p, l, settings=DEFAULT_SETTINGS):
    '''
    Path A sums measure times p(degree) over the cells of [0,1]^{r[l]}; path B expands p
    and integrates the powers of the rooted edge. Disagreement raises ConsistencyError.
    '''
    if not 0 <= l <= W.k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(W.k - 1, l))
    coefficients = _rational_polynomial(p)
    path_a = sum((measure * p.exact(hgon.degree(W, cell)) for cell, measure in hgon.cells(W, l)), Fraction(0))
    try:
        path_b = Fraction(coefficients[0])
        for i, a in enumerate(coefficients[1:], start=1):
            if a:
                path_b += a * hgon.density(hg.unlabel(hg.edge_power(W.k, l, i)), W, settings=settings)
    except SizeError as err:
        logger.warning("Q path B skipped: %s", err)
        return QValue(path_a, None, str(err))
    if path_a != path_b:
        raise ConsistencyError("Q paths disagree: {} != {}".format(path_a, path_b))
    return QValue(path_a, path_b)


def graph_q_functional(G, p, l):
    '''
    Q for W^G computed from G: the average over l-tuples of vertices of p applied to the
    rooted degree deg_L(G) (k - l)! / n^(k - l), with tuples repeating a vertex contributing p(0)
    '''
    if not 0 <= l <= G.k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(G.k - 1, l))
    if G.n < 1:
        raise InputError("graph needs at least one vertex")
    scale = Fraction(factorial(G.k - l), G.n ** (G.k - l))
    counts = hg.degree_counts(G, l)
    values, multiplicity = np.unique(counts, return_counts=True)
    distinct = sum((int(c) * p.exact(int(d) * scale) for d, c in zip(values, multiplicity)), Fraction(0))
    repeated = G.n ** l - perm(G.n, l)
    return (factorial(l) * distinct + repeated * p.exact(Fraction(0))) / G.n ** l


def density_columns(F_list):
    return ["t_F{}".format(i) for i in range(len(F_list))]


def render_value(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return format(value, ".12g")
    return value


def _pair_seed(seed, n):
    return int(np.random.SeedSequence([seed, n]).generate_state(1)[0])


def _trial_row(task):
    W, l, n, trial, seed, F_list = task
    G = sample(n, W, _pair_seed(seed, n), trial)
    slots = hg.binomial(n - l, W.k - l)
    row = {"kind": "trial", "n": n, "trial": trial, "stat": "",
           "pos_ratio": hg.min_positive_degree(G, l) / slots,
           "min_ratio": hg.min_degree(G, l) / slots}
    for name, F in zip(density_columns(F_list), F_list):
        row[name] = float(hg.hom_density(F, G))
    return row


def _summaries(n, rows, columns):
    out = []
    for stat, fn in (("mean", np.mean), ("min", np.min), ("max", np.max)):
        row = {"kind": "summary", "n": n, "trial": "", "stat": stat}
        for column in columns:
            row[column] = float(fn([r[column] for r in rows]))
        out.append(row)
    return out


def convergence_experiment(W, l, n_list, trials, seed, F_list=(), jobs=1, settings=DEFAULT_SETTINGS):
    '''
    Rows comparing samples G ~ G(n, W) with W: one reference row with the exact
    quantities of W, one row per (n, trial) and mean/min/max summaries per n
    '''
    if not isinstance(W, hgon.StepHypergraphon):
        raise InputError("convergence experiments need a step hypergraphon")
    F_list = list(F_list)
    n_list = list(n_list)
    if n_list != sorted(n_list):
        raise InputError("sample sizes must be ascending")
    if trials < 1:
        raise InputError("need at least one trial")
    if not 0 <= l <= W.k - 1:
        raise InputError("l must lie in 0..{}, got {}".format(W.k - 1, l))
    for F in F_list:
        if F.k != W.k:
            raise InputError("uniformity mismatch: {} vs {}".format(F.k, W.k))
    reference = {"kind": "reference", "n": "", "trial": "", "stat": "",
                 "pos_ratio": hgon.min_positive_degree(W, l), "min_ratio": hgon.min_degree(W, l)}
    for name, F in zip(density_columns(F_list), F_list):
        reference[name] = hgon.density(F, W, settings=settings)
    tasks = [(W, l, n, t, seed, F_list) for n in n_list for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            trial_rows = list(executor.map(_trial_row, tasks))
    else:
        trial_rows = [_trial_row(task) for task in tasks]
    trial_rows.sort(key=lambda row: (row["n"], row["trial"]))
    columns = ["pos_ratio", "min_ratio"] + density_columns(F_list)
    rows = [reference]
    for n in n_list:
        block = [row for row in trial_rows if row["n"] == n]
        rows.extend(block)
        rows.extend(_summaries(n, block, columns))
        logger.info("n=%d: positive degree ratio in [%.4f, %.4f]", n,
                    min(r["pos_ratio"] for r in block), max(r["pos_ratio"] for r in block))
    return rows
