'''
The piecewise-linear penalty L, its Bernstein approximations and the checks that a
polynomial behaves like L: nonnegative, small near 0 and above delta, large in between.
'''
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy.stats import binom

from .errors import InputError
from .hypergraph import binomial

__all__ = ["PenaltyParams", "PenaltyFunction", "penalty_function", "Polynomial", "BernsteinPolynomial",
           "bernstein_approx", "sup_error", "find_bernstein_degree", "PenaltyReport",
           "check_penalty_properties", "GRID_POINTS", "PROPERTY_TOL"]

logger = logging.getLogger(__name__)

GRID_POINTS = 10**4
PROPERTY_TOL = 1e-9


def _rational(x):
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class PenaltyParams:
    eps: Fraction
    delta: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ("eps", "delta", "beta"):
            object.__setattr__(self, name, _rational(getattr(self, name)))
        if not 0 < self.beta <= self.eps / 2:
            raise InputError("need 0 < beta <= eps/2, got beta={}, eps={}".format(self.beta, self.eps))
        if not 0 < self.eps < self.delta / 2:
            raise InputError("need 0 < eps < delta/2, got eps={}, delta={}".format(self.eps, self.delta))
        if self.delta > 1:
            raise InputError("delta must not exceed 1, got {}".format(self.delta))


class PenaltyFunction(object):
    '''
    Class represents L: beta at 0, rising to 1 + beta at eps, flat up to delta - eps,
    back down to beta at delta - eps/2 and flat beta up to 1
    '''
    def __init__(self, params):
        self.params = params
        eps, delta, beta = params.eps, params.delta, params.beta
        self.knots = (Fraction(0), eps, delta - eps, delta - eps / 2, Fraction(1))
        self.levels = (beta, 1 + beta, 1 + beta, beta, beta)
        self._xp = np.array([float(x) for x in self.knots])
        self._fp = np.array([float(y) for y in self.levels])

    @property
    def lipschitz(self):
        return float(2 / self.params.eps)

    def exact(self, x):
        x = _rational(x)
        if not 0 <= x <= 1:
            raise InputError("L is defined on [0, 1], got {}".format(x))
        for (x0, y0), (x1, y1) in zip(zip(self.knots, self.levels), zip(self.knots[1:], self.levels[1:])):
            if x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return self.levels[-1]

    def __call__(self, x):
        if isinstance(x, Fraction):
            return self.exact(x)
        return np.interp(x, self._xp, self._fp)


def penalty_function(params):
    return PenaltyFunction(params)


class Polynomial(object):
    '''
    Class represents p(x) = sum a_i x^i; rational coefficients evaluate exactly on rationals
    '''
    def __init__(self, coefficients):
        coefficients = tuple(coefficients)
        if not coefficients:
            raise InputError("a polynomial needs at least one coefficient")
        self._coefficients = coefficients

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_rational(self):
        return all(isinstance(a, (int, Fraction)) for a in self.coefficients)

    def exact(self, x):
        total = Fraction(0)
        for a in reversed(self.coefficients):
            total = total * x + a
        return total

    def __call__(self, x):
        if isinstance(x, Fraction):
            return self.exact(x)
        return np.polynomial.polynomial.polyval(x, [float(a) for a in self.coefficients])

    def __repr__(self):
        return "Polynomial({})".format([str(a) for a in self.coefficients])


class BernsteinPolynomial(Polynomial):
    '''
    Class represents sum_i L(i/D) C(D, i) x^i (1 - x)^(D - i). Floats are evaluated in
    the Bernstein basis; the monomial coefficients are expanded on first use.
    '''
    def __init__(self, values):
        self.values = tuple(values)
        if len(self.values) < 2:
            raise InputError("Bernstein degree must be at least 1")

    @property
    def degree(self):
        return len(self.values) - 1

    @property
    def is_rational(self):
        return all(isinstance(v, (int, Fraction)) for v in self.values)

    @cached_property
    def coefficients(self):
        D = self.degree
        coefficients = []
        for j in range(D + 1):
            a = sum(self.values[i] * binomial(D, i) * binomial(D - i, j - i) * (-1) ** (j - i)
                    for i in range(j + 1))
            coefficients.append(a)
        return tuple(coefficients)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return self.exact(x)
        x = np.asarray(x, dtype=float)
        weights = binom.pmf(np.arange(self.degree + 1)[:, None], self.degree, x.reshape(1, -1))
        return (np.array([float(v) for v in self.values]) @ weights).reshape(x.shape)


def bernstein_approx(L, D):
    '''
    Degree D Bernstein polynomial of L; values are kept rational whenever L returns rationals
    '''
    if D < 1:
        raise InputError("Bernstein degree must be at least 1, got {}".format(D))
    values = []
    for i in range(D + 1):
        v = L(Fraction(i, D))
        values.append(v if isinstance(v, (int, Fraction)) else float(v))
    return BernsteinPolynomial(values)


def sup_error(p, L, grid=GRID_POINTS, lipschitz=None):
    '''
    Grid maximum of |p - L| plus the slack 2 Lip(L) h / 2, an upper bound for the sup over [0, 1]
    when p is no steeper than L (true for Bernstein polynomials)
    '''
    xs = np.linspace(0., 1., grid)
    lipschitz = getattr(L, "lipschitz", 0.) if lipschitz is None else lipschitz
    return float(np.max(np.abs(p(xs) - L(xs))) + lipschitz / (grid - 1))


def find_bernstein_degree(L, tol, max_degree=2**14, grid=GRID_POINTS):
    '''
    Smallest power of two D with sup_error(bernstein_approx(L, D), L) <= tol
    '''
    D = 1
    while D <= max_degree:
        p = bernstein_approx(L, D)
        error = sup_error(p, L, grid=grid)
        logger.debug("Bernstein degree %d: sup error %.6g", D, error)
        if error <= tol:
            logger.info("Bernstein degree %d reaches sup error %.6g <= %s", D, error, tol)
            return D, p, error
        D *= 2
    raise InputError("no Bernstein degree up to {} reaches sup error {}".format(max_degree, tol))


@dataclass(frozen=True)
class PenaltyReport:
    nonneg: bool
    small: bool
    large: bool
    nonneg_margin: float
    small_margin: float
    large_margin: float

    @property
    def ok(self):
        return self.nonneg and self.small and self.large

    def as_dict(self):
        return {"nonneg": self.nonneg, "small": self.small, "large": self.large,
                "nonneg_margin": self.nonneg_margin, "small_margin": self.small_margin,
                "large_margin": self.large_margin, "ok": self.ok}


def check_penalty_properties(p, params, grid=GRID_POINTS, tol=PROPERTY_TOL):
    '''
    Margins of p >= 0 on [0, 1], p <= 2 beta on {0} and [delta - eps/2, 1], p >= 1 on [eps, delta - eps]
    '''
    eps, delta, beta = (float(x) for x in (params.eps, params.delta, params.beta))
    nonneg = float(np.min(p(np.linspace(0., 1., grid))))
    small_region = np.concatenate([[0.], np.linspace(delta - eps / 2, 1., grid)])
    small = 2 * beta - float(np.max(p(small_region)))
    large = float(np.min(p(np.linspace(eps, delta - eps, grid)))) - 1
    return PenaltyReport(nonneg >= -tol, small >= -tol, large >= -tol, nonneg, small, large)
