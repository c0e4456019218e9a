"""Bernoulli numbers and polynomials in exact rational arithmetic.

B_n(x) = sum_k C(n, k) B_{n-k} x^k, where B_j = B_j(0) are the Bernoulli
numbers with B_1 = -1/2. Coefficients are exact ``Fraction``s; evaluation is
exact for ``Fraction`` arguments and in double precision otherwise (floats
and numpy arrays alike).
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np

from src.config import Config
from src.errors import DomainError

logger = logging.getLogger(__name__)


def bernoulli_numbers(max_degree):
    """B_0..B_max_degree from sum_{k<m} C(m+1, k) B_k = -(m+1) B_m"""
    numbers = [Fraction(1)]
    for m in range(1, max_degree + 1):
        s = sum(math.comb(m + 1, k) * numbers[k] for k in range(m))
        numbers.append(-s / (m + 1))
    return numbers


@dataclass(frozen=True)
class BernoulliTable:
    max_degree: int
    # coeffs[n][k] is the coefficient of x^k in B_n(x)
    coeffs: Tuple[Tuple[Fraction, ...], ...]
    float_coeffs: Tuple[Tuple[float, ...], ...] = field(repr=False, compare=False, default=())

    def numbers(self):
        return [c[0] for c in self.coeffs]


def build_table(max_degree):
    if not isinstance(max_degree, int) or not 0 <= max_degree <= Config.MAX_BERNOULLI_DEGREE:
        raise DomainError(
            f'Bernoulli degree must be an integer in [0, {Config.MAX_BERNOULLI_DEGREE}], got {max_degree}'
        )

    numbers = bernoulli_numbers(max_degree)
    coeffs = tuple(
        tuple(math.comb(n, k) * numbers[n - k] for k in range(n + 1))
        for n in range(max_degree + 1)
    )
    float_coeffs = tuple(tuple(float(c) for c in row) for row in coeffs)
    logger.debug(f'Built Bernoulli table up to degree {max_degree}')
    return BernoulliTable(max_degree=max_degree, coeffs=coeffs, float_coeffs=float_coeffs)


@lru_cache(maxsize=None)
def default_table():
    """Shared table at the degree cap; tables are immutable"""
    return build_table(Config.MAX_BERNOULLI_DEGREE)


def eval_poly(table, n, x, exact=None):
    """Horner evaluation of B_n at x.

    ``exact`` defaults to True for ``Fraction``/``int`` arguments. Exact mode
    with a float argument is refused rather than silently rounded.
    """
    if not 0 <= n <= table.max_degree:
        raise DomainError(f'degree {n} exceeds the table (max {table.max_degree})')

    if exact is None:
        exact = isinstance(x, (Fraction, int)) and not isinstance(x, bool)
    if exact:
        if not isinstance(x, (Fraction, int)):
            raise DomainError('exact evaluation needs a rational argument')
        coeffs = table.coeffs[n]
        x = Fraction(x)
        acc = Fraction(0)
    else:
        coeffs = table.float_coeffs[n]
        acc = 0.0

    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def frac(x):
    """Fractional part x - floor(x) in [0, 1); integers map to 0.

    Works for ``Fraction``s (exactly), floats and numpy arrays. A tiny
    negative float whose fractional part rounds up to 1.0 is folded to 0.
    """
    if isinstance(x, np.ndarray):
        result = x - np.floor(x)
        return np.where(result >= 1.0, 0.0, result)
    if isinstance(x, (Fraction, int)):
        return Fraction(x) - math.floor(x)
    if not math.isfinite(x):
        raise DomainError(f'fractional part of a non-finite value: {x}')
    result = x - math.floor(x)
    return 0.0 if result >= 1.0 else result
