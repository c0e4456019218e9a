import logging
import math
from fractions import Fraction

import numpy as np

from src.config import Config
from src.errors import DomainError
from src.models.sides import Space
from src.models.volume import Method, VolumeResult
from src.services.spherical import build_report
from src.services.subsets import signed_sum_arrays

logger = logging.getLogger(__name__)


def _check_euclidean(r):
    if r.space is not Space.EUCLIDEAN:
        raise DomainError(f'expected Euclidean side-lengths, got {r.space.value}')


def euclidean_feasibility(r):
    """Closure condition r_i <= sum_{j != i} r_j; margin is perimeter - 2 max r_i"""
    _check_euclidean(r)
    values = np.asarray(r.values, dtype=np.float64)
    margins = r.perimeter - 2.0 * values
    masks = np.left_shift(1, np.arange(r.n, dtype=np.int64))
    return build_report(margins, masks, Config.BOUNDARY_TOL * max(1.0, r.perimeter))


def euclidean_closed_form(r):
    """Volume of the Euclidean polygon space, homogeneous of degree n-3.

    even n: -1/(4 (n-3)!) * sum_I (-1)^|I| |r_I - r_Ibar|^(n-3)
    odd n:  -1/(2 (n-3)!) * sum_{|I| odd} sign(r_I - r_Ibar) |r_I - r_Ibar|^(n-3)

    Empty inputs report 0 and negative round-off is clamped.
    """
    _check_euclidean(r)
    feasibility = euclidean_feasibility(r)
    n = r.n

    if feasibility.is_empty:
        return VolumeResult(value=0.0, method=Method.CLOSED_FORM, error_bound=0.0, feasibility=feasibility)
    if n == 3:
        # the moduli space is a point when nonempty
        return VolumeResult(value=1.0, method=Method.CLOSED_FORM, error_bound=0.0, feasibility=feasibility)

    table = signed_sum_arrays(r)
    power = n - 3
    if n % 2 == 0:
        terms = np.abs(table.delta) ** power
        total = math.fsum(np.where(table.cardinality % 2 == 0, terms, -terms))
        value = -total / (4 * math.factorial(power))
    else:
        delta = table.delta[table.odd]
        total = math.fsum(np.sign(delta) * np.abs(delta) ** power)
        value = -total / (2 * math.factorial(power))

    return VolumeResult(value=max(value, 0.0), method=Method.CLOSED_FORM, error_bound=0.0, feasibility=feasibility)


def regular_euclidean_volume(n):
    """Volume for n unit sides: -1/(2 (n-3)!) * sum_{k<=n/2} (-1)^k C(n,k) (n-2k)^(n-3)"""
    if not isinstance(n, int) or not 3 <= n <= Config.MAX_SIDES:
        raise DomainError(f'n must be an integer in [3, {Config.MAX_SIDES}], got {n}')
    total = sum((-1) ** k * math.comb(n, k) * (n - 2 * k) ** (n - 3) for k in range(n // 2 + 1))
    return float(Fraction(-total, 2 * math.factorial(n - 3)))


def scale(r, factor):
    """lambda * r for Euclidean sides; V(lambda r) = lambda^(n-3) V(r)"""
    _check_euclidean(r)
    if not factor > 0:
        raise DomainError(f'scale factor must be positive, got {factor}')
    return r.with_values([factor * v for v in r.values])
