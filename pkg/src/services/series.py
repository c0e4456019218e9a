"""Truncated trigonometric product series with rigorous tail bounds.

    S = sum_{k>=1} prod_j sin(k theta_j) / k^s,    s >= 2

Expanding the product gives 2^-m sum_I c_I exp(i k delta_I) with |c_I| = 1,
where delta_I are the signed subset sums of the angles. For each frequency
the tail past K is bounded by

    min((K+1)^-s / |sin(delta/2)|, K^(1-s) / (s-1))

(summation by parts and the integral test). Frequencies within
Config.RESONANCE_TOL of a multiple of 2 pi do not oscillate; their tail is
added exactly through the Hurwitz zeta function and only the deviation from
exact resonance enters the bound.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta

from src.config import Config
from src.errors import DomainError, ToleranceError
from src.services.bernoulli import frac
from src.services.subsets import signed_sum_arrays
from src.services.summation import KahanSum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesResult:
    value: float
    error_bound: float
    terms: int


def integral_tail_bound(exponent, K):
    """sum_{k>K} k^-s <= K^(1-s) / (s-1)"""
    return K ** (1 - exponent) / (exponent - 1)


class TrigProductSeries:

    def __init__(self, angles, exponent):
        if exponent < 2:
            raise DomainError(f'series exponent must be at least 2 for a rigorous tail, got {exponent}')
        self.angles = np.asarray([float(a) for a in angles], dtype=np.float64)
        self.exponent = exponent

        m = len(self.angles)
        table = signed_sum_arrays(self.angles)
        phase = math.tau * frac(table.delta / math.tau)
        distance = np.minimum(phase, math.tau - phase)
        resonant = distance <= Config.RESONANCE_TOL

        self.weight = 2.0 ** -m
        self._sin_half = np.sin(distance[~resonant] / 2.0)
        near = distance[resonant]
        self._near_resonant = near[near > 0.0]

        # Real part of the constant (k-independent) coefficient; zero for odd m
        # because resonant frequencies pair up with opposite coefficients.
        if m % 2 == 0 and resonant.any():
            signs = (-1) ** (m // 2) * np.where((m - table.cardinality[resonant]) % 2 == 0, 1, -1)
            self.resonant_coefficient = self.weight * float(signs.sum())
        else:
            self.resonant_coefficient = 0.0

        logger.debug(
            f'Series over {m} angles, s={exponent}: {int(resonant.sum())} resonant of {len(distance)} frequencies'
        )

    def tail_bound(self, K):
        s = self.exponent
        integral = integral_tail_bound(s, K)
        oscillating = np.minimum((K + 1.0) ** -s / self._sin_half, integral).sum()

        # |exp(ikd) - 1| <= min(kd, 2) summed against k^-2
        d = self._near_resonant
        dK = d * K
        drift = np.where(
            dK < 2.0,
            d * (np.log(2.0 / np.maximum(dK, 1e-300)) + 2.0),
            2.0 * integral
        ).sum()
        return self.weight * float(oscillating + drift)

    def truncation(self, tol):
        """Smallest K whose tail bound is within tol"""
        if tol <= 0:
            raise DomainError(f'tolerance must be positive, got {tol}')
        cap = Config.MAX_SERIES_TERMS
        if self.tail_bound(cap) > tol:
            raise ToleranceError(
                f'tolerance {tol:g} needs more than {cap} series terms; loosen it or use the closed form'
            )

        lo, hi = 0, 1
        while self.tail_bound(hi) > tol:
            lo, hi = hi, min(2 * hi, cap)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.tail_bound(mid) <= tol:
                hi = mid
            else:
                lo = mid
        return hi

    def partial_sum(self, K):
        """sum_{k=1}^{K} in ascending blocks, compensated"""
        acc = KahanSum()
        chunk = Config.SERIES_CHUNK
        s = self.exponent
        for start in range(1, K + 1, chunk):
            k = np.arange(start, min(start + chunk, K + 1), dtype=np.float64)
            terms = np.ones_like(k)
            for a in self.angles:
                terms *= np.sin(k * a)
            terms /= k ** s
            acc.add_block(terms)
        return acc

    def evaluate(self, tol):
        K = self.truncation(tol)
        acc = self.partial_sum(K)
        if self.resonant_coefficient:
            acc.add(self.resonant_coefficient * float(zeta(self.exponent, K + 1)))
        bound = self.tail_bound(K)
        logger.debug(f'Series truncated at K={K} with tail bound {bound:.3e}')
        return SeriesResult(value=acc.value, error_bound=bound, terms=K)
