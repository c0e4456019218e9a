"""Signed subset sums r_I - r_Ibar over subsets I of {1, ..., n}.

Subsets are visited in reflected Gray-code order, so each step flips one
index and the signed sum moves by +-2 r_i. Masks use bit i-1 for index i.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from src.config import Config
from src.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedSum:
    mask: int
    cardinality: int
    delta: object  # float, or Fraction for exact inputs

    @property
    def parity(self):
        return self.cardinality % 2

    def members(self):
        """1-based indices in I"""
        return mask_members(self.mask)


@dataclass(frozen=True)
class SignedSumArrays:
    """All 2^n signed sums as parallel numpy arrays, in Gray order"""
    masks: np.ndarray
    cardinality: np.ndarray
    delta: np.ndarray

    def __len__(self):
        return len(self.delta)

    @property
    def odd(self):
        return self.cardinality % 2 == 1


def _values(r):
    values = list(getattr(r, 'values', r))
    n = len(values)
    if not 1 <= n <= Config.MAX_SIDES:
        raise DomainError(f'subset enumeration needs 1 <= n <= {Config.MAX_SIDES}, got {n}')
    return values


def _is_exact(values):
    return all(isinstance(v, (Fraction, int)) for v in values)


def _direct_delta(values, mask, exact):
    inside = [v for i, v in enumerate(values) if mask >> i & 1]
    outside = [v for i, v in enumerate(values) if not mask >> i & 1]
    if exact:
        return sum(inside, Fraction(0)) - sum(outside, Fraction(0))
    return math.fsum(inside) - math.fsum(outside)


def all_signed_sums(r) -> Iterator[SignedSum]:
    """Stream the 2^n signed sums of ``r`` (a SideLengths or a plain sequence).

    Fractions stay exact. For floats the running sum is rebuilt from scratch
    every Config.DRIFT_RESET steps to bound accumulated rounding.
    """
    values = _values(r)
    exact = _is_exact(values)
    if exact:
        values = [Fraction(v) for v in values]
    n = len(values)

    mask = 0
    cardinality = 0
    delta = _direct_delta(values, 0, exact)
    yield SignedSum(mask=mask, cardinality=cardinality, delta=delta)

    for step in range(1, 1 << n):
        bit = (step & -step).bit_length() - 1
        mask ^= 1 << bit
        if mask >> bit & 1:
            cardinality += 1
            delta += 2 * values[bit]
        else:
            cardinality -= 1
            delta -= 2 * values[bit]
        if not exact and step % Config.DRIFT_RESET == 0:
            delta = _direct_delta(values, mask, exact)
        yield SignedSum(mask=mask, cardinality=cardinality, delta=delta)


def odd_signed_sums(r) -> Iterator[SignedSum]:
    """The 2^(n-1) signed sums with |I| odd, in the same order as all_signed_sums"""
    return (s for s in all_signed_sums(r) if s.cardinality % 2 == 1)


def signed_sum_arrays(r):
    """Vectorized table of all signed sums, same order as all_signed_sums.

    Built by reflection: the table for indices < j is followed by its reverse
    with index j added, so each delta is at most n additions away from -r_total.
    """
    values = np.asarray([float(v) for v in _values(r)], dtype=np.float64)

    masks = np.zeros(1, dtype=np.int64)
    cardinality = np.zeros(1, dtype=np.int64)
    delta = np.array([-math.fsum(values)])
    for j, v in enumerate(values):
        masks = np.concatenate((masks, masks[::-1] | (1 << j)))
        cardinality = np.concatenate((cardinality, cardinality[::-1] + 1))
        delta = np.concatenate((delta, delta[::-1] + 2.0 * v))

    table = SignedSumArrays(masks=masks, cardinality=cardinality, delta=delta)
    logger.debug(f'Signed-sum table for n={len(values)}: {len(table)} subsets')
    return table


def mask_members(mask):
    """1-based indices of a subset mask"""
    mask = int(mask)
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)
