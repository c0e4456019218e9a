import math
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from src.config import Config
from src.errors import DomainError


class Space(str, Enum):
    SPHERICAL = 'spherical'
    EUCLIDEAN = 'euclidean'


def _validation_message(error):
    """First pydantic error message without the 'Value error, ' prefix"""
    message = error.errors()[0]['msg']
    return message.removeprefix('Value error, ')


class SideLengths(BaseModel):
    """Side-lengths r = (r_1, ..., r_n) of a polygon in S^3 or E^3.

    Spherical sides are radians in (0, pi). When every side is a rational
    multiple of pi the multipliers are kept in ``pi_multiples`` so the closed
    form can be evaluated exactly.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: Space
    values: Tuple[float, ...]
    pi_multiples: Optional[Tuple[Fraction, ...]] = None

    @model_validator(mode='after')
    def check_domain(self):
        n = len(self.values)
        if n < 3:
            raise ValueError(f'a polygon needs at least 3 sides, got {n}')
        if n > Config.MAX_SIDES:
            raise ValueError(f'at most {Config.MAX_SIDES} sides are supported, got {n}')
        for i, r in enumerate(self.values, start=1):
            if not math.isfinite(r):
                raise ValueError(f'side {i} is not finite: {r}')
            if r <= 0:
                raise ValueError(f'side {i} must be positive, got {r}')
            if self.space is Space.SPHERICAL and r >= math.pi:
                raise ValueError(f'spherical side {i} must be below pi, got {r}')

        if self.pi_multiples is not None:
            if self.space is not Space.SPHERICAL:
                raise ValueError('pi multiples are only meaningful for spherical sides')
            if len(self.pi_multiples) != n:
                raise ValueError('pi multiples and side values differ in length')
            for i, p in enumerate(self.pi_multiples, start=1):
                if not 0 < p < 1:
                    raise ValueError(f'spherical side {i} must lie in (0, pi), got {p}*pi')
        return self

    @classmethod
    def _build(cls, **fields):
        try:
            return cls(**fields)
        except ValidationError as e:
            raise DomainError(_validation_message(e)) from e

    @classmethod
    def spherical(cls, values):
        return cls._build(space=Space.SPHERICAL, values=tuple(float(v) for v in values))

    @classmethod
    def euclidean(cls, values):
        return cls._build(space=Space.EUCLIDEAN, values=tuple(float(v) for v in values))

    @classmethod
    def from_pi_multiples(cls, multiples):
        """Spherical sides r_i = p_i * pi with rational p_i"""
        fractions = tuple(Fraction(p) for p in multiples)
        values = tuple(float(p) * math.pi for p in fractions)
        return cls._build(space=Space.SPHERICAL, values=values, pi_multiples=fractions)

    @property
    def n(self):
        return len(self.values)

    @property
    def perimeter(self):
        return math.fsum(self.values)

    @property
    def is_exact(self):
        return self.pi_multiples is not None

    def with_values(self, values):
        """Same space, new side values (exact multipliers are dropped)"""
        return self._build(space=self.space, values=tuple(float(v) for v in values))

    def to_dict(self):
        data = {
            'space': self.space.value,
            'n': self.n,
            'sides': list(self.values)
        }
        if self.pi_multiples is not None:
            data['pi_multiples'] = [str(p) for p in self.pi_multiples]
        return data
