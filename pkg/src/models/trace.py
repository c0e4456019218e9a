from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class OptimizerTrace(BaseModel):
    """Iterates of the averaging iteration with their spherical volumes"""

    model_config = ConfigDict(frozen=True)

    iterates: Tuple[Tuple[float, ...], ...]
    volumes: Tuple[float, ...]
    perimeter: float
    converged: bool
    iterations: int

    @property
    def n(self):
        return len(self.iterates[0])

    @property
    def limit(self):
        return self.iterates[-1]

    @property
    def volume_at_limit(self):
        return self.volumes[-1]

    def header(self):
        return ['iter'] + [f'x_{i}' for i in range(1, self.n + 1)] + ['volume']

    def rows(self):
        for k, (x, volume) in enumerate(zip(self.iterates, self.volumes)):
            yield [k, *x, volume]

    def to_dict(self):
        return {
            'limit': list(self.limit),
            'volume_at_limit': self.volume_at_limit,
            'perimeter': self.perimeter,
            'iterations': self.iterations,
            'converged': self.converged
        }


class SegmentQuery(BaseModel):
    """Point t on the segment l(t) that moves the max and min sides of ``base`` toward their mean"""

    model_config = ConfigDict(frozen=True)

    base: Tuple[float, ...]
    t: float = Field(ge=0.0, le=1.0)
    max_index: int
    min_index: int

    @model_validator(mode='after')
    def check_indices(self):
        n = len(self.base)
        if not (0 <= self.max_index < n and 0 <= self.min_index < n):
            raise ValueError('segment indices out of range')
        if self.base[self.max_index] != max(self.base):
            raise ValueError('max_index does not point at a largest side')
        if self.base[self.min_index] != min(self.base):
            raise ValueError('min_index does not point at a smallest side')
        if self.max_index == self.min_index and max(self.base) != min(self.base):
            raise ValueError('max and min sides must differ for a non-constant base')
        return self

    @classmethod
    def at(cls, base, t):
        """Query with the lowest-index max and min, the tie-break of the averaging step"""
        base = tuple(float(v) for v in base)
        return cls(
            base=base,
            t=t,
            max_index=base.index(max(base)),
            min_index=base.index(min(base))
        )

    @property
    def spread(self):
        return self.base[self.max_index] - self.base[self.min_index]

    def others(self):
        """Sides that stay fixed along the segment"""
        return [v for i, v in enumerate(self.base) if i not in (self.max_index, self.min_index)]
