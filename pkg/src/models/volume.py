from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Verdict(str, Enum):
    INTERIOR = 'interior'
    BOUNDARY = 'boundary'
    EMPTY = 'empty'


class Method(str, Enum):
    SERIES = 'series'
    CLOSED_FORM = 'closed'
    EXACT_CLOSED_FORM = 'exact'


class FeasibilityReport(BaseModel):
    """Verdict on the nonemptiness inequalities.

    ``margin`` is the smallest slack over the inequalities (negative when one
    is violated); ``witnesses`` are 1-based index sets of the violated
    inequalities for an empty moduli space, the tight ones on the boundary,
    and the minimizing ones otherwise.
    """

    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    witnesses: Tuple[Tuple[int, ...], ...] = ()
    margin: float

    @property
    def is_empty(self):
        return self.verdict is Verdict.EMPTY

    def to_dict(self):
        return {
            'verdict': self.verdict.value,
            'witnesses': [list(w) for w in self.witnesses],
            'margin': self.margin
        }


class VolumeResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: float
    method: Method
    error_bound: float = Field(ge=0.0)
    feasibility: FeasibilityReport
    # value == exact_value * pi**pi_power in exact mode
    exact_value: Optional[Fraction] = None
    pi_power: int = 0
    terms: Optional[int] = None
    # subsets I where (r_I - r_Ibar)/2pi is an integer
    integral_subsets: Tuple[Tuple[int, ...], ...] = ()

    def exact_string(self):
        if self.exact_value is None:
            return None
        return f'{self.exact_value} * pi^{self.pi_power}'

    def to_dict(self):
        data = {
            'method': self.method.value,
            'value': self.value,
            'error_bound': self.error_bound,
            'feasibility': self.feasibility.to_dict()
        }
        if self.exact_value is not None:
            data['exact'] = self.exact_string()
        if self.terms is not None:
            data['terms'] = self.terms
        if self.integral_subsets:
            data['integral_subsets'] = [list(s) for s in self.integral_subsets]
        return data
