import logging
import math
from fractions import Fraction

import numpy as np

from src.config import Config
from src.errors import DomainError, ExactModeError
from src.models.sides import SideLengths, Space
from src.models.volume import FeasibilityReport, Method, Verdict, VolumeResult
from src.services.bernoulli import default_table, eval_poly, frac
from src.services.series import TrigProductSeries
from src.services.subsets import all_signed_sums, mask_members, odd_signed_sums, signed_sum_arrays

logger = logging.getLogger(__name__)


def _check_spherical(r):
    if r.space is not Space.SPHERICAL:
        raise DomainError(f'expected spherical side-lengths, got {r.space.value}')


def build_report(margins, masks, tol):
    """FeasibilityReport from per-inequality slacks.

    Empty lists the violated inequalities (most violated first), Boundary the
    tight ones, Interior the ones attaining the minimum slack.
    """
    margins = np.asarray(margins, dtype=np.float64)
    min_margin = float(margins.min())

    if min_margin < -tol:
        verdict = Verdict.EMPTY
        picked = np.flatnonzero(margins < -tol)
        picked = picked[np.argsort(margins[picked], kind='stable')]
        margin = min_margin
    elif min_margin <= tol:
        verdict = Verdict.BOUNDARY
        picked = np.flatnonzero(np.abs(margins) <= tol)
        margin = 0.0
    else:
        verdict = Verdict.INTERIOR
        picked = np.flatnonzero(margins <= min_margin + tol)
        margin = min_margin

    if len(picked) > Config.MAX_WITNESSES:
        logger.warning(f'{len(picked)} witnesses for a {verdict.value} verdict, keeping {Config.MAX_WITNESSES}')
        picked = picked[:Config.MAX_WITNESSES]

    witnesses = tuple(mask_members(masks[i]) for i in picked)
    return FeasibilityReport(verdict=verdict, witnesses=witnesses, margin=margin)


def _exact_feasibility(r):
    """Same inequalities with sides as exact multiples of pi"""
    slack = [
        (Fraction(s.cardinality - 1) - s.delta, s.mask)
        for s in odd_signed_sums(r.pi_multiples)
    ]
    min_slack = min(m for m, _ in slack)
    if min_slack < 0:
        verdict = Verdict.EMPTY
        picked = sorted((m, mask) for m, mask in slack if m < 0)
    elif min_slack == 0:
        verdict = Verdict.BOUNDARY
        picked = [(m, mask) for m, mask in slack if m == 0]
    else:
        verdict = Verdict.INTERIOR
        picked = [(m, mask) for m, mask in slack if m == min_slack]
    picked = picked[:Config.MAX_WITNESSES]
    return FeasibilityReport(
        verdict=verdict,
        witnesses=tuple(mask_members(mask) for _, mask in picked),
        margin=float(min_slack) * math.pi
    )


def spherical_feasibility(r, table=None):
    """Nonemptiness: r_I <= r_Ibar + (|I| - 1) pi for every odd |I|

    ``table`` is an already built signed_sum_arrays(r), if any.
    """
    _check_spherical(r)
    if r.is_exact:
        report = _exact_feasibility(r)
    else:
        table = signed_sum_arrays(r) if table is None else table
        odd = table.odd
        margins = (table.cardinality[odd] - 1) * math.pi - table.delta[odd]
        tol = Config.BOUNDARY_TOL * max(1.0, r.perimeter)
        report = build_report(margins, table.masks[odd], tol)

    if report.verdict is Verdict.BOUNDARY:
        logger.warning(f'Side-lengths {list(r.values)} sit on the boundary of the feasible polytope')
    return report


def complement_sides(r):
    """(pi - r_1, ..., pi - r_n)"""
    _check_spherical(r)
    if r.is_exact:
        return SideLengths.from_pi_multiples([1 - p for p in r.pi_multiples])
    return SideLengths.spherical([math.pi - v for v in r.values])


def trig_series(r, tol):
    """sum_k sin(k r_1)...sin(k r_n) / k^(n-2), truncated within tol"""
    _check_spherical(r)
    if r.n == 3:
        raise DomainError('the series for n=3 is only conditionally convergent; use the closed form')
    return TrigProductSeries(r.values, exponent=r.n - 2).evaluate(tol)


def trig_sum(r, tol):
    return trig_series(r, tol).value


def witten_series(r, tol):
    """V(r) = 2^(n-1)/pi * sum_k sin(k r_1)...sin(k r_n) / k^(n-2)"""
    _check_spherical(r)
    if tol <= 0:
        raise DomainError(f'tolerance must be positive, got {tol}')
    prefactor = 2.0 ** (r.n - 1) / math.pi
    result = trig_series(r, tol / prefactor)
    return VolumeResult(
        value=prefactor * result.value,
        method=Method.SERIES,
        error_bound=prefactor * result.error_bound,
        feasibility=spherical_feasibility(r),
        terms=result.terms
    )


def _with_integral_hits(report, hits, degree):
    """Degree-1 closed form jumps where (r_I - r_Ibar)/2pi is an integer"""
    if not hits or degree != 1 or report.verdict is not Verdict.INTERIOR:
        return report
    logger.warning(f'Closed form evaluated at a jump of the fractional part for subsets {hits}')
    return FeasibilityReport(verdict=Verdict.BOUNDARY, witnesses=hits, margin=0.0)


def _cap_hits(hits):
    if len(hits) > Config.MAX_WITNESSES:
        logger.debug(f'{len(hits)} subsets with integral (r_I - r_Ibar)/2pi, keeping {Config.MAX_WITNESSES}')
    return tuple(hits[:Config.MAX_WITNESSES])


def _exact_closed_form(r, degree):
    n = r.n
    table = default_table()
    even = n % 2 == 0
    subsets = all_signed_sums(r.pi_multiples) if even else odd_signed_sums(r.pi_multiples)

    total = Fraction(0)
    hits = []
    for s in subsets:
        # deltas are in units of pi, so delta/2 is (r_I - r_Ibar)/2pi
        y = frac(s.delta / 2)
        if y == 0:
            hits.append(s.members())
        b = eval_poly(table, degree, y)
        total += -b if even and s.parity else b

    scale = Fraction(2 ** (n - 3), math.factorial(n - 2))
    coefficient = scale * total / 2 if even else scale * total
    return coefficient, hits


def spherical_closed_form(r, exact=False):
    """Volume through Bernoulli polynomials of degree n-2.

    even n: (2pi)^(n-3) / (2 (n-2)!) * sum_I (-1)^|I| B_{n-2}({(r_I - r_Ibar)/2pi})
    odd n:  (2pi)^(n-3) / (n-2)!     * sum_{|I| odd}  B_{n-2}({(r_I - r_Ibar)/2pi})

    The volume vanishes off the polytope, so Empty inputs report 0, and
    round-off below zero is clamped.
    """
    _check_spherical(r)
    n = r.n
    degree = n - 2

    if exact:
        if not r.is_exact:
            raise ExactModeError('exact mode needs every side as a rational multiple of pi')
        feasibility = spherical_feasibility(r)
        coefficient, hits = _exact_closed_form(r, degree)
        if feasibility.is_empty:
            coefficient = Fraction(0)
        hits = _cap_hits(hits)
        return VolumeResult(
            value=float(coefficient) * math.pi ** (n - 3),
            method=Method.EXACT_CLOSED_FORM,
            error_bound=0.0,
            feasibility=_with_integral_hits(feasibility, hits, degree),
            exact_value=coefficient,
            pi_power=n - 3,
            integral_subsets=hits
        )

    table = signed_sum_arrays(r)
    feasibility = spherical_feasibility(r, table)
    y = frac(table.delta / math.tau)
    if n % 2 == 0:
        candidates = np.ones(len(table), dtype=bool)
        prefactor = math.tau ** (n - 3) / (2 * math.factorial(n - 2))
    else:
        candidates = table.odd
        prefactor = math.tau ** (n - 3) / math.factorial(n - 2)
    hits = _cap_hits([mask_members(mask) for mask in table.masks[candidates & (y == 0.0)]])

    if feasibility.is_empty:
        value = 0.0
    else:
        b = eval_poly(default_table(), degree, y[candidates])
        if n % 2 == 0:
            b = np.where(table.cardinality % 2 == 0, b, -b)
        value = max(prefactor * math.fsum(b), 0.0)

    return VolumeResult(
        value=value,
        method=Method.CLOSED_FORM,
        error_bound=0.0,
        feasibility=_with_integral_hits(feasibility, hits, degree),
        pi_power=n - 3,
        integral_subsets=hits
    )
