"""Most flexible polygon at fixed perimeter.

Averaging iteration toward the regular polygon, the derivative of the
volume along one averaging segment, and the volume V_n(x) of the regular
spherical n-gon with side x together with V_n'(x).
"""
import logging
import math

import numpy as np

from src.config import Config
from src.errors import DomainError
from src.models.sides import SideLengths
from src.models.trace import OptimizerTrace
from src.services.series import TrigProductSeries
from src.services.spherical import spherical_closed_form, witten_series

logger = logging.getLogger(__name__)


def averaging_step(x):
    """Replace the lowest-index min and max coordinates by their mean"""
    x = [float(v) for v in x]
    if len(x) < 3:
        raise DomainError(f'a polygon needs at least 3 sides, got {len(x)}')
    lo = x.index(min(x))
    hi = x.index(max(x))
    if x[lo] == x[hi]:
        return tuple(x)
    mean = (x[lo] + x[hi]) / 2.0
    x[lo] = x[hi] = mean
    return tuple(x)


def spread(x):
    return max(x) - min(x)


def random_start(n, perimeter, seed=None):
    """Random point of {sum x_i = P, 0 < x_i < pi}, drawn uniformly then pulled toward P/n if needed"""
    if not 0 < perimeter < n * math.pi:
        raise DomainError(f'perimeter must lie in (0, {n}*pi), got {perimeter}')
    rng = np.random.default_rng(Config.DEFAULT_SEED if seed is None else seed)
    regular = perimeter / n
    x = perimeter * rng.dirichlet(np.ones(n))
    if x.max() >= math.pi:
        shrink = 0.99 * (math.pi - regular) / (x.max() - regular)
        x = regular + shrink * (x - regular)
    x *= perimeter / math.fsum(x)
    return tuple(float(v) for v in x)


def _spherical_volume(x):
    return spherical_closed_form(SideLengths.spherical(x)).value


def maximize_flexibility(n, perimeter, start=None, tol=None, max_iterations=None, seed=None):
    """Run the averaging iteration from ``start`` until max - min <= tol.

    Volumes along the trace use the closed form. Returns an OptimizerTrace
    whose limit approximates the regular polygon (P/n, ..., P/n).
    """
    tol = Config.OPTIMIZER_TOL if tol is None else tol
    max_iterations = Config.OPTIMIZER_MAX_ITER if max_iterations is None else max_iterations
    if not isinstance(n, int) or n < 3:
        raise DomainError(f'n must be an integer >= 3, got {n}')
    if not 0 < perimeter < n * math.pi:
        raise DomainError(f'perimeter must lie in (0, {n}*pi), got {perimeter}')
    if tol <= 0:
        raise DomainError(f'tolerance must be positive, got {tol}')

    if start is None:
        start = random_start(n, perimeter, seed)
    x = SideLengths.spherical(start).values
    if len(x) != n:
        raise DomainError(f'start has {len(x)} sides, expected {n}')
    if abs(math.fsum(x) - perimeter) > 1e-9 * max(1.0, perimeter):
        raise DomainError(f'start has perimeter {math.fsum(x)}, expected {perimeter}')

    iterates = [x]
    volumes = [_spherical_volume(x)]
    while spread(x) > tol and len(iterates) <= max_iterations:
        x = averaging_step(x)
        iterates.append(x)
        volumes.append(_spherical_volume(x))
        if volumes[-1] < volumes[-2] - 1e-9:
            logger.warning(f'Volume decreased at step {len(iterates) - 1}: {volumes[-2]} -> {volumes[-1]}')

    iterations = len(iterates) - 1
    converged = spread(x) <= tol
    if converged:
        logger.info(f'Averaging converged in {iterations} steps, volume {volumes[-1]:.12g}')
    else:
        logger.warning(f'Averaging stopped after {iterations} steps with spread {spread(x):.3e}')

    return OptimizerTrace(
        iterates=tuple(iterates),
        volumes=tuple(volumes),
        perimeter=perimeter,
        converged=converged,
        iterations=iterations
    )


def segment_point(q, t):
    """l(t): max side lowered and min side raised by t (x_M - x_m) / 2"""
    x = list(q.base)
    shift = t * q.spread / 2.0
    x[q.max_index] -= shift
    x[q.min_index] += shift
    return tuple(x)


def segment_value(q, t):
    """f(l(t)) = sum_k prod sin(k l_i(t)) / k^(n-2), by closed form"""
    n = len(q.base)
    return _spherical_volume(segment_point(q, t)) * math.pi / 2.0 ** (n - 1)


def _central_difference(f, x, h):
    return (f(x + h) - f(x - h)) / (2.0 * h)


def segment_derivative(q, tol):
    """f'(t) = (x_M - x_m)/2 * sum_k sin(k (x_M - x_m)(1 - t)) prod_{i != m, M} sin(k x_i) / k^(n-3)"""
    n = len(q.base)
    if n < 4:
        raise DomainError(f'segment derivative needs n >= 4, got {n}')
    d = q.spread
    if d == 0:
        return 0.0

    if n == 4:
        # exponent n-3 = 1: differentiate the closed form instead
        lo = max(q.t - Config.FD_STEP, 0.0)
        hi = min(q.t + Config.FD_STEP, 1.0)
        return (segment_value(q, hi) - segment_value(q, lo)) / (hi - lo)

    angles = [d * (1.0 - q.t)] + q.others()
    series = TrigProductSeries(angles, exponent=n - 3)
    return d / 2.0 * series.evaluate(tol / (d / 2.0)).value


def _check_regular(n, x):
    if not isinstance(n, int) or not 4 <= n <= Config.MAX_SIDES:
        raise DomainError(f'n must be an integer in [4, {Config.MAX_SIDES}], got {n}')
    if not 0 < x < math.pi:
        raise DomainError(f'regular side must lie in (0, pi), got {x}')


def regular_volume(n, x, tol):
    """V_n(x) = 2^(n-1)/pi * sum_k (sin kx)^n / k^(n-2)"""
    _check_regular(n, x)
    return witten_series(SideLengths.spherical([x] * n), tol).value


def regular_closed_form(n, x):
    return _spherical_volume([x] * n)


def regular_volume_derivative(n, x, tol):
    """V_n'(x) = 2^(n-2) n/pi * sum_k (sin kx)^(n-2) sin 2kx / k^(n-3)"""
    _check_regular(n, x)
    if n == 4:
        h = min(Config.FD_STEP, x / 2.0, (math.pi - x) / 2.0)
        return _central_difference(lambda v: regular_closed_form(n, v), x, h)

    prefactor = 2.0 ** (n - 2) * n / math.pi
    series = TrigProductSeries([x] * (n - 2) + [2.0 * x], exponent=n - 3)
    return prefactor * series.evaluate(tol / prefactor).value
