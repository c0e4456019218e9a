import math
from fractions import Fraction

import numpy as np
import pytest

from src.errors import DomainError, ExactModeError
from src.models.sides import SideLengths
from src.models.volume import Method, Verdict
from src.services.spherical import (
    complement_sides,
    spherical_closed_form,
    spherical_feasibility,
    trig_sum,
    witten_series,
)
from src.services.subsets import signed_sum_arrays

RIGHT_ANGLES = SideLengths.spherical([math.pi / 2] * 4)
DEGENERATE = SideLengths.spherical([0.1, 0.1, 0.1, 2.9])


class TestFeasibility:

    def test_right_angles_are_interior(self):
        report = spherical_feasibility(RIGHT_ANGLES)
        assert report.verdict is Verdict.INTERIOR
        assert report.margin == pytest.approx(math.pi)

    def test_long_side_is_empty(self):
        report = spherical_feasibility(DEGENERATE)
        assert report.verdict is Verdict.EMPTY
        assert report.witnesses == ((4,),)
        assert report.margin == pytest.approx(-2.6)

    def test_flat_triangle_is_boundary(self, caplog):
        report = spherical_feasibility(SideLengths.spherical([1, 1, 2]))
        assert report.verdict is Verdict.BOUNDARY
        assert report.witnesses == ((3,),)
        assert report.margin == 0.0
        assert 'boundary' in caplog.text

    def test_exact_boundary(self):
        r = SideLengths.from_pi_multiples([Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)])
        report = spherical_feasibility(r)
        assert report.verdict is Verdict.BOUNDARY
        assert report.witnesses == ((3,),)

    def test_to_dict(self):
        assert spherical_feasibility(DEGENERATE).to_dict() == {
            'verdict': 'empty',
            'witnesses': [[4]],
            'margin': pytest.approx(-2.6)
        }

    def test_euclidean_input_is_refused(self):
        with pytest.raises(DomainError):
            spherical_feasibility(SideLengths.euclidean([1, 1, 1]))


class TestSideLengths:

    @pytest.mark.parametrize('values', [
        [1.0, 1.0],
        [1.0, 1.0, math.pi],
        [1.0, 1.0, 0.0],
        [1.0, 1.0, float('nan')],
        [0.5] * 25,
    ])
    def test_domain(self, values):
        with pytest.raises(DomainError):
            SideLengths.spherical(values)

    def test_pi_multiples_must_be_inside(self):
        with pytest.raises(DomainError):
            SideLengths.from_pi_multiples([Fraction(1, 2), Fraction(1, 2), Fraction(1)])

    def test_message_has_no_pydantic_prefix(self):
        with pytest.raises(DomainError) as excinfo:
            SideLengths.spherical([1.0, 1.0, 4.0])
        assert str(excinfo.value).startswith('spherical side 3')


class TestSeries:

    def test_right_angles(self):
        result = witten_series(RIGHT_ANGLES, 1e-9)
        assert result.method is Method.SERIES
        assert result.error_bound <= 1e-9
        assert result.value == pytest.approx(math.pi, abs=1e-9)
        assert trig_sum(RIGHT_ANGLES, 1e-10) == pytest.approx(math.pi ** 2 / 8, abs=1e-10)

    def test_empty_space_has_zero_volume(self):
        result = witten_series(DEGENERATE, 1e-8)
        assert result.feasibility.is_empty
        assert abs(result.value) <= result.error_bound + 1e-12

    def test_triangle_is_refused(self):
        with pytest.raises(DomainError, match='closed form'):
            witten_series(SideLengths.spherical([1, 1, 1]), 1e-8)

    def test_non_positive_tolerance(self):
        with pytest.raises(DomainError):
            witten_series(RIGHT_ANGLES, -1.0)

    def test_raw_sum_is_positive_inside(self, random_spherical):
        for _ in range(5):
            assert trig_sum(random_spherical(5), 1e-10) > 0

    def test_raw_sum_vanishes_outside(self, random_spherical):
        r = random_spherical(5, verdict=Verdict.EMPTY)
        assert abs(trig_sum(r, 1e-10)) <= 1e-10 + 1e-13


class TestClosedForm:

    def test_triangle_of_right_angles(self):
        result = spherical_closed_form(SideLengths.spherical([math.pi / 2] * 3))
        assert result.value == pytest.approx(1.0, abs=1e-12)
        assert result.error_bound == 0.0

    def test_right_angles(self):
        result = spherical_closed_form(RIGHT_ANGLES)
        assert result.method is Method.CLOSED_FORM
        assert result.value == pytest.approx(math.pi, abs=1e-12)

    def test_empty_space(self):
        assert abs(spherical_closed_form(DEGENERATE).value) <= 1e-10

    @pytest.mark.parametrize('values, expected', [
        ([1.0, 1.0, 1.0], 1.0),
        ([2.0, 2.0, 2.0], 1.0),
        ([2.5, 2.5, 2.5], 0.0),
        ([0.1, 0.1, 2.9], 0.0),
        ([0.3, 2.0, 2.9], 0.0),
    ])
    def test_triangles(self, values, expected):
        assert spherical_closed_form(SideLengths.spherical(values)).value == pytest.approx(expected, abs=1e-12)

    def test_exact_right_angles(self):
        result = spherical_closed_form(SideLengths.from_pi_multiples([Fraction(1, 2)] * 4), exact=True)
        assert result.method is Method.EXACT_CLOSED_FORM
        assert result.exact_value == 1
        assert result.pi_power == 1
        assert result.exact_string() == '1 * pi^1'
        assert result.value == pytest.approx(math.pi)

    def test_exact_triangle(self):
        result = spherical_closed_form(SideLengths.from_pi_multiples([Fraction(1, 2)] * 3), exact=True)
        assert result.exact_value == 1
        assert result.pi_power == 0

    def test_exact_matches_float(self):
        multiples = [Fraction(1, 3), Fraction(2, 5), Fraction(3, 7), Fraction(1, 2), Fraction(4, 9)]
        r = SideLengths.from_pi_multiples(multiples)
        exact = spherical_closed_form(r, exact=True)
        assert isinstance(exact.exact_value, Fraction)
        assert exact.value == pytest.approx(spherical_closed_form(r).value, rel=1e-12, abs=1e-12)

    def test_exact_needs_pi_multiples(self):
        with pytest.raises(ExactModeError):
            spherical_closed_form(SideLengths.spherical([1, 1, 1, 1]), exact=True)

    @pytest.mark.parametrize('n', [3, 4, 5, 6, 9])
    def test_nonnegative(self, rng, n):
        for _ in range(20):
            r = SideLengths.spherical(rng.uniform(0.01, math.pi - 0.01, size=n))
            assert spherical_closed_form(r).value >= -1e-10

    @pytest.mark.parametrize('n', [4, 5, 7])
    def test_vanishes_when_empty(self, rng, n):
        short = rng.uniform(0.01, 0.3, size=n - 1)
        long_side = rng.uniform(short.sum() + 0.01, math.pi - 0.01)
        result = spherical_closed_form(SideLengths.spherical([*short, long_side]))
        assert result.feasibility.is_empty
        assert abs(result.value) <= 1e-10

    @pytest.mark.parametrize('n', [4, 5, 6])
    def test_permutation_invariant(self, rng, random_spherical, n):
        r = random_spherical(n)
        shuffled = SideLengths.spherical(rng.permutation(r.values))
        assert spherical_closed_form(shuffled).value == pytest.approx(spherical_closed_form(r).value, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize('n', [4, 6, 8])
    def test_complement_symmetry(self, random_spherical, n):
        r = random_spherical(n)
        assert spherical_closed_form(complement_sides(r)).value == pytest.approx(
            spherical_closed_form(r).value, abs=1e-10
        )


def test_complement_keeps_exact_multiples():
    r = SideLengths.from_pi_multiples([Fraction(1, 3), Fraction(1, 4), Fraction(1, 2)])
    assert complement_sides(r).pi_multiples == (Fraction(2, 3), Fraction(3, 4), Fraction(1, 2))


def test_series_agrees_with_closed_form(random_spherical):
    for i in range(200):
        r = random_spherical(4 + i % 7)
        closed = spherical_closed_form(r).value
        series = witten_series(r, 1e-8).value
        assert abs(series - closed) <= 2e-8 + 1e-8 * abs(closed)


def test_random_triangles(random_spherical):
    for _ in range(50):
        assert spherical_closed_form(random_spherical(3)).value == pytest.approx(1.0, abs=1e-10)
        assert spherical_closed_form(random_spherical(3, verdict=Verdict.EMPTY)).value == 0.0


def test_raw_sum_is_nonnegative_everywhere(rng):
    for i in range(10_000):
        r = SideLengths.spherical(rng.uniform(0.01, math.pi - 0.01, size=4 + i % 6))
        assert trig_sum(r, 5e-10) >= -1e-9


@pytest.mark.parametrize('n', [4, 5, 6, 7])
def test_empty_inputs_report_zero(rng, n):
    for _ in range(50):
        short = rng.uniform(0.01, 0.15, size=n - 1)
        long = rng.uniform(short.sum() + 1e-3, short.sum() + 1.0)
        r = SideLengths.spherical(rng.permutation(np.append(short, long)))
        result = spherical_closed_form(r)
        assert result.feasibility.is_empty
        assert result.value == 0.0
        assert result.value >= -result.error_bound


def test_exact_empty_input_reports_zero():
    r = SideLengths.from_pi_multiples([Fraction(1, 20), Fraction(1, 20), Fraction(1, 20), Fraction(9, 10)])
    result = spherical_closed_form(r, exact=True)
    assert result.feasibility.is_empty
    assert result.exact_value == 0
    assert result.value == 0.0


def test_integral_subsets_are_recorded():
    # deltas of (pi/2)^4 are 0 or +-2pi for the 8 even subsets
    result = spherical_closed_form(RIGHT_ANGLES)
    assert len(result.integral_subsets) == 8
    assert (1, 2) in result.integral_subsets
    assert () in result.integral_subsets
    assert result.feasibility.verdict is Verdict.INTERIOR
    assert result.to_dict()['integral_subsets'][0] == []

    exact = spherical_closed_form(SideLengths.from_pi_multiples([Fraction(1, 2)] * 4), exact=True)
    assert sorted(exact.integral_subsets) == sorted(result.integral_subsets)


def test_no_integral_subsets_for_generic_sides(random_spherical):
    result = spherical_closed_form(random_spherical(5))
    assert result.integral_subsets == ()
    assert 'integral_subsets' not in result.to_dict()


def test_closed_form_builds_one_subset_table(monkeypatch):
    import src.services.spherical as spherical

    calls = []

    def counting(r):
        calls.append(r)
        return signed_sum_arrays(r)

    monkeypatch.setattr(spherical, 'signed_sum_arrays', counting)
    spherical_closed_form(SideLengths.spherical([0.4, 1.1, 2.0, 0.7, 1.3, 0.9]))
    assert len(calls) == 1
