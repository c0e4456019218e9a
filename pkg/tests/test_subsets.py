from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from src.config import Config
from src.errors import DomainError
from src.models.sides import SideLengths
from src.services.subsets import all_signed_sums, mask_members, odd_signed_sums, signed_sum_arrays


def test_two_sides():
    a, b = 1.5, 0.25
    sums = {s.mask: s for s in all_signed_sums([a, b])}
    assert {m: s.delta for m, s in sums.items()} == {0: -a - b, 1: a - b, 2: b - a, 3: a + b}
    assert {m: s.parity for m, s in sums.items()} == {0: 0, 1: 1, 2: 1, 3: 0}


def test_unit_square_multiset():
    counts = Counter(abs(s.delta) for s in all_signed_sums([1, 1, 1, 1]))
    assert counts == {4: 2, 2: 8, 0: 6}


def test_single_side():
    assert [s.delta for s in all_signed_sums([0.7])] == [-0.7, 0.7]


def test_gray_order():
    assert [s.mask for s in all_signed_sums([1.0, 2.0, 3.0])] == [0, 1, 3, 2, 6, 7, 5, 4]


def test_odd_sums_of_three():
    sums = list(odd_signed_sums([1, 1, 1]))
    assert sorted(s.members() for s in sums) == [(1,), (1, 2, 3), (2,), (3,)]
    assert sorted(s.delta for s in sums) == [-1, -1, -1, 3]


def test_odd_count():
    assert len(list(odd_signed_sums([0.3] * 5))) == 16


def test_accepts_side_lengths():
    r = SideLengths.spherical([1.0, 1.0, 2.0])
    assert len(list(all_signed_sums(r))) == 8


@pytest.mark.parametrize('values', [[], [0.1] * 25])
def test_size_limits(values):
    with pytest.raises(DomainError):
        list(all_signed_sums(values))
    with pytest.raises(DomainError):
        signed_sum_arrays(values)


@pytest.mark.parametrize('n', [5, 6])
def test_complement_pairing(rng, n):
    values = list(rng.uniform(0.1, 3.0, size=n))
    sums = {s.mask: s for s in all_signed_sums(values)}
    full = (1 << n) - 1
    for mask, s in sums.items():
        partner = sums[full ^ mask]
        assert partner.delta == pytest.approx(-s.delta, abs=1e-12)
        if n % 2 == 0:
            assert partner.parity == s.parity
        else:
            assert partner.parity != s.parity


def test_deltas_sum_to_zero(rng):
    sums = list(all_signed_sums(list(rng.uniform(0.1, 3.0, size=7))))
    assert len(sums) == 2 ** 7
    assert sum(s.delta for s in sums) == pytest.approx(0.0, abs=1e-10)


def test_exact_inputs_stay_exact():
    sums = list(all_signed_sums([Fraction(1, 3), Fraction(1, 5), Fraction(1, 7)]))
    assert all(isinstance(s.delta, Fraction) for s in sums)
    assert sum(s.delta for s in sums) == 0


def test_deterministic(rng):
    values = list(rng.uniform(0.1, 3.0, size=8))
    assert list(all_signed_sums(values)) == list(all_signed_sums(values))


def test_arrays_follow_stream_order(rng):
    values = list(rng.uniform(0.1, 3.0, size=9))
    stream = list(all_signed_sums(values))
    table = signed_sum_arrays(values)
    assert len(table) == len(stream)
    np.testing.assert_array_equal(table.masks, [s.mask for s in stream])
    np.testing.assert_array_equal(table.cardinality, [s.cardinality for s in stream])
    np.testing.assert_allclose(table.delta, [s.delta for s in stream], atol=1e-12)


def test_drift_reset_keeps_stream_consistent(rng, monkeypatch):
    monkeypatch.setattr(Config, 'DRIFT_RESET', 4)
    values = list(rng.uniform(0.1, 3.0, size=7))
    stream = list(all_signed_sums(values))
    np.testing.assert_allclose(signed_sum_arrays(values).delta, [s.delta for s in stream], atol=1e-12)
    assert [s.cardinality for s in stream] == [len(mask_members(s.mask)) for s in stream]
