from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iqrdenoise import median_of, quartiles
from oracles import median_int_oracle, quartiles_oracle

samples = st.lists(st.integers(0, 255), min_size=1, max_size=100)


class TestQuartiles:
    def test_integer_ranks(self):
        q = quartiles([1, 2, 3, 4, 5, 6, 7])
        assert (q.q1, q.q3, q.iqr) == (2.0, 6.0, 4.0)

    def test_fractional_ranks_interpolate(self):
        q = quartiles([1, 2, 3, 4])
        assert (q.q1, q.q3, q.iqr) == (1.25, 3.75, 2.5)

    def test_reference_window_quartiles(self):
        # 64-sample window whose quartiles land on 102 and 104
        data = ([0, 0, 99, 99] + [100] * 4 + [101] * 5 + [102] * 20
                + [103] * 10 + [104] * 15 + [105] * 4 + [255, 255])
        assert len(data) == 64
        q = quartiles(data)
        assert q.q1 == 102.0
        assert q.q3 == 104.0
        assert q.iqr == 2.0

    def test_singleton_and_pair_clamp(self):
        q = quartiles([5])
        assert (q.q1, q.q3, q.iqr) == (5.0, 5.0, 0.0)
        q = quartiles([3, 9])
        assert (q.q1, q.q3) == (3.0, 9.0)

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="empty"):
            quartiles([])

    def test_permutation_order_insensitive(self, rng):
        data = rng.randint(0, 256, size=37)
        shuffled = data.copy()
        rng.shuffle(shuffled)
        assert quartiles(data) == quartiles(shuffled)

    @given(st.integers(0, 255), st.integers(1, 50))
    def test_constant_data(self, value, n):
        q = quartiles([value] * n)
        assert q.q1 == q.q3 == float(value)
        assert q.iqr == 0.0

    @given(samples)
    @settings(max_examples=200)
    def test_monotone_bounds(self, data):
        q = quartiles(data)
        assert min(data) <= q.q1 <= q.q3 <= max(data)
        assert q.iqr == q.q3 - q.q1 >= 0

    def test_oracle_equivalence_1000_random(self, rng):
        for _ in range(1000):
            n = rng.randint(1, 101)
            data = rng.randint(0, 256, size=n)
            q = quartiles(data)
            e1, e3, eiqr = quartiles_oracle(data)
            assert abs(q.q1 - e1) <= 1e-9
            assert abs(q.q3 - e3) <= 1e-9
            assert abs(q.iqr - eiqr) <= 1e-9

    def test_matches_numpy_weibull_scheme(self, rng):
        # same rank rule as numpy's 'weibull' quantile method, incl. clamping
        for _ in range(300):
            data = rng.randint(0, 256, size=rng.randint(1, 60))
            q = quartiles(data)
            nq1, nq3 = np.quantile(data.astype(float), [0.25, 0.75], method="weibull")
            assert q.q1 == pytest.approx(nq1, abs=1e-12)
            assert q.q3 == pytest.approx(nq3, abs=1e-12)


class TestMedianOf:
    def test_singleton(self):
        assert median_of([5]) == 5

    def test_odd_picks_middle(self):
        assert median_of([10, 10, 10, 10, 255]) == 10

    def test_even_midpoint(self):
        assert median_of([10, 20]) == 15

    def test_even_tie_rounds_half_up(self):
        assert median_of([10, 11]) == 11

    def test_empty_raises(self):
        with pytest.raises(ValueError, match="empty"):
            median_of([])

    @given(samples)
    @settings(max_examples=300)
    def test_matches_sort_and_pick_oracle(self, data):
        assert median_of(data) == median_int_oracle(data)
