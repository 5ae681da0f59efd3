import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mp2ent.numerics import (
    SeriesValue,
    log_factorial,
    power_term,
    power_terms,
    theta2,
    theta3,
)


class TestLogFactorial:
    def test_trivial_values(self):
        assert log_factorial(0) == 0.0
        assert log_factorial(1) == 0.0

    def test_small_exact(self):
        assert log_factorial(5) == pytest.approx(math.log(120), abs=1e-15)

    @pytest.mark.parametrize("n", [30, 100, 1000, 10_000])
    def test_large_against_summed_logs(self, n):
        reference = math.fsum(math.log(k) for k in range(2, n + 1))
        assert abs(log_factorial(n) - reference) <= 1e-14 * reference

    @given(st.integers(min_value=1, max_value=500))
    def test_difference_identity(self, n):
        assert log_factorial(n) - log_factorial(n - 1) == pytest.approx(
            math.log(n), rel=1e-12, abs=1e-12
        )

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            log_factorial(-1)


class TestPowerTerm:
    def test_k_zero_is_one(self):
        assert power_term(3.7 - 2.1j, 0) == 1.0
        assert power_term(0.0, 0) == 1.0

    def test_zero_base(self):
        assert power_term(0.0, 3) == 0.0

    def test_hand_values(self):
        assert power_term(2.0, 2) == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-12)
        assert power_term(1.0 + 0.0j, 4) == pytest.approx(
            0.5**4 / math.sqrt(24.0), rel=1e-12
        )

    def test_direct_arithmetic_oracle(self):
        z = 1.3 - 0.4j
        for k in range(0, 30):
            direct = (z / 2.0) ** k / math.sqrt(math.factorial(k))
            assert power_term(z, k) == pytest.approx(direct, rel=1e-12)

    @given(
        st.complex_numbers(max_magnitude=4.0, allow_nan=False, allow_infinity=False),
        st.integers(min_value=0, max_value=199),
    )
    def test_recurrence(self, z, k):
        lhs = power_term(z, k + 1)
        rhs = power_term(z, k) * (z / 2.0) / math.sqrt(k + 1)
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1e-300)

    def test_vector_matches_scalar(self):
        z = 0.8 + 0.3j
        ks = np.arange(0, 50)
        vec = power_terms(z, ks)
        for k in ks:
            assert vec[k] == pytest.approx(power_term(z, int(k)), rel=1e-13)


class TestTheta:
    def test_trivial_nome(self):
        assert theta3(0.0).value == 1.0
        assert theta2(0.0).value == 0.0

    def test_anchor_values(self):
        q = math.exp(-8.0)
        assert theta3(q).value == pytest.approx(1.00067093, abs=1e-7)
        assert theta2(q).value == pytest.approx(0.27067057, abs=1e-7)

    def test_against_mpmath(self):
        mpmath = pytest.importorskip("mpmath")
        for q in (math.exp(-8.0), 0.1, 0.5, 0.9):
            assert theta3(q, 80).value == pytest.approx(
                float(mpmath.jtheta(3, 0, q)), rel=1e-12
            )
            assert theta2(q, 80).value == pytest.approx(
                float(mpmath.jtheta(2, 0, q)), rel=1e-12
            )

    def test_self_consistency_within_tail(self):
        coarse, fine = theta3(0.5, 40), theta3(0.5, 80)
        assert abs(coarse.value - fine.value) <= coarse.tail_bound
        assert abs(coarse.value - fine.value) <= 1e-12

    def test_theta2_hand_sum_within_tail(self):
        q = 0.25
        hand = 2.0 * sum(q ** ((n + 0.5) ** 2) for n in range(5))
        tv = theta2(q, 5)
        assert abs(tv.value - hand) <= 1e-15
        assert abs(theta2(q, 60).value - hand) <= tv.tail_bound

    def test_rejects_divergent_nome(self):
        for q in (1.0, 1.5, -0.1):
            with pytest.raises(ValueError):
                theta3(q)
            with pytest.raises(ValueError):
                theta2(q)

    @settings(max_examples=60)
    @given(st.floats(min_value=0.0, max_value=0.9), st.floats(min_value=0.0, max_value=0.9))
    def test_monotone_nondecreasing(self, qa, qb):
        lo, hi = sorted((qa, qb))
        assert theta3(hi).value >= theta3(lo).value - 1e-15
        assert theta2(hi).value >= theta2(lo).value - 1e-15
        assert theta3(lo).value >= 1.0
        assert theta2(lo).value >= 0.0

    def test_tail_bound_covers_refinement(self):
        for q in (0.1, 0.5, 0.8):
            for n in (5, 10, 20):
                coarse = theta3(q, n)
                fine = theta3(q, 4 * n)
                assert abs(fine.value - coarse.value) <= coarse.tail_bound


class TestSeriesValue:
    def test_rejects_negative_tail(self):
        with pytest.raises(ValueError):
            SeriesValue(1.0, 10, -1e-3)

    def test_rejects_zero_order(self):
        with pytest.raises(ValueError):
            SeriesValue(1.0, 0, 0.0)
