import math

import numpy as np
import pytest

from corrkit import (
    InvalidArgument,
    InvalidShift,
    adf,
    chu,
    chu_acf_magnitude,
    chu_acf_magnitudes,
    chu_adf_closed,
    crosscorrelation_naive,
    sine_ratio_partial_sums,
)

LIMIT = 1 / (2 * math.pi)


class TestChuAdfClosed:
    def test_n2_a1_breakdown(self):
        b = chu_adf_closed(2, 1)
        assert b.d == 1 and b.m == 2
        assert b.sine_sum == pytest.approx(1.0)
        assert b.gcd_term == 0.0
        assert b.epsilon_term == pytest.approx(2 / 4)  # m=2 is 2 mod 4
        assert b.adf == pytest.approx(0.5, abs=1e-12)

    def test_n4_a1(self):
        assert chu_adf_closed(4, 1).adf == pytest.approx(0.25, abs=1e-12)

    def test_n1_empty_sum(self):
        b = chu_adf_closed(1, 1)
        assert b.adf == 0.0
        assert b.sine_sum == 0.0

    def test_breakdown_recombines(self):
        for (n, a) in [(12, 3), (30, 4), (17, 17)]:
            b = chu_adf_closed(n, a)
            want = (4 * b.d / n**2) * b.sine_sum + b.gcd_term - b.epsilon_term
            assert b.adf == pytest.approx(want, rel=1e-15)

    def test_all_ones_case(self):
        # a multiple of 2n gives the constant sequence, adf (n-1)(2n-1)/(3n)
        for n in [2, 5, 9]:
            assert chu_adf_closed(n, 2 * n).adf == pytest.approx(
                (n - 1) * (2 * n - 1) / (3 * n), rel=1e-13)

    def test_oracle_equivalence_small(self):
        worst = 0.0
        for n in range(1, 41):
            for a in range(1, 2 * n + 1):
                brute = adf(chu(n, a), method="naive")
                worst = max(worst, abs(brute - chu_adf_closed(n, a).adf))
        assert worst <= 1e-9

    def test_negative_parameter(self):
        for n in [2, 7, 24]:
            for a in [-1, -5]:
                brute = adf(chu(n, a), method="naive")
                assert chu_adf_closed(n, a).adf == pytest.approx(brute, abs=1e-10)


class TestChuAcfMagnitude:
    def test_zero_numerator_shift(self):
        assert chu_acf_magnitude(4, 1, 2) == pytest.approx(0.0, abs=1e-12)

    def test_zero_shift_gives_n(self):
        for (n, a) in [(5, 1), (8, 3), (12, 4)]:
            assert chu_acf_magnitude(n, a, 0) == pytest.approx(n)

    def test_unit_ratio_shift(self):
        assert chu_acf_magnitude(4, 1, 1) == pytest.approx(1.0)

    def test_multiple_of_m_branch(self):
        # n=6, a=2: d=2, m=3; shift u=3 is a multiple of m, |C| = n - u
        assert chu_acf_magnitude(6, 2, 3) == pytest.approx(3.0)
        z = chu(6, 2)
        p = crosscorrelation_naive(z, z)
        assert abs(p.value_at(3)) == pytest.approx(3.0, abs=1e-12)

    def test_shift_range(self):
        with pytest.raises(InvalidShift):
            chu_acf_magnitude(4, 1, 4)
        with pytest.raises(InvalidShift):
            chu_acf_magnitude(4, 1, -1)

    def test_matches_direct_profile(self):
        worst = 0.0
        for n in range(1, 41):
            for a in range(1, 2 * n + 1):
                z = chu(n, a)
                measured = np.abs(crosscorrelation_naive(z, z).values[n - 1:])
                predicted = chu_acf_magnitudes(n, a)
                worst = max(worst, float(np.max(np.abs(measured - predicted))))
        assert worst <= 1e-9

    def test_vectorised_matches_scalar(self):
        for (n, a) in [(9, 2), (16, 6), (25, 10)]:
            vec = chu_acf_magnitudes(n, a)
            assert vec == pytest.approx([chu_acf_magnitude(n, a, u) for u in range(n)])


class TestSineRatioPartialSums:
    def test_n2(self):
        s1, s2 = sine_ratio_partial_sums(2)
        assert s1 == pytest.approx(2 ** -1.5)
        assert s2 == pytest.approx(2 ** -1.5 * (math.sin(math.pi / 2) / (math.pi / 2)) ** 2)

    def test_n3_single_term(self):
        s1, _ = sine_ratio_partial_sums(3)
        assert s1 == pytest.approx(3 ** -1.5)

    def test_large_n_near_limit(self):
        s1, s2 = sine_ratio_partial_sums(4096)
        assert abs(s1 - LIMIT) < 0.05
        assert abs(s2 - LIMIT) < 0.05

    def test_deviations_strictly_decreasing(self):
        prev1 = prev2 = None
        for n in [256, 1024, 4096, 16384]:
            s1, s2 = sine_ratio_partial_sums(n)
            d1, d2 = abs(s1 - LIMIT), abs(s2 - LIMIT)
            if prev1 is not None:
                assert d1 < prev1
                assert d2 < prev2
            prev1, prev2 = d1, d2

    def test_domain(self):
        with pytest.raises(InvalidArgument):
            sine_ratio_partial_sums(1)


def test_scaled_adf_deviation_strictly_decreasing():
    # sqrt(n) * adf of the parameter-1 Chu sequence approaches 2/pi from below
    target = 2 / math.pi
    prev = None
    for n in [256, 1024, 4096, 16384]:
        dev = abs(math.sqrt(n) * chu_adf_closed(n, 1).adf - target)
        if prev is not None:
            assert dev < prev
        prev = dev
