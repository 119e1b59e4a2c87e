"""Threshold formula tests with independently written expressions."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from partineq.thresholds import (
    bounded_gap_floor,
    coverage_bound,
    coverage_bound_alt,
    coverage_bound_small_k,
    general_coverage_bound,
    general_coverage_bound_digits,
    high_part_floor,
    high_part_floor_alt,
    high_part_floor_small_k,
    part_product,
    thresholds,
)


class TestFloorsAndBounds:
    def test_reference_values_s1(self):
        assert high_part_floor(1) == 104
        assert coverage_bound(1) == 58906
        assert high_part_floor_alt(1) == 616
        assert high_part_floor_small_k(1) == 85806

    def test_reference_values_s2(self):
        assert high_part_floor_alt(2) == 2696

    @given(st.integers(1, 50))
    def test_coverage_bound_matches_longhand_sum(self, s):
        F = high_part_floor(s)
        assert coverage_bound(s) == (12 * s - 1) * sum(range(s + 1, F)) + 1

    @given(st.integers(1, 20))
    def test_alt_coverage_matches_longhand_sum(self, s):
        F = high_part_floor_alt(s)
        assert coverage_bound_alt(s) == (12 * s - 1) * sum(range(s + 1, F)) + 1

    @given(st.integers(1, 4))
    def test_small_k_coverage_matches_longhand_sum(self, s):
        F = high_part_floor_small_k(s)
        assert coverage_bound_small_k(s) == (300 * s * (s + 1) - 1) * sum(
            range(s + 1, F)
        ) + 1


class TestPartProduct:
    def test_values(self):
        assert part_product(3, 1) == 2 * 3 * 4
        assert part_product(3, 2) == 3 * 4 * 5
        assert part_product(5, 1) == math.factorial(6)


class TestGeneralBound:
    def test_small_case_matches_longhand(self):
        P = 24
        e = (P * P - 1) * 3 + 2
        expect = (2 + 3 + 4) * (P**e + (e - 4) * P)
        assert general_coverage_bound(3, 1) == expect

    def test_digit_estimate_agrees_when_materializable(self):
        value = general_coverage_bound(3, 2)
        digits = int(value.bit_length() * math.log10(2)) + 1
        estimate = general_coverage_bound_digits(3, 2)
        assert abs(digits - estimate) <= 2

    def test_large_case_digit_scale(self):
        # not materializable; the estimate alone documents the scale
        assert general_coverage_bound_digits(8, 2) > 10**13


class TestBoundedGapFloor:
    def test_reference_row(self):
        assert [bounded_gap_floor(L) for L in range(5, 11)] == [
            22,
            29,
            37,
            46,
            56,
            67,
        ]


class TestThresholdsBundle:
    def test_bundle_consistency(self):
        t = thresholds(5, 2)
        assert t.high_part_floor == high_part_floor(2)
        assert t.coverage_bound == coverage_bound(2)
        assert t.part_product == part_product(5, 2)
        assert t.bounded_gap_floor == bounded_gap_floor(5)
        assert t.general_coverage_bound_digits() == general_coverage_bound_digits(
            5, 2
        )

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            thresholds(0, 1)
        with pytest.raises(ValueError):
            thresholds(3, 0)
