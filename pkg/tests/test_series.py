"""Series arithmetic and surplus-series tests.

The load-bearing oracle: surplus coefficients must equal the difference of
two independently DP-computed family counts.  Golden coefficient rows for
(L, s, k) = (3, 2, 3) and (4, 2, 4) are frozen below.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from partineq.partitions import PartitionFamily, count_family_upto
from partineq.series import (
    NotInvertible,
    TruncatedSeries,
    bounded_gap_surplus_series,
    exclusion_shift_series,
    pochhammer_poly,
    presence_surplus_series,
    surplus_series,
    surplus_shift_identity,
)

# frozen reference rows: coefficient of q^N for N = 0, 1, 2, ...
SURPLUS_323 = (0, 0, 1, -1, 0, -1, 1, 0, 0, -1, 1, 0, 1, -1, 2, -1, 2, 0, 2)
SURPLUS_424 = (0, 0, 1, -1, 0, 0, -1, 1, 1, -1, 1, 1, 0, 2)


small_series = st.builds(
    lambda cs: TruncatedSeries(cs, trunc=14),
    st.lists(st.integers(-9, 9), min_size=1, max_size=15),
)


class TestTruncatedSeries:
    def test_construction_pads(self):
        f = TruncatedSeries([1, 2], trunc=4)
        assert f.coefficients() == (1, 2, 0, 0, 0)
        assert f.trunc == 4
        with pytest.raises(IndexError):
            f[5]

    def test_mismatched_trunc_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(3) + TruncatedSeries.one(4)

    def test_shift_and_truncate(self):
        f = TruncatedSeries([1, 1, 1], trunc=4)
        assert f.shift(2).coefficients() == (0, 0, 1, 1, 1)
        assert f.truncate(1).coefficients() == (1, 1)
        with pytest.raises(ValueError):
            f.truncate(9)

    def test_inverse_requires_unit_constant(self):
        with pytest.raises(NotInvertible):
            TruncatedSeries([2, 1], trunc=3).inverse()
        with pytest.raises(NotInvertible):
            TruncatedSeries.zero(3).inverse()

    def test_inverse_of_negative_unit(self):
        f = TruncatedSeries([-1, 1], trunc=5)
        assert (f * f.inverse()) == TruncatedSeries.one(5)

    @given(small_series)
    def test_inverse_roundtrip(self, f):
        if f[0] not in (1, -1):
            return
        assert (f * f.inverse()) == TruncatedSeries.one(f.trunc)

    @given(small_series, small_series, small_series)
    @settings(max_examples=60)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c


class TestPochhammer:
    def test_small_product(self):
        # (1-q)(1-q^2) = 1 - q - q^2 + q^3
        assert pochhammer_poly(1, 2, 5).coefficients() == (1, -1, -1, 1, 0, 0)

    def test_empty_product_is_one(self):
        assert pochhammer_poly(3, 0, 4) == TruncatedSeries.one(4)

    def test_inverse_counts_bounded_partitions(self):
        # 1 / prod_{j=2..5}(1-q^j) generates partitions into parts 2..5
        fam = PartitionFamily.in_range(3, 2)
        inv = pochhammer_poly(2, 4, 25).inverse()
        assert list(inv.coefficients()) == count_family_upto(fam, 25)


class TestSurplusSeries:
    def test_frozen_row_323(self):
        got = surplus_series(3, 2, 3, 18)
        assert got.coefficients() == SURPLUS_323

    def test_frozen_row_424(self):
        got = surplus_series(4, 2, 4, 13)
        assert got.coefficients() == SURPLUS_424

    @pytest.mark.parametrize("L,s", [(3, 1), (3, 2), (4, 2), (5, 1), (6, 3), (4, 4)])
    def test_coefficients_are_count_differences(self, L, s):
        T = 45
        shifted = count_family_upto(PartitionFamily.shifted(L, s), T)
        for k in range(s + 1, L + s + 1):
            anchored = count_family_upto(PartitionFamily.anchored(L, s, skip=k), T)
            series = surplus_series(L, s, k, T)
            assert list(series.coefficients()) == [
                a - d for a, d in zip(anchored, shifted)
            ]

    def test_bounded_gap_is_fold_of_surplus(self):
        T = 60
        for L in (3, 4, 5, 8):
            base = surplus_series(L, 2, L, T)
            folded = bounded_gap_surplus_series(L, T)
            for n in range(T + 1):
                expect = sum(base[n - i * L] for i in range(n // L + 1))
                assert folded[n] == expect

    def test_bounded_gap_known_negatives_at_L3(self):
        f = bounded_gap_surplus_series(3, 40)
        negatives = {n: f[n] for n in range(41) if f[n] < 0}
        assert negatives == {3: -1, 9: -1, 15: -1}


class TestPresenceSurplus:
    @pytest.mark.parametrize("L,s", [(2, 1), (3, 2), (5, 2), (4, 3)])
    def test_counts_match_families(self, L, s):
        T = 40
        with_min = count_family_upto(
            PartitionFamily.with_part(L, s, s), T
        )
        with_near_max = count_family_upto(
            PartitionFamily.with_part(L, s, L + s - 1), T
        )
        series = presence_surplus_series(L, s, T)
        assert list(series.coefficients()) == [
            a - b for a, b in zip(with_min, with_near_max)
        ]

    @pytest.mark.parametrize("L,s", [(2, 1), (3, 2), (5, 2), (6, 1), (4, 3)])
    def test_nonnegative_when_interval_long_enough(self, L, s):
        # needs L >= s+1 so the swap target L-1 stays inside the interval
        if L < s + 1:
            pytest.skip("interval too short")
        series = presence_surplus_series(L, s, 60)
        assert all(c >= 0 for c in series.coefficients())


class TestExclusionShift:
    @pytest.mark.parametrize("L,s,k,i", [(3, 2, 3, 2), (3, 2, 3, 5), (4, 1, 2, 3)])
    def test_equals_closed_form(self, L, s, k, i):
        T = 40
        got = exclusion_shift_series(L, s, k, i, T)
        # independent closed form: q^(s+k) / prod_{j in [s, L+s], j != i}(1-q^j)
        prod = TruncatedSeries.one(T)
        for j in range(s, L + s + 1):
            if j != i:
                prod = prod - prod.shift(j)
        expect = prod.inverse().shift(s + k)
        assert got == expect
        assert all(c >= 0 for c in got.coefficients())

    def test_rejects_shift_outside_interval(self):
        with pytest.raises(ValueError):
            exclusion_shift_series(3, 2, 3, 1, 10)
        with pytest.raises(ValueError):
            exclusion_shift_series(3, 2, 3, 6, 10)


class TestShiftIdentity:
    @pytest.mark.parametrize("L,s", [(3, 2), (4, 2), (5, 1), (6, 3)])
    def test_holds_from_lower_edge(self, L, s):
        for i in range(L - 1, L + 6):
            assert surplus_shift_identity(L, s, i, 50)

    def test_rejects_small_index(self):
        with pytest.raises(ValueError):
            surplus_shift_identity(4, 2, 2, 10)
