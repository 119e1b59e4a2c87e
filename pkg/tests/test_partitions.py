"""Partition container and family counting/enumeration tests.

The counting oracle here is deliberately independent of the library: weights
are generated by brute force over frequency tuples via itertools.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from partineq.partitions import (
    EMPTY,
    NegativeFrequencyError,
    Partition,
    PartitionFamily,
    count_family,
    count_family_upto,
    enumerate_family,
    iter_partitions,
    make_partition,
    member,
    parse_partition,
)


def brute_family(family: PartitionFamily, N: int) -> set[tuple[tuple[int, int], ...]]:
    """Independent enumeration: all frequency tuples over allowed parts."""
    parts = family.allowed_parts()
    found = set()
    ranges = [range(N // p + 1) for p in parts]
    for combo in itertools.product(*ranges):
        if sum(f * p for f, p in zip(combo, parts)) != N:
            continue
        pairs = tuple((p, f) for p, f in zip(parts, combo) if f)
        if family.nonempty and not pairs:
            continue
        if any(not any(p == r for p, _ in pairs) for r in family.required):
            continue
        found.add(pairs)
    return found


class TestPartition:
    def test_make_merges_and_weighs(self):
        p = make_partition([(2, 1), (3, 2)])
        assert p.weight == 8
        assert p.pairs() == ((2, 1), (3, 2))

    def test_duplicates_merge(self):
        p = make_partition([(4, 1), (4, 2), (7, 0)])
        assert p.pairs() == ((4, 3),)
        assert p.frequency(7) == 0

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            make_partition([(0, 1)])
        with pytest.raises(NegativeFrequencyError):
            make_partition([(3, -1)])

    def test_empty(self):
        assert EMPTY.weight == 0
        assert not EMPTY
        assert EMPTY.smallest_part is None

    def test_with_changes(self):
        p = make_partition([(2, 3), (5, 1)])
        q = p.with_changes({2: -3, 7: 2, 5: 0})
        assert q.pairs() == ((5, 1), (7, 2))
        with pytest.raises(NegativeFrequencyError):
            p.with_changes({5: -2})

    def test_str_and_parse_roundtrip(self):
        p = make_partition([(2, 3), (5, 1)])
        assert str(p) == "2^3,5"
        assert parse_partition("2^3,5") == p
        assert parse_partition("()") == EMPTY
        assert parse_partition("3,5") == make_partition([(3, 1), (5, 1)])

    @given(
        st.lists(
            st.tuples(st.integers(1, 9), st.integers(0, 5)),
            max_size=6,
        )
    )
    def test_make_partition_matches_counter(self, entries):
        p = make_partition(entries)
        totals: dict[int, int] = {}
        for part, freq in entries:
            totals[part] = totals.get(part, 0) + freq
        assert dict(p.pairs()) == {k: v for k, v in totals.items() if v}
        assert p.weight == sum(part * freq for part, freq in entries)


class TestFamilies:
    def test_shifted_small(self):
        fam = PartitionFamily.shifted(3, 2)
        assert [q.pairs() for q in enumerate_family(fam, 3)] == [((3, 1),)]
        got = enumerate_family(fam, 8)
        assert [str(q) for q in got] == ["3,5", "4^2"]
        assert count_family(fam, 0) == 0

    def test_anchored_small(self):
        fam = PartitionFamily.anchored(11, 2, skip=11)
        assert enumerate_family(fam, 3) == []
        assert count_family(fam, 2) == 1  # just (2)

    def test_anchored_rejects_bad_skip(self):
        with pytest.raises(ValueError):
            PartitionFamily.anchored(3, 2, skip=2)
        with pytest.raises(ValueError):
            PartitionFamily.anchored(3, 2, skip=6)

    def test_in_range_counts_empty(self):
        fam = PartitionFamily.in_range(4, 2)
        assert count_family(fam, 0) == 1
        assert member(fam, EMPTY)

    def test_member_respects_interval(self):
        fam = PartitionFamily.shifted(3, 2)
        assert member(fam, make_partition([(3, 1), (5, 1)]))
        assert not member(fam, make_partition([(2, 1), (6, 1)]))
        assert not member(fam, make_partition([(6, 1)]))
        assert not member(fam, EMPTY)

    def test_descending_lex_order(self):
        fam = PartitionFamily.in_range(4, 2)
        got = enumerate_family(fam, 10)
        vectors = [
            tuple(q.frequency(p) for p in range(6, 1, -1)) for q in got
        ]
        assert vectors == sorted(vectors, reverse=True)

    @pytest.mark.parametrize(
        "fam",
        [
            PartitionFamily.shifted(4, 1),
            PartitionFamily.shifted(3, 2),
            PartitionFamily.anchored(5, 2, skip=6),
            PartitionFamily.anchored(4, 3, skip=4),
            PartitionFamily.in_range(3, 1),
            PartitionFamily.with_part(4, 2, 2),
            PartitionFamily.with_part(4, 2, 5),
            PartitionFamily.avoiding(4, 2, 5),
        ],
    )
    def test_enumerate_count_member_agree_with_brute(self, fam):
        for N in range(0, 24):
            got = enumerate_family(fam, N)
            assert len(set(got)) == len(got)
            assert {q.pairs() for q in got} == brute_family(fam, N)
            assert count_family(fam, N) == len(got)
            for q in got:
                assert member(fam, q)
                assert q.weight == N

    def test_count_upto_matches_pointwise(self):
        fam = PartitionFamily.anchored(6, 2, skip=7)
        upto = count_family_upto(fam, 30)
        assert upto == [count_family(fam, n) for n in range(31)]

    def test_iter_partitions_matches_counts(self):
        fam = PartitionFamily.in_range(3, 2)
        seen = list(iter_partitions(fam.allowed_parts(), 20))
        assert len(seen) == len(set(seen))
        per_weight: dict[int, int] = {}
        for q in seen:
            per_weight[q.weight] = per_weight.get(q.weight, 0) + 1
        for n in range(21):
            assert per_weight.get(n, 0) == count_family(fam, n)
