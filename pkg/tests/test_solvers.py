"""Solver tests against brute-force oracles."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from partineq.solvers import (
    BelowBound,
    NotDivisible,
    PairSolution,
    SimpleSolution,
    TooSmall,
    fixed_solution,
    frobenius_bound,
    simple_solve,
    solve_pair_shared_factor,
    sylvester_solve,
)


def brute_pair(a: int, b: int, n: int) -> PairSolution | None:
    """Minimal-x solution by exhaustive scan."""
    for x in range(n // a + 1):
        rest = n - a * x
        if rest % b == 0:
            return PairSolution(x, rest // b)
    return None


coprime_pairs = st.tuples(st.integers(2, 40), st.integers(2, 40)).filter(
    lambda ab: math.gcd(*ab) == 1
)


class TestFrobeniusBound:
    def test_values(self):
        assert frobenius_bound(3, 4) == 6
        assert frobenius_bound(6, 7) == 30

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            frobenius_bound(4, 6)

    @given(coprime_pairs)
    def test_largest_gap_is_exactly_ab_minus_a_minus_b(self, ab):
        a, b = ab
        gap = a * b - a - b
        assert brute_pair(a, b, gap) is None
        for n in range(gap + 1, gap + 1 + min(a, b)):
            assert brute_pair(a, b, n) is not None


class TestSylvesterSolve:
    def test_spec_example(self):
        assert sylvester_solve(3, 4, 6) == PairSolution(2, 0)

    def test_below_bound_still_solves_when_possible(self):
        assert sylvester_solve(3, 4, 4) == PairSolution(0, 1)
        with pytest.raises(BelowBound):
            sylvester_solve(3, 4, 5)
        with pytest.raises(BelowBound):
            sylvester_solve(3, 4, -1)

    @given(coprime_pairs, st.integers(0, 3000))
    @settings(max_examples=300)
    def test_matches_brute_minimal_x(self, ab, n):
        a, b = ab
        expect = brute_pair(a, b, n)
        if expect is None:
            assert n < frobenius_bound(a, b)
            with pytest.raises(BelowBound):
                sylvester_solve(a, b, n)
        else:
            got = sylvester_solve(a, b, n)
            assert got == expect
            assert a * got.x + b * got.y == n

    @given(coprime_pairs, st.integers(0, 400))
    def test_always_solvable_at_or_above_bound(self, ab, offset):
        a, b = ab
        n = frobenius_bound(a, b) + offset
        got = sylvester_solve(a, b, n)
        assert a * got.x + b * got.y == n


class TestSharedFactor:
    def test_halving(self):
        # 2x + 4y = 14 reduces to x + 2y = 7
        got = solve_pair_shared_factor(2, 4, 14)
        assert 2 * got.x + 4 * got.y == 14
        assert got.x == min(
            x for x in range(8) if (14 - 2 * x) >= 0 and (14 - 2 * x) % 4 == 0
        )

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            solve_pair_shared_factor(4, 6, 9)

    def test_coprime_passthrough(self):
        assert solve_pair_shared_factor(3, 4, 6) == sylvester_solve(3, 4, 6)


class TestSimpleSolve:
    @given(st.integers(1, 30), st.integers(0, 2000))
    def test_construction_is_exact(self, s, n):
        if n <= s:
            with pytest.raises(TooSmall):
                simple_solve(s, n)
            return
        got = simple_solve(s, n)
        assert got.total == n
        assert all(v >= 0 for v in got.amounts)
        # literal division construction: everything on s+1 except at most
        # one extra copy of one larger part
        off_parts = [v for v in got.amounts[1:] if v]
        assert off_parts in ([], [1])

    def test_examples(self):
        assert simple_solve(1, 810).as_deltas() == {2: 405}
        assert simple_solve(2, 7).as_deltas() == {3: 1, 4: 1}
        got = simple_solve(3, 11)
        assert got.as_deltas() == {4: 1, 7: 1}
        assert got.amount(4) == 1
        assert got.amount(5) == 0


class TestFixedSolution:
    def test_identical_object_for_identical_equation(self):
        a = fixed_solution("pair", 6, 7, 102)
        b = fixed_solution("pair", 6, 7, 102)
        assert a is b
        assert a == PairSolution(3, 12)

    def test_kinds_dispatch(self):
        assert fixed_solution("simple", 2, 7) == simple_solve(2, 7)
        assert fixed_solution("pair_shared", 2, 4, 14) == solve_pair_shared_factor(
            2, 4, 14
        )
        with pytest.raises(ValueError):
            fixed_solution("cubic", 1, 2, 3)
