"""Canonical nonnegative solutions of small linear part-count equations.

Two shapes come up when building partition images: two-part equations
``a*x + b*y = n`` with coprime (or factor-sharing) a, b, and the staircase
equation ``(s+1)*X_{s+1} + ... + (2s+1)*X_{2s+1} = n`` solved by one division.
Solutions are canonical (minimal x, or the literal division construction) and
memoized so the same equation always yields the same tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class SolverError(Exception):
    """A solver precondition failed."""


class BelowBound(SolverError):
    """No nonnegative solution exists for this target."""


class NotDivisible(SolverError):
    """The shared factor of the coefficients does not divide the target."""


class TooSmall(SolverError):
    """The staircase equation needs a target of at least s+1."""


@dataclass(frozen=True)
class PairSolution:
    """Nonnegative (x, y) with a*x + b*y = n, x minimal."""

    x: int
    y: int


@dataclass(frozen=True)
class SimpleSolution:
    """Nonnegative amounts X_{s+1}..X_{2s+1} with sum of i*X_i equal to n."""

    s: int
    amounts: tuple[int, ...]

    def amount(self, part: int) -> int:
        if not (self.s + 1 <= part <= 2 * self.s + 1):
            raise ValueError(f"part {part} outside [{self.s + 1}, {2 * self.s + 1}]")
        return self.amounts[part - self.s - 1]

    def as_deltas(self) -> dict[int, int]:
        """{part: amount} for the nonzero amounts."""
        return {
            self.s + 1 + i: amt
            for i, amt in enumerate(self.amounts)
            if amt
        }

    @property
    def total(self) -> int:
        return sum((self.s + 1 + i) * amt for i, amt in enumerate(self.amounts))


def frobenius_bound(a: int, b: int) -> int:
    """(a-1)*(b-1): every n at or above it is representable as a*x + b*y.

    The largest unrepresentable target is a*b - a - b.  Rejects non-coprime
    coefficient pairs, for which no such bound exists.
    """
    if a < 1 or b < 1:
        raise ValueError(f"coefficients must be positive, got {a}, {b}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"coefficients must be coprime, got gcd({a},{b}) > 1")
    return (a - 1) * (b - 1)


def sylvester_solve(a: int, b: int, n: int) -> PairSolution:
    """The minimal-x nonnegative solution of a*x + b*y = n, coprime a, b.

    Guaranteed to exist for n >= frobenius_bound(a, b); below that the same
    search runs honestly and raises BelowBound only when no solution exists.
    """
    bound = frobenius_bound(a, b)
    if n < 0:
        raise BelowBound(f"{a}*x + {b}*y = {n} has no nonnegative solution")
    x = (n % b) * pow(a, -1, b) % b
    rest = n - a * x
    if rest < 0:
        raise BelowBound(
            f"{a}*x + {b}*y = {n} has no nonnegative solution"
            f" (below the bound {bound})"
        )
    assert rest % b == 0
    return PairSolution(x=x, y=rest // b)


def solve_pair_shared_factor(a: int, b: int, n: int) -> PairSolution:
    """Like sylvester_solve but a, b may share a factor, which must divide n."""
    d = math.gcd(a, b)
    if d == 1:
        return sylvester_solve(a, b, n)
    if n % d:
        raise NotDivisible(f"gcd({a},{b}) = {d} does not divide {n}")
    return sylvester_solve(a // d, b // d, n // d)


def simple_solve(s: int, n: int) -> SimpleSolution:
    """Solve (s+1)*X_{s+1} + ... + (2s+1)*X_{2s+1} = n by one division.

    With n = (s+1)*q + r: all weight goes on s+1 when r = 0, otherwise one
    copy of s+1 is traded for s+1+r.  Needs n >= s+1.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if n < s + 1:
        raise TooSmall(f"target {n} is below s+1 = {s + 1}")
    q, r = divmod(n, s + 1)
    amounts = [0] * (s + 1)
    if r == 0:
        amounts[0] = q
    else:
        amounts[0] = q - 1
        amounts[r] = 1
    return SimpleSolution(s=s, amounts=tuple(amounts))


@lru_cache(maxsize=None)
def fixed_solution(kind: str, *params: int) -> PairSolution | SimpleSolution:
    """Memoized write-once canonical solutions, keyed by the equation itself.

    kind "pair":        params (a, b, n), coprime coefficients
    kind "pair_shared": params (a, b, n), coefficients may share a factor
    kind "simple":      params (s, n)

    Every caller asking for the same equation gets the identical tuple, which
    is what keeps image constructions consistent across partitions.
    """
    if kind == "pair":
        return sylvester_solve(*params)
    if kind == "pair_shared":
        return solve_pair_shared_factor(*params)
    if kind == "simple":
        return simple_solve(*params)
    raise ValueError(f"unknown equation kind {kind!r}")
