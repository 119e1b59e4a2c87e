"""Regime thresholds for the injection maps.

Each family of maps needs two numbers: a part-size floor above which the
single-large-part constructions can fire, and a weight bound above which some
case is guaranteed to apply (because staying below it forces either a large
part or a large frequency).  The general-exclusion map instead uses a bound
built from the product of all allowed part sizes; that bound is astronomically
large, so it is exposed lazily rather than stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


def _sum_range(lo: int, hi: int) -> int:
    """lo + (lo+1) + ... + hi, zero when the range is empty."""
    if hi < lo:
        return 0
    return (hi * (hi + 1) - (lo - 1) * lo) // 2


def high_part_floor(s: int) -> int:
    """Floor for the standard palette (5s+1, 5s+2, 10s-1, 15s-2)."""
    _check_s(s)
    return (10 * s - 2) * (15 * s - 3) + 8 * s


def coverage_bound(s: int) -> int:
    """Weights >= this always admit a case under the standard palette."""
    _check_s(s)
    return (12 * s - 1) * _sum_range(s + 1, high_part_floor(s) - 1) + 1


def high_part_floor_alt(s: int) -> int:
    """Floor for the widened palette (7s+1, 7s+2, 21s-1, 35s-2)."""
    _check_s(s)
    return (21 * s - 2) * (35 * s - 3) + 8 * s


def coverage_bound_alt(s: int) -> int:
    """Weight guarantee matching the widened palette."""
    _check_s(s)
    return (12 * s - 1) * _sum_range(s + 1, high_part_floor_alt(s) - 1) + 1


def high_part_floor_small_k(s: int) -> int:
    """Floor for the small-exclusion map's palette around 60s(s+1)."""
    _check_s(s)
    m = s * (s + 1)
    return (120 * m - 2) * (180 * m - 3) + 420 * m


def coverage_bound_small_k(s: int) -> int:
    """Weight guarantee for the small-exclusion map."""
    _check_s(s)
    m = s * (s + 1)
    return (300 * m - 1) * _sum_range(s + 1, high_part_floor_small_k(s) - 1) + 1


def part_product(L: int, s: int) -> int:
    """(s+1)(s+2)...(s+L), the frequency scale of the general-exclusion map."""
    _check_Ls(L, s)
    return prod(range(s + 1, s + L + 1))


def general_coverage_bound(L: int, s: int) -> int:
    """Weight guarantee for the general-exclusion map at (L, s).

    Grows like P**(L*P^2) with P = part_product(L, s); already for L=8, s=2
    the value has ~10^14 digits and cannot be materialized, so callers should
    check general_coverage_bound_digits first.
    """
    P = part_product(L, s)
    exponent = (P * P - 1) * L + 2
    return _sum_range(s + 1, s + L) * (P**exponent + (exponent - 4) * P)


def general_coverage_bound_digits(L: int, s: int) -> int:
    """Approximate decimal digit count of general_coverage_bound(L, s)."""
    import math

    P = part_product(L, s)
    exponent = (P * P - 1) * L + 2
    return int(exponent * math.log10(P)) + 1


def peak_general_coverage_bound(s: int) -> int:
    """general_coverage_bound at the widest interval the map needs, L = 3s+2."""
    return general_coverage_bound(3 * s + 2, s)


def bounded_gap_floor(L: int) -> int:
    """L(L+3)/2 + 2: weight from which the medium-interval gap maps are total."""
    if L < 1:
        raise ValueError(f"need L >= 1, got {L}")
    return L * (L + 3) // 2 + 2


@dataclass(frozen=True)
class Thresholds:
    """All regime thresholds for one (L, s), cheap fields eager."""

    L: int
    s: int
    high_part_floor: int
    coverage_bound: int
    high_part_floor_alt: int
    coverage_bound_alt: int
    high_part_floor_small_k: int
    coverage_bound_small_k: int
    part_product: int
    bounded_gap_floor: int

    def general_coverage_bound(self) -> int:
        return general_coverage_bound(self.L, self.s)

    def general_coverage_bound_digits(self) -> int:
        return general_coverage_bound_digits(self.L, self.s)


def thresholds(L: int, s: int) -> Thresholds:
    _check_Ls(L, s)
    return Thresholds(
        L=L,
        s=s,
        high_part_floor=high_part_floor(s),
        coverage_bound=coverage_bound(s),
        high_part_floor_alt=high_part_floor_alt(s),
        coverage_bound_alt=coverage_bound_alt(s),
        high_part_floor_small_k=high_part_floor_small_k(s),
        coverage_bound_small_k=coverage_bound_small_k(s),
        part_product=part_product(L, s),
        bounded_gap_floor=bounded_gap_floor(L),
    )


def _check_s(s: int) -> None:
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")


def _check_Ls(L: int, s: int) -> None:
    _check_s(s)
    if L < 1:
        raise ValueError(f"need L >= 1, got {L}")
