"""Injection from the shifted family into the anchored family, large exclusions.

Map "T8" pins the excluded part to L+s-1 (needs L >= s+3); map "T9" frees it
to any k in [2s+2, L+s] (needs L >= s+2).  Both run the same case analysis:

* excluded part present: trade all its copies for anchor parts plus a
  staircase correction on parts s+1..2s+1 (frequency 8 gets its own variant
  so the anchor frequency 15 stays free for another case);
* excluded part absent: either some small slot carries frequency >= 12s, or
  a part at or above the palette floor is broken against a four-part palette.

The palette is (5s+1, 5s+2, 10s-1, 15s-2) with floor F(s); when the excluded
part collides with it, the widened palette (7s+1, 7s+2, 21s-1, 35s-2) with
floor F'(s) takes over, and the one double collision (s=1, k=9) uses
(7, 13, 21, 29).
"""

from __future__ import annotations

from partineq.injections.base import (
    CaseLabel,
    CaseSignature,
    InjectionMapBase,
    NotApplicableError,
    SolverPreconditionError,
    accumulate,
)
from partineq.partitions import Partition, PartitionFamily
from partineq.solvers import BelowBound, fixed_solution, sylvester_solve
from partineq.thresholds import (
    coverage_bound,
    coverage_bound_alt,
    high_part_floor,
    high_part_floor_alt,
)


class TailExclusionMap(InjectionMapBase):
    def __init__(self, map_id: str, pinned: bool) -> None:
        self.map_id = map_id
        self._pinned = pinned

    # -- parameters ----------------------------------------------------------

    def normalize(self, L: int, s: int | None, k: int | None) -> tuple[int, int, int]:
        if s is None:
            raise ValueError(f"{self.map_id} needs s")
        min_L = s + 3 if self._pinned else s + 2
        if L < min_L:
            raise ValueError(f"{self.map_id} needs L >= s+{min_L - s}, got L={L}")
        if self._pinned:
            default = L + s - 1
            if k is None:
                k = default
            elif k != default:
                raise ValueError(
                    f"{self.map_id} excludes exactly L+s-1 = {default}, got k={k}"
                )
        else:
            if k is None:
                raise ValueError(f"{self.map_id} needs k")
            if not (2 * s + 2 <= k <= L + s):
                raise ValueError(
                    f"{self.map_id} needs 2s+2 <= k <= L+s, got k={k}"
                )
        return L, s, k

    def domain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.shifted(L, s)

    def codomain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.anchored(L, s, skip=k)

    def palette(self, s: int, k: int) -> tuple[tuple[int, int, int, int], int, int]:
        """((p1, p2, p3, p4), part floor, weight bound) for this exclusion."""
        standard = (5 * s + 1, 5 * s + 2, 10 * s - 1, 15 * s - 2)
        if self._pinned or k not in standard:
            return standard, high_part_floor(s), coverage_bound(s)
        if s == 1 and k == 9:
            # widened palette would contain 9 again (7s+2 = 9), widen further
            return (7, 13, 21, 29), high_part_floor_alt(s), coverage_bound_alt(s)
        widened = (7 * s + 1, 7 * s + 2, 21 * s - 1, 35 * s - 2)
        return widened, high_part_floor_alt(s), coverage_bound_alt(s)

    # -- case analysis ---------------------------------------------------------

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        (p1, p2, p3, p4), floor, _ = self.palette(s, k)
        f = pi.frequency(k)

        if f >= 1:
            edits: dict[int, int] = {}
            if f == 8:
                path = ("2", "b")
                sol = fixed_solution("simple", s, 8 * k - 14 * s)
                accumulate(edits, s, 14)
            else:
                path = ("2", "a")
                sol = fixed_solution("simple", s, k * f - s * (2 * f - 1))
                accumulate(edits, s, 2 * f - 1)
            for part, amount in sol.as_deltas().items():
                accumulate(edits, part, amount)
            accumulate(edits, k, -f)
            return CaseLabel.build(self.map_id, path, {"f": f}), edits

        for m in pi.parts():
            if m >= floor:
                break
            if pi.frequency(m) >= 12 * s:
                edits = {s: 12 * m, m: -12 * s}
                return (
                    CaseLabel.build(self.map_id, ("1", "a"), {"m0": m}),
                    edits,
                )

        ell = next((m for m in pi.parts() if m >= floor), None)
        if ell is None:
            raise NotApplicableError(
                f"{self.map_id}: excluded part absent, no slot reaches"
                f" frequency {12 * s}, no part reaches {floor}"
            )

        if pi.frequency(p1) >= 1 and pi.frequency(p3) >= 1:
            edits = {s: (p1 + p3) // s, p1: -1, p3: -1}
            return CaseLabel.build(self.map_id, ("1", "b", "i"), {"l": ell}), edits
        if pi.frequency(p2) >= 1 and pi.frequency(p4) >= 1:
            edits = {s: (p2 + p4) // s, p2: -1, p4: -1}
            return CaseLabel.build(self.map_id, ("1", "b", "ii"), {"l": ell}), edits

        # at least one of each palette pair is absent; first match decides
        branches = (
            ("T1", 2, p1, p2),
            ("T2", 4, p1, p4),
            ("T3", 6, p3, p2),
            ("T4", 8, p3, p4),
        )
        for token, count, low, high in branches:
            if pi.frequency(low) == 0 and pi.frequency(high) == 0:
                pair = _fixed_pair(low, high, ell - count * s)
                edits = {}
                accumulate(edits, s, count)
                accumulate(edits, low, pair.x)
                accumulate(edits, high, pair.y)
                accumulate(edits, ell, -1)
                return (
                    CaseLabel.build(
                        self.map_id, ("1", "b", "iii", token), {"l": ell}
                    ),
                    edits,
                )
        raise AssertionError(
            "palette pair conditions are exhaustive once cases i/ii fail"
        )

    # -- strictness witness ----------------------------------------------------

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        """(s^10, (s+1)^x, (s+2)^y): anchor frequency 10 is in no case signature."""
        try:
            pair = sylvester_solve(s + 1, s + 2, N - 10 * s)
        except BelowBound as exc:
            raise SolverPreconditionError(
                f"{self.map_id}: no witness below weight"
                f" {10 * s + s * (s + 1)}, asked for {N}"
            ) from exc
        return Partition([(s, 10), (s + 1, pair.x), (s + 2, pair.y)])

    # -- signatures --------------------------------------------------------------

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (
            ("1", "a"),
            ("1", "b", "i"),
            ("1", "b", "ii"),
            ("1", "b", "iii", "T1"),
            ("1", "b", "iii", "T2"),
            ("1", "b", "iii", "T3"),
            ("1", "b", "iii", "T4"),
            ("2", "a"),
            ("2", "b"),
        )

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        (p1, p2, p3, p4), floor, _ = self.palette(s, k)
        hi_slot = min(floor - 1, L + s)

        def single(value: int, why: str) -> CaseSignature:
            return CaseSignature(
                self.map_id, path, why, lambda v, value=value: v == value
            )

        if path == ("1", "a"):
            return CaseSignature(
                self.map_id,
                path,
                f"12*m for a slot m in [{s + 1}, {hi_slot}]",
                lambda v: v % 12 == 0 and s + 1 <= v // 12 <= hi_slot,
            )
        if path == ("1", "b", "i"):
            return single((p1 + p3) // s, f"exactly {(p1 + p3) // s}")
        if path == ("1", "b", "ii"):
            return single((p2 + p4) // s, f"exactly {(p2 + p4) // s}")
        if path[:3] == ("1", "b", "iii"):
            value = {"T1": 2, "T2": 4, "T3": 6, "T4": 8}[path[3]]
            return single(value, f"exactly {value}")
        if path == ("2", "a"):
            return CaseSignature(
                self.map_id,
                path,
                "odd values 2f-1 with f >= 1, f != 8 (so never 15)",
                lambda v: v >= 1 and v % 2 == 1 and v != 15,
            )
        if path == ("2", "b"):
            return single(14, "exactly 14")
        raise KeyError(f"{self.map_id} has no case {path}")


def _fixed_pair(a: int, b: int, n: int):
    try:
        return fixed_solution("pair", a, b, n)
    except BelowBound as exc:
        raise SolverPreconditionError(
            f"palette equation {a}x + {b}y = {n} is unsolvable"
        ) from exc
