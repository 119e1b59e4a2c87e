"""Injection from the shifted family into the anchored family, small exclusions.

Map "T10" handles excluded parts k in [s+1, 2s+1], which the tail-exclusion
palette cannot reach; it needs L >= 3s+3 so the staircase parts 2s+2..4s+3
stay inside the interval.  The anchor-frequency bookkeeping runs in units of
60(s+1): frequencies of the excluded part at least 3 are absorbed blockwise
(case 1), tiny frequencies ride on either a heavily loaded small slot
(case 2a, scale 300s(s+1)) or a part above the floor F''(s) broken against
the palette (a, b, c, d) = (60s(s+1)+1, 60s(s+1)+2, 120s(s+1)-1, 180s(s+1)-2).
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
from partineq.solvers import BelowBound, TooSmall, fixed_solution, sylvester_solve
from partineq.thresholds import high_part_floor_small_k


class LowExclusionMap(InjectionMapBase):
    map_id = "T10"

    def normalize(self, L: int, s: int | None, k: int | None) -> tuple[int, int, int]:
        if s is None:
            raise ValueError(f"{self.map_id} needs s")
        if L < 3 * s + 3:
            raise ValueError(f"{self.map_id} needs L >= 3s+3, got L={L}, s={s}")
        if k is None:
            raise ValueError(f"{self.map_id} needs k")
        if not (s + 1 <= k <= 2 * s + 1):
            raise ValueError(f"{self.map_id} needs s+1 <= k <= 2s+1, got k={k}")
        return L, s, k

    def domain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.shifted(L, s)

    def codomain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.anchored(L, s, skip=k)

    @staticmethod
    def palette(s: int) -> tuple[int, int, int, int]:
        m = s * (s + 1)
        return (60 * m + 1, 60 * m + 2, 120 * m - 1, 180 * m - 2)

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        block = 60 * (s + 1)
        f = pi.frequency(k)

        if f >= 3:
            j = (f - 3) // (block - 3)
            nu = f + 3 * j - 2
            try:
                sol = fixed_solution("simple", 2 * s + 1, k * f - s * nu)
            except TooSmall as exc:
                raise SolverPreconditionError(str(exc)) from exc
            edits: dict[int, int] = {}
            accumulate(edits, s, nu)
            for part, amount in sol.as_deltas().items():
                accumulate(edits, part, amount)
            accumulate(edits, k, -f)
            return CaseLabel.build(self.map_id, ("1",), {"f": f, "j": j}), edits

        floor = high_part_floor_small_k(s)
        heavy = 300 * s * (s + 1)
        for m in pi.parts():
            if m >= floor:
                break
            if pi.frequency(m) >= heavy:
                edits = {}
                accumulate(edits, s, 300 * (s + 1) * m - f)
                accumulate(edits, k, -f)
                accumulate(edits, s + k, f)
                accumulate(edits, m, -heavy)
                return (
                    CaseLabel.build(
                        self.map_id, ("2", "a"), {"m0": m, "f": f}
                    ),
                    edits,
                )

        ell = next((m for m in pi.parts() if m >= floor), None)
        if ell is None:
            raise NotApplicableError(
                f"{self.map_id}: frequency of {k} is {f}, no slot reaches"
                f" {heavy}, no part reaches {floor}"
            )

        pa, pb, pc, pd = self.palette(s)
        edits = {}
        accumulate(edits, k, -f)
        accumulate(edits, s + k, f)
        if pi.frequency(pa) >= 1 and pi.frequency(pc) >= 1:
            accumulate(edits, s, 180 * (s + 1) - f)
            accumulate(edits, pa, -1)
            accumulate(edits, pc, -1)
            return (
                CaseLabel.build(self.map_id, ("2", "b", "i"), {"l": ell, "f": f}),
                edits,
            )
        if pi.frequency(pb) >= 1 and pi.frequency(pd) >= 1:
            accumulate(edits, s, 240 * (s + 1) - f)
            accumulate(edits, pb, -1)
            accumulate(edits, pd, -1)
            return (
                CaseLabel.build(self.map_id, ("2", "b", "ii"), {"l": ell, "f": f}),
                edits,
            )
        branches = (
            ("T1", 60, pa, pb),
            ("T2", 120, pa, pd),
            ("T3", 360, pc, pb),
            ("T4", 420, pc, pd),
        )
        for token, scale, low, high in branches:
            if pi.frequency(low) == 0 and pi.frequency(high) == 0:
                try:
                    pair = fixed_solution("pair", low, high, ell - scale * s * (s + 1))
                except BelowBound as exc:
                    raise SolverPreconditionError(str(exc)) from exc
                accumulate(edits, s, scale * (s + 1) - f)
                accumulate(edits, low, pair.x)
                accumulate(edits, high, pair.y)
                accumulate(edits, ell, -1)
                return (
                    CaseLabel.build(
                        self.map_id, ("2", "b", "iii", token), {"l": ell, "f": f}
                    ),
                    edits,
                )
        raise AssertionError(
            "palette pair conditions are exhaustive once cases i/ii fail"
        )

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        """(s^{480(s+1)}, (2s+2)^x, (2s+3)^y): 480(s+1) is in no signature."""
        base = 480 * (s + 1)
        try:
            pair = sylvester_solve(2 * s + 2, 2 * s + 3, N - s * base)
        except BelowBound as exc:
            raise SolverPreconditionError(
                f"{self.map_id}: no witness this small (weight {N})"
            ) from exc
        return Partition([(s, base), (2 * s + 2, pair.x), (2 * s + 3, pair.y)])

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (
            ("1",),
            ("2", "a"),
            ("2", "b", "i"),
            ("2", "b", "ii"),
            ("2", "b", "iii", "T1"),
            ("2", "b", "iii", "T2"),
            ("2", "b", "iii", "T3"),
            ("2", "b", "iii", "T4"),
        )

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        block = 60 * (s + 1)
        floor = high_part_floor_small_k(s)
        hi_slot = min(floor - 1, L + s)

        if path == ("1",):
            return CaseSignature(
                self.map_id,
                path,
                f"positive values avoiding residues 0, -1, -2 mod {block}",
                lambda v: v >= 1 and v % block not in (0, block - 1, block - 2),
            )
        if path == ("2", "a"):

            def in_heavy_set(v: int) -> bool:
                for h in (0, 1, 2):
                    m, r = divmod(v + h, 300 * (s + 1))
                    if r == 0 and s + 1 <= m <= hi_slot:
                        return True
                return False

            return CaseSignature(
                self.map_id,
                path,
                f"300(s+1)m - f for a slot m in [{s + 1}, {hi_slot}], f in 0..2",
                in_heavy_set,
            )
        scale_by_path = {
            ("2", "b", "i"): 180,
            ("2", "b", "ii"): 240,
            ("2", "b", "iii", "T1"): 60,
            ("2", "b", "iii", "T2"): 120,
            ("2", "b", "iii", "T3"): 360,
            ("2", "b", "iii", "T4"): 420,
        }
        if path in scale_by_path:
            base = scale_by_path[path] * (s + 1)
            return CaseSignature(
                self.map_id,
                path,
                f"{base} - f for f in 0..2",
                lambda v: base - 2 <= v <= base,
            )
        raise KeyError(f"{self.map_id} has no case {path}")
