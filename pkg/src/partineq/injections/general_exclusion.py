"""Injection from the shifted family into the anchored family, any exclusion.

Map "T12" works for every L >= 3 and every excluded part k in [s+1, L+s], at
the cost of astronomically large thresholds.  Its carrier pair (s+alpha,
s+beta) is chosen so both parts differ from k: (alpha, beta) is (2, 3) when
k = s+1, (1, 3) when k = s+2, and (1, 2) otherwise.  The pair need not be
coprime; the one sticky constellation (k = s+2 with s odd makes both carriers
even) always receives an even target, so the shared factor divides out.

Frequencies of k at least P^2, where P is the product of the interval's
parts, collapse in one stroke (case 2a).  Smaller positive frequencies lean
on a slot s+p whose frequency reaches the tower m_{f,h} = P^{(f-1)L+h+2}
+ ((f-1)L+h-2)P (case 2b).  Frequency zero just moves s-many copies of one
loaded slot down to the anchor (case 1).
"""

from __future__ import annotations

from functools import lru_cache

from partineq.injections.base import (
    CaseLabel,
    CaseSignature,
    InjectionMapBase,
    NotApplicableError,
    accumulate,
)
from partineq.partitions import Partition, PartitionFamily
from partineq.solvers import (
    BelowBound,
    PairSolution,
    solve_pair_shared_factor,
    sylvester_solve,
)
from partineq.injections.base import SolverPreconditionError
from partineq.thresholds import part_product


def carrier_offsets(s: int, k: int) -> tuple[int, int]:
    """Offsets (alpha, beta) of the two parts that absorb leftover weight."""
    if k == s + 1:
        return (2, 3)
    if k == s + 2:
        return (1, 3)
    return (1, 2)


@lru_cache(maxsize=None)
def slot_threshold(L: int, s: int, f: int, h: int) -> int:
    """Load m_{f,h} that slot s+h must carry to absorb frequency f of k."""
    P = part_product(L, s)
    e = (f - 1) * L + h + 2
    return P**e + (e - 4) * P


class GeneralExclusionMap(InjectionMapBase):
    map_id = "T12"

    def normalize(self, L: int, s: int | None, k: int | None) -> tuple[int, int, int]:
        if s is None:
            raise ValueError(f"{self.map_id} needs s")
        if L < 3:
            raise ValueError(f"{self.map_id} needs L >= 3, got {L}")
        if k is None:
            raise ValueError(f"{self.map_id} needs k")
        if not (s + 1 <= k <= L + s):
            raise ValueError(f"{self.map_id} needs s+1 <= k <= L+s, got k={k}")
        return L, s, k

    def domain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.shifted(L, s)

    def codomain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.anchored(L, s, skip=k)

    def _carrier_fill(self, s: int, k: int, target: int) -> PairSolution:
        alpha, beta = carrier_offsets(s, k)
        try:
            return solve_pair_shared_factor(s + alpha, s + beta, target)
        except BelowBound as exc:
            raise SolverPreconditionError(str(exc)) from exc

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        P = part_product(L, s)
        f = pi.frequency(k)
        alpha, beta = carrier_offsets(s, k)

        if f == 0:
            for m in pi.parts():
                if pi.frequency(m) >= s:
                    edits: dict[int, int] = {}
                    accumulate(edits, s, m)
                    accumulate(edits, m, -s)
                    return (
                        CaseLabel.build(self.map_id, ("1",), {"m0": m}),
                        edits,
                    )
            raise NotApplicableError(
                f"{self.map_id}: {k} is absent and no slot reaches frequency {s}"
            )

        if f >= P * P:
            h = 0
            power = 1
            while power * P <= f:
                power *= P
                h += 1
            nu = f + (h - 3) * P - 2
            pair = self._carrier_fill(s, k, k * f - s * nu)
            edits = {}
            accumulate(edits, s, nu)
            accumulate(edits, k, -f)
            accumulate(edits, s + alpha, pair.x)
            accumulate(edits, s + beta, pair.y)
            return (
                CaseLabel.build(self.map_id, ("2", "a"), {"f": f, "h": h}),
                edits,
            )

        p = None
        for h in range(1, L + 1):
            if pi.frequency(s + h) >= slot_threshold(L, s, f, h):
                p = h
                break
        if p is None:
            raise NotApplicableError(
                f"{self.map_id}: frequency of {k} is {f} and no slot s+h"
                " carries its tower threshold"
            )
        m_fp = slot_threshold(L, s, f, p)
        doubled = 1 if (k == s + 2 and s % 2 == 1 and f % 2 == 1) else 0
        j_fp, rem = divmod(s * m_fp, s + p)
        if rem:
            raise AssertionError("tower thresholds are divisible by their slot")
        pair = self._carrier_fill(s, k, 2 * s * (s + p) + f * k - s * doubled)
        edits = {}
        accumulate(edits, s, m_fp + doubled)
        accumulate(edits, s + p, -(j_fp + 2 * s))
        accumulate(edits, k, -f)
        accumulate(edits, s + alpha, pair.x)
        accumulate(edits, s + beta, pair.y)
        return (
            CaseLabel.build(self.map_id, ("2", "b"), {"f": f, "p": p}),
            edits,
        )

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        """Anchor frequency L+s+1 (+1 in the doubled regime) misses all cases."""
        alpha, beta = carrier_offsets(s, k)
        doubled = 1 if (k == s + 2 and s % 2 == 1 and (N - L) % 2 == 1) else 0
        base = L + s + 1 + doubled
        pair = self._carrier_fill(s, k, N - s * base)
        return Partition(
            [(s, base), (s + alpha, pair.x), (s + beta, pair.y)]
        )

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (("1",), ("2", "a"), ("2", "b"))

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        P = part_product(L, s)
        if path == ("1",):
            return CaseSignature(
                self.map_id,
                path,
                f"slot values in [{s + 1}, {L + s}]",
                lambda v: s + 1 <= v <= L + s,
            )
        if path == ("2", "a"):

            def is_collapse_value(v: int) -> bool:
                power = P * P
                h = 2
                while True:
                    j = v - (h - 3) * P + 2
                    if j < power:
                        return False
                    if j < power * P:
                        return j >= P * P
                    power *= P
                    h += 1

            return CaseSignature(
                self.map_id,
                path,
                "f + (h-3)P - 2 for the collapse exponent h of f",
                is_collapse_value,
            )
        if path == ("2", "b"):
            offsets = (
                (0, 1) if (k == s + 2 and s % 2 == 1) else (0,)
            )

            def is_tower_value(v: int) -> bool:
                h = 3
                while True:
                    tower = P**h + (h - 4) * P
                    if tower > v + 1:
                        return False
                    if any(v - d == tower for d in offsets):
                        return True
                    h += 1

            return CaseSignature(
                self.map_id,
                path,
                "P^e + (e-4)P (+1 in the doubled regime) for e >= 3",
                is_tower_value,
            )
        raise KeyError(f"{self.map_id} has no case {path}")
