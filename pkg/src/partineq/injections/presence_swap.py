"""Injection behind the presence surplus: near-top part out, anchor in.

Partitions with parts in [s, L+s-1] containing L+s-1 inject into those
containing s: trade one copy of L+s-1 for one s and one L-1.  Both inserted
parts stay inside the interval (L-1 >= s because L >= s+1), and when
L = s+1 the two inserted parts coincide, which the frequency update handles
by merging.  The map is injective because it is invertible: remove one s and
one L-1, put back one L+s-1.
"""

from __future__ import annotations

from partineq.injections.base import (
    CaseLabel,
    CaseSignature,
    InjectionMapBase,
    accumulate,
)
from partineq.partitions import Partition, PartitionFamily


class PresenceSwapMap(InjectionMapBase):
    map_id = "L14easy"

    def normalize(self, L: int, s: int | None, k: int | None) -> tuple[int, int, int]:
        if s is None:
            raise ValueError(f"{self.map_id} needs s")
        if L < s + 1:
            raise ValueError(f"{self.map_id} needs L >= s+1, got L={L}, s={s}")
        if k is not None:
            raise ValueError(f"{self.map_id} takes no excluded part")
        return L, s, 0

    def domain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.with_part(L, s, L + s - 1)

    def codomain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.with_part(L, s, s)

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        edits: dict[int, int] = {}
        accumulate(edits, L + s - 1, -1)
        accumulate(edits, s, 1)
        accumulate(edits, L - 1, 1)
        return CaseLabel.build(self.map_id, ("1",), {}), edits

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        raise NotImplementedError(
            f"{self.map_id} has no witness recipe; the surplus stays nonnegative"
        )

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (("1",),)

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        if path != ("1",):
            raise KeyError(f"{self.map_id} has no case {path}")
        return CaseSignature(
            self.map_id,
            path,
            "any anchor frequency (single-case map)",
            lambda v: v >= 1,
        )
