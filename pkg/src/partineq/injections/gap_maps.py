"""Injections witnessing the bounded-gap surplus beyond its negative dips.

All four maps here fix s = 2 and exclude k = L, sending the shifted family
with parts in [3, L+2] into the anchored family with smallest part 2, part L
forbidden.  They split by interval length:

* "T16": L >= 11.  The long interval leaves room for a three-part staircase
  (3, 4, 5) absorbing each removed copy of L, plus a swap cascade when L is
  absent.  The published case split misses partitions whose smallest part is
  exactly L+2 (the prescribed swap would reinsert the forbidden part L); a
  patched branch 2(A') reroutes those through the anchor instead, and its
  image signature (anchor frequency 5) stays disjoint from the others.
* "T17": 5 <= L <= 10.  Copies of L leave in pairs; a lone leftover copy
  rides on L-2.
* "T18": L = 3 exactly.  Parts live in [3, 5]; removing 3s needs bespoke
  fixes for the f = 1 stragglers and the 3-free partitions.
* "T19": L = 4 exactly.  Parts live in [3, 6]; same flavour as "T18" with a
  cleaner swap table.

Each map's ``witness`` builds, for any weight where the surplus count dips
negative or beyond, an anchored partition provably outside the image: its
anchor frequency avoids every case signature ("T16" needs a finer argument,
see the docstring there).
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
from partineq.solvers import BelowBound, TooSmall, simple_solve, sylvester_solve


class _GapMapBase(InjectionMapBase):
    """Shared s = 2, k = L plumbing for the four bounded-gap maps."""

    min_length: int = 3
    max_length: int | None = None

    def normalize(self, L: int, s: int | None, k: int | None) -> tuple[int, int, int]:
        if s not in (None, 2):
            raise ValueError(f"{self.map_id} is pinned to s=2, got s={s}")
        if k not in (None, L):
            raise ValueError(f"{self.map_id} is pinned to k=L, got k={k}")
        if L < self.min_length or (
            self.max_length is not None and L > self.max_length
        ):
            hi = "" if self.max_length is None else f" <= {self.max_length}"
            raise ValueError(
                f"{self.map_id} needs {self.min_length} <= L{hi}, got L={L}"
            )
        return L, 2, L

    def domain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.shifted(L, 2)

    def codomain(self, L: int, s: int, k: int) -> PartitionFamily:
        return PartitionFamily.anchored(L, 2, skip=L)


class LongGapMap(_GapMapBase):
    """Map "T16" (L >= 11).

    The witness (2, 3^3, 4^x, 5^y) is outside the image for a structural
    reason rather than a pure anchor-frequency one: images with anchor
    frequency 1 (cases 2(A) and the two f_3 = 1 swaps) carry at most two
    copies of 3, while the witness carries three or four.
    """

    map_id = "T16"
    min_length = 11

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        f = pi.frequency(L)

        if f >= 1:
            try:
                sol = simple_solve(2, (L - 8) * f)
            except TooSmall as exc:
                raise SolverPreconditionError(str(exc)) from exc
            edits: dict[int, int] = {2: 4 * f}
            for part, amount in sol.as_deltas().items():
                accumulate(edits, part, amount)
            accumulate(edits, L, -f)
            return CaseLabel.build(self.map_id, ("1",), {"f": f}), edits

        sp = pi.smallest_part
        if sp >= 5:
            if sp == L + 2:
                return (
                    CaseLabel.build(self.map_id, ("2", "A'"), {"sp": sp}),
                    {2: 5, L - 8: 1, L + 2: -1},
                )
            return (
                CaseLabel.build(self.map_id, ("2", "A"), {"sp": sp}),
                {2: 1, sp - 2: 1, sp: -1},
            )
        if pi.frequency(4) >= 1:
            return (
                CaseLabel.build(self.map_id, ("2", "B", "i"), {}),
                {2: 2, 4: -1},
            )
        if pi.frequency(3) >= 2:
            return (
                CaseLabel.build(self.map_id, ("2", "B", "ii", "a"), {}),
                {2: 3, 3: -2},
            )
        m0 = next((m for m in pi.parts() if m >= 5), None)
        if m0 is None:
            raise NotApplicableError(
                f"{self.map_id}: the bare partition (3) has nowhere to go"
            )
        if m0 % 2 == 1:
            half = (m0 + 1) // 2
            edits = {}
            accumulate(edits, 2, 1)
            accumulate(edits, 3, -1)
            accumulate(edits, half, 2)
            accumulate(edits, m0, -1)
            return (
                CaseLabel.build(
                    self.map_id, ("2", "B", "ii", "b", "alpha"), {"m0": m0}
                ),
                edits,
            )
        half = m0 // 2
        edits = {}
        accumulate(edits, 2, 1)
        accumulate(edits, 3, -1)
        accumulate(edits, half, 1)
        accumulate(edits, half + 1, 1)
        accumulate(edits, m0, -1)
        return (
            CaseLabel.build(self.map_id, ("2", "B", "ii", "b", "beta"), {"m0": m0}),
            edits,
        )

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        if N == 14:
            return Partition([(2, 1), (3, 4)])
        if N < 15:
            raise SolverPreconditionError(
                f"{self.map_id}: no witness below weight 14, got {N}"
            )
        sol = simple_solve(3, N - 11)
        return Partition([(2, 1), (3, 3)]).with_changes(sol.as_deltas())

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (
            ("1",),
            ("2", "A"),
            ("2", "A'"),
            ("2", "B", "i"),
            ("2", "B", "ii", "a"),
            ("2", "B", "ii", "b", "alpha"),
            ("2", "B", "ii", "b", "beta"),
        )

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        table: dict[tuple[str, ...], tuple[str, object]] = {
            ("1",): ("positive multiples of 4", lambda v: v >= 4 and v % 4 == 0),
            ("2", "A"): ("exactly 1", lambda v: v == 1),
            ("2", "A'"): ("exactly 5", lambda v: v == 5),
            ("2", "B", "i"): ("exactly 2", lambda v: v == 2),
            ("2", "B", "ii", "a"): ("exactly 3", lambda v: v == 3),
            ("2", "B", "ii", "b", "alpha"): ("exactly 1", lambda v: v == 1),
            ("2", "B", "ii", "b", "beta"): ("exactly 1", lambda v: v == 1),
        }
        if path not in table:
            raise KeyError(f"{self.map_id} has no case {path}")
        description, contains = table[path]
        return CaseSignature(self.map_id, path, description, contains)


class MediumGapMap(_GapMapBase):
    """Map "T17" (5 <= L <= 10)."""

    map_id = "T17"
    min_length = 5
    max_length = 10

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        f = pi.frequency(L)

        if f >= 1:
            if f % 2 == 0:
                return (
                    CaseLabel.build(self.map_id, ("1",), {"f": f}),
                    {2: L * f // 2, L: -f},
                )
            return (
                CaseLabel.build(self.map_id, ("2",), {"f": f}),
                {2: L * (f - 1) // 2 + 1, L - 2: 1, L: -f},
            )

        i0 = next((m for m in pi.parts() if pi.frequency(m) >= 2), None)
        if i0 is None:
            raise NotApplicableError(
                f"{self.map_id}: {L} is absent and every part is a singleton"
            )
        if i0 == L + 1:
            return (
                CaseLabel.build(self.map_id, ("3", "ii"), {"i0": i0}),
                {2: 2, L - 1: 2, L + 1: -2},
            )
        return (
            CaseLabel.build(self.map_id, ("3", "i"), {"i0": i0}),
            {2: i0, i0: -2},
        )

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        try:
            pair = sylvester_solve(3, 4, N - 2 * (L + 3))
        except BelowBound as exc:
            raise SolverPreconditionError(
                f"{self.map_id}: no witness this small (weight {N})"
            ) from exc
        return Partition([(2, L + 3), (3, pair.x), (4, pair.y)])

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (("1",), ("2",), ("3", "i"), ("3", "ii"))

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        if path == ("1",):
            return CaseSignature(
                self.map_id,
                path,
                f"positive multiples of {L}",
                lambda v: v >= L and v % L == 0,
            )
        if path == ("2",):
            return CaseSignature(
                self.map_id,
                path,
                f"1 mod {L}, at least 1",
                lambda v: v >= 1 and v % L == 1,
            )
        if path == ("3", "i"):
            allowed = frozenset(range(3, L + 3)) - {L, L + 1}
            return CaseSignature(
                self.map_id,
                path,
                f"doubled-slot values {sorted(allowed)}",
                lambda v: v in allowed,
            )
        if path == ("3", "ii"):
            return CaseSignature(self.map_id, path, "exactly 2", lambda v: v == 2)
        raise KeyError(f"{self.map_id} has no case {path}")


class ShortGapMap(_GapMapBase):
    """Map "T18" (L = 3): parts in [3, 5], part 3 excluded from the image."""

    map_id = "T18"
    min_length = 3
    max_length = 3

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        f3 = pi.frequency(3)

        if f3 >= 2 and f3 % 2 == 0:
            return (
                CaseLabel.build(self.map_id, ("1",), {"f3": f3}),
                {2: 3 * f3 // 2, 3: -f3},
            )
        if f3 >= 3:
            return (
                CaseLabel.build(self.map_id, ("2",), {"f3": f3}),
                {2: 3 * (f3 - 3) // 2 + 2, 3: -f3, 5: 1},
            )
        if f3 == 1:
            if pi.frequency(4) >= 1:
                return (
                    CaseLabel.build(self.map_id, ("3", "i"), {}),
                    {2: 1, 3: -1, 4: -1, 5: 1},
                )
            if pi.frequency(5) >= 1:
                return (
                    CaseLabel.build(self.map_id, ("3", "ii"), {}),
                    {2: 4, 3: -1, 5: -1},
                )
            raise NotApplicableError(
                f"{self.map_id}: the bare partition (3) has nowhere to go"
            )
        if pi.frequency(4) >= 8:
            return (
                CaseLabel.build(self.map_id, ("4", "i"), {}),
                {2: 16, 4: -8},
            )
        if pi.frequency(5) >= 4:
            return (
                CaseLabel.build(self.map_id, ("4", "ii"), {}),
                {2: 10, 5: -4},
            )
        raise NotApplicableError(
            f"{self.map_id}: 3 is absent with fewer than eight 4s and four 5s"
        )

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        try:
            pair = sylvester_solve(4, 5, N - 14)
        except BelowBound as exc:
            raise SolverPreconditionError(
                f"{self.map_id}: no witness this small (weight {N})"
            ) from exc
        return Partition([(2, 7), (4, pair.x), (5, pair.y)])

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (("1",), ("2",), ("3", "i"), ("3", "ii"), ("4", "i"), ("4", "ii"))

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        table: dict[tuple[str, ...], tuple[str, object]] = {
            ("1",): ("positive multiples of 3", lambda v: v >= 3 and v % 3 == 0),
            ("2",): ("2 mod 3, at least 2", lambda v: v >= 2 and v % 3 == 2),
            ("3", "i"): ("exactly 1", lambda v: v == 1),
            ("3", "ii"): ("exactly 4", lambda v: v == 4),
            ("4", "i"): ("exactly 16", lambda v: v == 16),
            ("4", "ii"): ("exactly 10", lambda v: v == 10),
        }
        if path not in table:
            raise KeyError(f"{self.map_id} has no case {path}")
        description, contains = table[path]
        return CaseSignature(self.map_id, path, description, contains)


class FourGapMap(_GapMapBase):
    """Map "T19" (L = 4): parts in [3, 6], part 4 excluded from the image."""

    map_id = "T19"
    min_length = 4
    max_length = 4

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        self._require_domain(L, s, k, pi)
        f4 = pi.frequency(4)

        if f4 >= 1:
            return (
                CaseLabel.build(self.map_id, ("1",), {"f4": f4}),
                {2: 2 * f4, 4: -f4},
            )
        if pi.frequency(3) >= 2:
            return (
                CaseLabel.build(self.map_id, ("2", "i"), {}),
                {2: 3, 3: -2},
            )
        if pi.frequency(5) >= 2:
            return (
                CaseLabel.build(self.map_id, ("2", "ii"), {}),
                {2: 5, 5: -2},
            )
        if pi.frequency(6) >= 3:
            return (
                CaseLabel.build(self.map_id, ("2", "iii"), {}),
                {2: 9, 6: -3},
            )
        raise NotApplicableError(
            f"{self.map_id}: 4 is absent and the 3/5/6 slots are all light"
        )

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        try:
            pair = sylvester_solve(3, 5, N - 2)
        except BelowBound as exc:
            raise SolverPreconditionError(
                f"{self.map_id}: no witness this small (weight {N})"
            ) from exc
        return Partition([(2, 1), (3, pair.x), (5, pair.y)])

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        return (("1",), ("2", "i"), ("2", "ii"), ("2", "iii"))

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        table: dict[tuple[str, ...], tuple[str, object]] = {
            ("1",): ("positive even values", lambda v: v >= 2 and v % 2 == 0),
            ("2", "i"): ("exactly 3", lambda v: v == 3),
            ("2", "ii"): ("exactly 5", lambda v: v == 5),
            ("2", "iii"): ("exactly 9", lambda v: v == 9),
        }
        if path not in table:
            raise KeyError(f"{self.map_id} has no case {path}")
        description, contains = table[path]
        return CaseSignature(self.map_id, path, description, contains)
