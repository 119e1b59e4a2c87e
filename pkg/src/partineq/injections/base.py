"""Shared machinery for the case-built injection maps.

Each map sends one bounded-part partition family into another by a case
analysis on the source partition; a case is identified by a path of tokens
(rendered like ``2(B)(ii)(b)(alpha)``) plus the selector values the case
picked (a slot index, a large part, a frequency).  Applying a map means
turning the case into a frequency edit, then checking weight preservation
and codomain membership outright.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from partineq.partitions import (
    NegativeFrequencyError,
    Partition,
    PartitionFamily,
    member,
)

__all__ = [
    "CaseLabel",
    "CaseSignature",
    "CodomainViolationError",
    "InjectionMapBase",
    "NegativeFrequencyError",
    "NotApplicableError",
    "SolverPreconditionError",
    "WeightViolationError",
]


class NotApplicableError(Exception):
    """No case of the map applies to this partition (below the regime)."""


class SolverPreconditionError(Exception):
    """A required linear-form solution does not exist at this size."""


class CodomainViolationError(RuntimeError):
    """An image left the target family; surfaced loudly, never patched."""


class WeightViolationError(CodomainViolationError):
    """A rewrite changed the partition's weight (worst kind of exit)."""


@dataclass(frozen=True)
class CaseLabel:
    """Which case of which map fired, and with which selector values."""

    map_id: str
    path: tuple[str, ...]
    selectors: tuple[tuple[str, int], ...] = ()

    @classmethod
    def build(
        cls, map_id: str, path: tuple[str, ...], selectors: Mapping[str, int]
    ) -> "CaseLabel":
        return cls(map_id, path, tuple(sorted(selectors.items())))

    def selector(self, name: str) -> int:
        for key, value in self.selectors:
            if key == name:
                return value
        raise KeyError(f"label {self.render()} has no selector {name!r}")

    def selector_dict(self) -> dict[str, int]:
        return dict(self.selectors)

    def render(self) -> str:
        if not self.path:
            return "?"
        head, *rest = self.path
        return head + "".join(f"({token})" for token in rest)

    def __str__(self) -> str:
        return f"{self.map_id}:{self.render()}"


@dataclass
class CaseSignature:
    """The set of anchor-part frequencies a case can stamp on its images.

    ``contains`` answers membership for a candidate frequency; the
    description spells out the set in words.
    """

    map_id: str
    path: tuple[str, ...]
    description: str
    _contains: Callable[[int], bool] = field(repr=False)

    def contains(self, value: int) -> bool:
        return self._contains(value)


class InjectionMapBase:
    """Template for a case-built injection between partition families."""

    map_id: str = ""

    # -- parameter plumbing -------------------------------------------------

    def normalize(self, L: int, s: int | None, k: int | None) -> tuple[int, int, int]:
        """Validate (L, s, k), filling map-specific defaults; returns the triple."""
        raise NotImplementedError

    def domain(self, L: int, s: int, k: int) -> PartitionFamily:
        raise NotImplementedError

    def codomain(self, L: int, s: int, k: int) -> PartitionFamily:
        raise NotImplementedError

    # -- the map itself -----------------------------------------------------

    def analyze(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, dict[int, int]]:
        """(case label, frequency edits) for a domain partition."""
        raise NotImplementedError

    def classify(self, L: int, s: int, k: int, pi: Partition) -> CaseLabel:
        label, _ = self.analyze(L, s, k, pi)
        return label

    def apply(
        self, L: int, s: int, k: int, pi: Partition
    ) -> tuple[CaseLabel, Partition]:
        """Case label and image of ``pi``, weight and codomain checked on the spot."""
        label, edits = self.analyze(L, s, k, pi)
        image = pi.with_changes(edits)
        if image.weight != pi.weight:
            raise WeightViolationError(
                f"{self.map_id}: image weight {image.weight} != {pi.weight}"
                f" for {pi}"
            )
        target = self.codomain(L, s, k)
        if not member(target, image):
            raise CodomainViolationError(
                f"{self.map_id}: image {image} of {pi} is outside the"
                f" target family (parts [{target.lo}, {target.hi}],"
                f" excluded {sorted(target.excluded)})"
            )
        return label, image

    def witness(self, L: int, s: int, k: int, N: int) -> Partition:
        """A codomain member at weight N that no domain partition maps to."""
        raise NotImplementedError

    def case_paths(self, L: int, s: int, k: int) -> tuple[tuple[str, ...], ...]:
        """All case paths this map can emit under these parameters."""
        raise NotImplementedError

    def signature(
        self, L: int, s: int, k: int, path: tuple[str, ...]
    ) -> CaseSignature:
        raise NotImplementedError

    # -- helpers ------------------------------------------------------------

    def _require_domain(self, L: int, s: int, k: int, pi: Partition) -> None:
        fam = self.domain(L, s, k)
        if not member(fam, pi):
            raise ValueError(
                f"{self.map_id}: {pi} is not in the source family"
                f" (parts [{fam.lo}, {fam.hi}])"
            )


def accumulate(edits: dict[int, int], part: int, delta: int) -> None:
    """Merge a frequency delta into an edit dict, dropping zero entries."""
    new = edits.get(part, 0) + delta
    if new:
        edits[part] = new
    else:
        edits.pop(part, None)
