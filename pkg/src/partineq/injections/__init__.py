"""Case-by-case injections between bounded-part partition families.

Every map takes a partition from its domain family and produces one in its
codomain family of the same weight, choosing a rewrite rule from a finite
case tree.  The maps are exposed through a registry keyed by short ids:

========  =======================================  =========================
id        families (s, excluded part)              valid lengths
========  =======================================  =========================
T8        shifted -> anchored, k = L+s-1 pinned    L+s-1 >= F(s)
T9        shifted -> anchored, any k               k >= F(s)
T10       shifted -> anchored, k in [s+1, 2s+1]    L >= 3s+3
T12       shifted -> anchored, any k               L >= 3 (huge thresholds)
T16       shifted -> anchored, s = 2, k = L        L >= 11
T17       shifted -> anchored, s = 2, k = L        5 <= L <= 10
T18       shifted -> anchored, s = 2, k = L        L = 3
T19       shifted -> anchored, s = 2, k = L        L = 4
L14easy   contains L+s-1 -> contains s             L >= s+1
========  =======================================  =========================

The module-level helpers fill in each map's pinned parameters: "T8" forces
k = L+s-1, the four bounded-gap maps force s = 2 and k = L.
"""

from __future__ import annotations

from partineq.injections.base import (
    CaseLabel,
    CaseSignature,
    CodomainViolationError,
    InjectionMapBase,
    NotApplicableError,
    SolverPreconditionError,
    WeightViolationError,
)
from partineq.injections.gap_maps import (
    FourGapMap,
    LongGapMap,
    MediumGapMap,
    ShortGapMap,
)
from partineq.injections.general_exclusion import GeneralExclusionMap, carrier_offsets
from partineq.injections.low_exclusion import LowExclusionMap
from partineq.injections.presence_swap import PresenceSwapMap
from partineq.injections.tail_exclusion import TailExclusionMap
from partineq.partitions import Partition

_MAPS: dict[str, InjectionMapBase] = {
    m.map_id: m
    for m in (
        TailExclusionMap("T8", pinned=True),
        TailExclusionMap("T9", pinned=False),
        LowExclusionMap(),
        GeneralExclusionMap(),
        LongGapMap(),
        MediumGapMap(),
        ShortGapMap(),
        FourGapMap(),
        PresenceSwapMap(),
    )
}

MAP_IDS: tuple[str, ...] = tuple(sorted(_MAPS))


def get_map(map_id: str) -> InjectionMapBase:
    try:
        return _MAPS[map_id]
    except KeyError:
        known = ", ".join(MAP_IDS)
        raise KeyError(f"unknown map {map_id!r}; known ids: {known}") from None


def classify(
    map_id: str,
    L: int,
    pi: Partition,
    s: int | None = None,
    k: int | None = None,
) -> CaseLabel:
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    label, _ = mapper.analyze(L, s, k, pi)
    return label


def apply_map(
    map_id: str,
    L: int,
    pi: Partition,
    s: int | None = None,
    k: int | None = None,
) -> tuple[CaseLabel, Partition]:
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    return mapper.apply(L, s, k, pi)


def witness(
    map_id: str,
    L: int,
    N: int,
    s: int | None = None,
    k: int | None = None,
) -> Partition:
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    return mapper.witness(L, s, k, N)


def case_signature(
    map_id: str,
    L: int,
    path: tuple[str, ...],
    s: int | None = None,
    k: int | None = None,
) -> CaseSignature:
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    return mapper.signature(L, s, k, path)


__all__ = [
    "CaseLabel",
    "CaseSignature",
    "CodomainViolationError",
    "InjectionMapBase",
    "MAP_IDS",
    "NotApplicableError",
    "SolverPreconditionError",
    "WeightViolationError",
    "apply_map",
    "carrier_offsets",
    "case_signature",
    "classify",
    "get_map",
    "witness",
]
