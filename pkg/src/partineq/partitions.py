"""Integer partitions in frequency form, and bounded-part partition families.

A partition is stored as a zero-free map ``{part: frequency}``.  The families
handled here all live inside a part interval ``[lo, hi]`` and differ only in
which part is required, which part is forbidden, and whether the empty
partition counts as a member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class NegativeFrequencyError(ValueError):
    """An edit drove some part's frequency below zero."""


class Partition:
    """Immutable integer partition in frequency form.

    Frequencies are kept zero-free: a part is present iff its frequency is
    positive.  The weight (sum of parts with multiplicity) is cached.
    """

    __slots__ = ("_freqs", "_weight", "_hash")

    def __init__(self, entries: Iterable[tuple[int, int]] = ()) -> None:
        freqs: dict[int, int] = {}
        for part, freq in entries:
            if part <= 0:
                raise ValueError(f"parts must be positive, got {part}")
            if freq < 0:
                raise NegativeFrequencyError(
                    f"frequency of part {part} is negative ({freq})"
                )
            if freq:
                freqs[part] = freqs.get(part, 0) + freq
        self._freqs = freqs
        self._weight = sum(part * freq for part, freq in freqs.items())
        self._hash = hash(tuple(sorted(freqs.items())))

    @property
    def weight(self) -> int:
        return self._weight

    def frequency(self, part: int) -> int:
        return self._freqs.get(part, 0)

    def parts(self) -> tuple[int, ...]:
        """Distinct parts, ascending."""
        return tuple(sorted(self._freqs))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """(part, frequency) pairs, parts ascending."""
        return tuple(sorted(self._freqs.items()))

    @property
    def smallest_part(self) -> int | None:
        return min(self._freqs) if self._freqs else None

    @property
    def largest_part(self) -> int | None:
        return max(self._freqs) if self._freqs else None

    def __bool__(self) -> bool:
        return bool(self._freqs)

    def with_changes(self, deltas: Mapping[int, int]) -> "Partition":
        """A new partition with frequencies shifted by ``deltas``.

        Raises NegativeFrequencyError if any resulting frequency is negative.
        """
        freqs = dict(self._freqs)
        for part, delta in deltas.items():
            new = freqs.get(part, 0) + delta
            if new < 0:
                raise NegativeFrequencyError(
                    f"frequency of part {part} would become {new}"
                )
            if new:
                freqs[part] = new
            else:
                freqs.pop(part, None)
        return Partition(freqs.items())

    def replacing(self, part: int, frequency: int) -> "Partition":
        """A new partition with the frequency of ``part`` set outright."""
        return self.with_changes({part: frequency - self.frequency(part)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._freqs == other._freqs

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._freqs:
            return "()"
        chunks = []
        for part, freq in self.pairs():
            chunks.append(f"{part}^{freq}" if freq != 1 else str(part))
        return ",".join(chunks)

    def __repr__(self) -> str:
        return f"Partition({list(self.pairs())!r})"


def make_partition(entries: Iterable[tuple[int, int]]) -> Partition:
    """Build a partition from (part, frequency) pairs.

    Duplicate parts are merged, zero frequencies dropped; non-positive parts
    and negative frequencies are rejected.
    """
    return Partition(entries)


def parse_partition(text: str) -> Partition:
    """Parse the CLI syntax ``2^3,5`` meaning three 2s and one 5."""
    text = text.strip()
    if not text or text == "()":
        return Partition()
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty entry in partition {text!r}")
        if "^" in chunk:
            part_s, _, freq_s = chunk.partition("^")
            entries.append((int(part_s), int(freq_s)))
        else:
            entries.append((int(chunk), 1))
    return Partition(entries)


EMPTY = Partition()


@dataclass(frozen=True)
class PartitionFamily:
    """Partitions with parts in ``[lo, hi]``, minus exclusions, plus requirements.

    ``required`` parts must appear at least once; ``excluded`` parts may not
    appear at all.  ``nonempty`` controls whether the empty partition is a
    member (it can only ever be one at weight 0).
    """

    lo: int
    hi: int
    required: frozenset[int] = field(default_factory=frozenset)
    excluded: frozenset[int] = field(default_factory=frozenset)
    nonempty: bool = False

    def __post_init__(self) -> None:
        if self.lo < 1 or self.hi < self.lo:
            raise ValueError(f"bad part interval [{self.lo}, {self.hi}]")
        for part in self.required:
            if not (self.lo <= part <= self.hi) or part in self.excluded:
                raise ValueError(f"required part {part} is not available")
        for part in self.excluded:
            if not (self.lo <= part <= self.hi):
                raise ValueError(f"excluded part {part} is outside the interval")

    # -- constructors for the families the maps and series talk about --

    @classmethod
    def shifted(cls, L: int, s: int) -> "PartitionFamily":
        """Nonempty partitions with parts in [s+1, L+s]."""
        _check_Ls(L, s)
        return cls(lo=s + 1, hi=L + s, nonempty=True)

    @classmethod
    def anchored(cls, L: int, s: int, skip: int) -> "PartitionFamily":
        """Partitions with smallest part exactly s, parts <= L+s, ``skip`` absent."""
        _check_Ls(L, s)
        if not (s + 1 <= skip <= L + s):
            raise ValueError(f"skipped part must lie in [s+1, L+s], got {skip}")
        return cls(
            lo=s,
            hi=L + s,
            required=frozenset((s,)),
            excluded=frozenset((skip,)),
            nonempty=True,
        )

    @classmethod
    def in_range(cls, L: int, s: int) -> "PartitionFamily":
        """Partitions (possibly empty) with parts in [s, L+s]."""
        _check_Ls(L, s)
        return cls(lo=s, hi=L + s)

    @classmethod
    def with_part(cls, L: int, s: int, part: int) -> "PartitionFamily":
        """Partitions with parts in [s, L+s] that contain ``part``."""
        _check_Ls(L, s)
        return cls(lo=s, hi=L + s, required=frozenset((part,)), nonempty=True)

    @classmethod
    def avoiding(cls, L: int, s: int, part: int) -> "PartitionFamily":
        """Partitions (possibly empty) with parts in [s, L+s], ``part`` absent."""
        _check_Ls(L, s)
        return cls(lo=s, hi=L + s, excluded=frozenset((part,)))

    # -- membership / enumeration / counting --

    def allowed_parts(self) -> tuple[int, ...]:
        return tuple(
            p for p in range(self.lo, self.hi + 1) if p not in self.excluded
        )

    def __contains__(self, partition: Partition) -> bool:
        return member(self, partition)


def _check_Ls(L: int, s: int) -> None:
    if L < 1:
        raise ValueError(f"interval length must be positive, got L={L}")
    if s < 1:
        raise ValueError(f"base part must be positive, got s={s}")


def member(family: PartitionFamily, partition: Partition) -> bool:
    """Is ``partition`` in ``family``?"""
    if not partition:
        return not family.nonempty and not family.required
    for part in partition.parts():
        if part < family.lo or part > family.hi or part in family.excluded:
            return False
    return all(partition.frequency(p) > 0 for p in family.required)


def enumerate_family(family: PartitionFamily, N: int) -> list[Partition]:
    """All members of ``family`` with weight ``N``.

    Ordered descending-lexicographically on frequency vectors read from the
    largest allowed part down, so the first result packs as much weight as
    possible into the biggest parts.
    """
    if N < 0:
        return []
    parts_desc = family.allowed_parts()[::-1]
    out: list[Partition] = []
    stack: list[tuple[int, int]] = []

    def walk(idx: int, remaining: int) -> None:
        if remaining == 0:
            cand = Partition(stack)
            if member(family, cand):
                out.append(cand)
            return
        if idx == len(parts_desc):
            return
        part = parts_desc[idx]
        for freq in range(remaining // part, -1, -1):
            if freq:
                stack.append((part, freq))
            walk(idx + 1, remaining - part * freq)
            if freq:
                stack.pop()

    walk(0, N)
    return out


def count_family(family: PartitionFamily, N: int) -> int:
    """|members of ``family`` with weight N|, computed by dynamic programming."""
    if N < 0:
        return 0
    return count_family_upto(family, N)[N]


def count_family_upto(family: PartitionFamily, N: int) -> list[int]:
    """Counts of members at every weight 0..N in one DP pass."""
    if N < 0:
        return []
    required = sorted(family.required)
    if len(required) > 1:
        raise NotImplementedError("families here require at most one part")
    table = _bounded_count_table(family.allowed_parts(), N)
    if required:
        # members containing part p at weight n = all-parts count at n - p
        # with one forced copy of p laid down first
        (p,) = required
        return [table[n - p] if n >= p else 0 for n in range(N + 1)]
    counts = list(table)
    if family.nonempty:
        counts[0] -= 1
    return counts


def _bounded_count_table(parts: tuple[int, ...], N: int) -> list[int]:
    table = [0] * (N + 1)
    table[0] = 1
    for part in parts:
        for n in range(part, N + 1):
            table[n] += table[n - part]
    return table


def iter_partitions(parts: tuple[int, ...], max_weight: int) -> Iterator[Partition]:
    """Every partition (including empty) into ``parts`` with weight <= max_weight.

    Plain nested recursion; used by verification sweeps at desk scale.
    """
    entries: list[tuple[int, int]] = []

    def walk(idx: int, budget: int) -> Iterator[Partition]:
        if idx == len(parts):
            yield Partition(entries)
            return
        part = parts[idx]
        for freq in range(budget // part + 1):
            if freq:
                entries.append((part, freq))
            yield from walk(idx + 1, budget - part * freq)
            if freq:
                entries.pop()

    yield from walk(0, max_weight)
