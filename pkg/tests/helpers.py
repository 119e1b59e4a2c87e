"""Shared sweep machinery for the injection-map test modules."""

from __future__ import annotations

from dataclasses import dataclass, field

from partineq.injections import NotApplicableError, get_map
from partineq.partitions import Partition, count_family, enumerate_family, member


@dataclass
class SweepBook:
    """Everything one exhaustive weight sweep of a map learned."""

    weight: int
    images: dict[Partition, Partition] = field(default_factory=dict)
    labels: dict[Partition, object] = field(default_factory=dict)
    not_applicable: list[Partition] = field(default_factory=list)


def sweep_map(
    map_id: str,
    L: int,
    weights,
    s: int | None = None,
    k: int | None = None,
) -> list[SweepBook]:
    """Apply a map to every domain member at each weight, checking the books.

    Asserts, per weight: no two sources share an image (injectivity), the
    anchor frequency of every image lands in its case's declared signature,
    and sources split exactly into mapped plus not-applicable.  Weight and
    codomain membership are checked inside ``apply`` itself.
    """
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    domain = mapper.domain(L, s, k)
    signatures = {
        path: mapper.signature(L, s, k, path) for path in mapper.case_paths(L, s, k)
    }
    books = []
    for N in weights:
        book = SweepBook(N)
        for pi in enumerate_family(domain, N):
            try:
                label, image = mapper.apply(L, s, k, pi)
            except NotApplicableError:
                book.not_applicable.append(pi)
                continue
            clash = book.images.get(image)
            assert clash is None, (
                f"{map_id} collision at weight {N}: {clash} and {pi} -> {image}"
            )
            book.images[image] = pi
            book.labels[image] = label
            anchor = image.frequency(s)
            assert signatures[label.path].contains(anchor), (
                f"{map_id} case {label.render()} stamped anchor frequency"
                f" {anchor} outside its signature ({signatures[label.path].description})"
            )
        assert len(book.images) + len(book.not_applicable) == count_family(domain, N)
        books.append(book)
    return books


def check_witness_excluded(
    map_id: str,
    L: int,
    books: list[SweepBook],
    s: int | None = None,
    k: int | None = None,
) -> None:
    """The witness at each swept weight is a codomain member hit by nobody."""
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    codomain = mapper.codomain(L, s, k)
    for book in books:
        wit = mapper.witness(L, s, k, book.weight)
        assert wit.weight == book.weight
        assert member(codomain, wit)
        assert wit not in book.images, (
            f"{map_id} witness {wit} at weight {book.weight} is the image"
            f" of {book.images[wit]}"
        )


def assert_signatures_disjoint(
    map_id: str,
    L: int,
    values,
    s: int | None = None,
    k: int | None = None,
    allowed_overlap: frozenset[tuple[str, ...]] = frozenset(),
) -> None:
    """No two cases may claim the same anchor frequency, bar listed overlaps."""
    mapper = get_map(map_id)
    L, s, k = mapper.normalize(L, s, k)
    paths = mapper.case_paths(L, s, k)
    signatures = {path: mapper.signature(L, s, k, path) for path in paths}
    for value in values:
        hits = [path for path in paths if signatures[path].contains(value)]
        if len(hits) > 1:
            assert set(hits) <= allowed_overlap, (
                f"{map_id}: anchor frequency {value} claimed by {hits}"
            )
