"""Cross-checks that tie the package together.

Counting versus series arithmetic, full map runs over enumerated families,
reference-row reproduction, and batch scans over parameter grids.  Every
check returns a plain report object instead of raising when something fails:
``ok`` on the report says whether the checked property held, ``as_dict``
fixes the key order so serialized output is stable, and the command line
turns ``ok`` into exit codes.  Genuine usage errors (unknown ids,
out-of-range parameters) still raise ValueError.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from partineq import _tables
from partineq.injections import (
    CodomainViolationError,
    NotApplicableError,
    SolverPreconditionError,
    WeightViolationError,
    get_map,
)
from partineq.partitions import (
    Partition,
    PartitionFamily,
    count_family,
    count_family_upto,
    enumerate_family,
    member,
)
from partineq.series import (
    bounded_gap_surplus_series,
    presence_surplus_series,
    surplus_series,
)
from partineq.thresholds import bounded_gap_floor

SCHEMA_VERSION = 1

SERIES_SELECTORS: tuple[str, ...] = ("H", "G2", "AB")
CONJECTURE_IDS: tuple[str, ...] = ("C1", "C2", "C3", "C5")

_FAILURE_CAP = 25


class InequalityCheck(NamedTuple):
    """Counts of the two families at one weight; strict means lhs > rhs."""

    lhs: int
    rhs: int
    strict: bool


def verify_inequality(L: int, s: int, k: int, N: int) -> InequalityCheck:
    """Count anchored members against shifted members at weight N.

    lhs counts partitions with smallest part s, parts <= L+s and k absent;
    rhs counts nonempty partitions with parts in [s+1, L+s].  The comparison
    of interest is lhs >= rhs; ``strict`` records lhs > rhs.
    """
    if L < 3:
        raise ValueError(f"need L >= 3, got {L}")
    if not (s + 1 <= k <= L + s):
        raise ValueError(f"need s+1 <= k <= L+s, got k={k}")
    if N < 0:
        raise ValueError(f"need N >= 0, got {N}")
    lhs = count_family(PartitionFamily.anchored(L, s, skip=k), N)
    rhs = count_family(PartitionFamily.shifted(L, s), N)
    return InequalityCheck(lhs, rhs, lhs > rhs)


@dataclass(frozen=True)
class InjectionReport:
    """Outcome of running one map over a whole weight slice of its domain.

    The size bookkeeping keeps ``injective`` honest by construction: it is
    true exactly when no two sources shared an image and nothing was lost
    on the way, i.e. when domain_size - not_applicable_count == image_size.
    """

    theorem: str
    L: int
    s: int | None
    k: int | None
    N: int
    domain_size: int
    image_size: int
    not_applicable_count: int
    weight_ok: bool
    codomain_ok: bool
    injective: bool
    witness_found: bool
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (
            self.weight_ok
            and self.codomain_ok
            and self.injective
            and not self.failures
        )

    def as_dict(self) -> dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "injection",
            "theorem": self.theorem,
            "L": self.L,
            "s": self.s,
            "k": self.k,
            "N": self.N,
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "not_applicable_count": self.not_applicable_count,
            "weight_ok": self.weight_ok,
            "codomain_ok": self.codomain_ok,
            "injective": self.injective,
            "witness_found": self.witness_found,
            "ok": self.ok,
            "failures": list(self.failures),
        }


def _push(failures: list[str], message: str) -> None:
    if len(failures) < _FAILURE_CAP:
        failures.append(message)
    elif len(failures) == _FAILURE_CAP:
        failures.append("further failures suppressed")


def verify_injection(
    theorem: str,
    L: int,
    N: int,
    s: int | None = None,
    k: int | None = None,
) -> InjectionReport:
    """Apply one map to every domain partition of weight N and report.

    Never raises: unknown ids and rejected parameters come back as a report
    whose failures list holds the refusal.  The witness recipe is attempted
    as well; witness_found means it produced a codomain member at weight N
    that no domain partition mapped to.
    """
    failures: list[str] = []
    try:
        mapper = get_map(theorem)
        L, s, k = mapper.normalize(L, s, k)
    except (KeyError, ValueError) as exc:
        return InjectionReport(
            theorem=theorem,
            L=L,
            s=s,
            k=k,
            N=N,
            domain_size=0,
            image_size=0,
            not_applicable_count=0,
            weight_ok=False,
            codomain_ok=False,
            injective=False,
            witness_found=False,
            failures=(str(exc),),
        )
    domain = mapper.domain(L, s, k)
    codomain = mapper.codomain(L, s, k)
    members = enumerate_family(domain, N)
    images: dict[Partition, Partition] = {}
    not_applicable = 0
    weight_ok = True
    codomain_ok = True
    collided = False
    for pi in members:
        try:
            _, image = mapper.apply(L, s, k, pi)
        except NotApplicableError:
            not_applicable += 1
            continue
        except WeightViolationError as exc:
            weight_ok = False
            _push(failures, str(exc))
            continue
        except CodomainViolationError as exc:
            codomain_ok = False
            _push(failures, str(exc))
            continue
        except SolverPreconditionError as exc:
            _push(failures, f"{pi}: {exc}")
            continue
        previous = images.get(image)
        if previous is not None:
            collided = True
            _push(failures, f"collision at {image}: {previous} and {pi}")
        else:
            images[image] = pi
    injective = not collided and len(members) - not_applicable == len(images)
    witness_found = False
    try:
        candidate = mapper.witness(L, s, k, N)
    except (SolverPreconditionError, NotImplementedError):
        candidate = None
    if candidate is not None:
        if candidate.weight != N or not member(codomain, candidate):
            _push(failures, f"witness {candidate} invalid at weight {N}")
        elif candidate in images:
            _push(
                failures,
                f"witness {candidate} collides with the image of"
                f" {images[candidate]}",
            )
        else:
            witness_found = True
    return InjectionReport(
        theorem=theorem,
        L=L,
        s=s,
        k=k,
        N=N,
        domain_size=len(members),
        image_size=len(images),
        not_applicable_count=not_applicable,
        weight_ok=weight_ok,
        codomain_ok=codomain_ok,
        injective=injective,
        witness_found=witness_found,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class PositivityReport:
    """Coefficients of one series on a window, with negativity bookkeeping.

    ``violations`` holds the negative coefficients at positions where none
    is allowed; ``expected_dips`` the values found at positions where a -1
    is known to occur (so ok requires exactly -1 there).  The empirical
    threshold is the smallest N in the window from which every scanned
    coefficient is nonnegative, or None when the window's top coefficient
    is itself negative; it is a statement about the window only.
    """

    series: str
    L: int
    s: int | None
    k: int | None
    n_lo: int
    n_hi: int
    trunc: int
    coefficients: tuple[int, ...]
    violations: tuple[tuple[int, int], ...]
    expected_dips: tuple[tuple[int, int], ...]
    empirical_threshold: int | None

    @property
    def ok(self) -> bool:
        return not self.violations and all(
            value == -1 for _, value in self.expected_dips
        )

    def coefficient(self, n: int) -> int:
        if not (self.n_lo <= n <= self.n_hi):
            raise IndexError(f"{n} outside the scanned window [{self.n_lo}, {self.n_hi}]")
        return self.coefficients[n - self.n_lo]

    def as_dict(self) -> dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "positivity",
            "series": self.series,
            "L": self.L,
            "s": self.s,
            "k": self.k,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "trunc": self.trunc,
            "violations": [list(row) for row in self.violations],
            "expected_dips": [list(row) for row in self.expected_dips],
            "empirical_threshold": self.empirical_threshold,
            "ok": self.ok,
            "coefficients": list(self.coefficients),
        }


def expected_gap_dips(L: int) -> tuple[int, ...]:
    """Weights where the folded gap surplus is known to dip to -1."""
    if L < 3:
        raise ValueError(f"need L >= 3, got {L}")
    dips = [3]
    if L <= 4:
        dips.append(9)
    if L == 3:
        dips.append(15)
    return tuple(dips)


def scan_positivity(
    series: str,
    n_lo: int,
    n_hi: int,
    trunc: int | None = None,
    *,
    L: int,
    s: int | None = None,
    k: int | None = None,
) -> PositivityReport:
    """Inspect one series' coefficients on [n_lo, n_hi].

    ``series`` picks the generating function: "H" is surplus_series(L, s, k),
    "G2" its fold along steps of L (s = 2, k = L implied), and "AB" the
    presence surplus at (L, s).  trunc defaults to n_hi and must not be
    smaller.  Only "G2" has positions where a dip is expected.
    """
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError(f"bad scan window [{n_lo}, {n_hi}]")
    if trunc is None:
        trunc = n_hi
    if trunc < n_hi:
        raise ValueError(f"truncation order {trunc} is below the window top {n_hi}")
    expected: tuple[int, ...] = ()
    if series == "H":
        if s is None or k is None:
            raise ValueError("series H needs s and k")
        gf = surplus_series(L, s, k, trunc)
    elif series == "G2":
        if s not in (None, 2) or k not in (None, L):
            raise ValueError("series G2 is parametrized by L alone")
        s, k = 2, L
        gf = bounded_gap_surplus_series(L, trunc)
        expected = expected_gap_dips(L)
    elif series == "AB":
        if s is None:
            raise ValueError("series AB needs s")
        if k is not None:
            raise ValueError("series AB has no k parameter")
        gf = presence_surplus_series(L, s, trunc)
    else:
        known = ", ".join(SERIES_SELECTORS)
        raise ValueError(f"unknown series {series!r}; pick one of {known}")
    coeffs = gf.coefficients()[n_lo : n_hi + 1]
    violations: list[tuple[int, int]] = []
    dips: list[tuple[int, int]] = []
    for offset, value in enumerate(coeffs):
        n = n_lo + offset
        if n in expected:
            dips.append((n, value))
        elif value < 0:
            violations.append((n, value))
    threshold: int | None = n_lo
    for offset in range(len(coeffs) - 1, -1, -1):
        if coeffs[offset] < 0:
            n = n_lo + offset
            threshold = n + 1 if n < n_hi else None
            break
    return PositivityReport(
        series=series,
        L=L,
        s=s,
        k=k,
        n_lo=n_lo,
        n_hi=n_hi,
        trunc=trunc,
        coefficients=tuple(coeffs),
        violations=tuple(violations),
        expected_dips=tuple(dips),
        empirical_threshold=threshold,
    )


@dataclass(frozen=True)
class TableReport:
    """Embedded reference rows against freshly computed ones."""

    table_id: str
    columns: tuple[str, ...]
    expected: tuple[tuple[int, ...], ...]
    computed: tuple[tuple[int, ...], ...]
    extras: tuple[tuple[str, int, int], ...]
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "table",
            "table_id": self.table_id,
            "columns": list(self.columns),
            "expected": [list(row) for row in self.expected],
            "computed": [list(row) for row in self.computed],
            "extras": [list(row) for row in self.extras],
            "mismatches": list(self.mismatches),
            "ok": self.ok,
        }


def _negative_dip_rows() -> tuple[tuple[int, int, int, int], ...]:
    rows: list[tuple[int, int, int, int]] = []
    for L in range(5, 11):
        floor = bounded_gap_floor(L)
        gf = surplus_series(L, 2, L, floor + L)
        for n in range(floor + 1):
            value = gf[n]
            if value < 0:
                rows.append((L, n, value, gf[n + L]))
    return tuple(rows)


def reproduce_table(table_id: str) -> TableReport:
    """Recompute one embedded reference table from scratch and diff it."""
    extras: tuple[tuple[str, int, int], ...] = ()
    if table_id == "T4":
        columns = _tables.GAP_FLOOR_COLUMNS
        expected = _tables.GAP_FLOOR_ROWS
        computed = tuple((L, bounded_gap_floor(L)) for L in range(5, 11))
    elif table_id == "T5":
        columns = _tables.DIP_COLUMNS
        expected = _tables.DIP_ROWS
        computed = _negative_dip_rows()
        extras = tuple(
            (
                f"surplus({L},2,{L})[{n}]",
                value,
                surplus_series(L, 2, L, n)[n],
            )
            for (L, n), value in _tables.DIP_EXTRA_UNITS
        )
    elif table_id == "T6":
        columns = ("N", "value")
        row = _tables.SURPLUS_ROW_3_2_3
        expected = tuple(enumerate(row))
        gf = surplus_series(3, 2, 3, len(row) - 1)
        computed = tuple(enumerate(gf.coefficients()))
    elif table_id == "T7":
        columns = ("N", "value")
        row = _tables.SURPLUS_ROW_4_2_4
        expected = tuple(enumerate(row))
        gf = surplus_series(4, 2, 4, len(row) - 1)
        computed = tuple(enumerate(gf.coefficients()))
    else:
        known = ", ".join(_tables.TABLE_IDS)
        raise ValueError(f"unknown table {table_id!r}; pick one of {known}")
    mismatches: list[str] = []
    computed_set = set(computed)
    expected_set = set(expected)
    for row in expected:
        if row not in computed_set:
            mismatches.append(f"missing expected row {row}")
    for row in computed:
        if row not in expected_set:
            mismatches.append(f"unexpected computed row {row}")
    for name, want, got in extras:
        if want != got:
            mismatches.append(f"{name}: expected {want}, computed {got}")
    return TableReport(
        table_id=table_id,
        columns=tuple(columns),
        expected=tuple(expected),
        computed=tuple(computed),
        extras=extras,
        mismatches=tuple(mismatches),
    )


@dataclass(frozen=True)
class SuitePoint:
    """One grid point of a conjecture suite.

    ``failures`` rows are (N, lhs, rhs) for the counting suites and
    (N, coefficient) for the series suites; ``threshold`` is the smallest N
    in the window from which the relation held throughout, None when it was
    still failing at the top of the window.
    """

    params: tuple[tuple[str, int], ...]
    failures: tuple[tuple[int, ...], ...]
    expected_dips: tuple[tuple[int, int], ...]
    threshold: int | None
    ok: bool

    def param(self, name: str) -> int:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(f"no parameter {name!r} in {self.params}")

    def as_dict(self) -> dict[str, object]:
        return {
            "params": dict(self.params),
            "failures": [list(row) for row in self.failures],
            "expected_dips": [list(row) for row in self.expected_dips],
            "threshold": self.threshold,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class SuiteReport:
    """All grid points of one conjecture suite, in parameter order."""

    conjecture: str
    cap: int
    trunc: int
    points: tuple[SuitePoint, ...]

    @property
    def ok(self) -> bool:
        return all(point.ok for point in self.points)

    def failure_total(self) -> int:
        return sum(len(point.failures) for point in self.points)

    def as_dict(self) -> dict[str, object]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "conjecture-suite",
            "conjecture": self.conjecture,
            "cap": self.cap,
            "trunc": self.trunc,
            "ok": self.ok,
            "points": [point.as_dict() for point in self.points],
        }


def _suite_point(job: tuple[str, int, int, int, int, int]) -> SuitePoint:
    conjecture, L, s, k, cap, trunc = job
    if conjecture in ("C1", "C2"):
        skip = L + s - 1 if conjecture == "C1" else L
        lhs = count_family_upto(PartitionFamily.anchored(L, s, skip=skip), cap)
        rhs = count_family_upto(PartitionFamily.shifted(L, s), cap)
        failures = tuple(
            (n, lhs[n], rhs[n]) for n in range(cap + 1) if lhs[n] < rhs[n]
        )
        threshold: int | None = 0
        if failures:
            last = failures[-1][0]
            threshold = last + 1 if last < cap else None
        return SuitePoint(
            params=(("L", L), ("s", s)),
            failures=failures,
            expected_dips=(),
            threshold=threshold,
            ok=threshold is not None,
        )
    if conjecture == "C3":
        report = scan_positivity("H", 0, cap, trunc, L=L, s=s, k=k)
        return SuitePoint(
            params=(("L", L), ("s", s), ("k", k)),
            failures=report.violations,
            expected_dips=(),
            threshold=report.empirical_threshold,
            ok=report.empirical_threshold is not None,
        )
    if conjecture == "C5":
        report = scan_positivity("G2", 0, cap, trunc, L=L)
        return SuitePoint(
            params=(("L", L),),
            failures=report.violations,
            expected_dips=report.expected_dips,
            threshold=report.empirical_threshold,
            ok=report.ok,
        )
    raise ValueError(f"unknown conjecture {conjecture!r}")


def run_conjecture_suite(
    conjecture: str,
    *,
    L_values: Sequence[int] | None = None,
    s_values: Sequence[int] | None = None,
    cap: int | None = None,
    trunc: int | None = None,
    jobs: int = 1,
) -> SuiteReport:
    """Scan one conjectured inequality family over a parameter grid.

    C1 compares the anchored family skipping L+s-1 against the shifted one
    at every weight up to cap, C2 skips L instead, C3 scans the surplus
    series for every k in [s+1, L+s+5], and C5 scans the folded gap surplus
    with its known dips.  Defaults reproduce the published check ranges.
    Grid points are independent; jobs > 1 fans them out to worker processes
    and the merged report is always sorted by parameter tuple.
    """
    if conjecture not in CONJECTURE_IDS:
        known = ", ".join(CONJECTURE_IDS)
        raise ValueError(f"unknown conjecture {conjecture!r}; pick one of {known}")
    if jobs < 1:
        raise ValueError(f"need jobs >= 1, got {jobs}")
    if conjecture == "C5":
        if s_values is not None:
            raise ValueError("C5 is parametrized by L alone")
        Ls = tuple(L_values) if L_values is not None else tuple(range(3, 13))
        cap = 1000 if cap is None else cap
    elif conjecture == "C3":
        Ls = tuple(L_values) if L_values is not None else tuple(range(3, 7))
        ss = tuple(s_values) if s_values is not None else (1, 2, 3)
        cap = 300 if cap is None else cap
    else:
        Ls = tuple(L_values) if L_values is not None else tuple(range(3, 9))
        ss = tuple(s_values) if s_values is not None else (1, 2)
        cap = 300 if cap is None else cap
    if trunc is None:
        trunc = cap
    if trunc < cap:
        raise ValueError(f"truncation order {trunc} is below the weight cap {cap}")
    grid: list[tuple[str, int, int, int, int, int]] = []
    if conjecture == "C5":
        for L in sorted(Ls):
            grid.append((conjecture, L, 2, L, cap, trunc))
    elif conjecture == "C3":
        for L in sorted(Ls):
            for s in sorted(ss):
                for k in range(s + 1, L + s + 6):
                    grid.append((conjecture, L, s, k, cap, trunc))
    else:
        for L in sorted(Ls):
            for s in sorted(ss):
                grid.append((conjecture, L, s, 0, cap, trunc))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            points = list(pool.map(_suite_point, grid))
    else:
        points = [_suite_point(job) for job in grid]
    points.sort(key=lambda point: tuple(value for _, value in point.params))
    return SuiteReport(
        conjecture=conjecture,
        cap=cap,
        trunc=trunc,
        points=tuple(points),
    )
