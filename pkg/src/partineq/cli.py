"""Command-line front end for the counting, series, and verification flows.

Ten subcommands cover the library surface: ``count``/``enumerate`` walk the
partition families, ``coeff``/``series`` evaluate the surplus series,
``inject``/``classify``/``witness`` drive the case maps one partition at a
time, and ``verify``/``tables``/``suite`` run the bulk checkers.  Output is
plain text by default; ``--format json`` emits the versioned report schema
shared with the verifier module and ``--format csv`` exports the tabular
commands.  Exit status: 0 when every requested check passed, 1 when a
verification failed or a map had no answer, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from partineq.injections import (
    MAP_IDS,
    CodomainViolationError,
    NotApplicableError,
    SolverPreconditionError,
    apply_map,
    case_signature,
    classify,
    witness,
)
from partineq.partitions import (
    Partition,
    PartitionFamily,
    count_family,
    count_family_upto,
    enumerate_family,
    member,
    parse_partition,
)
from partineq.series import (
    bounded_gap_surplus_series,
    exclusion_shift_series,
    presence_surplus_series,
    surplus_series,
    surplus_shift_identity,
)
from partineq.thresholds import thresholds
from partineq.verifier import (
    CONJECTURE_IDS,
    SCHEMA_VERSION,
    SERIES_SELECTORS,
    reproduce_table,
    run_conjecture_suite,
    scan_positivity,
    verify_inequality,
    verify_injection,
)
from partineq import _tables

FAMILY_NAMES = ("shifted", "anchored", "in-range", "with-part", "avoiding")
SERIES_NAMES = ("H", "G2", "AB", "shift")

_THRESHOLD_FIELDS = (
    "high_part_floor",
    "coverage_bound",
    "high_part_floor_alt",
    "coverage_bound_alt",
    "high_part_floor_small_k",
    "coverage_bound_small_k",
    "part_product",
    "bounded_gap_floor",
)


class UsageError(Exception):
    """A parameter combination the grammar cannot dispatch."""


def span(text: str) -> tuple[int, int]:
    """Parse a weight or inclusive weight range: ``15`` or ``4..200``."""
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise ValueError(f"weight range {text!r} is empty or negative")
    return lo, hi


def int_list(text: str) -> tuple[int, ...]:
    values = tuple(int(chunk) for chunk in text.split(","))
    if not values:
        raise ValueError("empty list")
    return values


def plain(pi: Partition) -> str:
    """Expanded ascending part list, the way images are quoted: ``2,3,3``."""
    parts: list[int] = []
    for part, freq in pi.pairs():
        parts.extend([part] * freq)
    return ",".join(str(p) for p in parts) if parts else "()"


def emit_json(payload: dict[str, object]) -> None:
    print(json.dumps(payload, indent=2))


def emit_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def _no_csv(args: argparse.Namespace) -> None:
    if args.format == "csv":
        raise UsageError(
            "csv output covers the tabular commands only"
            " (count ranges, series, verify --series, tables)"
        )


def build_family(args: argparse.Namespace) -> PartitionFamily:
    name = args.family
    if name == "anchored":
        if args.skip is None:
            raise UsageError("family anchored needs --skip")
        if args.part is not None:
            raise UsageError("--part does not apply to family anchored")
        return PartitionFamily.anchored(args.L, args.s, skip=args.skip)
    if args.skip is not None:
        raise UsageError(f"--skip only applies to family anchored, not {name}")
    if name in ("with-part", "avoiding"):
        if args.part is None:
            raise UsageError(f"family {name} needs --part")
        if name == "with-part":
            return PartitionFamily.with_part(args.L, args.s, args.part)
        return PartitionFamily.avoiding(args.L, args.s, args.part)
    if args.part is not None:
        raise UsageError(f"--part does not apply to family {name}")
    if name == "shifted":
        return PartitionFamily.shifted(args.L, args.s)
    return PartitionFamily.in_range(args.L, args.s)


def check_series_params(
    selector: str, L: int, s: int | None, k: int | None, i: int | None
) -> None:
    if selector == "H":
        if s is None or k is None:
            raise UsageError("series H needs --s and --k")
        if i is not None:
            raise UsageError("--i does not apply to series H")
    elif selector == "G2":
        if s not in (None, 2):
            raise UsageError(f"series G2 is pinned to s=2, got s={s}")
        if k not in (None, L):
            raise UsageError(f"series G2 is pinned to k=L, got k={k}")
        if i is not None:
            raise UsageError("--i does not apply to series G2")
    elif selector == "AB":
        if s is None:
            raise UsageError("series AB needs --s")
        if k is not None or i is not None:
            raise UsageError("--k and --i do not apply to series AB")
    else:
        if s is None or k is None or i is None:
            raise UsageError("series shift needs --s, --k and --i")


def build_series(
    selector: str, L: int, s: int | None, k: int | None, i: int | None, trunc: int
):
    if selector == "H":
        return surplus_series(L, s, k, trunc)
    if selector == "G2":
        return bounded_gap_surplus_series(L, trunc)
    if selector == "AB":
        return presence_surplus_series(L, s, trunc)
    return exclusion_shift_series(L, s, k, i, trunc)


# -- command handlers --


def cmd_count(args: argparse.Namespace) -> int:
    if (args.N is None) == (args.member is None):
        raise UsageError("count needs exactly one of --N and --member")
    family = build_family(args)
    base = {
        "schema": SCHEMA_VERSION,
        "family": args.family,
        "L": args.L,
        "s": args.s,
        "skip": args.skip,
        "part": args.part,
    }
    if args.member is not None:
        _no_csv(args)
        pi = parse_partition(args.member)
        inside = member(family, pi)
        if args.format == "json":
            payload: dict[str, object] = {"schema": SCHEMA_VERSION, "kind": "member"}
            payload.update({key: base[key] for key in base if key != "schema"})
            payload["partition"] = str(pi)
            payload["member"] = inside
            emit_json(payload)
        else:
            print(1 if inside else 0)
        return 0
    lo, hi = args.N
    if lo == hi:
        rows = [(lo, count_family(family, lo))]
    else:
        counts = count_family_upto(family, hi)
        rows = [(n, counts[n]) for n in range(lo, hi + 1)]
    if args.format == "json":
        payload = {"schema": SCHEMA_VERSION, "kind": "count"}
        payload.update({key: base[key] for key in base if key != "schema"})
        payload["n_lo"] = lo
        payload["n_hi"] = hi
        payload["counts"] = [list(row) for row in rows]
        emit_json(payload)
    elif args.format == "csv":
        emit_csv(("N", "count"), rows)
    elif lo == hi:
        print(rows[0][1])
    else:
        for n, count in rows:
            print(f"{n} {count}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    _no_csv(args)
    family = build_family(args)
    members = enumerate_family(family, args.N)
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "enumerate",
                "family": args.family,
                "L": args.L,
                "s": args.s,
                "skip": args.skip,
                "part": args.part,
                "N": args.N,
                "count": len(members),
                "partitions": [str(pi) for pi in members],
            }
        )
    else:
        for pi in members:
            print(pi)
    return 0


def cmd_coeff(args: argparse.Namespace) -> int:
    _no_csv(args)
    check_series_params(args.series, args.L, args.s, args.k, args.i)
    trunc = args.N if args.T is None else args.T
    if trunc < args.N:
        raise UsageError(f"--T {trunc} is below the requested N={args.N}")
    value = build_series(args.series, args.L, args.s, args.k, args.i, trunc)[args.N]
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "coeff",
                "series": args.series,
                "L": args.L,
                "s": args.s,
                "k": args.k,
                "i": args.i,
                "N": args.N,
                "T": trunc,
                "value": value,
            }
        )
    else:
        print(value)
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    check_series_params(args.series, args.L, args.s, args.k, args.i)
    coefficients = build_series(
        args.series, args.L, args.s, args.k, args.i, args.T
    ).coefficients()
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "series",
                "series": args.series,
                "L": args.L,
                "s": args.s,
                "k": args.k,
                "i": args.i,
                "T": args.T,
                "coefficients": list(coefficients),
            }
        )
    elif args.format == "csv":
        emit_csv(("N", "coefficient"), list(enumerate(coefficients)))
    else:
        print(" ".join(str(c) for c in coefficients))
    return 0


def cmd_inject(args: argparse.Namespace) -> int:
    _no_csv(args)
    pi = parse_partition(args.partition)
    label, image = apply_map(args.theorem, args.L, pi, args.s, args.k)
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "inject",
                "theorem": args.theorem,
                "L": args.L,
                "s": args.s,
                "k": args.k,
                "source": plain(pi),
                "image": plain(image),
                "case": label.render(),
                "case_path": list(label.path),
                "selectors": label.selector_dict(),
            }
        )
    else:
        print(plain(image))
        print(label.render())
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    _no_csv(args)
    if (args.partition is None) == (args.signature is None):
        raise UsageError("classify needs exactly one of --partition and --signature")
    if args.signature is not None:
        path = tuple(token.strip() for token in args.signature.split(","))
        signature = case_signature(args.theorem, args.L, path, args.s, args.k)
        if args.format == "json":
            emit_json(
                {
                    "schema": SCHEMA_VERSION,
                    "kind": "signature",
                    "theorem": args.theorem,
                    "L": args.L,
                    "s": args.s,
                    "k": args.k,
                    "path": list(path),
                    "description": signature.description,
                }
            )
        else:
            print(signature.description)
        return 0
    pi = parse_partition(args.partition)
    label = classify(args.theorem, args.L, pi, args.s, args.k)
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "classify",
                "theorem": args.theorem,
                "L": args.L,
                "s": args.s,
                "k": args.k,
                "partition": plain(pi),
                "case": label.render(),
                "case_path": list(label.path),
                "selectors": label.selector_dict(),
            }
        )
    else:
        print(label.render())
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    _no_csv(args)
    found = witness(args.theorem, args.L, args.N, args.s, args.k)
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "witness",
                "theorem": args.theorem,
                "L": args.L,
                "s": args.s,
                "k": args.k,
                "N": args.N,
                "partition": plain(found),
            }
        )
    else:
        print(plain(found))
    return 0


def _verify_injection_route(args: argparse.Namespace) -> int:
    _no_csv(args)
    if args.N is None:
        raise UsageError("verify --theorem needs --N (weight or range)")
    lo, hi = args.N
    reports = [
        verify_injection(args.theorem, args.L, n, args.s, args.k)
        for n in range(lo, hi + 1)
    ]
    all_ok = all(report.ok for report in reports)
    if args.format == "json":
        if lo == hi:
            emit_json(reports[0].as_dict())
        else:
            emit_json(
                {
                    "schema": SCHEMA_VERSION,
                    "kind": "injection-scan",
                    "theorem": args.theorem,
                    "L": args.L,
                    "s": args.s,
                    "k": args.k,
                    "n_lo": lo,
                    "n_hi": hi,
                    "ok": all_ok,
                    "reports": [report.as_dict() for report in reports],
                }
            )
    else:
        for report in reports:
            found = "found" if report.witness_found else "none"
            status = "ok" if report.ok else "FAIL"
            print(
                f"N={report.N} domain={report.domain_size}"
                f" image={report.image_size}"
                f" not_applicable={report.not_applicable_count}"
                f" witness={found} {status}"
            )
            for failure in report.failures:
                print(f"  failure: {failure}")
        print("PASS" if all_ok else "FAIL")
    return 0 if all_ok else 1


def _verify_scan_route(args: argparse.Namespace) -> int:
    if args.N is None:
        raise UsageError("verify --series needs --N (weight or range)")
    lo, hi = args.N
    report = scan_positivity(
        args.series, lo, hi, args.T, L=args.L, s=args.s, k=args.k
    )
    if args.format == "json":
        emit_json(report.as_dict())
    elif args.format == "csv":
        expected = {n for n, _ in report.expected_dips}
        violated = {n for n, _ in report.violations}
        rows = []
        for n in range(lo, hi + 1):
            if n in violated:
                status = "violation"
            elif n in expected:
                status = "expected-dip"
            else:
                status = "ok"
            rows.append((n, report.coefficient(n), status))
        emit_csv(("N", "coefficient", "status"), rows)
    else:
        print(f"window {lo}..{hi} trunc {report.trunc}")
        for n, value in report.expected_dips:
            print(f"expected dip N={n} value={value}")
        for n, value in report.violations:
            print(f"violation N={n} value={value}")
        if report.empirical_threshold is None:
            print("still negative at the window top")
        else:
            print(f"nonnegative from N={report.empirical_threshold}")
        print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


def _verify_identity_route(args: argparse.Namespace) -> int:
    _no_csv(args)
    if args.s is None or args.i is None:
        raise UsageError("verify --identity shift needs --s and --i")
    if args.T is None:
        raise UsageError("verify --identity shift needs --T")
    if args.N is not None:
        raise UsageError("--N does not apply to identity checks; use --T")
    holds = surplus_shift_identity(args.L, args.s, args.i, args.T)
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "identity",
                "name": "shift",
                "L": args.L,
                "s": args.s,
                "i": args.i,
                "T": args.T,
                "ok": holds,
            }
        )
    else:
        print(f"shift identity L={args.L} s={args.s} i={args.i} T={args.T}")
        print("PASS" if holds else "FAIL")
    return 0 if holds else 1


def _verify_inequality_route(args: argparse.Namespace) -> int:
    _no_csv(args)
    if args.s is None or args.k is None:
        raise UsageError("verify needs --s and --k for the counting route")
    if args.N is None:
        raise UsageError("verify needs --N (weight or range)")
    lo, hi = args.N
    checks = [(n, verify_inequality(args.L, args.s, args.k, n)) for n in range(lo, hi + 1)]
    all_ok = all(check.lhs >= check.rhs for _, check in checks)
    if args.format == "json":
        emit_json(
            {
                "schema": SCHEMA_VERSION,
                "kind": "inequality-scan",
                "L": args.L,
                "s": args.s,
                "k": args.k,
                "n_lo": lo,
                "n_hi": hi,
                "ok": all_ok,
                "checks": [
                    [n, check.lhs, check.rhs, check.strict] for n, check in checks
                ],
            }
        )
    else:
        for n, check in checks:
            status = "ok" if check.lhs >= check.rhs else "FAIL"
            print(f"N={n} anchored={check.lhs} shifted={check.rhs} {status}")
        print("PASS" if all_ok else "FAIL")
    return 0 if all_ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    routes = [
        name
        for name, chosen in (
            ("--theorem", args.theorem is not None),
            ("--series", args.series is not None),
            ("--identity", args.identity is not None),
        )
        if chosen
    ]
    if len(routes) > 1:
        raise UsageError(f"pick one verify route, got {' and '.join(routes)}")
    if args.theorem is not None:
        return _verify_injection_route(args)
    if args.series is not None:
        return _verify_scan_route(args)
    if args.identity is not None:
        return _verify_identity_route(args)
    return _verify_inequality_route(args)


def cmd_tables(args: argparse.Namespace) -> int:
    if args.id is not None:
        if args.L is not None or args.s is not None:
            raise UsageError("--L/--s do not apply to embedded table checks")
        report = reproduce_table(args.id)
        if args.format == "json":
            emit_json(report.as_dict())
        elif args.format == "csv":
            emit_csv(report.columns, report.computed)
        else:
            print(" ".join(report.columns))
            for row in report.computed:
                print(" ".join(str(value) for value in row))
            for name, want, got in report.extras:
                print(f"extra {name} expected={want} computed={got}")
            for mismatch in report.mismatches:
                print(f"mismatch: {mismatch}")
            print("PASS" if report.ok else "FAIL")
        return 0 if report.ok else 1
    if args.L is None or args.s is None:
        raise UsageError("tables needs either --id or both --L and --s")
    bundle = thresholds(args.L, args.s)
    rows = [(name, getattr(bundle, name)) for name in _THRESHOLD_FIELDS]
    rows.append(
        ("general_coverage_bound_digits", bundle.general_coverage_bound_digits())
    )
    if args.format == "json":
        payload: dict[str, object] = {
            "schema": SCHEMA_VERSION,
            "kind": "thresholds",
            "L": args.L,
            "s": args.s,
        }
        payload.update(rows)
        emit_json(payload)
    elif args.format == "csv":
        emit_csv(("name", "value"), rows)
    else:
        for name, value in rows:
            print(f"{name} {value}")
    return 0


def cmd_suite(args: argparse.Namespace) -> int:
    _no_csv(args)
    report = run_conjecture_suite(
        args.id,
        L_values=args.L,
        s_values=args.s,
        cap=args.cap,
        trunc=args.T,
        jobs=args.jobs,
    )
    if args.format == "json":
        emit_json(report.as_dict())
    else:
        print(f"suite {report.conjecture} cap {report.cap} trunc {report.trunc}")
        for point in report.points:
            params = " ".join(f"{name}={value}" for name, value in point.params)
            threshold = (
                "none" if point.threshold is None else str(point.threshold)
            )
            status = "ok" if point.ok else "FAIL"
            print(
                f"{params} threshold={threshold}"
                f" failures={len(point.failures)} {status}"
            )
        print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


_HANDLERS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "coeff": cmd_coeff,
    "series": cmd_series,
    "inject": cmd_inject,
    "classify": cmd_classify,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "tables": cmd_tables,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partineq",
        description="Partition family counts, surplus series, and verified maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def new_command(name: str, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.add_argument(
            "--format", choices=("text", "json", "csv"), default="text"
        )
        return command

    def family_flags(command: argparse.ArgumentParser) -> None:
        command.add_argument("--family", choices=FAMILY_NAMES, required=True)
        command.add_argument("--L", type=int, required=True)
        command.add_argument("--s", type=int, required=True)
        command.add_argument("--skip", type=int, help="excluded part (anchored)")
        command.add_argument(
            "--part", type=int, help="distinguished part (with-part, avoiding)"
        )

    def series_flags(command: argparse.ArgumentParser) -> None:
        command.add_argument("--series", choices=SERIES_NAMES, required=True)
        command.add_argument("--L", type=int, required=True)
        command.add_argument("--s", type=int)
        command.add_argument("--k", type=int)
        command.add_argument("--i", type=int)

    def map_flags(command: argparse.ArgumentParser) -> None:
        command.add_argument("--theorem", choices=MAP_IDS, required=True)
        command.add_argument("--L", type=int, required=True)
        command.add_argument("--s", type=int)
        command.add_argument("--k", type=int)

    command = new_command("count", "count family members by weight")
    family_flags(command)
    command.add_argument("--N", type=span, help="weight or inclusive range a..b")
    command.add_argument(
        "--member", metavar="PARTITION", help="report 1/0 membership instead"
    )

    command = new_command("enumerate", "list family members of one weight")
    family_flags(command)
    command.add_argument("--N", type=int, required=True)

    command = new_command("coeff", "print one series coefficient")
    series_flags(command)
    command.add_argument("--N", type=int, required=True)
    command.add_argument("--T", type=int, help="truncation order, default N")

    command = new_command("series", "print series coefficients through T")
    series_flags(command)
    command.add_argument("--T", type=int, required=True)

    command = new_command("inject", "apply a case map to one partition")
    map_flags(command)
    command.add_argument("--partition", required=True, metavar="PARTITION")

    command = new_command("classify", "name a partition's case, or describe one")
    map_flags(command)
    command.add_argument("--partition", metavar="PARTITION")
    command.add_argument(
        "--signature",
        metavar="PATH",
        help="comma-joined case path, e.g. 2,B,ii,b,alpha",
    )

    command = new_command("witness", "build the strictness witness at a weight")
    map_flags(command)
    command.add_argument("--N", type=int, required=True)

    command = new_command("verify", "check maps, scans, counts, or identities")
    command.add_argument("--theorem", choices=MAP_IDS)
    command.add_argument("--series", choices=SERIES_SELECTORS)
    command.add_argument("--identity", choices=("shift",))
    command.add_argument("--L", type=int, required=True)
    command.add_argument("--s", type=int)
    command.add_argument("--k", type=int)
    command.add_argument("--i", type=int)
    command.add_argument("--N", type=span, help="weight or inclusive range a..b")
    command.add_argument("--T", type=int, help="truncation, default top of --N")

    command = new_command("tables", "recheck embedded tables or print thresholds")
    command.add_argument("--id", choices=_tables.TABLE_IDS)
    command.add_argument("--L", type=int)
    command.add_argument("--s", type=int)

    command = new_command("suite", "run a conjecture grid")
    command.add_argument("--id", choices=CONJECTURE_IDS, required=True)
    command.add_argument("--L", type=int_list, help="lengths, e.g. 3,4,5")
    command.add_argument("--s", type=int_list, help="shifts, e.g. 1,2")
    command.add_argument("--cap", type=int, help="largest weight scanned")
    command.add_argument("--T", type=int, help="truncation, default cap")
    command.add_argument("--jobs", type=int, default=1)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2
    except (
        NotApplicableError,
        SolverPreconditionError,
        CodomainViolationError,
        NotImplementedError,
    ) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
