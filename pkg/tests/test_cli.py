"""End-to-end checks of the command-line surface.

Commands run in process through ``main`` with captured streams; the exit
code contract (0 pass, 1 failed check, 2 usage) and the exact text of the
documented invocations are pinned here.
"""

import json

import pytest

from partineq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPinnedInvocations:
    def test_single_coefficient(self, capsys):
        code, out, err = run_cli(
            capsys, "coeff", "--series", "H", "--L", "3", "--s", "2",
            "--k", "3", "--N", "15",
        )
        assert (code, out, err) == (0, "-1\n", "")

    def test_inject_prints_image_and_case(self, capsys):
        code, out, err = run_cli(
            capsys, "inject", "--theorem", "T16", "--L", "11",
            "--partition", "3,5",
        )
        assert (code, out, err) == (0, "2,3,3\n2(B)(ii)(b)(alpha)\n", "")

    def test_gap_floor_table_six_rows(self, capsys):
        code, out, err = run_cli(capsys, "tables", "--id", "T4")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "L weight_floor"
        assert lines[1:7] == ["5 22", "6 29", "7 37", "8 46", "9 56", "10 67"]
        assert lines[-1] == "PASS"

    def test_identical_invocations_identical_bytes(self, capsys):
        argv = ("series", "--series", "G2", "--L", "4", "--T", "12")
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second


class TestCount:
    def test_single_weight_bare_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--family", "shifted", "--L", "3", "--s", "2",
            "--N", "10",
        )
        assert (code, out) == (0, "2\n")

    def test_range_lines(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--family", "shifted", "--L", "3", "--s", "2",
            "--N", "8..10",
        )
        assert code == 0
        assert out == "8 2\n9 2\n10 2\n"

    def test_range_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--family", "anchored", "--L", "3", "--s", "2",
            "--skip", "3", "--N", "8..10", "--format", "csv",
        )
        assert code == 0
        assert out == "N,count\n8,2\n9,1\n10,3\n"

    @pytest.mark.parametrize(
        ("text", "expected"), [("3,5", "1\n"), ("2^3", "0\n")]
    )
    def test_membership_prints_indicator(self, capsys, text, expected):
        code, out, _ = run_cli(
            capsys, "count", "--family", "shifted", "--L", "3", "--s", "2",
            "--member", text,
        )
        assert (code, out) == (0, expected)

    def test_weight_and_member_conflict(self, capsys):
        code, _, err = run_cli(
            capsys, "count", "--family", "shifted", "--L", "3", "--s", "2",
            "--N", "5", "--member", "3,5",
        )
        assert code == 2
        assert "exactly one" in err

    def test_anchored_without_skip(self, capsys):
        code, _, err = run_cli(
            capsys, "count", "--family", "anchored", "--L", "3", "--s", "2",
            "--N", "5",
        )
        assert code == 2
        assert "--skip" in err

    def test_empty_range_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["count", "--family", "shifted", "--L", "3", "--s", "2",
                  "--N", "9..5"])
        assert excinfo.value.code == 2


class TestEnumerate:
    def test_lists_members_in_canonical_syntax(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--family", "shifted", "--L", "3", "--s", "2",
            "--N", "9",
        )
        assert code == 0
        assert out == "4,5\n3^3\n"

    def test_csv_refused(self, capsys):
        code, _, err = run_cli(
            capsys, "enumerate", "--family", "shifted", "--L", "3", "--s", "2",
            "--N", "9", "--format", "csv",
        )
        assert code == 2
        assert "csv" in err

    def test_json_counts_and_lists(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--family", "with-part", "--L", "3", "--s", "2",
            "--part", "4", "--N", "8", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "enumerate"
        assert payload["count"] == len(payload["partitions"])
        assert "2^2,4" in payload["partitions"]


class TestCoeffAndSeries:
    def test_truncation_defaults_to_weight(self, capsys):
        code, out, _ = run_cli(
            capsys, "coeff", "--series", "G2", "--L", "3", "--N", "15",
        )
        assert (code, out) == (0, "-1\n")

    def test_explicit_truncation_below_weight(self, capsys):
        code, _, err = run_cli(
            capsys, "coeff", "--series", "G2", "--L", "3", "--N", "15",
            "--T", "10",
        )
        assert code == 2
        assert "below" in err

    def test_series_row_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "series", "--series", "H", "--L", "4", "--s", "2",
            "--k", "4", "--T", "13",
        )
        assert code == 0
        assert out == "0 0 1 -1 0 0 -1 1 1 -1 1 1 0 2\n"

    def test_series_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "series", "--series", "AB", "--L", "3", "--s", "2",
            "--T", "3", "--format", "csv",
        )
        assert code == 0
        assert out == "N,coefficient\n0,0\n1,0\n2,1\n3,0\n"

    def test_shift_series_needs_all_indices(self, capsys):
        code, _, err = run_cli(
            capsys, "series", "--series", "shift", "--L", "3", "--s", "2",
            "--T", "10",
        )
        assert code == 2
        assert "--i" in err

    def test_shift_series_coefficients_nonnegative(self, capsys):
        code, out, _ = run_cli(
            capsys, "series", "--series", "shift", "--L", "3", "--s", "2",
            "--k", "3", "--i", "4", "--T", "25",
        )
        assert code == 0
        assert all(int(c) >= 0 for c in out.split())

    def test_pinned_series_parameter_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "coeff", "--series", "G2", "--L", "4", "--s", "1",
            "--N", "6",
        )
        assert code == 2
        assert "pinned" in err


class TestMapCommands:
    def test_inject_json_shape(self, capsys):
        code, out, _ = run_cli(
            capsys, "inject", "--theorem", "T17", "--L", "5",
            "--partition", "5^2", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["source"] == "5,5"
        assert payload["image"] == "2,2,2,2,2"
        assert payload["case_path"] == ["1"]
        assert payload["selectors"] == {"f": 2}

    def test_inject_not_applicable_exits_one(self, capsys):
        code, out, err = run_cli(
            capsys, "inject", "--theorem", "T18", "--L", "3",
            "--partition", "3",
        )
        assert code == 1
        assert out == ""
        assert "nowhere to go" in err

    def test_inject_outside_domain_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys, "inject", "--theorem", "T19", "--L", "4",
            "--partition", "7",
        )
        assert code == 2
        assert "source family" in err

    def test_classify_partition(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--theorem", "T19", "--L", "4",
            "--partition", "3^2,5",
        )
        assert (code, out) == (0, "2(i)\n")

    def test_classify_signature_description(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--theorem", "T16", "--L", "11",
            "--signature", "2,B,ii,b,alpha",
        )
        assert (code, out) == (0, "exactly 1\n")

    def test_classify_needs_one_input(self, capsys):
        code, _, err = run_cli(
            capsys, "classify", "--theorem", "T19", "--L", "4",
        )
        assert code == 2
        assert "exactly one" in err

    def test_unknown_signature_path(self, capsys):
        code, _, err = run_cli(
            capsys, "classify", "--theorem", "T19", "--L", "4",
            "--signature", "9,z",
        )
        assert code == 2
        assert "no case" in err

    def test_witness_plain_listing(self, capsys):
        code, out, _ = run_cli(
            capsys, "witness", "--theorem", "T17", "--L", "5", "--N", "22",
        )
        assert (code, out) == (0, "2,2,2,2,2,2,2,2,3,3\n")

    def test_witness_below_bound_exits_one(self, capsys):
        code, _, err = run_cli(
            capsys, "witness", "--theorem", "T16", "--L", "11", "--N", "5",
        )
        assert code == 1
        assert "no witness" in err


class TestVerify:
    def test_injection_range_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--theorem", "T19", "--L", "4", "--N", "20..22",
        )
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 4
        assert lines[0].startswith("N=20 ")
        assert lines[-1] == "PASS"

    def test_injection_single_weight_json_is_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--theorem", "T18", "--L", "3", "--N", "44",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "injection"
        assert payload["ok"] is True
        assert payload["witness_found"] is True

    def test_scan_with_expected_dips_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--series", "G2", "--L", "3", "--N", "0..60",
        )
        assert code == 0
        assert "expected dip N=15 value=-1" in out
        assert "nonnegative from N=16" in out
        assert out.splitlines()[-1] == "PASS"

    def test_scan_violations_fail_and_export(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--series", "H", "--L", "4", "--s", "2",
            "--k", "4", "--N", "0..13", "--format", "csv",
        )
        assert code == 1
        lines = out.splitlines()
        assert lines[0] == "N,coefficient,status"
        assert lines[4] == "3,-1,violation"
        assert lines[14] == "13,2,ok"

    def test_inequality_route_reports_dip(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--L", "3", "--s", "2", "--k", "3",
            "--N", "14..17",
        )
        assert code == 1
        assert "N=15 anchored=3 shifted=4 FAIL" in out
        assert out.splitlines()[-1] == "FAIL"

    def test_identity_route(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--identity", "shift", "--L", "5", "--s", "2",
            "--i", "4", "--T", "60",
        )
        assert code == 0
        assert out.splitlines()[-1] == "PASS"

    def test_route_conflict(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--theorem", "T19", "--series", "G2",
            "--L", "4", "--N", "5",
        )
        assert code == 2
        assert "one verify route" in err

    def test_inequality_route_needs_k(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--L", "3", "--s", "2", "--N", "5",
        )
        assert code == 2
        assert "--k" in err


class TestTablesAndSuite:
    @pytest.mark.parametrize("table_id", ["T4", "T5", "T6", "T7"])
    def test_embedded_tables_pass(self, capsys, table_id):
        code, out, _ = run_cli(capsys, "tables", "--id", table_id)
        assert code == 0
        assert out.splitlines()[-1] == "PASS"

    def test_dip_table_extras_shown(self, capsys):
        code, out, _ = run_cli(capsys, "tables", "--id", "T5")
        assert code == 0
        assert "extra surplus(5,2,5)[2] expected=1 computed=1" in out

    def test_table_csv_export(self, capsys):
        code, out, _ = run_cli(
            capsys, "tables", "--id", "T4", "--format", "csv",
        )
        assert code == 0
        assert out == (
            "L,weight_floor\n5,22\n6,29\n7,37\n8,46\n9,56\n10,67\n"
        )

    def test_threshold_listing(self, capsys):
        code, out, _ = run_cli(capsys, "tables", "--L", "5", "--s", "1")
        assert code == 0
        lines = out.splitlines()
        assert "high_part_floor 104" in lines
        assert "coverage_bound 58906" in lines
        assert "bounded_gap_floor 22" in lines

    def test_table_id_with_thresholds_conflict(self, capsys):
        code, _, err = run_cli(
            capsys, "tables", "--id", "T4", "--L", "5",
        )
        assert code == 2
        assert "do not apply" in err

    def test_tables_without_arguments(self, capsys):
        code, _, err = run_cli(capsys, "tables")
        assert code == 2
        assert "--id" in err

    def test_suite_text_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "suite", "--id", "C5", "--L", "3,4", "--cap", "60",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "suite C5 cap 60 trunc 60"
        assert lines[1] == "L=3 threshold=16 failures=0 ok"
        assert lines[2] == "L=4 threshold=10 failures=0 ok"
        assert lines[3] == "PASS"

    def test_suite_parallel_matches_serial(self, capsys):
        argv = ("suite", "--id", "C5", "--L", "3,4,5", "--cap", "50",
                "--format", "json")
        serial = run_cli(capsys, *argv)
        parallel = run_cli(capsys, *argv, "--jobs", "2")
        assert serial == parallel

    def test_suite_bad_grid(self, capsys):
        code, _, err = run_cli(
            capsys, "suite", "--id", "C5", "--s", "1,2", "--cap", "40",
        )
        assert code == 2
        assert "parametrized by L alone" in err

    def test_unknown_subcommand_exits_two(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2
