import subprocess
import sys

import pytest

from sgranks import cli
from sgranks.cli import (
    EXIT_GUARD,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_PARSE,
    TableParseError,
    format_table,
    main,
    parse_range,
    parse_table,
    read_table_file,
    write_table_file,
)
from sgranks.families import brandt, cyclic_group, order_preserving_singular


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def machine_lines(out):
    return [
        line
        for line in out.splitlines()
        if "=" in line and not line.startswith("#") and not line.startswith("elapsed=")
    ]


# ---------------------------------------------------------------------------
# table file format


def test_format_round_trip_through_parse(b2):
    S, _ = b2
    text = format_table(S)
    again = parse_table(text)
    assert again.cayley == S.cayley
    assert again.labels == S.labels


def test_write_then_read_is_byte_identical(tmp_path, b2):
    S, _ = b2
    path = tmp_path / "b2.tbl"
    write_table_file(str(path), S)
    first = path.read_bytes()
    again = read_table_file(str(path))
    write_table_file(str(path), again)
    assert path.read_bytes() == first


def test_parse_rejects_bad_header():
    with pytest.raises(TableParseError, match="header"):
        parse_table("monoid 3\n0\n")


def test_parse_rejects_short_rows():
    with pytest.raises(TableParseError, match="entries"):
        parse_table("semigroup 2\n0 1\n1\n")


def test_parse_rejects_nonassociative():
    with pytest.raises(TableParseError, match="associative"):
        parse_table("semigroup 2\n1 1\n0 0\n")


def test_parse_trusted_skips_associativity():
    S = parse_table("semigroup 2\n1 1\n0 0\n", trusted=True)
    assert S.order == 2


def test_parse_labels_section():
    S = parse_table("semigroup 2\n0 1\n1 0\nlabels\ne\ng\n")
    assert S.labels == ("e", "g")


# ---------------------------------------------------------------------------
# commands


def test_build_writes_file_and_reports_order(tmp_path, capsys):
    out_path = tmp_path / "b2.tbl"
    code, out = run(capsys, "build", "--family", "bn", "--n", "2", "--out", str(out_path))
    assert code == EXIT_OK
    assert "m=5" in out
    S = read_table_file(str(out_path))
    assert S.order == 5


def test_build_on_reports_size(tmp_path, capsys):
    out_path = tmp_path / "o3.tbl"
    code, out = run(capsys, "build", "--family", "on", "--n", "3", "--out", str(out_path))
    assert code == EXIT_OK
    assert "m=9" in out


def test_build_brandt_with_group(tmp_path, capsys):
    out_path = tmp_path / "b.tbl"
    code, out = run(
        capsys, "build", "--family", "brandt", "--group", "Z2", "--n", "3",
        "--out", str(out_path),
    )
    assert code == EXIT_OK
    assert "m=19" in out


def test_rank_on3_r5(capsys):
    code, out = run(capsys, "rank", "--family", "on", "--n", "3", "--r5")
    assert code == EXIT_OK
    assert "r5_search=8" in out
    assert "r5_formula=8" in out


def test_rank_bn3_with_oracle(capsys):
    code, out = run(capsys, "rank", "--family", "bn", "--n", "3", "--r5", "--oracle")
    assert code == EXIT_OK
    assert "r5_search=9" in out
    assert "r5_direct=9" in out
    assert "oracle_status=MATCH" in out


def test_rank_on3_r2(capsys):
    code, out = run(capsys, "rank", "--family", "on", "--n", "3", "--r2")
    assert code == EXIT_OK
    assert "r2=3" in out


def test_rank_default_is_r5(capsys):
    code, out = run(capsys, "rank", "--family", "bn", "--n", "2")
    assert code == EXIT_OK
    assert "r5_search=5" in out


def test_rank_from_file_matches_in_memory(tmp_path, capsys):
    out_path = tmp_path / "o3.tbl"
    assert main(["build", "--family", "on", "--n", "3", "--out", str(out_path)]) == EXIT_OK
    capsys.readouterr()
    code, from_file = run(capsys, "rank", str(out_path), "--r5")
    code2, in_memory = run(capsys, "rank", "--family", "on", "--n", "3", "--r5")
    assert code == code2 == EXIT_OK

    def computed(text):
        # the input echo and the formula annotation depend on how the
        # semigroup was named, not on what was computed
        keep = ("m=", "r5_search=", "witness_prime=", "witness_subsemigroup=", "nodes=")
        return [line for line in machine_lines(text) if line.startswith(keep)]

    assert computed(from_file) == computed(in_memory)


def test_prime_command(capsys, tmp_path):
    code, out = run(capsys, "prime", "--family", "bn", "--n", "2")
    assert code == EXIT_OK
    assert "prime_size=1" in out
    assert "prime_witness=(2,e,1)" in out
    assert "subsemigroup_size=4" in out
    assert "proven_optimal=true" in out


def test_oracle_command(capsys):
    code, out = run(capsys, "oracle", "--family", "on", "--n", "2")
    assert code == EXIT_OK
    assert "r5_direct=2" in out


def test_info_command(capsys):
    code, out = run(capsys, "info", "--family", "bn", "--n", "2")
    assert code == EXIT_OK
    assert "idempotent_count=3" in out
    assert "indecomposable_count=0" in out


# ---------------------------------------------------------------------------
# verification suites


def test_verify_brandt_all_match(capsys):
    code, out = run(
        capsys, "verify", "brandt", "--groups", "Z1,Z2,Z3,S3", "--n", "2"
    )
    assert code == EXIT_OK
    assert out.count("MATCH") == 4
    assert "mismatches=0" in out


def test_verify_on_all_match(capsys):
    code, out = run(capsys, "verify", "on", "--n", "3..4")
    assert code == EXIT_OK
    assert "on n=3 m=9 search=8 formula=8 MATCH" in out
    assert "on n=4 m=34 search=32 formula=32 MATCH" in out


def test_verify_duality_bn2(capsys):
    code, out = run(capsys, "verify", "duality", "--family", "bn", "--n", "2")
    assert code == EXIT_OK
    assert "subsets=30" in out
    assert "violations=0" in out


def test_verify_chain(capsys):
    code, out = run(capsys, "verify", "chain")
    assert code == EXIT_OK
    assert "mismatches=0" in out


def test_verify_threads_do_not_change_report(capsys):
    _, first = run(capsys, "verify", "brandt", "--groups", "Z1,Z2", "--n", "2..3",
                   "--threads", "1")
    _, second = run(capsys, "verify", "brandt", "--groups", "Z1,Z2", "--n", "2..3",
                    "--threads", "8")
    assert machine_lines(first) == machine_lines(second)


# ---------------------------------------------------------------------------
# exit codes


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.tbl"
    bad.write_text("semigroup 2\n1 1\n0 0\n")
    assert main(["rank", str(bad)]) == EXIT_PARSE


def test_guard_exit_code(capsys):
    assert main(["rank", "--family", "on", "--n", "6", "--r4"]) == EXIT_GUARD


def test_parameter_error_exit_code(capsys):
    assert main(["build", "--family", "on", "--n", "99", "--out", "/dev/null"]) == EXIT_GUARD


def test_missing_input_exit_code(capsys):
    assert main(["rank"]) == EXIT_GUARD


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 64


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "sgranks", "rank", "--family", "bn", "--n", "2", "--r5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "r5_search=5" in proc.stdout


# ---------------------------------------------------------------------------
# helpers


def test_parse_range_forms():
    assert parse_range("3") == [3]
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("2,4") == [2, 4]


def test_parse_group_name():
    assert cli.parse_group_name("Z3").order == 3
    assert cli.parse_group_name("S3").order == 6
    from sgranks.core import GuardError

    with pytest.raises(GuardError):
        cli.parse_group_name("Q8")
