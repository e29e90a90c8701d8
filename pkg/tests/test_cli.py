"""CLI subcommands, exit codes and output determinism."""

import json

from polegeom.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_list(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--list")
    assert code == 0
    assert "T9" in out and "T10_1" in out


def test_catalog_emits_form_file(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--catalog", "T3", "--field", "gf(2)")
    assert code == 0
    assert out.splitlines()[0] == "n = 6"
    assert "1 2 3 1" in out


def test_eval(capsys):
    code, out, _ = run_cli(
        capsys,
        "eval",
        "--catalog",
        "T1",
        "--field",
        "gf(2)",
        "--x",
        "1,0,0",
        "--y",
        "0,1,0",
        "--z",
        "0,0,1",
    )
    assert code == 0
    assert out.strip() == "1"


def test_poles_json_histogram(capsys):
    code, out, _ = run_cli(
        capsys, "poles", "--catalog", "T9", "--field", "gf(2)", "--output", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["histogram"] == {"0": 64, "2": 63}
    assert len(payload["poles"]) == 63
    assert len(payload["upper_radical"]) == 63


def test_variety_quadric(capsys):
    code, out, _ = run_cli(capsys, "variety", "--catalog", "T9", "--field", "q")
    assert code == 0
    assert "x1*x4 + x2*x5 + x3*x6 - x7^2" in out


def test_variety_even_dimension(capsys):
    code, out, _ = run_cli(capsys, "variety", "--catalog", "T3", "--field", "gf(2)")
    assert code == 0
    assert "all-points" in out


def test_matrix_text(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--catalog", "T1", "--field", "q")
    assert code == 0
    assert "u3" in out and "-u2" in out


def test_radical_lines_point(capsys):
    code, out, _ = run_cli(
        capsys,
        "radical-lines",
        "--catalog",
        "T9",
        "--field",
        "gf(2)",
        "--point",
        "1,0,0,0,0,0,0",
        "--output",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 2
    assert payload["count"] == 3


def test_check_hexagon_pass(capsys):
    code, out, _ = run_cli(
        capsys, "check", "hexagon", "--catalog", "T9", "--field", "gf(2)"
    )
    assert code == 0
    assert "pass: True" in out


def test_check_spread_failure_exit_code(capsys):
    code, out, _ = run_cli(
        capsys, "check", "spread", "--catalog", "T3", "--field", "gf(2)"
    )
    assert code == 1
    assert "pass: False" in out


def test_check_cone_reports_witness(capsys):
    code, out, _ = run_cli(
        capsys,
        "check",
        "cone",
        "--catalog",
        "T7",
        "--field",
        "gf(2)",
        "--output",
        "json",
    )
    assert code == 1
    payload = json.loads(out)
    witness = payload["witnesses"][0]
    assert witness["pole_set_ok"] is True
    assert witness["degree4_is_conic"] is True
    assert witness["off_vertex_ok"] is True
    assert witness["line_planes_ok"] is False
    assert "fully-radical" in witness["witness"]


def test_fingerprint_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "fingerprint",
        "--catalog",
        "T8",
        "--field",
        "gf(2)",
        "--output",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == 7
    assert payload["pole_count"] == 63
    assert payload["variety_degree"] == 2


def test_tables_subcommand(capsys):
    code, out, _ = run_cli(capsys, "tables", "--which", "2")
    assert code == 0
    assert "T10_2" in out and "DIFF" not in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "poles", "--catalog", "T9")
    assert code == 2  # missing --field
    code, _, err = run_cli(capsys, "poles", "--field", "gf(2)")
    assert code == 2  # no form source
    code, _, err = run_cli(
        capsys, "poles", "--catalog", "T9", "--file", "x", "--field", "gf(2)"
    )
    assert code == 2  # two sources
    code, _, err = run_cli(capsys, "radical", "--file", "/nonexistent.form")
    assert code == 2
    assert "cannot read" in err
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 2


def test_condition_violation_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "catalog", "--catalog", "T10_1", "--field", "gf(3)", "--param", "1"
    )
    assert code == 2
    assert "reducible" in err


def test_degenerate_variety_index_exit_2(capsys):
    # index 1 of the rank-5 expansion strips to a unit and fails verification
    code, _, err = run_cli(
        capsys, "variety", "--catalog", "T2", "--field", "gf(3)", "--index", "1"
    )
    assert code == 2
    assert "error:" in err


def test_budget_exceeded_message(capsys):
    code, _, err = run_cli(
        capsys,
        "poles",
        "--catalog",
        "T9",
        "--field",
        "gf(7)",
        "--budget",
        "100",
    )
    assert code == 2
    assert err.startswith("budget exceeded")


def test_deterministic_output(capsys):
    args = ("poles", "--catalog", "T5", "--field", "gf(2)", "--output", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_construct_cch(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "cch", "--dim", "7", "--field", "gf(3)"
    )
    assert code == 0
    assert "1 2 3 1" in out and "3 4 5 1" in out and "5 6 7 1" in out


def test_construct_extend_roundtrip(tmp_path, capsys):
    base = tmp_path / "t1.form"
    code, out, _ = run_cli(capsys, "catalog", "--catalog", "T1", "--field", "gf(2)")
    base.write_text(out)
    code, out, _ = run_cli(
        capsys, "construct", "extend", "--file", str(base), "--extra", "3"
    )
    assert code == 0
    assert out.splitlines()[0] == "n = 6"


def test_construct_expand_t8(capsys):
    code, out, _ = run_cli(
        capsys,
        "construct",
        "expand",
        "--pairs",
        "23,45,67",
        "--direction",
        "1",
        "--dim",
        "7",
        "--field",
        "gf(2)",
    )
    assert code == 0
    assert "1 2 3 1" in out and "1 4 5 1" in out and "1 6 7 1" in out


def test_construct_join(tmp_path, capsys):
    a = tmp_path / "a.form"
    b = tmp_path / "b.form"
    a.write_text("n = 5\nfield = gf(3)\n1 2 3 1\n")
    b.write_text("n = 5\nfield = gf(3)\n3 4 5 1\n")
    code, out, _ = run_cli(
        capsys, "construct", "join", "--file", str(a), "--file2", str(b)
    )
    assert code == 0
    assert "1 2 3 1" in out and "3 4 5 1" in out


def test_check_with_file_source(tmp_path, capsys):
    form_file = tmp_path / "t9.form"
    _, out, _ = run_cli(capsys, "catalog", "--catalog", "T9", "--field", "gf(2)")
    form_file.write_text(out)
    code, out, _ = run_cli(capsys, "check", "hexagon", "--file", str(form_file))
    assert code == 0
