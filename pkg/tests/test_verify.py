"""Suite plumbing: registry completeness, determinism, tables, eval, CLI."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from qtstirling.partitions import Partition
from qtstirling.verify import (
    MANIFEST,
    SuiteConfig,
    check_root_vanishing,
    check_x0_sums,
    classical_stirling1,
    classical_stirling2,
    emit_table,
    eval_point,
    falling_factorial_coefficients,
    registered_identities,
    run_suite,
)

P = Partition


def test_manifest_completeness():
    assert registered_identities() == list(MANIFEST)
    assert len(set(MANIFEST)) == len(MANIFEST)
    expected_core = {
        "flip-formula", "limit-rule", "w-rect", "w-staircase", "w-vanishing",
        "w-symmetry", "w-duality", "binomial-theorem", "gaussian-reduction",
        "bracket-binomial-relation", "change-of-basis-u", "change-of-basis-v",
        "uv-inversion", "stirling-diagonal", "stirling-zero", "stirling-inversion",
        "defining-expansion-s1", "defining-expansion-s2", "adjacent-weight",
        "x0-sums", "root-vanishing", "classical-stirling",
    }
    assert expected_core <= set(MANIFEST)


def test_classical_oracles():
    assert falling_factorial_coefficients(4) == [0, -6, 11, -6, 1]
    assert classical_stirling1(4, 2) == 11
    assert classical_stirling1(3, 1) == 2
    assert classical_stirling2(4, 2) == 7
    assert classical_stirling2(5, 3) == 25
    assert classical_stirling2(0, 0) == 1


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(n_max=0)
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(identities=["not-an-identity"]))


def test_suite_filtering_contract():
    reports = run_suite(SuiteConfig(n_max=1, part_max=2, identities=["stirling-diagonal"]))
    assert reports
    assert {r.identity_id for r in reports} == {"stirling-diagonal"}
    assert all(r.passed for r in reports)


def test_suite_small_bounds_all_pass():
    reports = run_suite(SuiteConfig(n_max=1, part_max=3))
    assert all(r.passed for r in reports)
    reports = run_suite(SuiteConfig(n_max=2, part_max=2))
    assert all(r.passed for r in reports)


def test_suite_determinism(tmp_path):
    def snapshot():
        reports = run_suite(SuiteConfig(n_max=2, part_max=1, seed=7))
        return [(r.identity_id, json.dumps(r.index_data, sort_keys=True), r.passed, r.witness)
                for r in reports]

    assert snapshot() == snapshot()


def test_x0_sums_records_both_readings():
    rep = check_x0_sums(P((2, 1)))
    assert rep.passed
    assert rep.index_data["s1_exponent_minus"] is True
    assert rep.index_data["s1_exponent_plus"] is False
    assert rep.index_data["s2"] is True
    trivial = check_x0_sums(P((0, 0)))
    assert trivial.passed
    assert trivial.index_data["s1_exponent_plus"] is True  # degenerate at the empty index


def test_root_vanishing_examples():
    # X = q at nu=(2): the plain "sum of first-kind values" analogue
    assert check_root_vanishing(P((2,)), 1, 1).passed
    assert check_root_vanishing(P((1, 1)), 2, 0).passed
    assert check_root_vanishing(P((2, 1)), 1, 1).passed


def test_root_vanishing_preconditions():
    with pytest.raises(ValueError):
        check_root_vanishing(P((2, 1)), 3, 0)
    with pytest.raises(ValueError):
        check_root_vanishing(P((2, 1)), 2, 1)  # m must stay below nu_j


def test_report_json_shape(tmp_path):
    out = tmp_path / "report.json"
    run_suite(SuiteConfig(n_max=1, part_max=1, identities=["stirling-diagonal"],
                          output_path=str(out)))
    data = json.loads(out.read_text())
    assert isinstance(data, list) and data
    record = data[0]
    assert set(record) >= {"identity_id", "index_data", "passed", "elapsed"}
    assert "witness" not in record  # only present on failure


def test_emit_table_json_schema(tmp_path):
    out = tmp_path / "table.json"
    emit_table("s1", P((1,)), "json", str(out))
    doc = json.loads(out.read_text())
    assert set(doc) == {"n", "bound", "entries"}
    assert doc["n"] == 1
    assert doc["bound"] == [1]
    entries = {(tuple(e["nu"]), tuple(e["mu"])): e["value"] for e in doc["entries"]}
    assert entries[((0,), (0,))] == "1"
    assert entries[((1,), (0,))] == "0"
    assert entries[((1,), (1,))] == "1"


def test_emit_table_zero_bound():
    doc = json.loads(emit_table("s2", P((0, 0)), "json"))
    assert doc["entries"] == [{"nu": [0, 0], "mu": [0, 0], "value": "1"}]


def test_emit_table_binomial_gaussian_row():
    doc = json.loads(emit_table("binomial", P((2,)), "json"))
    values = {(tuple(e["nu"]), tuple(e["mu"])): e["value"] for e in doc["entries"]}
    assert values[((2,), (1,))] == "q + 1"
    assert values[((2,), (2,))] == "1"


def test_emit_table_csv(tmp_path):
    out = tmp_path / "table.csv"
    emit_table("bracket", P((1, 1)), "csv", str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == '"nu","mu","value"'
    assert all(line.count('"') >= 6 for line in lines[1:])
    assert any('"1,1"' in line for line in lines[1:])


def test_emit_table_rejects_unknown():
    with pytest.raises(ValueError):
        emit_table("nope", P((1,)), "json")
    with pytest.raises(ValueError):
        emit_table("s1", P((1,)), "xml")


def test_eval_point_examples():
    assert eval_point("qt_number(2,1)", Fraction(1, 2), Fraction(1, 3)) == Fraction(11, 10)
    assert eval_point("s1(2,1;2,1)", Fraction(2, 7), Fraction(3, 5)) == 1
    assert eval_point("gaussian(2;1)", 2, 0) == 3
    assert eval_point("bracket_rect(1;1)", Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)) != 0


def test_eval_point_errors():
    with pytest.raises(ValueError):
        eval_point("mystery(1)", 1, 1)
    with pytest.raises(ValueError):
        eval_point("no parens", 1, 1)


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "qtstirling.cli", *args],
        capture_output=True, text=True,
    )


def test_cli_check_pass_and_filter():
    proc = _run_cli("check", "--n-max", "1", "--part-max", "2",
                    "--identity", "stirling-diagonal", "--identity", "gaussian-reduction")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "stirling-diagonal" in proc.stdout
    assert "0 failures" in proc.stdout


def test_cli_table_and_eval(tmp_path):
    out = tmp_path / "t.json"
    proc = _run_cli("table", "--kind", "binomial", "--bound", "2", "--out", str(out))
    assert proc.returncode == 0
    assert json.loads(out.read_text())["bound"] == [2]

    proc = _run_cli("eval", "--expr", "qt_number(2,1)", "--q", "1/2", "--t", "1/3")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "11/10"


def test_cli_eval_pole_exit_code():
    proc = _run_cli("eval", "--expr", "qt_number(2,1)", "--q", "1", "--t", "1")
    assert proc.returncode == 2
