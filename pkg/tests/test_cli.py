import csv
import io
import json

import pytest

from pauli_fierz.cli import EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, EXIT_USAGE, SweepSpec, run
from pauli_fierz.field_kernels import FieldParams
from pauli_fierz.self_energy import self_energy_report


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_self_energy_json_roundtrip():
    code, out, _ = invoke("self-energy", "--alpha", "0.01", "--lambda", "1", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["leading"] == pytest.approx(1.95352e-3, abs=1e-7)
    report = self_energy_report(FieldParams(0.01, 1.0))
    assert data == report.as_dict()


def test_self_energy_table_uses_nine_digits():
    code, out, _ = invoke("self-energy", "--alpha", "0.01", "--lambda", "1")
    assert code == EXIT_OK
    line = next(l for l in out.splitlines() if l.startswith("leading"))
    assert line.split()[1] == "0.00195348572"


def test_constraint_violation_reports_bound():
    code, out, err = invoke("self-energy", "--alpha", "1", "--lambda", "0.25", "--a", "0.1")
    assert code == EXIT_INVALID
    assert out == ""
    assert "0.314159265" in err


@pytest.mark.parametrize("argv", [
    ["self-energy"],
    ["self-energy", "--alpha", "0.01", "--bogus"],
    ["self-energy", "--alpha", "0.01", "--lambda", "-1"],
    ["nope"],
    ["threshold", "--Z", "0"],
])
def test_usage_errors(argv, capsys):
    code, _, _ = invoke(*argv)
    assert code == EXIT_USAGE


def test_invalid_a_is_rejected():
    code, _, err = invoke("self-energy", "--alpha", "0.01", "--a", "1.5")
    assert code == EXIT_INVALID and "a must lie in (0, 1)" in err


def test_field_integrals_csv():
    code, out, _ = invoke("field-integrals", "--lambda", "1", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    header, values = rows
    assert header[0] == "lambda [2mc]"
    assert "e_field_closed [2mc^2]" in header
    record = dict(zip((h.split(" [")[0] for h in header), values))
    assert float(record["e_field_closed"]) == pytest.approx(0.122961314, rel=1e-8)
    assert float(record["gh_cross_max_abs"]) < 1e-12


def test_hydrogen_summary_and_coefficients():
    code, out, _ = invoke("hydrogen", "--Z", "13", "--alpha", str(1 / 137), "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["e0"] == pytest.approx(2.25105e-3, abs=1e-8)
    assert data["rc_approx"] == pytest.approx(2.45726e-5, abs=1e-9)
    assert data["c2"] ** 2 == pytest.approx(0.078038, abs=1e-5)
    code, out, _ = invoke("hydrogen", "--coefficients", "--n-max", "5", "--format", "json")
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [2, 3, 4, 5]


def test_threshold_report_and_scan():
    code, out, _ = invoke("threshold", "--Z", "13", "--lambda", "0.25", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["coefficient"] == pytest.approx(1.100, abs=0.005)
    assert data["branch"] == "error_vs_correction"
    assert data["z_min"] == 12
    code, out, _ = invoke("threshold", "--Z", "13", "--lambda", "0.25", "--scan-a")
    assert code == EXIT_OK
    row = next(l.split() for l in out.splitlines() if l.split() and l.split()[0] == "0.64")
    assert 0.83 <= float(row[1]) <= 0.87


def test_beta_from_environment(monkeypatch):
    monkeypatch.setenv("PF_BETA", "0.01")
    _, out, _ = invoke("hydrogen", "--Z", "1", "--format", "json")
    data = json.loads(out)
    assert data["beta"] == 0.01
    assert data["e0"] == pytest.approx(0.01**2 / 4, rel=1e-15)
    _, out, _ = invoke("hydrogen", "--Z", "1", "--beta", "0.02", "--format", "json")
    assert json.loads(out)["beta"] == 0.02


def test_sweep_over_charge():
    code, out, _ = invoke("sweep", "--variable", "Z", "--values", "1,12,13", "--format", "json",
                          "--alpha", str(1 / 137), "--a", "0.642")
    rows = json.loads(out)
    assert code == EXIT_OK
    assert [r["Z"] for r in rows] == [1, 12, 13]
    assert [r["enhanced"] for r in rows] == [False, False, True]


def test_sweep_inadmissible_points_are_flagged():
    code, out, _ = invoke("sweep", "--variable", "alpha", "--values", "0.01,2", "--format", "json")
    rows = json.loads(out)
    assert code == EXIT_OK
    assert rows[1]["admissible"] is False and rows[1]["enhanced"] is None


@pytest.mark.parametrize("values", ["0.5,0.2", "0.1,0.1", ""])
def test_sweep_rejects_bad_values(values):
    code, _, _ = invoke("sweep", "--variable", "lambda", "--values", values)
    assert code == EXIT_INVALID


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec("mass", (1.0,), 0.01, 0.25, 0.5, 1, 1 / 137)
    spec = SweepSpec("a", (0.2, 0.4), 0.01, 0.25, 0.5, 1, 1 / 137)
    assert [p["a"] for p in spec.points()] == [0.2, 0.4]


def test_verify_passes():
    code, out, _ = invoke("verify")
    assert code == EXIT_OK
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("identities passed")


def test_verify_reports_failure(monkeypatch):
    from pauli_fierz import checks
    monkeypatch.setattr(checks, "check_threshold", lambda: checks.Check("broken", False, "forced"))
    code, out, _ = invoke("verify")
    assert code == EXIT_CHECK_FAILED
    assert "[FAIL] broken" in out
