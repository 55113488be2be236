import csv
import io
import json

import pytest

from buckle.cli import main
from buckle.core import read_spectrum
from buckle.report import build_report, report_csv, verify_moments, verify_spectrum
from buckle.core import validate_spectrum


def write_spectrum(path, geometry, n, l, values):
    path.write_text(json.dumps({"format": "buckle-spectrum/1", "geometry": geometry,
                                "dimension": n, "order": l, "eigenvalues": values}))
    return str(path)


# -- report layer ----------------------------------------------------------------------

def test_report_euclidean_example():
    rep = build_report(validate_spectrum("euclidean", 2, 2, [1, 2]), 1)
    e = rep.entries[0].to_dict()
    assert e["thm_residual"] == pytest.approx(-1.0)
    assert e["bound_a"] == pytest.approx(5.0) and e["bound_b"] == pytest.approx(5.0)
    assert e["tightness_a"] == pytest.approx(2.5)


def test_report_sphere_example():
    rep = build_report(validate_spectrum("sphere", 2, 2, [2, 3]), 1)
    e = rep.entries[0].to_dict(sphere=True)
    assert e["delta_star"] == pytest.approx(1.0)
    assert e["residual_at_delta_star"] == pytest.approx(2.0)
    assert e["bound_a"] == pytest.approx(6.0)


def test_report_last_k_has_bounds_only():
    rep = build_report(validate_spectrum("euclidean", 2, 2, [1.0]), 1)
    e = rep.entries[0]
    assert e.lambda_next_computed is None and e.thm_residual is None
    assert e.bound_a == pytest.approx(5.0)


def test_report_csv_columns():
    rep = build_report(validate_spectrum("euclidean", 6, 2, [1.0, 1000.0]))
    rows = list(csv.reader(io.StringIO(report_csv(rep))))
    assert rows[0] == ["k", "lambda_next_computed", "thm_residual", "bound_a", "bound_b",
                       "tightness_a", "tightness_b"]
    assert rows[2][3] == "" and rows[2][4] == ""  # k = 2: undefined bounds
    sphere = build_report(validate_spectrum("sphere", 2, 2, [2.0, 3.0]))
    header = report_csv(sphere).splitlines()[0].split(",")
    assert header[-2:] == ["delta_star", "residual_at_delta_star"]


def test_verify_flags_corruption():
    vals = [52.34, 92.12, 92.12, 128.2, 154.1]
    assert verify_spectrum(validate_spectrum("euclidean", 2, 2, vals)) == []
    bad = list(vals)
    bad[1] *= 100
    violations = verify_spectrum(validate_spectrum("euclidean", 2, 2, bad))
    assert violations and all(isinstance(v.k, int) for v in violations)


def test_moment_verification_detects_tampering():
    from buckle.core import Interval
    from buckle.solver import solve_buckling
    data = solve_buckling(Interval(1.0), 3, 12, 3).to_dict()
    assert verify_moments(data) == []
    data["eigenvalues"][0] *= 1.01
    assert any(v.check == "eigen-equation" for v in verify_moments(data))


# -- commands ----------------------------------------------------------------------

def test_solve_interval(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["solve", "--domain", "interval", "--l", "2", "--basis", "16", "--count", "4",
                 "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["format"] == "buckle-spectrum/1"
    assert data["eigenvalues"][0] == pytest.approx(39.4784176, rel=1e-8)


def test_solve_cap_and_round_trip(tmp_path):
    out, sol = tmp_path / "cap.json", tmp_path / "sol.json"
    args = ["solve", "--domain", "cap", "--theta0", "1.0471975512", "--l", "2", "--basis", "16",
            "--count", "8", "--m-max", "8", "--out", str(out), "--solution-out", str(sol)]
    assert main(args) == 0
    spec = read_spectrum(out)
    assert spec.geometry == "sphere" and len(spec) == 8
    assert json.loads(sol.read_text())["format"] == "buckle-solution/1"
    first = out.read_bytes()
    assert main(args) == 0
    assert out.read_bytes() == first  # deterministic output
    assert main(["verify", "--in", str(out), "--solution", str(sol)]) == 0


def test_solve_count_zero(tmp_path):
    out = tmp_path / "z.json"
    assert main(["solve", "--domain", "disc", "--count", "0", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["eigenvalues"] == []


def test_solve_warns_on_stderr(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["solve", "--domain", "disc", "--basis", "8", "--count", "10", "--m-max", "1",
                 "--out", str(out)]) == 0
    assert "incomplete" in capsys.readouterr().err


@pytest.mark.parametrize("args", [
    ["solve", "--domain", "cap", "--out", "x.json"],
    ["solve", "--domain", "interval", "--l", "1", "--out", "x.json"],
    ["solve", "--domain", "rectangle", "--sides", "1,-1", "--out", "x.json"],
    ["solve", "--domain", "interval", "--basis", "4", "--count", "9", "--out", "x.json"],
    ["solve", "--domain", "sphere", "--out", "x.json"],
    ["coeffs", "--l", "1", "--n", "2"],
    ["coeffs", "--l", "2", "--n", "1"],
    ["bounds"],
])
def test_usage_errors_exit_2(args, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 2


def test_solver_failure_exits_1(tmp_path, monkeypatch):
    from buckle.errors import IllConditionedBasisError
    import buckle.cli as cli

    def boom(*a, **k):
        raise IllConditionedBasisError("basis too ill-conditioned, reduce N")

    monkeypatch.setattr(cli, "solve_buckling", boom)
    assert main(["solve", "--domain", "interval", "--out", str(tmp_path / "x.json")]) == 1


def test_bounds_examples(tmp_path, capsys):
    path = write_spectrum(tmp_path / "e.json", "euclidean", 2, 2, [1.0, 2.0])
    csv_path = tmp_path / "e.csv"
    assert main(["bounds", "--in", path, "--k-max", "1", "--csv", str(csv_path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["format"] == "buckle-report/1"
    e = report["entries"][0]
    assert (e["k"], e["thm_residual"], e["bound_a"], e["bound_b"]) == (1, -1.0, 5.0, 5.0)
    assert csv_path.read_text().splitlines()[1] == "1,2.0,-1.0,5.0,5.0,2.5,2.5"

    path = write_spectrum(tmp_path / "s.json", "sphere", 2, 2, [2.0, 3.0])
    out = tmp_path / "r.json"
    assert main(["bounds", "--in", path, "--k-max", "1", "--out", str(out)]) == 0
    e = json.loads(out.read_text())["entries"][0]
    assert (e["delta_star"], e["residual_at_delta_star"], e["bound_a"]) == (1.0, 2.0, 6.0)

    path = write_spectrum(tmp_path / "one.json", "euclidean", 2, 2, [1.0])
    assert main(["bounds", "--in", path, "--k-max", "1"]) == 0
    e = json.loads(capsys.readouterr().out)["entries"][0]
    assert e["thm_residual"] is None and e["bound_a"] == 5.0


def test_bounds_undefined_is_null(tmp_path, capsys):
    path = write_spectrum(tmp_path / "e.json", "euclidean", 6, 2, [1.0, 1000.0])
    assert main(["bounds", "--in", path]) == 0
    entries = json.loads(capsys.readouterr().out)["entries"]
    assert entries[1]["bound_a"] is None and entries[1]["bound_b"] is None


@pytest.mark.parametrize("content", ["not json", "[]", '{"format": "buckle-spectrum/1"}'])
def test_bounds_malformed_exit_2(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert main(["bounds", "--in", str(path)]) == 2


def test_verify_square_and_corruption(tmp_path, capsys):
    out = tmp_path / "sq.json"
    assert main(["solve", "--domain", "rectangle", "--sides", "1,1", "--l", "2", "--basis", "20",
                 "--count", "10", "--out", str(out)]) == 0
    assert main(["verify", "--in", str(out)]) == 0
    assert "PASS" in capsys.readouterr().out

    data = json.loads(out.read_text())
    data["eigenvalues"][1] *= 100
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert main(["verify", "--in", str(bad)]) == 1
    text = capsys.readouterr().out
    assert "FAIL" in text and "k=" in text


def test_verify_empty_path_exit_2():
    assert main(["verify", "--in", ""]) == 2


def test_verify_sphere_precondition_is_violation(tmp_path, capsys):
    path = write_spectrum(tmp_path / "s.json", "sphere", 4, 2, [1.0, 3.0])
    assert main(["verify", "--in", path]) == 1
    assert "precondition" in capsys.readouterr().out


def test_coeffs(capsys):
    assert main(["coeffs", "--l", "2", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "C = 5" in out and "a = [-1]" in out
    assert main(["coeffs", "--l", "3", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "C = 12" in out and "a = [0, -7]" in out and "F_1 = [-4, 1]" in out
