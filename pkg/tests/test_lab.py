import json

import pandas as pd
import pytest

import lab


def run_json(capsys, *argv):
    status = lab.run(list(argv))
    out = capsys.readouterr().out
    return status, (json.loads(out) if out.strip() else None)


def test_verify_translations(capsys):
    status, report = run_json(capsys, "verify", "translations", "--system", "d6")
    assert status == lab.EXIT_OK
    assert report["schema"] == 1
    assert report["system"] == "D6"
    shifts = [r for r in report["records"] if r["name"].endswith("shift")]
    assert len(shifts) == 6
    assert all(r["status"] == "pass" for r in shifts)
    assert not any(r["detail"]["composed"] for r in shifts)


def test_verify_charts_d52(capsys):
    status, report = run_json(capsys, "verify", "charts", "--system", "d52")
    assert status == lab.EXIT_OK
    polynomial = [r for r in report["records"] if r["name"].endswith("polynomial")]
    assert len(polynomial) == 5


def test_verify_fixed_solution(capsys):
    status, report = run_json(capsys, "verify", "solutions", "--id", "d6_fixed")
    assert status == lab.EXIT_OK
    assert report["system"] is None
    assert report["ok"]


def test_report_to_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    status = lab.run(["verify", "integrals", "--out", str(out)])
    assert status == lab.EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["command"] == f"lab.py verify integrals --out {out}"


def test_table_goes_to_stderr(capsys):
    lab.run(["verify", "confluence", "--which", "uv"])
    err = capsys.readouterr().err
    assert "uv map dU/dt" in err
    assert "pass" in err


def test_integrate_writes_csv(tmp_path, capsys):
    csv = tmp_path / "run.csv"
    status, report = run_json(capsys, "integrate", "--system", "d6", "--rational",
                              "--params", '["1/4", 0, 0, "1/4", 0, 0, "1/4"]',
                              "--initial", '[1, 0, 1, "-1/8", 1, 0]',
                              "--t0", "1", "--t1", "4", "--out", str(csv))
    assert status == lab.EXIT_OK
    assert report["records"][0]["status"] == "recorded"
    frame = pd.read_csv(csv)
    assert frame["x_re"].iloc[-1] == pytest.approx(2.0, abs=1e-8)


def test_commute(capsys):
    status, report = run_json(capsys, "commute", "--system", "d6", "--map", "s1",
                              "--params", "[0.1, 0.2, 0.15, 0.1, 0.05, 0.05, 0.05]",
                              "--initial", "[[0.7, 0.1], 0.3, 0.5, 0.4, 0.6, 0.2]",
                              "--t0", "1", "--t1", "1.2")
    assert status == lab.EXIT_OK
    assert report["records"][0]["status"] == "pass"


def test_usage_errors_exit_2(capsys):
    assert lab.run(["integrate", "--system", "d6", "--params", "[1]", "--initial", "[1]",
                    "--t0", "1", "--t1", "2"]) == lab.EXIT_USAGE
    assert lab.run(["verify", "translations", "--system", "d51"]) == lab.EXIT_USAGE
    assert lab.run(["verify", "symmetry", "--system", "d6", "--map", "s9"]) == lab.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        lab.run(["verify", "charts", "--system", "e8"])
    assert info.value.code == 2


def test_failed_check_exits_1(monkeypatch, capsys):
    monkeypatch.setattr(lab, "verify_integrals",
                        lambda: [lab.verdict("I9 conserved along K9", False, witness="q")])
    status, report = run_json(capsys, "verify", "integrals")
    assert status == lab.EXIT_FAIL
    assert report["ok"] is False
    assert report["records"][0]["witness"] == "q"


def test_internal_error_exits_3(monkeypatch, capsys):
    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(lab, "verify_integrals", boom)
    assert lab.run(["verify", "integrals"]) == lab.EXIT_INTERNAL


@pytest.mark.slow
def test_verify_all(capsys):
    status, report = run_json(capsys, "verify", "all")
    assert status == lab.EXIT_OK
    assert len(report["records"]) > 300


@pytest.mark.slow
def test_verify_translations_with_full_maps(capsys):
    status, report = run_json(capsys, "verify", "translations", "--system", "d52", "--phase")
    assert status == lab.EXIT_OK
    shifts = [r for r in report["records"] if r["name"].endswith("shift")]
    assert shifts and all(r["detail"]["composed"] for r in shifts)


def test_verify_systems_reports_erratum(capsys):
    status, report = run_json(capsys, "verify", "systems", "--system", "d6")
    assert status == lab.EXIT_OK
    names = [r["name"] for r in report["records"]]
    assert "D6 dx/dt erratum" in names
    assert "D6 dy/dt erratum" not in names


def test_verify_systems_times_piii_reduction(capsys):
    status, report = run_json(capsys, "verify", "systems", "--system", "a1d7")
    assert status == lab.EXIT_OK
    piii = [r for r in report["records"] if r["name"] == "scalar P_III reduction"]
    assert len(piii) == 1 and piii[0]["status"] == "pass"
    assert piii[0]["wall_time"] > 0


def test_unknown_solution_lists_known_ids(caplog):
    assert lab.run(["verify", "solutions", "--id", "nope"]) == lab.EXIT_USAGE
    assert "D52_alg" in caplog.text
