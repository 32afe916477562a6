import json
import time

from reporting import FAIL, PASS, RECORDED, Report, recorded, timed, verdict


def test_verdict_keeps_witness_only_on_failure():
    assert verdict("ok", True, witness="x").witness is None
    failed = verdict("bad", False, witness=12)
    assert failed.status == FAIL
    assert failed.witness == "12"
    assert not failed.passed


def test_recorded_is_not_a_failure():
    record = recorded("order of pi", 4, order=4)
    assert record.status == RECORDED
    assert record.passed
    assert record.detail == {"order": 4}


def test_wall_time():
    started = time.perf_counter()
    assert verdict("ok", True, started=started).wall_time >= 0
    assert verdict("ok", True).wall_time == 0.0
    assert timed("check", lambda: True).status == PASS


def test_report_json_schema():
    report = Report("lab.py verify charts --system d6", "D6")
    report.add(verdict("a", True))
    report.extend([recorded("b", "x")])
    data = json.loads(report.to_json())
    assert data["schema"] == 1
    assert data["ok"] is True
    assert data["system"] == "D6"
    assert [r["name"] for r in data["records"]] == ["a", "b"]
    assert set(data["records"][0]) == {"name", "status", "witness", "wall_time", "detail"}


def test_report_fails_when_any_record_fails():
    report = Report("cmd")
    report.extend([verdict("a", True), verdict("b", False, witness="y - 1")])
    assert not report.ok
    assert [r.name for r in report.failed] == ["b"]
    assert report.summary() == "1 pass, 1 fail, 0 recorded"


def test_report_json_is_deterministic_apart_from_wall_time():
    def build():
        report = Report("cmd", "B5")
        report.extend([verdict("a", False, witness="w", started=time.perf_counter())])
        data = report.to_dict()
        for r in data["records"]:
            r.pop("wall_time")
        return json.dumps(data, sort_keys=True)

    assert build() == build()


def test_report_frame():
    report = Report("cmd")
    report.extend([verdict("a", True), verdict("b", False, witness="z" * 100)])
    frame = report.to_frame()
    assert list(frame.columns) == ["check", "status", "seconds", "witness"]
    assert len(frame["witness"].iloc[1]) == 60
    assert frame["witness"].iloc[1].endswith("...")
