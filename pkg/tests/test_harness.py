import json

import pytest

from catalog import load_catalog
from errors import EmptyCatalog
from harness import STATUSES, CheckResult, SuiteReport, replay_witness, run_check, run_suite


@pytest.fixture
def small_catalog():
    return load_catalog(expressions=["Z2", "Z3", "Z4"])


def test_empty_suite_is_rejected():
    with pytest.raises(EmptyCatalog):
        run_suite([])


def test_results_follow_subject_then_registry_order(small_catalog):
    report = run_suite(small_catalog, ["CHK-two-in-J", "CHK-axioms", "CHK-two-in-J"])
    assert [(r.subject, r.check_id) for r in report.results] == [
        ("Z2", "CHK-axioms"), ("Z2", "CHK-two-in-J"),
        ("Z3", "CHK-axioms"), ("Z3", "CHK-two-in-J"),
        ("Z4", "CHK-axioms"), ("Z4", "CHK-two-in-J"),
    ]
    assert report.totals == {"pass": 5, "fail": 0, "skipped": 1}
    assert report.ok and report.failures() == []


def test_parallel_run_matches_serial(small_catalog):
    ids = ["CHK-chain", "CHK-unit-decomp", "CHK-x-characterization"]
    serial = run_suite(small_catalog, ids)
    parallel = run_suite(small_catalog, ids, jobs=3)
    assert [r.to_dict(timing=False) for r in serial.results] == [r.to_dict(timing=False) for r in parallel.results]


def test_json_lines_without_timing(small_catalog):
    report = run_suite(small_catalog, ["CHK-two-in-J"])
    *rows, closing = [json.loads(line) for line in report.to_json_lines(timing=False).splitlines()]
    assert len(rows) == 3
    assert closing == {"summary": {"subjects": ["Z2", "Z3", "Z4"], "totals": {"pass": 2, "fail": 0, "skipped": 1}}}
    assert all("elapsed_s" not in row for row in rows)
    assert rows[1]["status"] == "skipped" and rows[1]["note"]


def test_frame_and_summary(small_catalog):
    report = run_suite(small_catalog, ["CHK-axioms", "CHK-two-in-J"])
    frame = report.to_frame()
    assert list(frame.columns) == list(CheckResult.__dataclass_fields__)
    assert set(frame["status"]) <= set(STATUSES)
    text = report.summary_text()
    assert "CHK-two-in-J" in text
    assert "Total: 5 pass, 0 fail, 1 skipped (6 execuções)" in text


def test_empty_report_summary():
    assert SuiteReport([]).summary_text() == "(nenhum resultado)"


def test_replay_needs_a_failure(small_catalog):
    result = run_check("CHK-axioms", small_catalog[0])
    with pytest.raises(ValueError):
        replay_witness(result, small_catalog[0])


def test_check_result_rounds_elapsed():
    r = CheckResult("CHK-axioms", "Z2", "pass", elapsed_s=0.1234567891)
    assert r.to_dict()["elapsed_s"] == 0.123457
    assert not r.failed
