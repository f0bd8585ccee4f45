import json

import pytest

from uqsl2.report import VerificationReport, merge_reports


def test_counts_and_status():
    report = VerificationReport("demo", 2)
    report.add("a", True)
    report.add("b", False, "broken pair (1,2)")
    assert report.counts == (1, 1)
    assert not report.passed
    text = report.render_text()
    assert "PASS  a" in text
    assert "FAIL  b" in text
    assert "broken pair (1,2)" in text


def test_timed_records_result_and_detail():
    report = VerificationReport("demo", 2)
    assert report.timed("ok", lambda: True)
    assert not report.timed("bad", lambda: (False, "counterexample"))
    assert report.checks[1].detail == "counterexample"


def test_json_round_trip_and_determinism():
    report = VerificationReport("demo", 3)
    report.add("a", True)
    report.add("b", False, "x")
    payload = report.to_json()
    rebuilt = VerificationReport.from_json(payload)
    assert rebuilt.to_json() == payload
    # timings excluded by default: serialization is reproducible
    assert json.dumps(payload, sort_keys=True) == json.dumps(
        rebuilt.to_json(), sort_keys=True
    )
    assert "elapsed" not in json.dumps(payload)


def test_merge_rules():
    empty = merge_reports([])
    assert empty.passed and empty.checks == []
    r1 = VerificationReport("s1", 2)
    r1.add("a", True)
    alone = merge_reports([r1])
    assert alone.counts == (1, 0)
    r2 = VerificationReport("s2", 2)
    r2.add("b", False, "payload")
    both = merge_reports([r1, r2])
    assert not both.passed
    assert any(c.detail == "payload" for c in both.checks)


def test_merge_rejects_mixed_p():
    r1 = VerificationReport("s1", 2)
    r2 = VerificationReport("s2", 3)
    with pytest.raises(ValueError):
        merge_reports([r1, r2])
