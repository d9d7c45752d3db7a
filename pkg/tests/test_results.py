import json

import pytest

from octograd.results import CheckResult, VerificationFailed, VerificationReport


@pytest.fixture()
def report():
    report = VerificationReport("Os")
    report.passed("dimension", 8)
    report.passed("unital")
    return report


def test_passing_report(report):
    assert report.ok and bool(report)
    assert report.raise_on_failure() is report
    assert report.as_dict() == {
        "subject": "Os",
        "status": "pass",
        "checks": [
            {"check": "dimension", "status": "pass", "value": 8},
            {"check": "unital", "status": "pass"},
        ],
    }


def test_failed_check_carries_its_witness(report):
    check = report.failed("norm multiplicative", (0, 3), "n(xy) != n(x)n(y)")
    assert not check
    assert check.witness == (0, 3)
    assert check.value_or(-1) == -1
    assert report.failures == [check]
    match check:
        case CheckResult.Failed(witness):
            assert witness == (0, 3)
        case _:
            pytest.fail("expected a failed check")


def test_raise_on_failure(report):
    report.failed("norm multiplicative", (0, 3), "n(xy) != n(x)n(y)")
    with pytest.raises(VerificationFailed, match="norm multiplicative") as raised:
        report.raise_on_failure()

    assert raised.value.report is report


def test_failed_report_is_json_ready(report):
    report.failed("grading", {"degree": "e"}, "component mismatch")
    data = json.loads(json.dumps(report.as_dict()))
    assert data["status"] == "fail"
    assert data["checks"][-1] == {
        "check": "grading",
        "status": "fail",
        "message": "component mismatch",
        "witness": "{'degree': 'e'}",
    }


def test_extend_merges_checks(report):
    other = VerificationReport("L")
    other.passed("trace", 3)
    report.extend(other)
    assert [check.name for check in report] == ["dimension", "unital", "trace"]
    assert [check.value_or(None) for check in report] == [8, None, 3]
