import json
import math
import pathlib
import pytest
from qborel.verify import (
    SCHEMA_VERSION,
    CheckResult,
    SuiteReport,
    VerificationReport,
)


def _report() -> VerificationReport:
    checks = [
        CheckResult(description="exact", residual=0.0, tolerance=0.0, exact=True),
        CheckResult(description="numeric", residual=1e-13, tolerance=1e-9, values={"psi(1)": 0.75}),
    ]
    return VerificationReport(
        parameters=dict(seed=4, datum="A1"),
        suites=[SuiteReport(name="polq", anchor="Haar state", checks=checks)],
    )


class TestCheckResult:
    def test_passed(self):
        assert CheckResult(description="a", residual=1e-10, tolerance=1e-9).passed
        assert not CheckResult(description="a", residual=1.0, tolerance=0.0, exact=True).passed

    def test_error(self):
        result = CheckResult(description="a", residual=None, tolerance=1e-9, error="ValueError: no")
        assert not result.passed

    def test_negative(self):
        with pytest.raises(ValueError):
            CheckResult(description="a", residual=-1.0, tolerance=1e-9)

    def test_infinite(self):
        result = CheckResult(description="a", residual=math.inf, tolerance=1e-9)
        assert result.to_dict()["residual"] == "inf"


def test_report_json():
    report = _report()
    result = json.loads(report.to_json())
    print(f"{result=}")
    assert result["schema_version"] == SCHEMA_VERSION
    assert result["seed"] == 4
    assert result["passed"]
    check = result["suites"][0]["checks"][1]
    assert check["residual"] == 1e-13
    assert check["values"]["psi(1)"] == 0.75


def test_report_failing():
    report = _report()
    report.suites[0].checks.append(CheckResult(description="broken", residual=None, tolerance=0.0, error="x"))
    assert not report.passed
    assert report.suites[0].residual == math.inf


def test_write(tmp_path: pathlib.Path):
    path = _report().write(tmp_path / "nested" / "report.json")
    assert json.loads(path.read_text())["parameters"]["datum"] == "A1"
