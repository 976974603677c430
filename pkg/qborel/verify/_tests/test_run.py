import pytest
from qborel.verify import (
    Check,
    VerifyConfig,
    SUITES,
    ALIASES,
    list_suites,
    resolve_suite,
    run_check,
    run_suites,
)


def _raise():
    raise ValueError("broken")


@pytest.mark.parametrize(
    argnames="check,num_results,passed",
    argvalues=[
        (Check(description="float", run=lambda: 1e-12), 1, True),
        (Check(description="large", run=lambda: 1.0), 1, False),
        (Check(description="values", run=lambda: (0.0, {"x": 2.0})), 1, True),
        (Check(description="named", run=lambda: {"a": 0.0, "b": 3.0}), 2, False),
        (Check(description="raises", run=_raise), 1, False),
        (Check(description="nan", run=lambda: float("nan")), 1, False),
    ],
)
def test_run_check(check: Check, num_results: int, passed: bool):
    result = run_check(check)
    print(f"{result=}")
    assert len(result) == num_results
    assert all(r.passed for r in result) == passed


def test_named_descriptions():
    result = run_check(Check(description="group", run=lambda: {"a": 0.0}))
    assert result[0].description == "group: a"


def test_error_message():
    result = run_check(Check(description="raises", run=_raise))
    assert result[0].error == "ValueError: broken"
    assert result[0].residual is None


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(VerifyConfig(), ["no-such-suite"])


@pytest.mark.parametrize("jobs", [1, 3])
def test_findim_suite(jobs: int):
    report = run_suites(VerifyConfig(group="2", jobs=jobs), ["findim", "biduality"])
    for suite in report.suites:
        for check in suite.checks:
            print(f"{check.description}: {check.residual=}")
    assert [s.name for s in report.suites] == ["findim", "biduality"]
    assert report.passed
    for suite in report.suites:
        assert all(check.anchor == suite.anchor for check in suite.checks)
        assert suite.to_dict()["checks"][0]["anchor"] == suite.anchor


def test_deterministic():
    config = VerifyConfig(samples=2, seed=7)
    first = run_suites(config, ["polq"]).suites[0]
    second = run_suites(config, ["polq"]).suites[0]
    assert [c.residual for c in first.checks] == [c.residual for c in second.checks]


def test_anchor():
    result = run_check(Check(description="float", run=lambda: 0.0), anchor="a statement")
    assert result[0].anchor == "a statement"
    result = run_check(Check(description="raises", run=_raise), anchor="a statement")
    assert result[0].to_dict()["anchor"] == "a statement"


@pytest.mark.parametrize(
    argnames="alias,name",
    argvalues=[
        ("lemcomheis", "commutation"),
        ("corlhdblhd", "translation"),
        ("theoadjtran", "intertwiner"),
        ("propadconc", "coaction-matrix"),
        ("theounique", "highest-weight"),
    ],
)
def test_aliases(alias: str, name: str):
    assert resolve_suite(alias) == name
    assert resolve_suite(name) == name
    assert ALIASES[alias] == name
    catalog = list_suites()
    assert SUITES[name].anchor in catalog[alias]


def test_resolve_unknown():
    with pytest.raises(ValueError):
        resolve_suite("no-such-suite")


def test_duplicate_names():
    report = run_suites(VerifyConfig(group="2"), ["findim", "findim"])
    assert [s.name for s in report.suites] == ["findim"]
