import json
import pathlib
import pytest
from qborel.verify import SUITES, ALIASES, main


def test_list(capsys):
    assert main(["--list"]) == 0
    result = capsys.readouterr().out
    print(f"{result=}")
    for name in [*SUITES, *ALIASES]:
        assert name in result
    assert "theoadjtran" in result
    assert "lemcomheis" in result


@pytest.mark.parametrize(
    argnames="argv",
    argvalues=[
        ["--suite", "no-such-suite"],
        ["--suite", "braid", "--datum", "Q9"],
        ["--suite", "braid", "--q", "2"],
        ["--suite", "findim", "--group", "2,,3"],
    ],
)
def test_invalid_arguments(argv: list):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def _run(argv: list, path: pathlib.Path) -> tuple[int, dict]:
    code = main([*argv, "--report", str(path)])
    return code, json.loads(path.read_text())


def test_findim(tmp_path: pathlib.Path):
    code, report = _run(["--suite", "findim", "--group", "2,2"], tmp_path / "findim.json")
    assert code == 0
    assert report["passed"]
    assert report["suites"][0]["name"] == "findim"


def test_haar_trace(tmp_path: pathlib.Path):
    argv = ["--suite", "haar-trace", "--datum", "A1", "--q", "1/2", "--fock-dim", "40"]
    code, report = _run(argv, tmp_path / "trace.json")
    check = report["suites"][0]["checks"][0]
    print(f"{check=}")
    assert code == 0
    assert abs(check["values"]["psi(1)"] - 0.75) < 1e-9
    assert abs(check["values"]["raw"] - 4 / 3) < 1e-9
    assert abs(check["values"]["rescaling"] - 0.5625) < 1e-12


def test_braid(tmp_path: pathlib.Path):
    code, report = _run(["--suite", "braid", "--datum", "A1"], tmp_path / "braid.json")
    assert code == 0
    assert len(report["suites"][0]["checks"]) == 9


def test_report_dir(monkeypatch, tmp_path: pathlib.Path):
    monkeypatch.setenv("QBOREL_REPORT_DIR", str(tmp_path))
    assert main(["--suite", "findim", "--group", "2"]) == 0
    assert (tmp_path / "qborel-verify.json").exists()
