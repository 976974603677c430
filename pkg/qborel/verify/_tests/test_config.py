import pathlib
import pytest
from qborel.verify import VerifyConfig, REPORT_DIR_VARIABLE, REPORT_NAME


def test_defaults():
    config = VerifyConfig()
    print(f"{config=}")
    assert config.datum == "A1"
    assert config.q == "1/2"
    assert config.algebra.datum.rank == 1
    assert config.finite_group.order == 4


@pytest.mark.parametrize(
    argnames="kwargs",
    argvalues=[
        dict(datum="X7"),
        dict(q="3/2"),
        dict(q="half"),
        dict(group="2,a"),
        dict(fock_dim=0),
        dict(p_window=-1),
        dict(jobs=0),
        dict(samples=-2),
    ],
)
def test_invalid(kwargs: dict):
    with pytest.raises(ValueError):
        VerifyConfig(**kwargs)


def test_label_normalized():
    assert VerifyConfig(datum="a2").datum == "A2"


def test_cutoff():
    assert VerifyConfig(datum="A1").cutoff(30, 10) == 30
    assert VerifyConfig(datum="A2").cutoff(30, 10) == 10
    assert VerifyConfig(datum="A2", fock_dim=7).cutoff(30, 10) == 7


def test_report_path(monkeypatch, tmp_path: pathlib.Path):
    monkeypatch.setenv(REPORT_DIR_VARIABLE, str(tmp_path))
    assert VerifyConfig().report_path == tmp_path / REPORT_NAME
    explicit = tmp_path / "other.json"
    assert VerifyConfig(report=explicit).report_path == explicit


def test_rng_repeats():
    config = VerifyConfig(seed=3)
    assert config.rng().integers(1000) == config.rng().integers(1000)
