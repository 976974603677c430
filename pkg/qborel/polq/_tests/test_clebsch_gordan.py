import pytest
import numpy as np
import qborel
from qborel.representations import build_irrep
from qborel.polq import tensor_rep, clebsch_gordan


def _datum(label: str) -> qborel.roots.RootDatum:
    return qborel.roots.datum_from_label(label)


@pytest.mark.parametrize(
    argnames="label,left,right,summands",
    argvalues=[
        ("A1", (1,), (0,), [(1,)]),
        ("A1", (1,), (1,), [(2,), (0,)]),
        ("A1", (2,), (1,), [(3,), (1,)]),
        ("A2", (1, 0), (1, 0), [(2, 0), (0, 1)]),
        ("A2", (1, 0), (0, 1), [(1, 1), (0, 0)]),
        ("B2", (0, 1), (0, 1), [(0, 2), (1, 0), (0, 0)]),
    ],
)
class TestCleb:
    def test_summands(self, label: str, left: tuple, right: tuple, summands: list):
        result = clebsch_gordan(_datum(label), left, right, "1/2")
        print(f"{result=}")
        assert sorted(c.highest_weight for c in result) == sorted(summands)

    def test_isometries(self, label: str, left: tuple, right: tuple, summands: list):
        result = clebsch_gordan(_datum(label), left, right, "1/2")
        stacked = np.concatenate([c.isometry for c in result], axis=1)
        assert np.allclose(stacked.conj().T @ stacked, np.eye(stacked.shape[1]), atol=1e-10)
        assert stacked.shape[0] == stacked.shape[1]

    def test_intertwining(self, label: str, left: tuple, right: tuple, summands: list):
        datum = _datum(label)
        product = tensor_rep(build_irrep(datum, left), build_irrep(datum, right))
        for component in clebsch_gordan(datum, left, right, "1/2"):
            irrep = build_irrep(datum, component.highest_weight)
            phi = component.isometry
            for a, b in zip(product.e + product.f, irrep.e + irrep.f):
                assert np.allclose(a @ phi, phi @ b, atol=1e-10)


def test_trivial_factor():
    datum = _datum("A2")
    (result,) = clebsch_gordan(datum, (1, 1), (0, 0), "1/2")
    assert result.highest_weight == (1, 1)
    assert np.allclose(result.isometry, np.eye(8), atol=1e-12)


def test_su2_singlet():
    q = 0.5
    result = clebsch_gordan(_datum("A1"), (1,), (1,), "1/2")
    singlet = next(c for c in result if c.highest_weight == (0,))
    expected = np.array([0, q, -1, 0]) / np.sqrt(1 + q**2)
    assert np.allclose(singlet.isometry[:, 0], expected, atol=1e-12)


def test_tensor_rep_mismatch():
    datum = _datum("A1")
    with pytest.raises(ValueError):
        tensor_rep(build_irrep(datum, (1,), q="1/2"), build_irrep(datum, (1,), q="1/3"))


def test_selected_summands():
    datum = _datum("B2")
    full = clebsch_gordan(datum, (1, 1), (1, 1), "1/2")
    (result,) = clebsch_gordan(datum, (1, 1), (1, 1), "1/2", highest_weights=[(0, 0)])
    expected = next(c for c in full if c.highest_weight == (0, 0))
    print(f"{result=}")
    assert result.isometry.shape == (256, 1)
    assert np.allclose(result.isometry, expected.isometry, atol=1e-10)
