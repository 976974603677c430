import pytest
import numpy as np
import qborel
from qborel.representations import (
    build_irrep,
    braid_operator,
    longest_braid_operator,
    lowest_weight_vector,
)


def _datum(label: str) -> qborel.roots.RootDatum:
    return qborel.roots.datum_from_label(label)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 6])
def test_su2_highest_weight_vector(n: int):
    q = 0.5
    rep = build_irrep(_datum("A1"), (n,), "numeric", "1/2")
    result = braid_operator(rep, 0)[:, 0]
    print(f"{result=}")
    expected = np.zeros(rep.dimension)
    expected[-1] = (-1) ** n * q ** (n / 2)
    assert np.allclose(result, expected, atol=1e-10)


def test_su2_spin_half_matrix():
    q = 0.5
    rep = build_irrep(_datum("A1"), (1,), "numeric", "1/2")
    result = braid_operator(rep, 0)
    expected = np.array([[0, q ** (1 / 2)], [-(q ** (1 / 2)), 0]])
    assert np.allclose(result, expected, atol=1e-10)


def test_trivial():
    rep = build_irrep(_datum("A2"), (0, 0))
    for r in range(2):
        assert np.allclose(braid_operator(rep, r), 1)
    assert np.allclose(lowest_weight_vector(rep), 1)


@pytest.mark.parametrize(
    argnames="label,weight",
    argvalues=[
        ("A1", (3,)),
        ("A2", (1, 0)),
        ("A2", (1, 1)),
        ("A2", (2, 1)),
        ("B2", (1, 1)),
        ("G2", (0, 1)),
    ],
)
class TestLongestBraid:
    def test_independent_of_word(self, label: str, weight: tuple):
        datum = _datum(label)
        rep = build_irrep(datum, weight, "numeric")
        words = qborel.roots.reduced_words(datum)
        first = longest_braid_operator(rep, words[0])
        for word in words[1:]:
            assert np.allclose(longest_braid_operator(rep, word), first, atol=1e-10)

    def test_lowest_weight_vector(self, label: str, weight: tuple):
        datum = _datum(label)
        rep = build_irrep(datum, weight, "numeric")
        result = lowest_weight_vector(rep)
        print(f"{result=}")
        assert np.isclose(np.linalg.norm(result), 1, atol=1e-12)
        for f in rep.f:
            assert np.allclose(f @ result, 0, atol=1e-10)
        lowest = qborel.roots.longest_element_action(datum, weight)
        support = np.flatnonzero(np.abs(result) > 1e-10)
        assert all(rep.weights[i] == lowest for i in support)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_su2_lowest_weight_vector(n: int):
    rep = build_irrep(_datum("A1"), (n,), "numeric")
    result = lowest_weight_vector(rep)
    expected = np.zeros(rep.dimension)
    expected[-1] = (-1) ** n
    assert np.allclose(result, expected, atol=1e-10)


def test_a2_lowest_weight():
    datum = _datum("A2")
    rep = build_irrep(datum, (1, 0), "numeric")
    result = lowest_weight_vector(rep)
    assert rep.weights[int(np.argmax(np.abs(result)))] == (0, -1)


def test_exact_rejected():
    rep = build_irrep(_datum("A1"), (1,), "exact")
    with pytest.raises(TypeError):
        braid_operator(rep, 0)


def test_bad_word():
    rep = build_irrep(_datum("A2"), (1, 0))
    with pytest.raises(ValueError):
        longest_braid_operator(rep, (0, 0, 1))
