import pytest
import numpy as np
from sympy import QQ
import qborel
from ..._tests import test_mixins

_labels = ["A1", "A2", "A3", "B2", "G2"]


@pytest.mark.parametrize(
    argnames="a",
    argvalues=[qborel.roots.datum_from_label(label) for label in _labels],
)
class TestRootDatum(
    test_mixins.AbstractTestPrintable,
):
    def test_hashable(self, a: qborel.roots.RootDatum):
        assert hash(a) == hash(qborel.roots.datum_from_label(a.label))
        assert qborel.algebras.quantum_envelope(a) is qborel.algebras.quantum_envelope(a)

    def test_cartan_reproduced(self, a: qborel.roots.RootDatum):
        for r in range(a.rank):
            for s in range(a.rank):
                alpha_r = a.simple_roots[r]
                alpha_s = a.simple_roots[s]
                result = 2 * a.pair(alpha_r, alpha_s) / a.pair(alpha_r, alpha_r)
                assert result == a.cartan_matrix[r][s]

    def test_fundamental_weights_dual(self, a: qborel.roots.RootDatum):
        for r in range(a.rank):
            for s in range(a.rank):
                alpha = a.simple_roots[s]
                coroot = 2 * a.pair(a.fundamental_weights[r], alpha) / a.pair(alpha, alpha)
                assert coroot == int(r == s)

    def test_rho(self, a: qborel.roots.RootDatum):
        total = qborel.roots.add_weights(a.zero, *a.positive_roots)
        assert total == qborel.roots.scale_weight(2, a.rho)

    def test_shortest_root(self, a: qborel.roots.RootDatum):
        lengths = [a.pair(alpha, alpha) for alpha in a.positive_roots]
        assert min(lengths) == 2

    def test_gram_symmetric(self, a: qborel.roots.RootDatum):
        g = a.gram
        for i in range(a.rank):
            for j in range(a.rank):
                assert g[i][j] == g[j][i]

    def test_positive_roots_nonnegative(self, a: qborel.roots.RootDatum):
        for alpha in a.positive_roots:
            coordinates = a.to_root_coordinates(alpha)
            assert all(c >= 0 and c.denominator == 1 for c in coordinates)


@pytest.mark.parametrize(
    argnames="label,num_roots,lengths",
    argvalues=[
        ("A1", 1, [2]),
        ("A2", 3, [2, 2, 2]),
        ("A3", 6, [2] * 6),
        ("B2", 4, [2, 2, 4, 4]),
        ("G2", 6, [2, 2, 2, 6, 6, 6]),
    ],
)
def test_positive_roots(label: str, num_roots: int, lengths: list[int]):
    datum = qborel.roots.datum_from_label(label)
    result = datum.positive_roots
    print(f"{result=}")
    assert len(result) == num_roots
    assert sorted(datum.pair(alpha, alpha) for alpha in result) == lengths


def test_a2_rho_pairings():
    datum = qborel.roots.datum_from_label("A2")
    a1, a2 = datum.simple_roots
    assert datum.pair(datum.rho, a1) == 1
    assert datum.pair(datum.rho, a2) == 1
    assert datum.pair(datum.rho, qborel.roots.add_weights(a1, a2)) == 2


def test_a1():
    datum = qborel.roots.datum_from_label("A1")
    assert datum.positive_roots == ((2,),)
    assert datum.rho == datum.fundamental_weights[0]
    assert datum.pair((1,), (1,)) == QQ(1, 2)


@pytest.mark.parametrize(
    argnames="label,symmetrizer",
    argvalues=[
        ("A2", (1, 1)),
        ("B2", (2, 1)),
        ("G2", (3, 1)),
    ],
)
def test_symmetrizer(label: str, symmetrizer: tuple[int, ...]):
    assert qborel.roots.datum_from_label(label).symmetrizer == symmetrizer


@pytest.mark.parametrize(
    argnames="cartan_matrix",
    argvalues=[
        [[2, -1], [-1]],
        [[3]],
        [[2, 1], [1, 2]],
        [[2, -1], [0, 2]],
        [[2, -2], [-2, 2]],
        [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
        [[2, -3], [-2, 2]],
    ],
)
def test_build_root_datum_invalid(cartan_matrix):
    with pytest.raises(ValueError):
        qborel.roots.build_root_datum(cartan_matrix)


def test_build_root_datum_custom():
    datum = qborel.roots.build_root_datum([[2, -2], [-1, 2]], label="C2")
    assert datum.symmetrizer == (1, 2)
    assert len(datum.positive_roots) == 4


def test_datum_from_label_unknown():
    with pytest.raises(ValueError):
        qborel.roots.datum_from_label("E9")


def test_datum_from_label_cached():
    assert qborel.roots.datum_from_label("A2") is qborel.roots.datum_from_label("A2")
