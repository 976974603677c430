import pytest
import numpy as np
from qborel.findim import FiniteAbelianGroup, parse_group


def test_group_elements():
    group = FiniteAbelianGroup(factors=(2, 2, 3))
    assert group.order == 12
    assert group.elements.shape == (12, 3)
    assert group.index((1, 1, 2)) == 11
    assert group.index((-1, 0, 0)) == group.index((1, 0, 0)) == 6


def test_group_tables():
    group = FiniteAbelianGroup(factors=(3,))
    assert group.addition[1, 2] == 0
    assert group.addition[2, 2] == 1
    assert FiniteAbelianGroup(factors=(4,)).negation.tolist() == [0, 3, 2, 1]


def test_addition_commutes():
    group = FiniteAbelianGroup(factors=(2, 3))
    assert np.array_equal(group.addition, group.addition.T)
    zero = group.index((0, 0))
    assert np.array_equal(group.addition[zero], np.arange(group.order))


def test_trivial_group():
    group = FiniteAbelianGroup(factors=(1,))
    assert group.order == 1
    assert group.addition.tolist() == [[0]]


@pytest.mark.parametrize(
    argnames="spec,factors",
    argvalues=[
        ("2,2,3", (2, 2, 3)),
        ("5", (5,)),
        ("1", (1,)),
    ],
)
def test_parse_group(spec: str, factors: tuple):
    assert parse_group(spec).factors == factors


@pytest.mark.parametrize("spec", ["", "2,a", "2,0", "3,-1", "2,,2"])
def test_parse_group_errors(spec: str):
    with pytest.raises(ValueError):
        parse_group(spec)


def test_empty_group():
    with pytest.raises(ValueError):
        FiniteAbelianGroup(factors=())
