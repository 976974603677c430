import pytest
import numpy as np
import qborel
from qborel.scalars import evaluate
from qborel.polq import polq
from qborel.hilbert import (
    TruncatedSpace,
    fock_rep,
    highest_weight_gram,
    skew_pairing_gram,
    cyclicity_rank,
    fock_word_rank,
    boundedness_sequence,
)

_q = 0.5


def _algebra(label: str) -> qborel.polq.Polq:
    return polq(qborel.roots.datum_from_label(label), "1/2")


def test_gram_matches_skew_pairing():
    datum = qborel.roots.datum_from_label("A1")
    words = [(), (0,), (0, 0)]
    gram = highest_weight_gram(datum, words)
    skew = skew_pairing_gram(datum, words)
    print(f"{gram=}")
    for i in range(len(words)):
        for j in range(len(words)):
            assert np.isclose(evaluate(gram[i][j], "1/2"), evaluate(skew[i][j], "1/2"))


def test_gram_degree_one():
    datum = qborel.roots.datum_from_label("A1")
    gram = highest_weight_gram(datum, [(0,)])
    assert np.isclose(evaluate(gram[0][0], "1/2"), 1 / (1 / _q - _q))


@pytest.mark.parametrize(
    argnames="label,words,cutoff",
    argvalues=[
        ("A1", [(0,), (0, 0), (0, 0, 0)], 6),
        ("A2", [(0,), (1,), (0, 1), (1, 0)], 3),
    ],
)
def test_gram_matches_fock(label: str, words: list, cutoff: int):
    algebra = _algebra(label)
    space = TruncatedSpace(datum=algebra.datum, cutoff=cutoff)
    vacuum = np.zeros(space.fock().dimension)
    vacuum[0] = 1
    vectors = []
    for w in words:
        operator = fock_rep(algebra, [(r, True) for r in reversed(w)], space)
        assert operator.valid[0]
        vectors.append(operator.matrix @ vacuum)
    gram = highest_weight_gram(algebra.datum, words)
    for i, v in enumerate(vectors):
        for j, w in enumerate(vectors):
            result = np.vdot(v, w)
            print(f"{i=}, {j=}, {result=}")
            assert np.isclose(result, evaluate(gram[i][j], "1/2"))


@pytest.mark.parametrize(
    argnames="label,words,rank",
    argvalues=[
        ("A1", [(0,), (0, 0)], 2),
        ("A2", [(0, 1), (1, 0)], 2),
    ],
)
def test_fock_word_rank(label: str, words: list, rank: int):
    algebra = _algebra(label)
    result = fock_word_rank(algebra, TruncatedSpace(datum=algebra.datum, cutoff=3), words)
    print(f"{result=}")
    assert result.rank == rank


def test_fock_word_rank_window():
    algebra = _algebra("A1")
    with pytest.raises(ValueError):
        fock_word_rank(algebra, TruncatedSpace(datum=algebra.datum, cutoff=2), [(0, 0, 0)])


def test_cyclicity():
    algebra = _algebra("A1")
    result = cyclicity_rank(algebra, TruncatedSpace(datum=algebra.datum, cutoff=4), bound=3)
    print(f"{result=}")
    assert result.is_full


def test_boundedness():
    algebra = _algebra("A1")
    space = TruncatedSpace(datum=algebra.datum, cutoff=2)
    cutoffs = [2, 4, 6, 8]
    result = boundedness_sequence(algebra.unit((1,), 1, 1), space, cutoffs)
    print(f"{result=}")
    assert np.allclose(result, [np.sqrt(1 - _q ** (2 * (d - 1))) for d in cutoffs])
    assert all(a <= b for a, b in zip(result, result[1:]))
