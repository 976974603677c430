import pytest
import numpy as np
import qborel

_datums = [qborel.roots.datum_from_label(label) for label in ["A1", "A2", "A3", "B2", "G2"]]


@pytest.mark.parametrize(
    argnames="datum",
    argvalues=_datums,
)
class TestLongestWord:
    def test_length(self, datum: qborel.roots.RootDatum):
        result = qborel.roots.longest_word(datum)
        print(f"{result=}")
        assert len(result) == len(datum.positive_roots)

    def test_maps_rho_to_minus_rho(self, datum: qborel.roots.RootDatum):
        result = qborel.roots.longest_element_action(datum, datum.rho)
        assert result == qborel.roots.scale_weight(-1, datum.rho)

    def test_involution(self, datum: qborel.roots.RootDatum):
        rng = np.random.default_rng(0)
        for _ in range(50):
            weight = tuple(int(c) for c in rng.integers(-5, 6, size=datum.rank))
            image = qborel.roots.longest_element_action(datum, weight)
            assert qborel.roots.longest_element_action(datum, image) == weight

    def test_beta_sum(self, datum: qborel.roots.RootDatum):
        for word in qborel.roots.reduced_words(datum):
            betas = qborel.roots.beta_sequence(datum, word)
            assert sorted(betas) == sorted(datum.positive_roots)
            total = qborel.roots.add_weights(datum.zero, *betas)
            assert total == qborel.roots.scale_weight(2, datum.rho)


def test_longest_word_a2():
    datum = qborel.roots.datum_from_label("A2")
    result = qborel.roots.longest_word(datum)
    assert result in [(0, 1, 0), (1, 0, 1)]


@pytest.mark.parametrize(
    argnames="label,num_words",
    argvalues=[
        ("A1", 1),
        ("A2", 2),
        ("B2", 2),
        ("A3", 16),
        ("G2", 2),
    ],
)
def test_reduced_words(label: str, num_words: int):
    datum = qborel.roots.datum_from_label(label)
    result = qborel.roots.reduced_words(datum)
    print(f"{result=}")
    assert len(result) == num_words
    assert datum.longest_word in result


def test_beta_sequence_a2():
    datum = qborel.roots.datum_from_label("A2")
    a1, a2 = datum.simple_roots
    result = qborel.roots.beta_sequence(datum, (0, 1, 0))
    assert result == (a1, qborel.roots.add_weights(a1, a2), a2)


@pytest.mark.parametrize(
    argnames="word",
    argvalues=[
        (0, 0, 1),
        (0, 1),
        (0, 1, 2),
    ],
)
def test_beta_sequence_invalid(word):
    datum = qborel.roots.datum_from_label("A2")
    with pytest.raises(ValueError):
        qborel.roots.beta_sequence(datum, word)


@pytest.mark.parametrize(
    argnames="label,weight,dimension",
    argvalues=[
        ("A1", (3,), 4),
        ("A2", (1, 0), 3),
        ("A2", (1, 1), 8),
        ("B2", (0, 1), 4),
        ("B2", (1, 0), 5),
        ("G2", (0, 1), 7),
        ("A3", (0, 1, 0), 6),
    ],
)
def test_weyl_dimension(label: str, weight, dimension: int):
    datum = qborel.roots.datum_from_label(label)
    result = qborel.roots.weyl_dimension(datum, weight)
    print(f"{result=}")
    assert result == dimension


@pytest.mark.parametrize(
    argnames="label,weight",
    argvalues=[
        ("A1", (4,)),
        ("A2", (1, 1)),
        ("A2", (2, 0)),
        ("B2", (1, 1)),
        ("G2", (0, 1)),
    ],
)
def test_freudenthal_multiplicities(label: str, weight):
    datum = qborel.roots.datum_from_label(label)
    result = qborel.roots.freudenthal_multiplicities(datum, weight)
    print(f"{result=}")
    assert sum(result.values()) == qborel.roots.weyl_dimension(datum, weight)
    for mu, m in result.items():
        image = qborel.roots.longest_element_action(datum, mu)
        assert result[image] == m


def test_adjoint_multiplicity():
    datum = qborel.roots.datum_from_label("A2")
    result = qborel.roots.freudenthal_multiplicities(datum, (1, 1))
    assert result[(0, 0)] == 2


def test_dominant_weights():
    datum = qborel.roots.datum_from_label("A2")
    result = qborel.roots.dominant_weights(datum, 1)
    assert result == ((0, 0), (0, 1), (1, 0), (1, 1))
    with pytest.raises(ValueError):
        qborel.roots.dominant_weights(datum, -1)


def test_weyl_dimension_non_dominant():
    datum = qborel.roots.datum_from_label("A2")
    with pytest.raises(ValueError):
        qborel.roots.weyl_dimension(datum, (-1, 0))
