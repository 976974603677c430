import pytest
import numpy as np
import qborel
from qborel.algebras import quantum_envelope, counit as counit_envelope
from qborel.scalars import evaluate as evaluate_scalar
from qborel.polq import (
    polq,
    product,
    star,
    haar,
    left_translate,
    right_translate,
    modular_automorphism,
    random_element,
    HaarError,
    InvariantFunctionals,
    haar_invariance_oracle,
    quantum_dimension,
    integral_normalization,
    haar_integral,
    orthogonality_constants,
)


def _algebra(label: str) -> qborel.polq.Polq:
    return polq(qborel.roots.datum_from_label(label), "1/2")


def test_su2_orthogonality():
    algebra = _algebra("A1")
    u = algebra.unit((1,), 0, 0)
    result = haar(product(star(u), u))
    print(f"{result=}")
    assert np.isclose(result, 0.8)


def test_nontrivial_blocks():
    algebra = _algebra("A2")
    for weight in [(1, 0), (0, 1), (1, 1)]:
        assert haar(algebra.unit(weight, 0, 0)) == 0


@pytest.mark.parametrize(
    argnames="label",
    argvalues=["A1", "A2", "B2"],
)
class TestHaar:
    def test_oracle_unique(self, label: str):
        result = haar_invariance_oracle(_algebra(label), cutoff=1)
        print(f"{result.dimensions=}")
        assert result.is_unique
        assert result.dimensions[result.algebra.datum.zero] == 1

    def test_oracle_agrees(self, label: str):
        algebra = _algebra(label)
        oracle = haar_invariance_oracle(algebra, cutoff=1)
        rng = np.random.default_rng(0)
        for _ in range(5):
            x = random_element(algebra, rng)
            assert np.isclose(oracle(x), haar(x), atol=1e-10)

    def test_invariance(self, label: str):
        algebra = _algebra(label)
        U = quantum_envelope(algebra.datum)
        x = random_element(algebra, np.random.default_rng(1))
        generators = [U.k(algebra.datum.rho)]
        for r in range(algebra.datum.rank):
            generators += [U.e(r), U.f(r), U.e(r) * U.f(r)]
        for X in generators:
            expected = evaluate_scalar(counit_envelope(X), algebra.q) * haar(x)
            assert np.isclose(haar(left_translate(X, x)), expected, atol=1e-10)
            assert np.isclose(haar(right_translate(x, X)), expected, atol=1e-10)

    def test_orthogonality_constants(self, label: str):
        algebra = _algebra(label)
        for weight, result in orthogonality_constants(algebra, cutoff=1).items():
            print(f"{result=}")
            assert result.spread < 1e-10
            assert result.haar_deviation < 1e-10
            assert np.isclose(result.constant, result.expected, rtol=1e-10)

    def test_modular(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(2)
        for _ in range(3):
            x = random_element(algebra, rng)
            y = random_element(algebra, rng)
            result = haar(product(x, modular_automorphism(y)))
            expected = haar(product(y, x))
            assert np.isclose(result, expected, rtol=1e-9, atol=1e-9)

    def test_positive(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(3))
        result = haar(product(star(x), x))
        assert result.real > 0
        assert abs(result.imag) < 1e-10


def test_su2_quantum_dimension():
    algebra = _algebra("A1")
    assert np.isclose(quantum_dimension(algebra, (1,)), 2.5)
    assert np.isclose(quantum_dimension(algebra, (2,)), 4 + 1 + 0.25)


def test_su2_integral():
    algebra = _algebra("A1")
    assert np.isclose(integral_normalization(algebra), 0.75)
    assert np.isclose(haar_integral(algebra.one()), 0.75)


def test_oracle_not_unique():
    algebra = _algebra("A1")
    oracle = haar_invariance_oracle(algebra, cutoff=1)
    solutions = dict(oracle.solutions)
    solutions[(0,)] = np.ones((2, 1, 1))
    broken = InvariantFunctionals(algebra=algebra, cutoff=1, solutions=solutions)
    with pytest.raises(HaarError):
        broken(algebra.one())


def test_oracle_beyond_cutoff():
    algebra = _algebra("A1")
    oracle = haar_invariance_oracle(algebra, cutoff=1)
    with pytest.raises(ValueError):
        oracle(algebra.unit((3,), 0, 0))
