import pytest
import numpy as np
import qborel
from qborel.scalars import evaluate as evaluate_scalar
from qborel.algebras import drinfeld_double, quantum_envelope, coproduct, antipode, star
from qborel.polq import random_element, u
from qborel.amplified import (
    AmplifiedElement,
    amplified,
    from_localized,
    delta,
    z,
    counit_plus,
    antipode_plus,
    modular_plus,
    embed_monomial,
    pair_plus,
    translate_right,
    translate_left,
    modular_element,
)

_labels = ["A1", "A2"]


def _algebra(label: str) -> qborel.polq.Polq:
    return qborel.polq.polq(qborel.roots.datum_from_label(label), "1/2")


def _random(algebra, rng: np.random.Generator, flavor: str = "+") -> AmplifiedElement:
    datum = algebra.datum
    result = AmplifiedElement(algebra=algebra, flavor=flavor)
    for weight in (datum.zero, datum.simple_roots[0], datum.fundamental_weights[0]):
        x = random_element(algebra, rng, weights=[datum.zero, datum.fundamental_weights[0]])
        result = result + amplified(x, delta(algebra, weight), flavor)
    return result


def _generators(datum) -> list:
    double = drinfeld_double(datum)
    result = [double.one()]
    for r in range(datum.rank):
        result += [double.e(r), double.f(r)]
    for omega in datum.fundamental_weights:
        result += [double.k(omega), double.l(omega)]
    return result


def _close(a: AmplifiedElement, b: AmplifiedElement, tolerance: float = 1e-9) -> bool:
    scale = max(1.0, a.norm, b.norm)
    return (a - b).norm <= tolerance * scale


def _isclose(a: complex, b: complex) -> bool:
    return bool(np.isclose(a, b, rtol=1e-9, atol=1e-9))


def test_embed_monomial():
    datum = qborel.roots.datum_from_label("A2")
    double = drinfeld_double(datum)
    omega, chi = datum.fundamental_weights
    monomial = ((1,), (omega, chi), (0,))
    image, nu = embed_monomial(double, monomial)
    expected = quantum_envelope(datum).element({((1,), ((1, 1),), (0,)): qborel.scalars.FIELD.one})
    assert image.terms == expected.terms
    assert nu == (3, -2)


@pytest.mark.parametrize("label", _labels)
class TestPairing:
    def test_one(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(0))
        one = drinfeld_double(algebra.datum).one()
        assert _isclose(pair_plus(one, a), counit_plus(a))

    def test_product(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(1)
        a, b = _random(algebra, rng), _random(algebra, rng)
        generators = _generators(algebra.datum)
        for X in generators + [generators[1] * generators[2] * generators[-1]]:
            result = pair_plus(X, a * b)
            expected = 0j
            for (m1, m2), c in coproduct(X).terms.items():
                tensor = coproduct(X)
                value = pair_plus(tensor.leg(0, m1), a) * pair_plus(tensor.leg(1, m2), b)
                expected += evaluate_scalar(c, algebra.q) * value
            print(f"{result=}")
            assert _isclose(result, expected)

    def test_star(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(2))
        for X in _generators(algebra.datum):
            result = pair_plus(star(X), a)
            expected = np.conj(pair_plus(X, antipode_plus(a).star))
            assert _isclose(result, expected)

    def test_modular_element(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(3))
        result = pair_plus(modular_element(algebra.datum), modular_plus(a))
        assert _isclose(result, counit_plus(a))

    def test_exponential(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        omega = datum.fundamental_weights[0]
        a = amplified(algebra.one(), z(algebra, datum.rho))
        result = pair_plus(drinfeld_double(datum).k(omega), a)
        assert _isclose(result, algebra.q_power(datum.pair(datum.rho, omega)))


@pytest.mark.parametrize("label", _labels)
class TestTranslation:
    def test_right_action(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(4))
        generators = _generators(algebra.datum)
        for X in generators[1:]:
            for Y in generators[1:]:
                result = translate_right(translate_right(a, X), Y)
                assert _close(result, translate_right(a, X * Y))

    def test_left_action(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(5))
        generators = _generators(algebra.datum)
        for X in generators[1:]:
            for Y in generators[1:]:
                result = translate_left(X, translate_left(Y, a))
                assert _close(result, translate_left(X * Y, a))

    def test_slices(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(6))
        generators = _generators(algebra.datum)
        for X in generators:
            for Y in generators:
                assert _isclose(pair_plus(Y, translate_right(a, X)), pair_plus(X * Y, a))
                assert _isclose(pair_plus(Y, translate_left(X, a)), pair_plus(Y * X, a))

    def test_module_algebra(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(7)
        a, b = _random(algebra, rng), _random(algebra, rng)
        for X in _generators(algebra.datum)[1:]:
            result = translate_right(a * b, X)
            tensor = coproduct(X)
            expected = AmplifiedElement(algebra=algebra, flavor="+")
            for (m1, m2), c in tensor.terms.items():
                term = translate_right(a, tensor.leg(0, m1)) * translate_right(b, tensor.leg(1, m2))
                expected = expected + term.scale(evaluate_scalar(c, algebra.q))
            assert _close(result, expected)

    def test_star(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(8))
        for X in _generators(algebra.datum):
            result = translate_right(a, X).star
            expected = translate_right(a.star, star(antipode(X)))
            assert _close(result, expected)

    def test_flavor_zero(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(9), "0")
        generators = _generators(algebra.datum)
        X, Y = generators[1], generators[-2]
        result = translate_right(translate_right(a, X), Y)
        assert result.flavor == "0"
        assert _close(result, translate_right(a, X * Y))


def test_errors():
    algebra = _algebra("A1")
    datum = algebra.datum
    a = amplified(algebra.one(), delta(algebra, (0,)))
    with pytest.raises(TypeError):
        pair_plus(quantum_envelope(datum).e(0), a)
    with pytest.raises(TypeError):
        pair_plus(drinfeld_double(qborel.roots.datum_from_label("A2")).e(0), a)
    with pytest.raises(TypeError):
        translate_left(drinfeld_double(datum).e(0), amplified(algebra.one(), flavor="0"))
    with pytest.raises(ValueError):
        translate_right(from_localized(u(algebra, (1,))), drinfeld_double(datum).e(0))
