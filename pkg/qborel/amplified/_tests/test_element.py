import pytest
import numpy as np
import qborel
from qborel.roots import add_weights, sub_weights, scale_weight
from qborel.polq import random_element, bihomogeneous_components, u, abs_b, localize
from qborel.amplified import (
    AmplifiedElement,
    amplified,
    amplified_one,
    from_localized,
    delta,
    z,
    constant,
    counit_plus,
    antipode_plus,
    invariant_integral,
    modular_plus,
)

_labels = ["A1", "A2"]


def _algebra(label: str) -> qborel.polq.Polq:
    return qborel.polq.polq(qborel.roots.datum_from_label(label), "1/2")


def _weights(algebra) -> list:
    datum = algebra.datum
    return [datum.zero, datum.rho, datum.simple_roots[0]]


def _random(algebra, rng: np.random.Generator, flavor: str = "+") -> AmplifiedElement:
    datum = algebra.datum
    result = AmplifiedElement(algebra=algebra, flavor=flavor)
    for weight in _weights(algebra):
        x = random_element(algebra, rng, weights=[datum.zero, datum.fundamental_weights[0]])
        result = result + amplified(x, delta(algebra, weight), flavor)
    return result


def _close(a: AmplifiedElement, b: AmplifiedElement, tolerance: float = 1e-9) -> bool:
    scale = max(1.0, a.norm, b.norm)
    return (a - b).norm <= tolerance * scale


@pytest.mark.parametrize("label", _labels)
class TestFunPlus:
    def test_delta_exchange(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(0), weights=[algebra.datum.rho])
        chi = algebra.datum.rho
        for (left, right), part in bihomogeneous_components(x).items():
            result = amplified(algebra.one(), delta(algebra, chi)) * amplified(part)
            shifted = add_weights(chi, sub_weights(left, right))
            expected = amplified(part, delta(algebra, shifted))
            assert _close(result, expected)

    def test_z_exchange(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        x = random_element(algebra, np.random.default_rng(1), weights=[datum.rho])
        omega = datum.fundamental_weights[0]
        for (left, right), part in bihomogeneous_components(x).items():
            result = amplified(algebra.one(), z(algebra, omega)) * amplified(part)
            factor = algebra.q_power(-datum.pair(omega, sub_weights(left, right)))
            expected = amplified(part, z(algebra, omega)).scale(factor)
            assert _close(result, expected)

    def test_one(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(2))
        one = amplified_one(algebra)
        assert _close(one * a, a)
        assert _close(a * one, a)

    def test_associative(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(3)
        a, b, c = (_random(algebra, rng) for _ in range(3))
        assert _close((a * b) * c, a * (b * c))

    def test_star_involution(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(4))
        assert _close(a.star.star, a)

    def test_star_antimultiplicative(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(5)
        a, b = _random(algebra, rng), _random(algebra, rng)
        assert _close((a * b).star, b.star * a.star)

    def test_counit_multiplicative(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(6)
        a, b = _random(algebra, rng), _random(algebra, rng)
        result = counit_plus(a * b)
        expected = counit_plus(a) * counit_plus(b)
        print(f"{result=}")
        assert np.isclose(result, expected, rtol=1e-9, atol=1e-9)

    def test_counit_one(self, label: str):
        algebra = _algebra(label)
        assert counit_plus(amplified_one(algebra)) == 1

    def test_antipode_antimultiplicative(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(7)
        a, b = _random(algebra, rng), _random(algebra, rng)
        assert _close(antipode_plus(a * b), antipode_plus(b) * antipode_plus(a))

    def test_antipode_star(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(8))
        assert _close(antipode_plus(antipode_plus(a.star).star), a)

    def test_integral_positive(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(9))
        result = invariant_integral(a.star * a)
        print(f"{result=}")
        assert result.real > 0
        assert abs(result.imag) < 1e-9 * result.real

    def test_modular(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(10)
        a, b = _random(algebra, rng), _random(algebra, rng)
        result = invariant_integral(a * b)
        expected = invariant_integral(b * modular_plus(a))
        print(f"{result=}")
        assert np.isclose(result, expected, rtol=1e-9, atol=1e-9)

    def test_integral_of_delta(self, label: str):
        algebra = _algebra(label)
        a = amplified(algebra.one(), delta(algebra, algebra.datum.rho) * 3)
        assert invariant_integral(a) == 3


@pytest.mark.parametrize("label", _labels)
class TestFunZero:
    def test_delta_exchange(self, label: str):
        algebra = _algebra(label)
        chi = algebra.datum.rho
        x = random_element(algebra, np.random.default_rng(11), weights=[chi])
        for (left, _), part in bihomogeneous_components(x).items():
            result = amplified(algebra.one(), delta(algebra, chi), "0") * amplified(part, flavor="0")
            expected = amplified(part, delta(algebra, add_weights(chi, left)), "0")
            assert _close(result, expected)

    def test_z_commutation(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        chi = datum.fundamental_weights[-1]
        x = random_element(algebra, np.random.default_rng(12), weights=[datum.rho])
        z_chi = amplified(algebra.one(), z(algebra, chi), "0")
        for (left, _), part in bihomogeneous_components(x).items():
            y = amplified(part, flavor="0")
            factor = algebra.q_power(datum.pair(chi, left))
            assert _close(y * z_chi, (z_chi * y).scale(factor))

    def test_u_z_commutation(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        omega = datum.rho
        chi = datum.fundamental_weights[0]
        u_omega = from_localized(u(algebra, omega))
        z_chi = amplified(algebra.one(), z(algebra, chi), "0")
        factor = algebra.q_power(datum.pair(chi, omega))
        assert _close(u_omega * z_chi, (z_chi * u_omega).scale(factor))

    def test_abs_b_z_commute(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        abs_b_rho = from_localized(abs_b(algebra, datum.rho))
        z_chi = amplified(algebra.one(), z(algebra, datum.rho), "0")
        assert _close(abs_b_rho * z_chi, z_chi * abs_b_rho)

    def test_localized_embedding(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(13)
        omega = algebra.datum.rho
        x = u(algebra, omega) * abs_b(algebra, omega) * localize(random_element(algebra, rng))
        y = abs_b(algebra, scale_weight(-1, omega)) * localize(random_element(algebra, rng))
        assert _close(from_localized(x) * from_localized(y), from_localized(x * y))
        assert _close(from_localized(x).star, from_localized(x.star))

    def test_associative(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(14)
        omega = algebra.datum.rho
        a = from_localized(u(algebra, omega)) * _random(algebra, rng, "0")
        b = from_localized(abs_b(algebra, omega)) * _random(algebra, rng, "0")
        c = _random(algebra, rng, "0") * from_localized(u(algebra, scale_weight(-1, omega)))
        assert _close((a * b) * c, a * (b * c))

    def test_star(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(15)
        omega = algebra.datum.rho
        a = from_localized(u(algebra, omega) * abs_b(algebra, omega)) * _random(algebra, rng, "0")
        b = _random(algebra, rng, "0") * amplified(algebra.one(), z(algebra, omega), "0")
        assert _close(a.star.star, a)
        assert _close((a * b).star, b.star * a.star)

    def test_integral_positive(self, label: str):
        algebra = _algebra(label)
        a = _random(algebra, np.random.default_rng(16), "0")
        result = invariant_integral(a.star * a)
        assert result.real > 0
        assert abs(result.imag) < 1e-9 * result.real


def test_flavor_mismatch():
    algebra = _algebra("A1")
    with pytest.raises(TypeError):
        amplified_one(algebra, "+") * amplified_one(algebra, "0")
    with pytest.raises(ValueError):
        amplified_one(algebra, "-")


def test_plus_rejects_localized():
    algebra = _algebra("A1")
    with pytest.raises(ValueError):
        AmplifiedElement(algebra=algebra, flavor="+", terms={((1,), (0,), ("exp", (0,))): algebra.one()})


def test_integral_needs_compact_support():
    algebra = _algebra("A1")
    with pytest.raises(ValueError):
        invariant_integral(amplified(algebra.one(), constant(algebra)))
    with pytest.raises(ValueError):
        invariant_integral(from_localized(u(algebra, (1,))))


def test_hopf_maps_need_plus():
    algebra = _algebra("A1")
    a = amplified_one(algebra, "0")
    for operation in (counit_plus, antipode_plus, modular_plus):
        with pytest.raises(TypeError):
            operation(a)
