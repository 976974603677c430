import pytest
import numpy as np
import qborel
from qborel.polq import (
    polq,
    random_element,
    bihomogeneous_components,
    exchange_weight,
    localize,
    u,
    abs_b,
    localized_multiply,
    localized_star,
)


def _algebra(label: str) -> qborel.polq.Polq:
    return polq(qborel.roots.datum_from_label(label), "1/2")


def _bihomogeneous(algebra, seed: int) -> list:
    x = random_element(algebra, np.random.default_rng(seed), weights=[algebra.datum.rho])
    return list(bihomogeneous_components(x).items())


@pytest.mark.parametrize(
    argnames="label,omega",
    argvalues=[
        ("A1", (1,)),
        ("A1", (-2,)),
        ("A2", (1, 0)),
        ("A2", (-1, 2)),
    ],
)
class TestLocalized:
    def test_abs_b_zero(self, label: str, omega: tuple):
        algebra = _algebra(label)
        x = localize(random_element(algebra, np.random.default_rng(0)))
        result = localized_multiply(abs_b(algebra, algebra.datum.zero), x)
        assert (result - x).norm < 1e-12

    def test_abs_b_additive(self, label: str, omega: tuple):
        algebra = _algebra(label)
        chi = algebra.datum.rho
        result = abs_b(algebra, omega) * abs_b(algebra, chi)
        expected = abs_b(algebra, qborel.roots.add_weights(omega, chi))
        print(f"{result=}")
        assert (result - expected).norm < 1e-12

    def test_exchange(self, label: str, omega: tuple):
        algebra = _algebra(label)
        datum = algebra.datum
        for (left, right), x in _bihomogeneous(algebra, 1):
            factor = algebra.q_power(datum.pair(omega, exchange_weight(algebra, left, right)))
            result = abs_b(algebra, omega) * localize(x)
            expected = (localize(x) * abs_b(algebra, omega)).scale(factor)
            assert (result - expected).norm < 1e-10

    def test_u_central(self, label: str, omega: tuple):
        algebra = _algebra(label)
        x = localize(random_element(algebra, np.random.default_rng(2)))
        result = u(algebra, omega) * x - x * u(algebra, omega)
        assert result.norm < 1e-12

    def test_star(self, label: str, omega: tuple):
        algebra = _algebra(label)
        assert (localized_star(u(algebra, omega)) - u(algebra, qborel.roots.scale_weight(-1, omega))).norm < 1e-12
        assert (localized_star(abs_b(algebra, omega)) - abs_b(algebra, omega)).norm < 1e-12

    def test_star_involution(self, label: str, omega: tuple):
        algebra = _algebra(label)
        rng = np.random.default_rng(3)
        x = u(algebra, omega) * abs_b(algebra, algebra.datum.rho) * localize(random_element(algebra, rng))
        assert (x.star.star - x).norm < 1e-10

    def test_star_antimultiplicative(self, label: str, omega: tuple):
        algebra = _algebra(label)
        rng = np.random.default_rng(4)
        x = abs_b(algebra, omega) * localize(random_element(algebra, rng))
        y = u(algebra, omega) * localize(random_element(algebra, rng))
        result = (x * y).star - y.star * x.star
        assert result.norm < 1e-9

    def test_associative(self, label: str, omega: tuple):
        algebra = _algebra(label)
        rng = np.random.default_rng(5)
        x = abs_b(algebra, omega) * localize(random_element(algebra, rng))
        y = localize(random_element(algebra, rng))
        z = abs_b(algebra, algebra.datum.rho)
        result = (x * y) * z - x * (y * z)
        assert result.norm < 1e-9


def test_mismatched():
    with pytest.raises(TypeError):
        abs_b(_algebra("A1"), (1,)) + abs_b(_algebra("A2"), (1, 0))
