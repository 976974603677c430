import pytest
import numpy as np
import qborel
from qborel.algebras import quantum_envelope
from qborel.polq import (
    polq,
    evaluate,
    evaluate_tensor,
    evaluate_on_tensor,
    product,
    coproduct,
    counit,
    antipode,
    star,
    haar,
    b,
    bihomogeneous_components,
    lwt,
    rwt,
    exchange_weight,
    residual,
    random_element,
)

_q = 0.5


def _algebra(label: str) -> qborel.polq.Polq:
    return polq(qborel.roots.datum_from_label(label), "1/2")


def _test_elements(label: str) -> list[qborel.algebras.AlgebraElement]:
    U = quantum_envelope(qborel.roots.datum_from_label(label))
    rank = U.datum.rank
    result = [U.one()]
    for r in range(rank):
        alpha = U.datum.simple_roots[r]
        result += [U.e(r), U.f(r), U.k(alpha), U.e(r) * U.f(r), U.f(r) * U.f(r) * U.e(r)]
    if rank > 1:
        result += [U.e(0) * U.e(1), U.f(1) * U.k(U.datum.rho) * U.e(0)]
    rng = np.random.default_rng(2)
    result += [qborel.algebras.random_element(U, rng, degree=3) for _ in range(3)]
    return result


class TestPolq:
    def test_caching(self):
        assert _algebra("A1") is _algebra("A1")

    def test_one(self):
        algebra = _algebra("A2")
        result = algebra.one()
        print(f"{result=}")
        assert haar(result) == 1
        assert counit(result) == 1

    def test_vector_length(self):
        algebra = _algebra("A1")
        with pytest.raises(ValueError):
            algebra.matrix_coefficient((1,), np.ones(3), np.ones(2))

    def test_mixed_algebras(self):
        with pytest.raises(TypeError):
            _algebra("A1").one() + _algebra("A2").one()


@pytest.mark.parametrize(
    argnames="label",
    argvalues=["A1", "A2"],
)
class TestMatrixCoefficients:
    def test_evaluate_one(self, label: str):
        algebra = _algebra(label)
        U = quantum_envelope(algebra.datum)
        rng = np.random.default_rng(0)
        weight = algebra.datum.rho
        n = algebra.dimension(weight)
        xi = rng.normal(size=n) + 1j * rng.normal(size=n)
        eta = rng.normal(size=n) + 1j * rng.normal(size=n)
        result = evaluate(algebra.matrix_coefficient(weight, xi, eta), U.one())
        assert np.isclose(result, np.vdot(xi, eta), atol=1e-12)

    def test_evaluate_cartan(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        U = quantum_envelope(datum)
        weight = datum.rho
        rep = algebra.rep(weight)
        for i, wt in enumerate(rep.weights):
            for omega in datum.fundamental_weights:
                result = evaluate(algebra.unit(weight, i, i), U.k(omega))
                assert np.isclose(result, algebra.q_power(datum.pair(omega, wt)))

    def test_duality(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(1)
        for X in _test_elements(label):
            x = random_element(algebra, rng)
            y = random_element(algebra, rng)
            result = evaluate(product(x, y), X)
            expected = evaluate_on_tensor(x, y, qborel.algebras.coproduct(X))
            assert np.isclose(result, expected, rtol=1e-9, atol=1e-9)

    def test_product_unit(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(3))
        assert residual(product(algebra.one(), x), x) < 1e-10
        assert residual(product(x, algebra.one()), x) < 1e-10

    def test_coproduct(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(4))
        elements = _test_elements(label)
        for X in elements[:4]:
            for Y in elements[:4]:
                result = evaluate_tensor(coproduct(x), X, Y)
                assert np.isclose(result, evaluate(x, X * Y), atol=1e-9)

    def test_counit(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(5))
        U = quantum_envelope(algebra.datum)
        assert np.isclose(counit(x), evaluate(x, U.one()), atol=1e-12)

    def test_star_involution(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(6)
        for _ in range(5):
            x = random_element(algebra, rng)
            assert residual(star(star(x)), x) < 1e-10

    def test_star_pairing(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(7))
        for X in _test_elements(label):
            result = evaluate(star(x), X)
            dual = qborel.algebras.star(qborel.algebras.antipode(X))
            assert np.isclose(result, np.conj(evaluate(x, dual)), atol=1e-9)

    def test_star_antimultiplicative(self, label: str):
        algebra = _algebra(label)
        rng = np.random.default_rng(8)
        x = random_element(algebra, rng)
        y = random_element(algebra, rng)
        assert residual(star(product(x, y)), product(star(y), star(x))) < 1e-9

    def test_antipode(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(9))
        for X in _test_elements(label):
            result = evaluate(antipode(x), X)
            expected = evaluate(x, qborel.algebras.antipode(X))
            assert np.isclose(result, expected, atol=1e-9)

    def test_bihomogeneous(self, label: str):
        algebra = _algebra(label)
        weight = algebra.datum.rho
        rep = algebra.rep(weight)
        x = random_element(algebra, np.random.default_rng(10), weights=[weight])
        components = bihomogeneous_components(x)
        total = algebra.zero()
        for (left, right), component in components.items():
            assert lwt(component) == left
            assert rwt(component) == right
            total = total + component
        assert len(components) == len(rep.blocks) ** 2
        assert residual(total, x) < 1e-14

    def test_lwt_mixed(self, label: str):
        algebra = _algebra(label)
        x = random_element(algebra, np.random.default_rng(11), weights=[algebra.datum.rho])
        with pytest.raises(ValueError):
            lwt(x)


def test_su2_weight_coefficients():
    algebra = _algebra("A1")
    U = quantum_envelope(algebra.datum)
    for n in range(4):
        for i in range(n + 1):
            result = evaluate(algebra.unit((n,), i, i), U.k((2,)))
            assert np.isclose(result, _q ** (n - 2 * i))


def test_su2_star():
    algebra = _algebra("A1")
    cases = [
        ((0, 0), (1, 1), 1),
        ((1, 1), (0, 0), 1),
        ((0, 1), (1, 0), -1 / _q),
        ((1, 0), (0, 1), -_q),
    ]
    for (i, j), (k, l), factor in cases:
        result = star(algebra.unit((1,), i, j))
        expected = algebra.unit((1,), k, l).scale(factor)
        print(f"{result=}")
        assert residual(result, expected) < 1e-12


@pytest.mark.parametrize(
    argnames="left,right",
    argvalues=[
        ((1,), (1,)),
        ((1,), (2,)),
        ((2,), (2,)),
    ],
)
def test_su2_b_product(left: tuple, right: tuple):
    algebra = _algebra("A1")
    result = product(b(algebra, left), b(algebra, right))
    expected = b(algebra, (left[0] + right[0],))
    assert residual(result, expected) < 1e-10


def test_su2_b():
    algebra = _algebra("A1")
    result = b(algebra, (1,))
    assert residual(result, algebra.unit((1,), 0, 1).scale(-1)) < 1e-12


@pytest.mark.parametrize(
    argnames="label,weight",
    argvalues=[
        ("A1", (1,)),
        ("A1", (2,)),
        ("A2", (1, 0)),
        ("A2", (1, 1)),
    ],
)
class TestB:
    def test_normal(self, label: str, weight: tuple):
        algebra = _algebra(label)
        x = b(algebra, weight)
        result = residual(product(x, star(x)), product(star(x), x))
        print(f"{result=}")
        assert result < 1e-10

    def test_commutation(self, label: str, weight: tuple):
        algebra = _algebra(label)
        datum = algebra.datum
        x = b(algebra, weight)
        for other in datum.fundamental_weights:
            rep = algebra.rep(other)
            for i in range(rep.dimension):
                for j in range(rep.dimension):
                    y = algebra.unit(other, i, j)
                    shift = exchange_weight(algebra, rep.weights[i], rep.weights[j])
                    factor = algebra.q_power(datum.pair(weight, shift))
                    assert residual(product(x, y), product(y, x).scale(factor)) < 1e-10
