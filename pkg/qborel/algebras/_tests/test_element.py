import pytest
import numpy as np
import qborel
from qborel.scalars import q_power, q_r
from ..._tests import test_mixins

_labels = ["A1", "A2", "B2"]

_presentations = [
    factory(qborel.roots.datum_from_label(label))
    for label in _labels
    for factory in [
        qborel.algebras.quantum_envelope,
        qborel.algebras.drinfeld_double,
        qborel.algebras.heisenberg_double,
        qborel.algebras.heisenberg_double_tilde,
    ]
]


def _elements():
    result = []
    for p in _presentations:
        rng = np.random.default_rng(len(result))
        result.append(qborel.algebras.random_element(p, rng, degree=2))
    return result


@pytest.mark.parametrize(
    argnames="a",
    argvalues=_elements(),
)
class TestAlgebraElement(
    test_mixins.AbstractTestPrintable,
):
    def test_identity(self, a: qborel.algebras.AlgebraElement):
        one = a.presentation.one()
        assert (one * a - a).is_zero
        assert (a * one - a).is_zero

    def test_associative(self, a: qborel.algebras.AlgebraElement):
        rng = np.random.default_rng(1)
        b = qborel.algebras.random_element(a.presentation, rng, degree=2)
        c = qborel.algebras.random_element(a.presentation, rng, degree=2)
        result = (a * b) * c - a * (b * c)
        print(f"{result=}")
        assert result.is_zero

    def test_distributive(self, a: qborel.algebras.AlgebraElement):
        rng = np.random.default_rng(2)
        b = qborel.algebras.random_element(a.presentation, rng, degree=2)
        c = qborel.algebras.random_element(a.presentation, rng, degree=2)
        assert (a * (b + c) - a * b - a * c).is_zero

    def test_sub_self(self, a: qborel.algebras.AlgebraElement):
        assert qborel.algebras.is_zero(a - a)
        assert not qborel.algebras.is_zero(a)


@pytest.mark.parametrize(
    argnames="label",
    argvalues=_labels,
)
def test_ef_commutator(label: str):
    datum = qborel.roots.datum_from_label(label)
    algebra = qborel.algebras.quantum_envelope(datum)
    for r in range(datum.rank):
        for s in range(datum.rank):
            result = algebra.e(r) * algebra.f(s) - algebra.f(s) * algebra.e(r)
            if r == s:
                alpha = datum.simple_roots[r]
                minus = qborel.roots.scale_weight(-1, alpha)
                qr = q_r(datum, r)
                result = result - (algebra.k(alpha) - algebra.k(minus)) / (qr - 1 / qr)
            print(f"{result=}")
            assert result.is_zero


@pytest.mark.parametrize(
    argnames="label",
    argvalues=_labels,
)
def test_heisenberg_cartan_exchange(label: str):
    datum = qborel.roots.datum_from_label(label)
    for algebra in [
        qborel.algebras.heisenberg_double(datum),
        qborel.algebras.heisenberg_double_tilde(datum),
    ]:
        for omega in datum.fundamental_weights:
            for chi in datum.simple_roots:
                k = algebra.k(omega)
                l = algebra.l(chi)
                factor = q_power(-2 * datum.pair(omega, chi))
                result = k * l - (l * k) * factor
                assert result.is_zero


@pytest.mark.parametrize(
    argnames="label",
    argvalues=_labels,
)
def test_tilde_relations(label: str):
    datum = qborel.roots.datum_from_label(label)
    tilde = qborel.algebras.heisenberg_double_tilde(datum)
    double = qborel.algebras.heisenberg_double(datum)
    for r in range(datum.rank):
        alpha = datum.simple_roots[r]
        minus = qborel.roots.scale_weight(-1, alpha)
        qr = q_r(datum, r)
        for algebra in [tilde, double]:
            commutator = algebra.e(r) * algebra.f(r) - algebra.f(r) * algebra.e(r)
            assert (commutator + algebra.l(minus) / (qr - 1 / qr)).is_zero
        for omega in datum.fundamental_weights:
            x = q_power(datum.pair(omega, alpha))
            for algebra in [tilde, double]:
                k = algebra.k(omega)
                l = algebra.l(omega)
                assert (k * algebra.e(r) - algebra.e(r) * k * x).is_zero
                assert (k * algebra.f(r) - algebra.f(r) * k * x).is_zero
                assert (l * algebra.e(r) - algebra.e(r) * l * x).is_zero
                assert (l * algebra.f(r) - algebra.f(r) * l / x).is_zero
        assert (tilde.k(alpha) * tilde.k(minus) - tilde.one()).is_zero


@pytest.mark.parametrize(
    argnames="label",
    argvalues=_labels,
)
def test_nilpotent_part_relation(label: str):
    datum = qborel.roots.datum_from_label(label)
    algebra = qborel.algebras.heisenberg_double_tilde(datum)
    for r in range(datum.rank):
        for s in range(datum.rank):
            x_r = algebra.x(r)
            x_s = qborel.algebras.star(algebra.x(s))
            factor = q_power(-datum.pair(datum.simple_roots[r], datum.simple_roots[s]))
            result = x_r * x_s - x_s * x_r * factor
            if r == s:
                qr = q_r(datum, r)
                result = result + algebra.one() / (qr - 1 / qr)
            print(f"{result=}")
            assert result.is_zero


def test_mixing_presentations():
    datum = qborel.roots.datum_from_label("A1")
    a = qborel.algebras.quantum_envelope(datum).e(0)
    b = qborel.algebras.drinfeld_double(datum).e(0)
    with pytest.raises(TypeError):
        a * b


def test_missing_family():
    datum = qborel.roots.datum_from_label("A1")
    with pytest.raises(TypeError):
        qborel.algebras.quantum_envelope(datum).l((1,))


def test_invalid_root():
    datum = qborel.roots.datum_from_label("A2")
    with pytest.raises(ValueError):
        qborel.algebras.quantum_envelope(datum).e(2)


def test_negative_power():
    datum = qborel.roots.datum_from_label("A1")
    with pytest.raises(ValueError):
        qborel.algebras.quantum_envelope(datum).e(0) ** -1
