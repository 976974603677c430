import pytest
import numpy as np
import qborel
from qborel.algebras import (
    coproduct,
    counit,
    antipode,
    unitary_antipode,
    star,
    tensor,
)

_labels = ["A1", "A2", "B2"]


def _generators(algebra: qborel.algebras.AbstractPresentation) -> list:
    datum = algebra.datum
    result = [algebra.one()]
    for r in range(datum.rank):
        result += [algebra.e(r), algebra.f(r)]
    for family in range(len(algebra.families)):
        for omega in datum.fundamental_weights:
            result.append(algebra.cartan(family, omega))
    return result


def _hopf_algebras():
    return [
        factory(qborel.roots.datum_from_label(label))
        for label in _labels
        for factory in [qborel.algebras.quantum_envelope, qborel.algebras.drinfeld_double]
    ]


def _star_algebras():
    return _hopf_algebras() + [
        factory(qborel.roots.datum_from_label(label))
        for label in _labels
        for factory in [
            qborel.algebras.heisenberg_double,
            qborel.algebras.heisenberg_double_tilde,
        ]
    ]


def _samples(algebra, num: int = 3, seed: int = 0) -> list:
    rng = np.random.default_rng(seed)
    return _generators(algebra) + [
        qborel.algebras.random_element(algebra, rng, degree=3, num_terms=1)
        for _ in range(num)
    ]


@pytest.mark.parametrize(
    argnames="algebra",
    argvalues=_hopf_algebras(),
)
class TestHopfAxioms:
    def test_coassociative(self, algebra):
        for a in _samples(algebra):
            delta = coproduct(a)
            left = delta.map_leg(0, coproduct)
            right = delta.map_leg(1, coproduct)
            assert (left - right).is_zero

    def test_coproduct_multiplicative(self, algebra):
        samples = _samples(algebra, num=2)
        for a, b in zip(samples[:-1], samples[1:]):
            result = coproduct(a * b) - coproduct(a) * coproduct(b)
            assert result.is_zero

    def test_counit(self, algebra):
        for a in _samples(algebra):
            delta = coproduct(a)
            left = delta.map_leg(0, lambda x: x.presentation.scalar(counit(x)))
            right = delta.map_leg(1, lambda x: x.presentation.scalar(counit(x)))
            assert (left.multiply_legs() - a).is_zero
            assert (right.multiply_legs() - a).is_zero

    def test_antipode(self, algebra):
        for a in _samples(algebra):
            delta = coproduct(a)
            expected = algebra.scalar(counit(a))
            left = delta.map_leg(0, antipode).multiply_legs()
            right = delta.map_leg(1, antipode).multiply_legs()
            print(f"{left=}")
            assert (left - expected).is_zero
            assert (right - expected).is_zero

    def test_antipode_anti_multiplicative(self, algebra):
        samples = _samples(algebra, num=2)
        for a, b in zip(samples[:-1], samples[1:]):
            result = antipode(a * b) - antipode(b) * antipode(a)
            assert result.is_zero

    def test_star_coproduct(self, algebra):
        for a in _samples(algebra):
            result = coproduct(star(a)) - star(coproduct(a))
            assert result.is_zero


@pytest.mark.parametrize(
    argnames="algebra",
    argvalues=_star_algebras(),
)
class TestStar:
    def test_involution(self, algebra):
        for a in _samples(algebra):
            assert (star(star(a)) - a).is_zero

    def test_anti_multiplicative(self, algebra):
        samples = _samples(algebra, num=2, seed=3)
        for a, b in zip(samples[:-1], samples[1:]):
            result = star(a * b) - star(b) * star(a)
            print(f"{result=}")
            assert result.is_zero


@pytest.mark.parametrize(
    argnames="label",
    argvalues=_labels,
)
class TestQuantumEnvelope:
    def test_counit_values(self, label: str):
        algebra = qborel.algebras.quantum_envelope(qborel.roots.datum_from_label(label))
        assert counit(algebra.k(algebra.datum.rho)) == 1
        assert counit(algebra.e(0)) == 0
        assert counit(algebra.f(0)) == 0

    def test_antipode_grouplike(self, label: str):
        algebra = qborel.algebras.quantum_envelope(qborel.roots.datum_from_label(label))
        k = algebra.k(algebra.datum.rho)
        assert (antipode(antipode(k)) - k).is_zero

    def test_unitary_antipode(self, label: str):
        algebra = qborel.algebras.quantum_envelope(qborel.roots.datum_from_label(label))
        for a in _generators(algebra):
            assert (unitary_antipode(unitary_antipode(a)) - a).is_zero
            left = coproduct(unitary_antipode(a))
            right = unitary_antipode(coproduct(a).flip())
            assert (left - right).is_zero

    def test_unitary_antipode_anti_multiplicative(self, label: str):
        algebra = qborel.algebras.quantum_envelope(qborel.roots.datum_from_label(label))
        samples = _samples(algebra, num=2, seed=5)
        for a, b in zip(samples[:-1], samples[1:]):
            result = unitary_antipode(a * b) - unitary_antipode(b) * unitary_antipode(a)
            assert result.is_zero

    def test_compact_relation(self, label: str):
        datum = qborel.roots.datum_from_label(label)
        algebra = qborel.algebras.quantum_envelope(datum)
        for r in range(datum.rank):
            for s in range(datum.rank):
                alpha_r = datum.simple_roots[r]
                alpha_s = datum.simple_roots[s]
                e_star = star(algebra.e(s))
                factor = qborel.scalars.q_power(-datum.pair(alpha_s, alpha_r))
                result = algebra.e(r) * e_star - e_star * algebra.e(r) * factor
                if r == s:
                    qr = qborel.scalars.q_r(datum, r)
                    k2 = algebra.k(qborel.roots.scale_weight(2, alpha_r))
                    result = result - (k2 - algebra.one()) / (qr - 1 / qr)
                assert result.is_zero


def test_coproduct_values():
    datum = qborel.roots.datum_from_label("A1")
    algebra = qborel.algebras.quantum_envelope(datum)
    result = coproduct(algebra.e(0))
    expected = tensor(algebra.e(0), algebra.k((2,))) + tensor(algebra.one(), algebra.e(0))
    assert (result - expected).is_zero


@pytest.mark.parametrize(
    argnames="factory",
    argvalues=[qborel.algebras.heisenberg_double, qborel.algebras.heisenberg_double_tilde],
)
def test_galois_object_has_no_coproduct(factory):
    algebra = factory(qborel.roots.datum_from_label("A1"))
    with pytest.raises(TypeError):
        coproduct(algebra.e(0))
    with pytest.raises(TypeError):
        antipode(algebra.e(0))


def test_unitary_antipode_only_envelope():
    algebra = qborel.algebras.drinfeld_double(qborel.roots.datum_from_label("A1"))
    with pytest.raises(TypeError):
        unitary_antipode(algebra.e(0))
