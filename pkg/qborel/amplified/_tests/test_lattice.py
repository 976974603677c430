import pytest
import qborel
from qborel.amplified import LatticeFunction, delta, z, constant, delta_atom, exp_atom


def _algebra(label: str) -> qborel.polq.Polq:
    return qborel.polq.polq(qborel.roots.datum_from_label(label), "1/2")


def _function(algebra) -> LatticeFunction:
    datum = algebra.datum
    return delta(algebra, datum.zero) * 2 + delta(algebra, datum.rho) * (1 - 1j) + z(algebra, datum.rho)


_labels = ["A1", "A2"]


@pytest.mark.parametrize("label", _labels)
class TestLatticeFunction:
    def test_delta(self, label: str):
        algebra = _algebra(label)
        rho = algebra.datum.rho
        f = delta(algebra, rho)
        assert f(rho) == 1
        assert f(algebra.datum.zero) == 0

    def test_z(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        f = z(algebra, datum.rho)
        for chi in datum.simple_roots:
            assert abs(f(chi) - algebra.q_power(datum.pair(datum.rho, chi))) < 1e-14

    def test_shift(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        f = _function(algebra)
        for shift in datum.simple_roots:
            shifted = f.shift(shift)
            for chi in (datum.zero, datum.rho, shift):
                expected = f(qborel.roots.sub_weights(chi, shift))
                assert abs(shifted(chi) - expected) < 1e-12

    def test_product(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        f = _function(algebra)
        g = z(algebra, datum.simple_roots[0]) + delta(algebra, datum.rho)
        result = f * g
        for chi in (datum.zero, datum.rho, datum.simple_roots[0]):
            assert abs(result(chi) - f(chi) * g(chi)) < 1e-12

    def test_reflect(self, label: str):
        algebra = _algebra(label)
        datum = algebra.datum
        f = _function(algebra)
        minus_rho = qborel.roots.scale_weight(-1, datum.rho)
        assert abs(f.reflect()(minus_rho) - f(datum.rho)) < 1e-12

    def test_conjugate(self, label: str):
        algebra = _algebra(label)
        rho = algebra.datum.rho
        f = _function(algebra)
        assert abs(f.conjugate()(rho) - f(rho).conjugate()) < 1e-12


def test_total():
    algebra = _algebra("A1")
    f = delta(algebra, (0,)) * 2 + delta(algebra, (3,)) * 1j
    assert f.total() == 2 + 1j
    assert set(f.support) == {(0,), (3,)}
    assert f.is_compact


def test_zero_terms_dropped():
    algebra = _algebra("A1")
    f = delta(algebra, (1,)) + delta(algebra, (1,)) * -1
    assert not f.terms


def test_exp_atoms_not_compact():
    algebra = _algebra("A1")
    f = constant(algebra) + delta(algebra, (1,))
    assert not f.is_compact
    assert f((1,)) == 2
    with pytest.raises(ValueError):
        f.total()
    with pytest.raises(ValueError):
        f.support


def test_atoms():
    assert delta_atom([1, 2]) == ("delta", (1, 2))
    assert exp_atom((0,)) == ("exp", (0,))
