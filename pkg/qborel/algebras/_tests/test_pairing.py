import pytest
import numpy as np
import qborel
from qborel.algebras import skew_pair, degenerate_pair, coproduct
from qborel.scalars import q_power, q_r

_labels = ["A1", "A2", "B2"]


def _double(label: str) -> qborel.algebras.DrinfeldDouble:
    return qborel.algebras.drinfeld_double(qborel.roots.datum_from_label(label))


def _upper(algebra, rng, degree: int = 3):
    return qborel.algebras.random_element(algebra, rng, degree=degree, families=(0,), letters="E")


def _lower(algebra, rng, degree: int = 3):
    return qborel.algebras.random_element(algebra, rng, degree=degree, families=(1,), letters="F")


@pytest.mark.parametrize(
    argnames="label",
    argvalues=_labels,
)
class TestSkewPair:
    def test_unit(self, label: str):
        algebra = _double(label)
        assert skew_pair(algebra.one(), algebra.f(0)) == 0
        assert skew_pair(algebra.one(), algebra.l(algebra.datum.rho)) == 1

    def test_cartan(self, label: str):
        algebra = _double(label)
        datum = algebra.datum
        for omega in datum.fundamental_weights:
            for chi in datum.simple_roots:
                result = skew_pair(algebra.k(omega), algebra.l(chi))
                assert result == q_power(-datum.pair(omega, chi))

    def test_generators(self, label: str):
        algebra = _double(label)
        datum = algebra.datum
        for r in range(datum.rank):
            for s in range(datum.rank):
                result = skew_pair(algebra.e(r), algebra.f(s))
                expected = 1 / (1 / q_r(datum, r) - q_r(datum, r)) if r == s else 0
                assert result == expected

    def test_hopf_pairing_left(self, label: str):
        algebra = _double(label)
        rng = np.random.default_rng(0)
        for _ in range(4):
            x = _upper(algebra, rng)
            y = _lower(algebra, rng, degree=2)
            z = _lower(algebra, rng, degree=2)
            expected = 0
            for (x1, x2), c in coproduct(x).terms.items():
                first = skew_pair(algebra.element({x2: 1}), y)
                if first:
                    expected += c * first * skew_pair(algebra.element({x1: 1}), z)
            result = skew_pair(x, y * z)
            print(f"{result=}")
            assert result == expected

    def test_hopf_pairing_right(self, label: str):
        algebra = _double(label)
        rng = np.random.default_rng(1)
        for _ in range(4):
            x = _upper(algebra, rng, degree=2)
            y = _upper(algebra, rng, degree=2)
            z = _lower(algebra, rng)
            expected = 0
            for (z1, z2), c in coproduct(z).terms.items():
                first = skew_pair(x, algebra.element({z1: 1}))
                if first:
                    expected += c * first * skew_pair(y, algebra.element({z2: 1}))
            assert skew_pair(x * y, z) == expected

    def test_drinfeld_interchange(self, label: str):
        algebra = _double(label)
        datum = algebra.datum
        uppers = [algebra.e(r) for r in range(datum.rank)] + [algebra.k(datum.rho)]
        lowers = [algebra.f(r) for r in range(datum.rank)] + [algebra.l(datum.rho)]
        for x in uppers:
            for y in lowers:
                result = qborel.algebras.drinfeld_interchange_residual(x, y)
                print(f"{result=}")
                assert result.is_zero

    def test_drinfeld_interchange_words(self, label: str):
        algebra = _double(label)
        datum = algebra.datum
        r = datum.rank - 1
        x = algebra.e(0) * algebra.e(r)
        y = algebra.f(r) * algebra.f(0)
        assert qborel.algebras.drinfeld_interchange_residual(x, y).is_zero


def test_words_value():
    algebra = _double("A2")
    c = 1 / (1 / qborel.scalars.Q - qborel.scalars.Q)
    result = skew_pair(algebra.e(0) * algebra.e(1), algebra.f(1) * algebra.f(0))
    swapped = skew_pair(algebra.e(0) * algebra.e(1), algebra.f(0) * algebra.f(1))
    print(f"{result=}, {swapped=}")
    assert result == c**2 / qborel.scalars.Q
    assert swapped == c**2


def test_degenerate_pair():
    algebra = _double("A2")
    datum = algebra.datum
    assert degenerate_pair(algebra.e(0), algebra.f(0)) == 0
    omega, chi = datum.fundamental_weights
    assert degenerate_pair(algebra.k(omega), algebra.l(chi)) == q_power(datum.pair(omega, chi))
    nu = datum.simple_roots[0]
    result = degenerate_pair(algebra.k(omega) * algebra.k(chi), algebra.l(nu))
    assert result == q_power(datum.pair(qborel.roots.add_weights(omega, chi), nu))


def test_pair_wrong_halves():
    algebra = _double("A1")
    with pytest.raises(ValueError):
        skew_pair(algebra.f(0), algebra.f(0))
    with pytest.raises(ValueError):
        skew_pair(algebra.e(0), algebra.e(0))
    envelope = qborel.algebras.quantum_envelope(algebra.datum)
    with pytest.raises(TypeError):
        skew_pair(envelope.e(0), envelope.f(0))
