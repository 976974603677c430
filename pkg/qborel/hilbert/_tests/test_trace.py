import pytest
import numpy as np
import qborel
from qborel.roots import scale_weight
from qborel.polq import polq, product, star, haar, haar_invariance_oracle
from qborel.hilbert import (
    TruncatedSpace,
    TruncatedOperator,
    big_cell,
    haar_trace_formula,
    phi_ad,
    psi_ad,
)

_q = 0.5


def _algebra(label: str) -> qborel.polq.Polq:
    return polq(qborel.roots.datum_from_label(label), "1/2")


@pytest.mark.parametrize(
    argnames="label,cutoff,expected",
    argvalues=[
        ("A1", 40, 0.75),
        ("A2", 14, 135 / 256),
    ],
)
def test_trace_of_unit(label: str, cutoff: int, expected: float):
    algebra = _algebra(label)
    space = TruncatedSpace(datum=algebra.datum, cutoff=cutoff)
    result = haar_trace_formula(algebra.one(), space)
    print(f"{result=}")
    assert np.isclose(result.displayed, expected, rtol=1e-6)
    assert np.isclose(result.normalized, 1, rtol=1e-6)
    assert np.isclose(result.raw * result.rescaling, result.displayed)
    assert result.tail < 1e-6


def test_trace_matches_haar():
    algebra = _algebra("A1")
    space = TruncatedSpace(datum=algebra.datum, cutoff=40)
    u = algebra.unit((1,), 0, 0)
    x = product(star(u), u)
    result = haar_trace_formula(x, space)
    print(f"{result=}")
    assert np.isclose(result.normalized, 0.8, rtol=1e-9)
    assert np.isclose(result.normalized, haar(x), rtol=1e-9)


@pytest.mark.parametrize(
    argnames="label,cutoff,atol",
    argvalues=[
        ("A1", 40, 1e-9),
        ("A2", 14, 1e-5),
    ],
)
def test_trace_matches_oracle(label: str, cutoff: int, atol: float):
    algebra = _algebra(label)
    space = TruncatedSpace(datum=algebra.datum, cutoff=cutoff)
    oracle = haar_invariance_oracle(algebra, cutoff=2)
    for weight in qborel.roots.dominant_weights(algebra.datum, 2):
        rep = algebra.rep(weight)
        for i in range(rep.dimension):
            for j in range(rep.dimension):
                u = algebra.unit(weight, i, j)
                result = haar_trace_formula(u, space)
                if rep.weights[i] != algebra.datum.zero:
                    assert result.raw == 0
                else:
                    assert abs(result.normalized - oracle(u)) < atol


def test_trace_torus():
    algebra = _algebra("A1")
    space = TruncatedSpace(datum=algebra.datum, cutoff=10)
    result = haar_trace_formula(algebra.unit((1,), 0, 1), space)
    assert result.raw == 0


def test_phi_ad():
    algebra = _algebra("A1")
    space = TruncatedSpace(datum=algebra.datum, cutoff=30)
    weights = big_cell(algebra, space).abs_b(scale_weight(4, algebra.datum.rho))
    x = TruncatedOperator.diagonal(space, weights)
    result = phi_ad(algebra, x)
    print(f"{result=}")
    assert np.isclose(result, 1 / (1 - _q**2))


def test_psi_ad():
    algebra = _algebra("A1")
    space = TruncatedSpace(datum=algebra.datum, cutoff=30, radius=1)
    weights = big_cell(algebra, space).abs_b(scale_weight(4, algebra.datum.rho))
    values = np.zeros(space.dimension)
    layer = space.weight_index[algebra.datum.zero]
    values[layer * space.fock_dimension:(layer + 1) * space.fock_dimension] = weights
    x = TruncatedOperator.diagonal(space, values)
    result = psi_ad(algebra, x)
    print(f"{result=}")
    assert np.isclose(result, _q**2 / (1 - _q**2))
