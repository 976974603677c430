import pytest
import numpy as np
from qborel.findim import (
    FiniteAbelianGroup,
    build_system,
    heisenberg_double,
    galois_unitary,
    galois_checks,
    adjoint_coaction,
    adjoint_checks,
    max_entry,
)

_groups = [(1,), (2,), (3,), (2, 2)]


def _system(factors: tuple):
    return build_system(FiniteAbelianGroup(factors=factors))


@pytest.mark.parametrize("factors", _groups)
def test_galois_checks(factors: tuple):
    for check in galois_checks(_system(factors)):
        print(f"{check.name}: {check.residual=}")
        assert check.residual <= 1e-12


@pytest.mark.parametrize("factors", _groups)
def test_adjoint_checks(factors: tuple):
    rng = np.random.default_rng(0)
    for check in adjoint_checks(_system(factors), rng):
        print(f"{check.name}: {check.residual=}")
        assert check.residual <= 1e-12


def test_galois_unitary_permutation():
    unitary = galois_unitary(_system((2,)))
    for u in [unitary.full, unitary.compact]:
        dense = np.abs(u.toarray())
        assert np.allclose(dense.sum(axis=0), 1)
        assert np.allclose(dense.sum(axis=1), 1)


def test_alpha_functions():
    system = _system((3,))
    double = heisenberg_double(system)
    addition = system.group.addition
    a, b, c = np.unravel_index(np.arange(27), (3, 3, 3))
    for s in range(3):
        result = double.alpha(system.delta_function(s))
        assert np.allclose(result.toarray(), np.diag((addition[a, c] == s).astype(float)))


def test_alpha_translations():
    system = _system((3,))
    double = heisenberg_double(system)
    for g in range(3):
        lam = system.translation(g).toarray()
        expected = np.kron(np.kron(lam, lam), np.eye(3))
        assert np.allclose(double.alpha(lam).toarray(), expected)


def test_adjoint_functions():
    system = _system((4,))
    addition = system.group.addition
    negation = system.group.negation
    a, b, c = np.unravel_index(np.arange(64), (4, 4, 4))
    for s in range(4):
        result = adjoint_coaction(system, system.delta_function(s))
        expected = (addition[a, negation[b]] == s).astype(float)
        assert np.allclose(result.toarray(), np.diag(expected))


def test_adjoint_translations():
    system = _system((4,))
    negation = system.group.negation
    for g in range(4):
        lam = system.translation(g).toarray()
        expected = np.kron(np.kron(lam, np.eye(4)), system.translation(negation[g]).toarray())
        assert max_entry(adjoint_coaction(system, lam) - expected) <= 1e-12


def test_unit_vector():
    double = heisenberg_double(_system((2,)))
    assert np.allclose(double.unit_vector(), [1, 1, 0, 0])
