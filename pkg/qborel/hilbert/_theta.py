r"""
The representations :math:`\theta_r` of :math:`\mathrm{Pol}_q(K)` on
:math:`\ell^2(\mathbb{N})` obtained from the rank-one subgroups and their
convolution :math:`\theta_{w_0}` along a reduced word.

In the basis of string vectors of the spin-:math:`\tfrac12` representation
the fundamental matrix of :math:`\mathrm{Pol}_{q_r}(SU(2))` acts by

.. math::

    \begin{pmatrix} U(\xi, \xi) & U(\xi, \eta) \\ U(\eta, \xi) & U(\eta, \eta) \end{pmatrix}
    \mapsto
    \begin{pmatrix} a^* & b \\ -q_r b^* & a \end{pmatrix},
    \qquad
    a e_n = (1 - q_r^{2n})^{1/2} e_{n-1}, \quad b e_n = q_r^n e_n,

where :math:`\xi` is the highest and :math:`\eta` the lowest vector.
"""

from __future__ import annotations
import functools
import logging
import numpy as np
import scipy.sparse
from qborel.roots import Weight
from qborel.representations import su2_restriction
from qborel.polq import Polq, MatrixCoeffElement
from ._space import HilbertModelError, TruncatedSpace, TruncatedOperator

__all__ = [
    "rank_one_generators",
    "spin_matrix",
    "theta_root",
    "theta_w0",
    "theta_rank1",
]

logger = logging.getLogger(__name__)

_threshold = 1e-13


def rank_one_generators(q_r: float, size: int) -> tuple[np.ndarray, np.ndarray]:
    """The operators :math:`a` and :math:`b` on the first ``size`` basis vectors."""
    n = np.arange(size)
    a = np.diag(np.sqrt(1 - q_r ** (2 * n[1:])), k=1)
    b = np.diag(q_r**n)
    return a, b


@functools.lru_cache(maxsize=None)
def _fundamental(q_r: float, size: int) -> np.ndarray:
    a, b = rank_one_generators(q_r, size)
    result = np.empty((2, 2, size, size))
    result[0, 0] = a.T
    result[0, 1] = b
    result[1, 0] = -q_r * b
    result[1, 1] = a
    return result


@functools.lru_cache(maxsize=None)
def _strings(q_r: float, spin: int) -> np.ndarray:
    """Normalized vectors :math:`F^k \\xi^{\\otimes N}` in the spin-:math:`\\tfrac12` tensor power."""
    lowering = np.array([[0.0, 0.0], [1.0, 0.0]])
    k_inverse = np.diag([1 / q_r, q_r])
    total = np.zeros((2**spin, 2**spin))
    for slot in range(spin):
        term = np.ones((1, 1))
        for other in range(spin):
            if other < slot:
                factor = k_inverse
            elif other == slot:
                factor = lowering
            else:
                factor = np.eye(2)
            term = np.kron(term, factor)
        total += term
    vector = np.zeros(2**spin)
    vector[0] = 1
    columns = []
    for _ in range(spin + 1):
        columns.append(vector / np.linalg.norm(vector))
        vector = total @ vector
    return np.stack(columns, axis=1)


@functools.lru_cache(maxsize=None)
def spin_matrix(q_r: float, spin: int, size: int) -> np.ndarray:
    r"""
    The images :math:`\theta(U^{(N)}(s_a, s_b))` of the matrix coefficients
    of the spin-:math:`N/2` representation in its string basis, as an array
    of shape ``(N + 1, N + 1, size, size)``.

    The matrix is computed on ``size`` basis vectors, entries with both
    indices below ``size - N`` are exact.
    """
    fundamental = _fundamental(q_r, size)
    power = np.eye(size)[np.newaxis, np.newaxis]
    for _ in range(spin):
        d = power.shape[0]
        power = np.einsum("IJab,ijbc->IiJjac", power, fundamental).reshape(2 * d, 2 * d, size, size)
    strings = _strings(q_r, spin)
    return np.einsum("Ia,IJxy,Jb->abxy", strings, power, strings)


@functools.lru_cache(maxsize=None)
def _restriction(algebra: Polq, weight: Weight, r: int):
    return su2_restriction(algebra.rep(weight), r)


def theta_root(algebra: Polq, weight: Weight, r: int, size: int) -> np.ndarray:
    r"""
    The images :math:`\theta_r(U_\varpi(e_i, e_j))` of all matrix
    coefficients of :math:`V_\varpi` under the rank-one representation
    attached to the simple root ``r``, as an array of shape
    ``(dim, dim, size, size)``.
    """
    datum = algebra.datum
    alpha = datum.simple_roots[r]
    q_r = algebra.q_power(datum.pair(alpha, alpha) / 2)
    restriction = _restriction(algebra, tuple(weight), r)
    dimension = restriction.unitary.shape[0]
    strings = np.zeros((dimension, dimension, size, size))
    for index, spin in enumerate(restriction.spins):
        block = restriction.block(index)
        strings[block, block] = spin_matrix(q_r, spin, size)
    w = restriction.unitary
    return np.einsum("ia,jb,abxy->ijxy", w, w.conj(), strings)


def _padding(algebra: Polq, weights, word: tuple[int, ...]) -> int:
    result = 0
    for weight in weights:
        for r in set(word):
            spins = _restriction(algebra, weight, r).spins
            result = max(result, max(spins, default=0))
    return result


def _sparse_entries(factor: np.ndarray) -> dict[tuple[int, int], scipy.sparse.csr_matrix]:
    result = {}
    for i, j in zip(*np.nonzero(np.abs(factor).max(axis=(2, 3)) > _threshold)):
        result[int(i), int(j)] = scipy.sparse.csr_matrix(factor[i, j])
    return result


def _convolve(
    coefficients: np.ndarray,
    factors: list[dict[tuple[int, int], scipy.sparse.csr_matrix]],
    size: int,
) -> scipy.sparse.csr_matrix:
    r"""
    :math:`\sum_{ij} c_{ij} \sum_k \Theta_1[i, k_1] \otimes \Theta_2[k_1, k_2]
    \otimes \cdots \otimes \Theta_M[k_{M-1}, j]`, propagated one column
    index :math:`j` at a time.
    """
    total = scipy.sparse.csr_matrix((size ** len(factors),) * 2, dtype=complex)
    first, rest = factors[0], factors[1:]
    for j in np.flatnonzero(np.abs(coefficients).max(axis=0) > 0):
        row: dict[int, scipy.sparse.csr_matrix] = {}
        for (i, k), entry in first.items():
            if coefficients[i, j]:
                row[k] = row[k] + coefficients[i, j] * entry if k in row else coefficients[i, j] * entry
        for factor in rest:
            propagated: dict[int, scipy.sparse.csr_matrix] = {}
            for (k, m), entry in factor.items():
                if k in row:
                    term = scipy.sparse.kron(row[k], entry, format="csr")
                    propagated[m] = propagated[m] + term if m in propagated else term
            row = propagated
        if j in row:
            total = total + row[j]
    return total


def _restrict(space: TruncatedSpace, matrix: scipy.sparse.csr_matrix, size: int) -> TruncatedOperator:
    padded = (size,) * space.num_factors
    window = np.ravel_multi_index(space.occupations.T, padded)
    outside = np.setdiff1d(np.arange(size**space.num_factors), window)
    columns = matrix[:, window]
    scale = max(float(np.max(np.abs(columns.data), initial=0)), 1.0)
    leak = np.asarray(abs(columns[outside, :]).sum(axis=0)).ravel()
    return TruncatedOperator(
        space=space,
        matrix=columns[window, :],
        valid=leak <= _threshold * scale,
    )


def theta_w0(x: MatrixCoeffElement, space: TruncatedSpace) -> TruncatedOperator:
    r"""
    The representation
    :math:`\theta_{w_0} = (\theta_{r_1} \otimes \cdots \otimes \theta_{r_M}) \circ \Delta^{(M)}`
    of :math:`\mathrm{Pol}_q(K)` on :math:`\ell^2(\mathbb{N})^{\otimes M}`,
    compressed to the Fock factor of ``space``.

    The operator is computed with every factor padded by the largest spin
    occurring in ``x``, which makes the compression exact, and columns whose
    image leaves the window are marked invalid.

    Parameters
    ----------
    x
        A matrix coefficient.
    space
        The window, only its Fock factor and reduced word are used.
    """
    algebra = x.algebra
    if algebra.datum is not space.datum:
        raise TypeError("the element and the window belong to different root data")
    space = space.fock()
    word = space.word
    size = space.cutoff + _padding(algebra, x.blocks, word)
    total = scipy.sparse.csr_matrix((size ** len(word),) * 2, dtype=complex)
    for weight, c in x.blocks.items():
        if not np.any(c):
            continue
        factors = [_sparse_entries(theta_root(algebra, weight, r, size)) for r in word]
        total = total + _convolve(c, factors, size)
    result = _restrict(space, total, size)
    logger.debug(
        "theta_w0 on %d Fock vectors with padding %d, %d valid columns",
        space.dimension, size - space.cutoff, result.num_valid,
    )
    return result


def theta_rank1(x: MatrixCoeffElement, cutoff: int) -> TruncatedOperator:
    r"""
    The representation :math:`\theta` of :math:`\mathrm{Pol}_q(SU(2))` on
    :math:`\ell^2(\mathbb{N})`, compressed to the first ``cutoff`` basis vectors.

    Parameters
    ----------
    x
        A matrix coefficient of a rank-one root datum.
    cutoff
        The number of basis vectors kept.
    """
    datum = x.algebra.datum
    if datum.rank != 1:
        raise ValueError(f"theta_rank1 needs a rank-one root datum, got rank {datum.rank}")
    return theta_w0(x, TruncatedSpace(datum=datum, cutoff=cutoff))
