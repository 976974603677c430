r"""
Leg numbering on tensor products: the operator :math:`X_{ij\ldots}` that
acts as :math:`X` on the tensor factors :math:`i, j, \ldots` and as the
identity elsewhere.
"""

from __future__ import annotations
from typing import Sequence
import numpy as np
import scipy.sparse

__all__ = [
    "legs",
    "permutation",
    "flip",
    "max_entry",
]


def legs(
    matrix: np.ndarray | scipy.sparse.spmatrix,
    positions: Sequence[int],
    dims: Sequence[int],
) -> scipy.sparse.csr_matrix:
    r"""
    Place an operator on some legs of
    :math:`\mathbb{C}^{d_1} \otimes \cdots \otimes \mathbb{C}^{d_n}`.

    The :math:`k`-th tensor factor of ``matrix`` is put on the leg
    ``positions[k]``, so that with ``positions=(2, 0)`` a two-leg
    operator :math:`W` becomes :math:`W_{31}` in the one-based notation.

    Parameters
    ----------
    matrix
        An operator on the tensor product of the legs ``positions``, in
        that order.
    positions
        Distinct zero-based leg indices.
    dims
        The dimension of every leg.

    Examples
    --------

    .. jupyter-execute::

        import numpy as np
        import qborel

        x = np.array([[0, 1], [1, 0]])
        qborel.findim.legs(x, (1,), (2, 2)).toarray()
    """
    dims = tuple(int(d) for d in dims)
    positions = tuple(int(p) for p in positions)
    if len(set(positions)) != len(positions) or any(not 0 <= p < len(dims) for p in positions):
        raise ValueError(f"invalid leg positions {positions} for {len(dims)} legs")
    local = tuple(dims[p] for p in positions)
    size = int(np.prod(local, dtype=int))
    matrix = scipy.sparse.coo_matrix(matrix)
    if matrix.shape != (size, size):
        raise ValueError(f"an operator of shape {matrix.shape} does not fit legs of dimensions {local}")

    others = [i for i in range(len(dims)) if i not in positions]
    rest_shape = tuple(dims[i] for i in others)
    rest_size = int(np.prod(rest_shape, dtype=int))
    rest = np.unravel_index(np.arange(rest_size), rest_shape) if others else ()

    row_digits = np.unravel_index(matrix.row, local)
    col_digits = np.unravel_index(matrix.col, local)
    shape = (matrix.nnz, rest_size)
    rows: list = [None] * len(dims)
    cols: list = [None] * len(dims)
    for k, p in enumerate(positions):
        rows[p] = np.broadcast_to(row_digits[k][:, np.newaxis], shape)
        cols[p] = np.broadcast_to(col_digits[k][:, np.newaxis], shape)
    for k, p in enumerate(others):
        rows[p] = cols[p] = np.broadcast_to(rest[k][np.newaxis, :], shape)

    total = int(np.prod(dims, dtype=int))
    data = np.broadcast_to(matrix.data[:, np.newaxis], shape).ravel()
    row = np.ravel_multi_index(rows, dims).ravel()
    col = np.ravel_multi_index(cols, dims).ravel()
    return scipy.sparse.csr_matrix((data, (row, col)), shape=(total, total), dtype=complex)


def permutation(images: np.ndarray) -> scipy.sparse.csr_matrix:
    """The permutation matrix sending the basis vector ``j`` to ``images[j]``."""
    images = np.asarray(images, dtype=int)
    n = len(images)
    return scipy.sparse.csr_matrix((np.ones(n), (images, np.arange(n))), shape=(n, n), dtype=complex)


def flip(d1: int, d2: int) -> scipy.sparse.csr_matrix:
    r"""The flip :math:`\Sigma(\xi \otimes \eta) = \eta \otimes \xi` from :math:`\mathbb{C}^{d_1} \otimes \mathbb{C}^{d_2}`."""
    i, j = np.divmod(np.arange(d1 * d2), d2)
    return permutation(j * d1 + i)


def max_entry(matrix: np.ndarray | np.matrix | scipy.sparse.spmatrix) -> float:
    """The largest absolute entry, zero for an empty matrix."""
    if scipy.sparse.issparse(matrix):
        matrix = scipy.sparse.csr_matrix(matrix)
        matrix.eliminate_zeros()
        return float(np.max(np.abs(matrix.data), initial=0))
    return float(np.max(np.abs(np.asarray(matrix)), initial=0))
