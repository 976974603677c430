from __future__ import annotations
from typing import Any, Sequence
import numpy as np
import scipy.linalg
from sympy.polys.matrices import DomainMatrix
from qborel.scalars import FIELD, evaluate

__all__ = [
    "EXACT_DOMAIN",
    "exact_matrix",
    "exact_zeros",
    "exact_identity",
    "exact_diag",
    "to_numeric",
    "kernel",
    "is_exact",
]

EXACT_DOMAIN = FIELD.to_domain()


def exact_matrix(rows: Sequence[Sequence[Any]]) -> DomainMatrix:
    """An exact matrix over :data:`qborel.scalars.FIELD`."""
    rows = [[EXACT_DOMAIN.convert(FIELD.one * x) for x in row] for row in rows]
    num_cols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), num_cols), EXACT_DOMAIN)


def exact_zeros(num_rows: int, num_cols: int) -> DomainMatrix:
    rows = [[EXACT_DOMAIN.zero] * num_cols for _ in range(num_rows)]
    return DomainMatrix(rows, (num_rows, num_cols), EXACT_DOMAIN)


def exact_identity(n: int) -> DomainMatrix:
    return exact_diag([FIELD.one] * n)


def exact_diag(values: Sequence[Any]) -> DomainMatrix:
    n = len(values)
    rows = [[values[i] if i == j else FIELD.zero for j in range(n)] for i in range(n)]
    if not n:
        return exact_zeros(0, 0)
    return exact_matrix(rows)


def is_exact(matrix: Any) -> bool:
    return isinstance(matrix, DomainMatrix)


def to_numeric(matrix: DomainMatrix, q: Any) -> np.ndarray:
    """Evaluate an exact matrix at a rational :math:`q`."""
    num_rows, num_cols = matrix.shape
    result = np.zeros((num_rows, num_cols))
    for i, row in enumerate(matrix.to_list()):
        for j, x in enumerate(row):
            if x:
                result[i, j] = evaluate(x, q)
    return result


def kernel(matrix: np.ndarray, threshold: float = 1e-8) -> np.ndarray:
    """
    Orthonormal basis of the kernel, as columns. Singular values below
    ``threshold`` count as zero.
    """
    num_rows, num_cols = matrix.shape
    if num_rows == 0 or not np.any(matrix):
        return np.eye(num_cols)
    _, s, vh = scipy.linalg.svd(matrix)
    rank = int(np.sum(s > threshold))
    return vh[rank:].conj().T
