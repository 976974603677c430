from __future__ import annotations
import logging
import dataclasses
import numpy as np
from qborel import mixins
from ._linalg import kernel
from ._irreps import RepresentationError, GradedRep

__all__ = [
    "Su2Restriction",
    "su2_restriction",
]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(eq=False, repr=False)
class Su2Restriction(
    mixins.Printable,
):
    r"""
    The decomposition of a representation under the rank-one subalgebra
    generated by :math:`E_r`, :math:`F_r` and :math:`K_{\alpha_r}`.

    The columns of :attr:`unitary` are the normalized strings
    :math:`\xi, F_r \xi, F_r^2 \xi, \dots` of each highest vector
    :math:`\xi \in \ker E_r`, so that conjugating by it block-diagonalizes
    the three generators.
    """

    r: int
    """Index of the simple root."""

    spins: tuple[int, ...]
    r"""Highest weight :math:`N = (\mathrm{wt}(\xi), \check{\alpha}_r)` of each block."""

    offsets: tuple[int, ...]
    """First column of each block in :attr:`unitary`."""

    unitary: np.ndarray = dataclasses.field(repr=False)
    """Columns are the string vectors, block by block."""

    @property
    def num_blocks(self) -> int:
        return len(self.spins)

    def block(self, index: int) -> slice:
        start = self.offsets[index]
        return slice(start, start + self.spins[index] + 1)

    def restrict(self, matrix: np.ndarray) -> np.ndarray:
        """Write an operator in the basis of string vectors."""
        return self.unitary.conj().T @ matrix @ self.unitary


def su2_restriction(rep: GradedRep, r: int, threshold: float = 1e-8) -> Su2Restriction:
    """
    Decompose a numeric representation into irreducible representations of
    the rank-one subalgebra attached to the simple root ``r``.

    Parameters
    ----------
    rep
        A representation of the numeric flavor.
    r
        Index of the simple root.
    threshold
        Singular values below this count as zero when computing kernels.
    """
    rep.check_numeric("su2_restriction")
    if not 0 <= r < rep.datum.rank:
        raise ValueError(f"simple root index {r} out of range for rank {rep.datum.rank}")
    e = rep.e[r]
    f = rep.f[r]
    columns = []
    spins = []
    offsets = []
    for weight in sorted(rep.blocks, key=lambda w: -w[r]):
        n = weight[r]
        if n < 0:
            continue
        indices = rep.blocks[weight]
        highest = kernel(e[:, indices], threshold)
        for vector in highest.T:
            top = np.zeros(rep.dimension, dtype=highest.dtype)
            top[indices] = vector
            offsets.append(len(columns))
            spins.append(n)
            current = top
            for _ in range(n + 1):
                columns.append(current / np.linalg.norm(current))
                current = f @ current
            if np.linalg.norm(current) > threshold:
                raise RepresentationError(f"F_{r} string of length {n + 1} did not terminate")
    if len(columns) != rep.dimension:
        raise RepresentationError(
            f"strings span {len(columns)} dimensions out of {rep.dimension}"
        )
    unitary = np.stack(columns, axis=1)
    logger.debug("restriction to root %d has blocks %s", r, spins)
    return Su2Restriction(r=r, spins=tuple(spins), offsets=tuple(offsets), unitary=unitary)
