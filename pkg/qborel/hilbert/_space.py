"""
Finite windows of the Hilbert space :math:`L^2(B)_0 = \\ell^2(P) \\otimes
\\ell^2(\\mathbb{N})^{\\otimes M}` and the operators restricted to them.
"""

from __future__ import annotations
from typing import Any, Sequence
import functools
import itertools
import logging
import dataclasses
import numpy as np
import scipy.sparse
from qborel import mixins
from qborel.roots import Weight, RootDatum, add_weights

__all__ = [
    "HilbertModelError",
    "TruncatedSpace",
    "TruncatedOperator",
]

logger = logging.getLogger(__name__)


class HilbertModelError(ArithmeticError):
    """The truncated Hilbert space model could not produce a trustworthy answer."""


@dataclasses.dataclass(eq=False, repr=False)
class TruncatedSpace(
    mixins.Printable,
):
    r"""
    The span of the basis vectors :math:`\xi_\chi \otimes e_{n_1} \otimes
    \cdots \otimes e_{n_M}` with every coordinate of :math:`\chi` in
    :math:`[-R, R]` and every :math:`n_i < D`.

    Basis vectors are ordered with the lattice index most significant and the
    Fock indices in the order of the reduced word.
    """

    datum: RootDatum
    """The root datum."""

    cutoff: int
    """The Fock cutoff :math:`D` of each factor."""

    radius: None | int = None
    """The box radius :math:`R` of the lattice window, ``None`` for the Fock part alone."""

    word: None | tuple[int, ...] = None
    """A reduced word for :math:`w_0`, :attr:`RootDatum.longest_word` by default."""

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError(f"the Fock cutoff must be positive, got {self.cutoff}")
        if self.radius is not None and self.radius < 0:
            raise ValueError(f"the window radius must be non-negative, got {self.radius}")
        if self.word is None:
            self.word = self.datum.longest_word
        self.word = tuple(self.word)

    @property
    def num_factors(self) -> int:
        return len(self.word)

    @property
    def fock_shape(self) -> tuple[int, ...]:
        return (self.cutoff,) * self.num_factors

    @property
    def fock_dimension(self) -> int:
        return self.cutoff**self.num_factors

    @functools.cached_property
    def weights(self) -> tuple[Weight, ...]:
        if self.radius is None:
            return (self.datum.zero,)
        window = range(-self.radius, self.radius + 1)
        return tuple(itertools.product(window, repeat=self.datum.rank))

    @functools.cached_property
    def weight_index(self) -> dict[Weight, int]:
        return {w: i for i, w in enumerate(self.weights)}

    @functools.cached_property
    def occupations(self) -> np.ndarray:
        """The Fock indices :math:`(n_1, \\dots, n_M)` of each Fock basis vector."""
        return np.array(list(np.ndindex(*self.fock_shape)), dtype=int).reshape(-1, self.num_factors)

    @property
    def dimension(self) -> int:
        return len(self.weights) * self.fock_dimension

    def index(self, weight: Weight, occupation: Sequence[int]) -> int:
        fock = int(np.ravel_multi_index(tuple(occupation), self.fock_shape))
        return self.weight_index[tuple(weight)] * self.fock_dimension + fock

    def fock(self) -> TruncatedSpace:
        """The Fock factor :math:`\\ell^2(\\mathbb{N})^{\\otimes M}` of this window."""
        return _fock_space(self.datum, self.cutoff, self.word)

    def shift(self, weight: Weight) -> tuple[scipy.sparse.csr_matrix, np.ndarray]:
        r"""
        The lattice shift :math:`\xi_\chi \mapsto \xi_{\chi + \omega}` on the
        lattice window, with the mask of the weights it keeps inside the window.
        """
        rows, cols = [], []
        valid = np.zeros(len(self.weights), dtype=bool)
        for j, chi in enumerate(self.weights):
            i = self.weight_index.get(add_weights(chi, weight))
            if i is not None:
                rows.append(i)
                cols.append(j)
                valid[j] = True
        n = len(self.weights)
        matrix = scipy.sparse.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
        return matrix, valid

    def is_compatible(self, other: TruncatedSpace) -> bool:
        return (
            self.datum is other.datum
            and self.cutoff == other.cutoff
            and self.radius == other.radius
            and self.word == other.word
        )


@functools.lru_cache(maxsize=None)
def _fock_space(datum: RootDatum, cutoff: int, word: tuple[int, ...]) -> TruncatedSpace:
    return TruncatedSpace(datum=datum, cutoff=cutoff, word=word)


@dataclasses.dataclass(eq=False, repr=False)
class TruncatedOperator(
    mixins.Printable,
):
    r"""
    An operator on :math:`L^2(B)_0` compressed to a :class:`TruncatedSpace`,
    together with the columns on which the compression is exact.

    A column is valid when the image of its basis vector lies inside the
    window. Products keep a column valid only if every basis vector it is
    mapped to through the right factor is a valid column of the left factor,
    so that identities between products can be read off on valid columns.
    """

    space: TruncatedSpace
    matrix: scipy.sparse.csr_matrix = dataclasses.field(repr=False)
    valid: np.ndarray = dataclasses.field(repr=False)
    """Boolean mask of the exact columns."""

    def __post_init__(self):
        self.matrix = scipy.sparse.csr_matrix(self.matrix, dtype=complex)
        self.valid = np.asarray(self.valid, dtype=bool)
        n = self.space.dimension
        if self.matrix.shape != (n, n) or self.valid.shape != (n,):
            raise ValueError(
                f"operator of shape {self.matrix.shape} with {self.valid.shape} "
                f"mask does not fit a space of dimension {n}"
            )

    @classmethod
    def identity(cls, space: TruncatedSpace) -> TruncatedOperator:
        n = space.dimension
        return cls(space=space, matrix=scipy.sparse.identity(n, format="csr"), valid=np.ones(n, dtype=bool))

    @classmethod
    def zeros(cls, space: TruncatedSpace) -> TruncatedOperator:
        n = space.dimension
        return cls(space=space, matrix=scipy.sparse.csr_matrix((n, n)), valid=np.ones(n, dtype=bool))

    @classmethod
    def diagonal(cls, space: TruncatedSpace, values: np.ndarray) -> TruncatedOperator:
        n = space.dimension
        return cls(space=space, matrix=scipy.sparse.diags(values, format="csr"), valid=np.ones(n, dtype=bool))

    @property
    def num_valid(self) -> int:
        return int(np.count_nonzero(self.valid))

    def _check(self, other: Any) -> None:
        if not isinstance(other, TruncatedOperator):
            raise TypeError(f"expected a TruncatedOperator, got {type(other).__name__}")
        if not self.space.is_compatible(other.space):
            raise TypeError("cannot combine operators on different windows")

    def __add__(self, other: TruncatedOperator) -> TruncatedOperator:
        self._check(other)
        return TruncatedOperator(
            space=self.space,
            matrix=self.matrix + other.matrix,
            valid=self.valid & other.valid,
        )

    def __sub__(self, other: TruncatedOperator) -> TruncatedOperator:
        return self + (-other)

    def __neg__(self) -> TruncatedOperator:
        return self.scale(-1)

    def scale(self, factor: complex) -> TruncatedOperator:
        return TruncatedOperator(space=self.space, matrix=self.matrix * factor, valid=self.valid)

    def __mul__(self, other: Any) -> TruncatedOperator:
        if isinstance(other, TruncatedOperator):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other: Any) -> TruncatedOperator:
        return self.scale(other)

    def __matmul__(self, other: TruncatedOperator) -> TruncatedOperator:
        self._check(other)
        invalid = (~self.valid).astype(float)
        reaches_invalid = abs(other.matrix).T @ invalid > 0
        return TruncatedOperator(
            space=self.space,
            matrix=self.matrix @ other.matrix,
            valid=other.valid & ~reaches_invalid,
        )

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def residual(self, other: TruncatedOperator, relative: bool = False) -> float:
        """
        Largest entry of ``self - other`` on the columns valid for both.

        Parameters
        ----------
        other
            The operator to compare with.
        relative
            Divide by the largest entry of the two operators on those columns.

        Raises
        ------
        HilbertModelError
            If no column is valid, the window is too small for the identity.
        """
        self._check(other)
        columns = np.flatnonzero(self.valid & other.valid)
        if not len(columns):
            raise HilbertModelError(
                "no column of the window is exact, increase the cutoff or the radius"
            )
        difference = (self.matrix - other.matrix)[:, columns]
        result = _max_abs(difference)
        if relative:
            scale = max(_max_abs(self.matrix[:, columns]), _max_abs(other.matrix[:, columns]))
            if scale > 0:
                result /= scale
        return result


def _max_abs(matrix: scipy.sparse.spmatrix) -> float:
    matrix = scipy.sparse.csr_matrix(matrix)
    if not matrix.nnz:
        return 0.0
    return float(np.max(np.abs(matrix.data)))
