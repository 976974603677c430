r"""
The highest weight representation of :math:`U_q^0(\mathfrak{n}_\mathbb{R})`
on the Fock window, generated by :math:`X_r` and :math:`X_r^*` subject to

.. math::

    X_r X_s^* - q^{-(\alpha_r, \alpha_s)} X_s^* X_r = \frac{\delta_{rs}}{q_r^{-1} - q_r},

and its comparison with the skew pairing of the Borel halves.
"""

from __future__ import annotations
from typing import Sequence
import functools
import itertools
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel.scalars import FIELD, ExactScalar, q_power, q_r
from qborel.roots import RootDatum
from qborel.algebras import Word, drinfeld_double, skew_pair, star
from qborel.polq import Polq, MatrixCoeffElement
from qborel.galois import implementing_x
from ._space import TruncatedSpace, TruncatedOperator
from ._theta import theta_root, theta_w0, _padding
from ._model import fock_action

__all__ = [
    "FockLetter",
    "fock_generator",
    "fock_rep",
    "highest_weight_gram",
    "skew_pairing_gram",
    "CyclicityRank",
    "cyclicity_rank",
    "fock_word_rank",
    "boundedness_sequence",
]

logger = logging.getLogger(__name__)

FockLetter = tuple[int, bool]
"""A generator :math:`X_r` as ``(r, False)`` or :math:`X_r^*` as ``(r, True)``."""


@functools.lru_cache(maxsize=None)
def _generator(algebra: Polq, space: TruncatedSpace, r: int, dagger: bool) -> TruncatedOperator:
    x = implementing_x(algebra, r)
    return fock_action(x.star if dagger else x, space)


def fock_generator(algebra: Polq, space: TruncatedSpace, r: int, dagger: bool = False) -> TruncatedOperator:
    r"""
    The operator of :math:`X_r` (or :math:`X_r^*`) on the Fock window,
    realized as the action of :math:`x_r = u_{\alpha_r} e_r` on a single
    lattice layer.
    """
    if not 0 <= r < algebra.datum.rank:
        raise ValueError(f"simple root index {r} out of range for rank {algebra.datum.rank}")
    return _generator(algebra, space.fock(), r, bool(dagger))


def fock_rep(algebra: Polq, word: Sequence[FockLetter], space: TruncatedSpace) -> TruncatedOperator:
    r"""
    The operator of a word :math:`X_{r_1}^{(*)} \cdots X_{r_k}^{(*)}` on the
    Fock window of ``space``.

    Parameters
    ----------
    algebra
        The algebra providing :math:`q` and the root datum.
    word
        The letters of the word, left to right.
    space
        The window, only its Fock factor is used.
    """
    result = TruncatedOperator.identity(space.fock())
    for r, dagger in word:
        result = result @ fock_generator(algebra, space, r, dagger)
    return result


def _gram_entry(datum: RootDatum, left: Word, right: Word, cache: dict) -> ExactScalar:
    r"""
    :math:`\langle \xi_0, X_{v} X_{s_1}^* \cdots X_{s_k}^* \xi_0 \rangle`
    by moving the last letter of :math:`v` to the right.
    """
    if len(left) != len(right):
        return FIELD.zero
    if not left:
        return FIELD.one
    key = (left, right)
    if key in cache:
        return cache[key]
    r = left[-1]
    alpha = datum.simple_roots[r]
    constant = 1 / (1 / q_r(datum, r) - q_r(datum, r))
    result = FIELD.zero
    factor = FIELD.one
    for j, s in enumerate(right):
        if s == r:
            rest = right[:j] + right[j + 1:]
            result += factor * constant * _gram_entry(datum, left[:-1], rest, cache)
        factor *= q_power(-datum.pair(alpha, datum.simple_roots[s]))
    cache[key] = result
    return result


def highest_weight_gram(datum: RootDatum, words: Sequence[Word]) -> tuple[tuple[ExactScalar, ...], ...]:
    r"""
    The Gram matrix :math:`\langle X_v^* \xi_0, X_w^* \xi_0 \rangle` of the
    highest weight representation, computed from the commutation relation
    and :math:`X_r \xi_0 = 0` alone.

    Parameters
    ----------
    datum
        The root datum.
    words
        Words :math:`w` in the simple indices, :math:`X_w = X_{w_1} \cdots X_{w_k}`.
    """
    cache: dict = {}
    words = [tuple(w) for w in words]
    return tuple(
        tuple(_gram_entry(datum, v, tuple(reversed(w)), cache) for w in words)
        for v in words
    )


def skew_pairing_gram(datum: RootDatum, words: Sequence[Word]) -> tuple[tuple[ExactScalar, ...], ...]:
    r"""The matrix :math:`(E_v, E_w^*)` of skew pairings in the Drinfeld double."""
    double = drinfeld_double(datum)

    def monomial(word: Word):
        result = double.one()
        for r in word:
            result = result * double.e(r)
        return result

    monomials = [monomial(tuple(w)) for w in words]
    return tuple(tuple(skew_pair(x, star(y)) for y in monomials) for x in monomials)


@dataclasses.dataclass(eq=False, repr=False)
class CyclicityRank(
    mixins.Printable,
):
    """The rank of a family of vectors in a Fock window."""

    rank: int
    dimension: int
    num_vectors: int

    @property
    def is_full(self) -> bool:
        return self.rank == self.dimension


def _vacuum_images(algebra: Polq, weight, space: TruncatedSpace) -> tuple[np.ndarray, int]:
    r"""
    The vectors :math:`\theta_{w_0}(U_\varpi(e_i, e_j)) e_0` for all
    :math:`i, j`, as an array of shape ``(dim, dim, size ** M)``, and the
    padded size of each factor.
    """
    word = space.word
    size = space.cutoff + _padding(algebra, [weight], word)
    result = None
    for r in word:
        columns = theta_root(algebra, weight, r, size)[..., 0]
        if result is None:
            result = columns
        else:
            d = result.shape[0]
            result = np.einsum("ika,kjb->ijab", result, columns).reshape(d, d, -1)
    return result, size


def cyclicity_rank(algebra: Polq, space: TruncatedSpace, bound: int) -> CyclicityRank:
    r"""
    The rank of :math:`\{\theta_{w_0}(x) e_0^{\otimes M}\}` over the matrix
    coefficients of all dominant weights with coordinates at most ``bound``.

    Vectors leaving the Fock window are discarded.
    """
    space = space.fock()
    datum = algebra.datum
    vectors = []
    for weight in itertools.product(range(bound + 1), repeat=datum.rank):
        images, size = _vacuum_images(algebra, weight, space)
        window = np.ravel_multi_index(space.occupations.T, (size,) * space.num_factors)
        images = images.reshape(-1, images.shape[-1])
        inside = images[:, window]
        leak = np.abs(images).sum(axis=1) - np.abs(inside).sum(axis=1)
        vectors.append(inside[leak <= 1e-12 * np.maximum(np.abs(inside).sum(axis=1), 1)])
    matrix = np.concatenate(vectors, axis=0)
    rank = int(np.linalg.matrix_rank(matrix))
    logger.debug("cyclicity: rank %d of %d vectors on %d Fock vectors", rank, len(matrix), space.dimension)
    return CyclicityRank(rank=rank, dimension=space.dimension, num_vectors=len(matrix))


def fock_word_rank(algebra: Polq, space: TruncatedSpace, words: Sequence[Word]) -> CyclicityRank:
    r"""
    The rank of :math:`\{X_w^* e_0^{\otimes M}\}`, which equals the
    dimension of the span of the :math:`E_w` when the representation is
    faithful on those words.
    """
    space = space.fock()
    vacuum = np.zeros(space.dimension)
    vacuum[0] = 1
    vectors = []
    for w in words:
        operator = fock_rep(algebra, [(r, True) for r in reversed(tuple(w))], space)
        if not operator.valid[0]:
            raise ValueError(f"the word {w} leaves the Fock window, increase the cutoff")
        vectors.append(operator.matrix @ vacuum)
    matrix = np.array(vectors)
    rank = int(np.linalg.matrix_rank(matrix)) if len(matrix) else 0
    return CyclicityRank(rank=rank, dimension=space.dimension, num_vectors=len(matrix))


def boundedness_sequence(x: MatrixCoeffElement, space: TruncatedSpace, cutoffs: Sequence[int]) -> tuple[float, ...]:
    r"""
    The norms of the compressions of :math:`\theta_{w_0}(x)` to Fock
    windows of growing cutoff, a non-decreasing sequence converging to
    :math:`\|\theta_{w_0}(x)\|`.
    """
    result = []
    for cutoff in cutoffs:
        window = TruncatedSpace(datum=space.datum, cutoff=cutoff, word=space.word)
        result.append(float(np.linalg.norm(theta_w0(x, window).dense(), 2)))
    return tuple(result)
