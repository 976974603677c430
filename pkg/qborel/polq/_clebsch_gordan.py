from __future__ import annotations
from typing import Any, Iterable
import functools
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel.scalars import rational
from qborel.roots import Weight, RootDatum, add_weights, scale_weight
from qborel.representations import GradedRep, build_irrep, kernel

__all__ = [
    "DecompositionError",
    "TensorRep",
    "tensor_rep",
    "CGComponent",
    "clebsch_gordan",
]

logger = logging.getLogger(__name__)


class DecompositionError(ArithmeticError):
    """A tensor product did not decompose into the expected irreducible pieces."""


@dataclasses.dataclass(eq=False, repr=False)
class TensorRep(
    mixins.Printable,
):
    r"""
    The tensor product :math:`V \otimes V'` of two numeric representations,
    with :math:`U_q(\mathfrak{g})` acting through the coproduct

    .. math::

        \Delta(E_r) = E_r \otimes K_{\alpha_r} + 1 \otimes E_r, \qquad
        \Delta(F_r) = F_r \otimes 1 + K_{\alpha_r}^{-1} \otimes F_r.

    Basis vectors are ordered like :func:`numpy.kron`, the vector
    :math:`e_i \otimes e'_k` has index :math:`i \dim V' + k`.
    """

    left: GradedRep
    right: GradedRep

    @property
    def datum(self) -> RootDatum:
        return self.left.datum

    @property
    def dimension(self) -> int:
        return self.left.dimension * self.right.dimension

    @functools.cached_property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(
            add_weights(a, b) for a in self.left.weights for b in self.right.weights
        )

    @functools.cached_property
    def e(self) -> tuple[np.ndarray, ...]:
        identity = np.eye(self.left.dimension)
        return tuple(
            np.kron(self.left.e[r], self.right.k(alpha)) + np.kron(identity, self.right.e[r])
            for r, alpha in enumerate(self.datum.simple_roots)
        )

    @functools.cached_property
    def f(self) -> tuple[np.ndarray, ...]:
        identity = np.eye(self.right.dimension)
        return tuple(
            np.kron(self.left.f[r], identity)
            + np.kron(self.left.k(scale_weight(-1, alpha)), self.right.f[r])
            for r, alpha in enumerate(self.datum.simple_roots)
        )

    def k(self, weight: Weight) -> np.ndarray:
        return np.kron(self.left.k(weight), self.right.k(weight))


def tensor_rep(left: GradedRep, right: GradedRep) -> TensorRep:
    """
    The tensor product of two numeric representations of the same datum.

    Parameters
    ----------
    left
        The first factor.
    right
        The second factor.
    """
    left.check_numeric("tensor_rep")
    right.check_numeric("tensor_rep")
    if left.datum is not right.datum or left.q != right.q:
        raise ValueError("tensor factors must share the root datum and the value of q")
    return TensorRep(left=left, right=right)


@dataclasses.dataclass(eq=False, repr=False)
class CGComponent(
    mixins.Printable,
):
    """One irreducible summand of a tensor product."""

    highest_weight: Weight
    """Highest weight :math:`\\mu` of the summand."""

    isometry: np.ndarray = dataclasses.field(repr=False)
    """The intertwining isometry :math:`V_\\mu \\to V \\otimes V'`, as columns."""


def _fix_sign(vector: np.ndarray) -> np.ndarray:
    pivot = np.flatnonzero(np.abs(vector) > 1e-10)
    if pivot.size:
        vector = vector * np.conj(np.sign(vector[pivot[0]]))
    return vector


def _word_vectors(f: tuple[np.ndarray, ...], top: np.ndarray, words) -> np.ndarray:
    columns = []
    for word in words:
        v = top
        for r in reversed(word):
            v = f[r] @ v
        columns.append(v)
    return np.stack(columns, axis=1)


@functools.lru_cache(maxsize=None)
def _clebsch_gordan(
    datum: RootDatum,
    left: Weight,
    right: Weight,
    q: Any,
    threshold: float,
    highest_weights: None | frozenset[Weight] = None,
) -> tuple[CGComponent, ...]:
    product = tensor_rep(
        build_irrep(datum, left, "numeric", q),
        build_irrep(datum, right, "numeric", q),
    )
    blocks: dict[Weight, list[int]] = {}
    for i, weight in enumerate(product.weights):
        blocks.setdefault(weight, []).append(i)

    stacked = np.concatenate(product.e, axis=0)
    result = []
    for weight in sorted(blocks, key=lambda w: (-datum.height(w), w)):
        if not datum.is_dominant(weight):
            continue
        if highest_weights is not None and weight not in highest_weights:
            continue
        indices = blocks[weight]
        highest = kernel(stacked[:, indices], threshold)
        if highest.shape[1] == 0:
            continue
        irrep = build_irrep(datum, weight, "numeric", q)
        reference = _word_vectors(irrep.f, np.eye(irrep.dimension)[:, 0], irrep.words)
        for vector in highest.T:
            top = np.zeros(product.dimension, dtype=highest.dtype)
            top[indices] = _fix_sign(vector)
            images = _word_vectors(product.f, top, irrep.words)
            isometry = images @ np.linalg.inv(reference)
            result.append(CGComponent(highest_weight=weight, isometry=isometry))

    total = sum(c.isometry.shape[1] for c in result)
    if highest_weights is None and total != product.dimension:
        raise DecompositionError(
            f"summands of V_{left} x V_{right} have total dimension {total}, "
            f"expected {product.dimension}"
        )
    logger.debug(
        "decomposed V_%s x V_%s into %s",
        left,
        right,
        [c.highest_weight for c in result],
    )
    return tuple(result)


def clebsch_gordan(
    datum: RootDatum,
    left: Weight,
    right: Weight,
    q: Any,
    threshold: float = 1e-8,
    highest_weights: None | Iterable[Weight] = None,
) -> tuple[CGComponent, ...]:
    r"""
    Decompose :math:`V_\varpi \otimes V_{\varpi'}` into irreducible summands.

    Highest weight vectors are found as the joint kernel of the
    :math:`\Delta(E_r)` in each dominant weight space, and each one is
    extended to an isometric copy of :math:`V_\mu` by applying the same
    F-words that span the orthonormal basis of :math:`V_\mu`.

    Parameters
    ----------
    datum
        The root datum.
    left
        Highest weight of the first factor.
    right
        Highest weight of the second factor.
    q
        Rational value of :math:`q`.
    threshold
        Singular values below this count as zero in the kernel computation.
    highest_weights
        If given, only the summands with these highest weights are built.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        datum = qborel.roots.datum_from_label("A1")
        [c.highest_weight for c in qborel.polq.clebsch_gordan(datum, (1,), (1,), "1/2")]
    """
    if highest_weights is not None:
        highest_weights = frozenset(tuple(w) for w in highest_weights)
    return _clebsch_gordan(
        datum, tuple(left), tuple(right), rational(q), threshold, highest_weights
    )
