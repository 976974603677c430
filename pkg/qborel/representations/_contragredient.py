from __future__ import annotations
import logging
import numpy as np
from qborel.roots import scale_weight, longest_element_action
from ._linalg import kernel
from ._irreps import RepresentationError, GradedRep, build_irrep

__all__ = [
    "contragredient",
    "intertwiner",
    "contragredient_intertwiner",
]

logger = logging.getLogger(__name__)


def contragredient(rep: GradedRep) -> GradedRep:
    r"""
    The contragredient representation on the conjugate Hilbert space,
    :math:`x \bar{\xi} = \overline{\hat{R}(x)^* \xi}`, written in the
    conjugate of the orthonormal basis of ``rep``.

    On generators it reads

    .. math::

        \bar{\pi}(E_r) = -q_r^{-1} K_{\alpha_r}^{-1} F_r K_{\alpha_r}, \qquad
        \bar{\pi}(F_r) = -q_r K_{\alpha_r}^{-1} E_r K_{\alpha_r}, \qquad
        \bar{\pi}(K_\omega) = K_\omega^{-1},

    so each basis vector of weight :math:`\mu` acquires weight :math:`-\mu`.

    Parameters
    ----------
    rep
        An irreducible representation of the numeric flavor.
    """
    rep.check_numeric("contragredient")
    if rep.dual:
        raise TypeError("only irreducible representations built by build_irrep are supported")
    datum = rep.datum
    domain = rep.domain
    e = []
    f = []
    for r, alpha in enumerate(datum.simple_roots):
        q_r = domain.q_power(datum.symmetrizer[r])
        k = rep.k(alpha)
        k_inv = rep.k(scale_weight(-1, alpha))
        e.append(-k_inv @ rep.f[r] @ k / q_r)
        f.append(-q_r * k_inv @ rep.e[r] @ k)
    highest_weight = scale_weight(-1, longest_element_action(datum, rep.highest_weight))
    return GradedRep(
        datum=datum,
        highest_weight=highest_weight,
        flavor=rep.flavor,
        q=rep.q,
        weights=tuple(scale_weight(-1, w) for w in rep.weights),
        words=(),
        e=tuple(e),
        f=tuple(f),
        dual=True,
    )


def intertwiner(source: GradedRep, target: GradedRep) -> np.ndarray:
    """
    Find the unitary :math:`J` with :math:`J \\pi_s(X) = \\pi_t(X) J` for every
    generator :math:`X` of two irreducible representations.

    Parameters
    ----------
    source
        A numeric representation.
    target
        A numeric representation of the same root datum.

    Raises
    ------
    RepresentationError
        If the representations are not equivalent.
    """
    source.check_numeric("intertwiner")
    target.check_numeric("intertwiner")
    if source.dimension != target.dimension:
        raise RepresentationError(
            f"dimensions {source.dimension} and {target.dimension} differ"
        )
    n = source.dimension
    identity = np.eye(n)
    equations = []
    pairs = list(zip(source.e, target.e)) + list(zip(source.f, target.f))
    pairs += [
        (source.k(alpha), target.k(alpha)) for alpha in source.datum.simple_roots
    ]
    for a, b in pairs:
        equations.append(np.kron(b, identity) - np.kron(identity, a.T))
    solutions = kernel(np.concatenate(equations, axis=0))
    if solutions.shape[1] != 1:
        raise RepresentationError(
            f"expected a unique intertwiner up to scale, found {solutions.shape[1]}"
        )
    result = solutions[:, 0].reshape(n, n)
    result = result / np.sqrt(np.abs((result.conj().T @ result)[0, 0]))
    pivot = np.flatnonzero(np.abs(result[:, 0]) > 1e-10)
    if pivot.size:
        result = result * np.conj(np.sign(result[pivot[0], 0]))
    logger.debug("intertwiner of dimension %d found", n)
    return result


def contragredient_intertwiner(rep: GradedRep) -> np.ndarray:
    r"""
    The unitary identification :math:`V_{-w_0 \varpi} \cong \bar{V}_\varpi`.

    Parameters
    ----------
    rep
        An irreducible representation of the numeric flavor.
    """
    dual = contragredient(rep)
    other = build_irrep(rep.datum, dual.highest_weight, "numeric", rep.q)
    return intertwiner(other, dual)
