from __future__ import annotations
from typing import Any, Sequence
import logging
import numpy as np
from qborel.scalars import q_factorial
from qborel.roots import Weight, longest_word, longest_element_action, beta_sequence
from qborel.algebras import Word
from ._irreps import GradedRep, RepresentationError

__all__ = [
    "braid_operator",
    "longest_braid_operator",
    "lowest_weight_vector",
]

logger = logging.getLogger(__name__)


def _divided_powers(matrix: np.ndarray, num: int, domain, power: int) -> list[np.ndarray]:
    result = [np.eye(len(matrix))]
    for a in range(1, num + 1):
        result.append(result[-1] @ matrix)
    return [m / q_factorial(a, domain, power) for a, m in enumerate(result)]


def braid_operator(rep: GradedRep, r: int) -> np.ndarray:
    r"""
    The braid operator :math:`T_r` acting on a weight vector :math:`\xi` by

    .. math::

        T_r \xi = \sum_{-a + b - c = (\mathrm{wt}(\xi), \check{\alpha}_r)}
            (-1)^b q_r^{b - ac} E_r^{(a)} F_r^{(b)} E_r^{(c)} \xi,

    where :math:`X^{(a)} = X^a / [a]_{q_r}!` are divided powers.

    Parameters
    ----------
    rep
        A representation of the numeric flavor.
    r
        Index of the simple root.
    """
    rep.check_numeric("braid_operator")
    datum = rep.datum
    if not 0 <= r < datum.rank:
        raise ValueError(f"simple root index {r} out of range for rank {datum.rank}")
    domain = rep.domain
    d = datum.symmetrizer[r]
    n_max = 1 + max((abs(w[r]) for w in rep.weights), default=0)
    e = _divided_powers(rep.e[r], n_max, domain, d)
    f = _divided_powers(rep.f[r], n_max, domain, d)

    result = np.zeros((rep.dimension, rep.dimension))
    for weight, cols in rep.blocks.items():
        n = weight[r]
        for a in range(n_max + 1):
            for c in range(n_max + 1):
                b = n + a + c
                if not 0 <= b <= n_max:
                    continue
                coefficient = (-1) ** b * domain.q_power(d * (b - a * c))
                result[:, cols] += coefficient * (e[a] @ f[b] @ e[c][:, cols])
    return result


def longest_braid_operator(rep: GradedRep, word: None | Sequence[int] = None) -> np.ndarray:
    """
    The product :math:`T_{w_0} = T_{r_1} T_{r_2} \\cdots T_{r_M}` along a
    reduced word for the longest Weyl group element.

    Parameters
    ----------
    rep
        A representation of the numeric flavor.
    word
        A reduced word for :math:`w_0`, defaults to
        :func:`qborel.roots.longest_word`.
    """
    datum = rep.datum
    word: Word = tuple(longest_word(datum) if word is None else word)
    beta_sequence(datum, word)
    result = np.eye(rep.dimension)
    for r in word:
        result = result @ braid_operator(rep, r)
    return result


def lowest_weight_vector(rep: GradedRep, word: None | Sequence[int] = None) -> np.ndarray:
    r"""
    The unit lowest weight vector
    :math:`\eta_{w_0 \varpi} = q^{-(\rho, \varpi)} T_{w_0} \xi_\varpi`.

    Parameters
    ----------
    rep
        An irreducible representation of the numeric flavor.
    word
        A reduced word for :math:`w_0`.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        datum = qborel.roots.datum_from_label("A1")
        rep = qborel.representations.build_irrep(datum, (3,))
        qborel.representations.lowest_weight_vector(rep)
    """
    if rep.dual:
        raise TypeError("the lowest weight vector is defined for irreducible representations")
    datum = rep.datum
    result = longest_braid_operator(rep, word)[:, 0]
    result = result * rep.domain.q_power(-datum.pair(datum.rho, rep.highest_weight))
    lowest: Weight = longest_element_action(datum, rep.highest_weight)
    support = [i for i, x in enumerate(result) if abs(x) > 1e-10]
    if any(rep.weights[i] != lowest for i in support):
        raise RepresentationError(
            f"T_w0 did not map the highest weight vector to weight {lowest}"
        )
    logger.debug("lowest weight vector of %s has norm %s", rep.highest_weight, np.linalg.norm(result))
    return result
