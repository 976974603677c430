from __future__ import annotations
from typing import Sequence
import functools
import itertools
import logging
from sympy import QQ
from ._datum import Weight, RootDatum, add_weights, sub_weights, scale_weight

__all__ = [
    "longest_word",
    "reduced_words",
    "beta_sequence",
    "weyl_action",
    "longest_element_action",
    "dominant_weights",
    "weyl_dimension",
    "freudenthal_multiplicities",
]

logger = logging.getLogger(__name__)


def longest_word(datum: RootDatum) -> tuple[int, ...]:
    r"""
    A reduced word :math:`(r_1, \ldots, r_M)` for the longest element
    :math:`w_0` of the Weyl group.

    Starting from :math:`\rho`, the smallest index with a positive coordinate
    is reflected until the orbit reaches :math:`-\rho`. Every step lowers the
    weight, so the word is reduced and has length :math:`|\Delta^+|`.

    Parameters
    ----------
    datum
        The root datum.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        qborel.roots.longest_word(qborel.roots.datum_from_label("A2"))
    """
    weight = datum.rho
    word = []
    while True:
        descents = [r for r, c in enumerate(weight) if c > 0]
        if not descents:
            break
        r = descents[0]
        weight = datum.reflect(r, weight)
        word.append(r)
    return tuple(word)


@functools.lru_cache(maxsize=None)
def _reduced_words(datum: RootDatum, weight: Weight) -> tuple[tuple[int, ...], ...]:
    descents = [r for r, c in enumerate(weight) if c > 0]
    if not descents:
        return ((),)
    return tuple(
        (r,) + tail
        for r in descents
        for tail in _reduced_words(datum, datum.reflect(r, weight))
    )


def reduced_words(datum: RootDatum) -> tuple[tuple[int, ...], ...]:
    """
    Every reduced word of the longest Weyl group element, in lexicographic order.

    Parameters
    ----------
    datum
        The root datum.
    """
    return tuple(sorted(_reduced_words(datum, datum.rho)))


def weyl_action(
    datum: RootDatum,
    word: Sequence[int],
    weight: Weight,
) -> Weight:
    r"""
    Apply :math:`s_{r_1} \cdots s_{r_k}` to a weight.

    Parameters
    ----------
    datum
        The root datum.
    word
        Simple reflection indices, the rightmost acts first.
    weight
        The weight to transform.
    """
    for r in reversed(word):
        weight = datum.reflect(r, weight)
    return tuple(weight)


def longest_element_action(datum: RootDatum, weight: Weight) -> Weight:
    """The image of a weight under the longest Weyl group element."""
    return weyl_action(datum, datum.longest_word, weight)


def beta_sequence(
    datum: RootDatum,
    word: None | Sequence[int] = None,
) -> tuple[Weight, ...]:
    r"""
    The enumeration :math:`\beta_i = s_{r_1} \cdots s_{r_{i-1}} \alpha_{r_i}`
    of the positive roots attached to a reduced word of :math:`w_0`.

    Parameters
    ----------
    datum
        The root datum.
    word
        A reduced word for :math:`w_0`, defaults to :attr:`RootDatum.longest_word`.

    Raises
    ------
    ValueError
        If the word has the wrong length or produces a repeated or negative root.
    """
    if word is None:
        word = datum.longest_word
    word = tuple(word)
    positive = set(datum.positive_roots)
    if len(word) != len(positive):
        raise ValueError(
            f"word {word} has length {len(word)}, expected {len(positive)}"
        )
    if any(not 0 <= r < datum.rank for r in word):
        raise ValueError(f"word {word} contains an invalid simple root index")
    result = []
    for i, r in enumerate(word):
        beta = weyl_action(datum, word[:i], datum.simple_roots[r])
        if beta not in positive or beta in result:
            raise ValueError(f"word {word} is not a reduced word for w0")
        result.append(beta)
    return tuple(result)


def dominant_weights(datum: RootDatum, bound: int) -> tuple[Weight, ...]:
    """Dominant weights with every coordinate at most ``bound``, ordered by coordinate sum."""
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    weights = itertools.product(range(bound + 1), repeat=datum.rank)
    return tuple(sorted(weights, key=lambda w: (sum(w), w)))


def _check_dominant(datum: RootDatum, weight: Weight) -> Weight:
    weight = tuple(int(c) for c in weight)
    if len(weight) != datum.rank or not datum.is_dominant(weight):
        raise ValueError(f"{weight} is not a dominant weight of rank {datum.rank}")
    return weight


def weyl_dimension(datum: RootDatum, weight: Weight) -> int:
    r"""
    Dimension of the irreducible module of highest weight :math:`\varpi`,
    :math:`\prod_{\alpha > 0} (\varpi + \rho, \alpha) / (\rho, \alpha)`.
    """
    weight = _check_dominant(datum, weight)
    shifted = add_weights(weight, datum.rho)
    result = QQ(1)
    for alpha in datum.positive_roots:
        result *= datum.pair(shifted, alpha) / datum.pair(datum.rho, alpha)
    return int(result)


def freudenthal_multiplicities(datum: RootDatum, weight: Weight) -> dict[Weight, int]:
    """
    Weight multiplicities of the irreducible module of a dominant highest weight,
    computed with Freudenthal's recursion layer by layer below the highest weight.

    Parameters
    ----------
    datum
        The root datum.
    weight
        A dominant weight.
    """
    weight = _check_dominant(datum, weight)
    lowest = longest_element_action(datum, weight)
    depth = int(datum.height(sub_weights(weight, lowest)))
    shifted = add_weights(weight, datum.rho)
    top = datum.pair(shifted, shifted)
    result: dict[Weight, int] = {weight: 1}
    for h in range(1, depth + 1):
        for coordinates in itertools.product(range(h + 1), repeat=datum.rank):
            if sum(coordinates) != h:
                continue
            mu = sub_weights(weight, datum.root_from_coordinates(coordinates))
            numerator = QQ(0)
            for alpha in datum.positive_roots:
                k = 1
                while True:
                    upper = add_weights(mu, scale_weight(k, alpha))
                    if datum.height(sub_weights(weight, upper)) < 0:
                        break
                    m = result.get(upper, 0)
                    if m:
                        numerator += m * datum.pair(upper, alpha)
                    k += 1
            if numerator == 0:
                continue
            mu_shifted = add_weights(mu, datum.rho)
            m = 2 * numerator / (top - datum.pair(mu_shifted, mu_shifted))
            if m.denominator != 1:
                raise ArithmeticError(f"non-integral multiplicity {m} at {mu}")
            if m:
                result[mu] = int(m)
    logger.debug("multiplicities of %s: %d weights", weight, len(result))
    return result
