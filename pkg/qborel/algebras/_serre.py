"""
Quantum Serre relations and the normal form of words in the
:math:`E_r` (or :math:`F_r`) modulo the Serre ideal.
"""

from __future__ import annotations
from typing import Any, TypeAlias
import functools
import itertools
import logging
import dataclasses
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import multiset_permutations
from qborel import mixins
from qborel.scalars import FIELD, ExactScalar, q_binomial
from qborel.roots import RootDatum

__all__ = [
    "Word",
    "word_content",
    "serre_words",
    "serre_polynomial",
    "SerreBasis",
    "serre_basis",
    "reduce_word",
]

logger = logging.getLogger(__name__)

Word: TypeAlias = tuple[int, ...]
"""A word in the simple-root indices, read left to right."""

_DOMAIN = FIELD.to_domain()


def word_content(word: Word, rank: int) -> tuple[int, ...]:
    """Number of occurrences of each letter in a word."""
    content = [0] * rank
    for r in word:
        content[r] += 1
    return tuple(content)


@functools.lru_cache(maxsize=None)
def serre_words(datum: RootDatum, r: int, s: int) -> tuple[tuple[Word, ExactScalar], ...]:
    r"""
    The quantum Serre polynomial :math:`f_{rs}(Y, Z)` as a list of
    ``(word, coefficient)`` pairs in the letters ``r`` and ``s``.

    .. math::

        f_{rs}(Y, Z) = \sum_{p=0}^{n} (-1)^p
            \begin{bmatrix} n \\ p \end{bmatrix}_{q_r} Y^{n-p} Z Y^{p},
        \qquad n = 1 - (\check{\alpha}_r, \alpha_s).

    Parameters
    ----------
    datum
        The root datum.
    r
        Index of the letter :math:`Y`.
    s
        Index of the letter :math:`Z`, must differ from ``r``.
    """
    if r == s:
        raise ValueError(f"the Serre polynomial needs distinct indices, got r = s = {r}")
    for index in (r, s):
        if not 0 <= index < datum.rank:
            raise ValueError(f"simple root index {index} out of range for rank {datum.rank}")
    n = 1 - datum.cartan_matrix[r][s]
    d = datum.symmetrizer[r]
    return tuple(
        ((r,) * (n - p) + (s,) + (r,) * p, (-1) ** p * q_binomial(n, p, power=d))
        for p in range(n + 1)
    )


def serre_polynomial(r: int, s: int, y: Any, z: Any) -> Any:
    """
    Evaluate :math:`f_{rs}(Y, Z)` on two algebra elements of the same presentation.

    Parameters
    ----------
    r
        Index of the letter substituted by ``y``.
    s
        Index of the letter substituted by ``z``.
    y
        An :class:`AlgebraElement`.
    z
        An :class:`AlgebraElement`.
    """
    datum = y.presentation.datum
    result = y.presentation.zero()
    for word, coefficient in serre_words(datum, r, s):
        term = y.presentation.one()
        for letter in word:
            term = term * (y if letter == r else z)
        result = result + coefficient * term
    return result


@dataclasses.dataclass(eq=False, repr=False)
class SerreBasis(
    mixins.Printable,
):
    """
    The normal words of a fixed content and the rewriting rules for all
    other words of that content.

    The words of a content are ordered descending lexicographically, the Serre
    ideal is row reduced in that order, and the pivot words are eliminated.
    The remaining words form the basis.
    """

    content: tuple[int, ...]
    """Number of letters of each index."""

    basis: tuple[Word, ...]
    """Normal words, ascending lexicographically."""

    rewrite: dict[Word, dict[Word, ExactScalar]] = dataclasses.field(repr=False)
    """Maps each eliminated word to its expansion in normal words."""

    @property
    def num_words(self) -> int:
        return len(self.basis) + len(self.rewrite)


def _words_of_content(content: tuple[int, ...]) -> list[Word]:
    letters = [r for r, c in enumerate(content) for _ in range(c)]
    return sorted((tuple(w) for w in multiset_permutations(letters)), reverse=True)


@functools.lru_cache(maxsize=None)
def serre_basis(datum: RootDatum, content: tuple[int, ...]) -> SerreBasis:
    """
    Compute (and cache) the normal words of a given content.

    The Serre ideal component of content :math:`\\beta` is spanned by
    :math:`E_r \\cdot I_{\\beta - \\alpha_r}` together with the products
    :math:`f_{rs} \\cdot w` of a Serre polynomial with arbitrary words.

    Parameters
    ----------
    datum
        The root datum.
    content
        Number of letters of each index.
    """
    content = tuple(int(c) for c in content)
    if len(content) != datum.rank or any(c < 0 for c in content):
        raise ValueError(f"invalid content {content} for rank {datum.rank}")
    words = _words_of_content(content)
    index = {w: i for i, w in enumerate(words)}

    rows: list[dict[Word, ExactScalar]] = []
    for r, c in enumerate(content):
        if not c:
            continue
        smaller = list(content)
        smaller[r] -= 1
        sub = serre_basis(datum, tuple(smaller))
        for pivot, expansion in sub.rewrite.items():
            row = {(r,) + pivot: FIELD.one}
            for w, coefficient in expansion.items():
                row[(r,) + w] = -coefficient
            rows.append(row)
    for r, s in itertools.permutations(range(datum.rank), 2):
        n = 1 - datum.cartan_matrix[r][s]
        rest = list(content)
        rest[r] -= n
        rest[s] -= 1
        if any(c < 0 for c in rest):
            continue
        for tail in _words_of_content(tuple(rest)):
            rows.append({w + tail: c for w, c in serre_words(datum, r, s)})

    if not rows:
        return SerreBasis(content=content, basis=tuple(sorted(words)), rewrite={})

    matrix = [[_DOMAIN.zero] * len(words) for _ in rows]
    for i, row in enumerate(rows):
        for w, coefficient in row.items():
            matrix[i][index[w]] = _DOMAIN.convert(coefficient)
    reduced, pivots = DomainMatrix(matrix, (len(rows), len(words)), _DOMAIN).rref()
    reduced = reduced.to_list()

    rewrite = {}
    for i, p in enumerate(pivots):
        lead = reduced[i][p]
        rewrite[words[p]] = {
            words[j]: -reduced[i][j] / lead
            for j in range(len(words))
            if j not in pivots and reduced[i][j]
        }
    basis = tuple(sorted(w for i, w in enumerate(words) if i not in set(pivots)))
    logger.debug(
        "Serre basis of content %s: %d of %d words",
        content,
        len(basis),
        len(words),
    )
    return SerreBasis(content=content, basis=basis, rewrite=rewrite)


def reduce_word(datum: RootDatum, word: Word) -> dict[Word, ExactScalar]:
    """
    Expand a word in the normal words of its content.

    Parameters
    ----------
    datum
        The root datum.
    word
        Any word in the simple-root indices.
    """
    if len(word) < 2:
        return {word: FIELD.one}
    basis = serre_basis(datum, word_content(word, datum.rank))
    if word in basis.rewrite:
        return basis.rewrite[word]
    return {word: FIELD.one}
