"""
The Galois object :math:`U_q^0(\\mathfrak{b}_\\mathbb{R})`: its right
coaction by :math:`U_q^+(\\mathfrak{b}_\\mathbb{R})`, the canonical map and
the adjoint action.
"""

from __future__ import annotations
from typing import Any, Sequence
import functools
import itertools
import logging
import dataclasses
import numpy as np
import scipy.sparse
import scipy.sparse.csgraph
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from qborel import mixins
from qborel.scalars import FIELD, ExactScalar, rational
from qborel.roots import Weight, RootDatum, scale_weight
from qborel.algebras import (
    Letter,
    Monomial,
    AlgebraElement,
    TensorElement,
    HeisenbergDouble,
    DrinfeldDouble,
    tensor,
    coproduct,
    antipode,
    heisenberg_double,
    drinfeld_double,
)

__all__ = [
    "coaction_alpha",
    "canonical_map",
    "GaloisRank",
    "canonical_map_rank",
    "adjoint_action",
]

logger = logging.getLogger(__name__)


def _check_heisenberg(a: Any) -> HeisenbergDouble:
    if not isinstance(a, AlgebraElement) or not isinstance(a.presentation, HeisenbergDouble):
        name = a.presentation.name if isinstance(a, AlgebraElement) else type(a).__name__
        raise TypeError(f"expected an element of U_q^0(b_R), got {name}")
    return a.presentation


def _check_double(h: Any, datum: RootDatum) -> DrinfeldDouble:
    if not isinstance(h, AlgebraElement) or not isinstance(h.presentation, DrinfeldDouble):
        name = h.presentation.name if isinstance(h, AlgebraElement) else type(h).__name__
        raise TypeError(f"expected an element of U_q^+(b_R), got {name}")
    if h.presentation.datum is not datum:
        raise TypeError("the two elements belong to different root data")
    return h.presentation


def _coaction_letter(presentation: HeisenbergDouble, letter: Letter) -> TensorElement:
    double = drinfeld_double(presentation.datum)
    if letter[0] == "X":
        return tensor(presentation.letter(letter), double.letter(letter))
    r = letter[1]
    alpha = presentation.datum.simple_roots[r]
    if letter[0] == "E":
        return (
            tensor(presentation.e(r), double.k(alpha))
            + tensor(presentation.one(), double.e(r))
        )
    return (
        tensor(presentation.f(r), double.one())
        + tensor(presentation.l(scale_weight(-1, alpha)), double.f(r))
    )


@functools.lru_cache(maxsize=None)
def _coaction_monomial(presentation: HeisenbergDouble, monomial: Monomial) -> TensorElement:
    double = drinfeld_double(presentation.datum)
    result = tensor(presentation.one(), double.one())
    for letter in presentation.letters(monomial):
        result = result * _coaction_letter(presentation, letter)
    return result


def coaction_alpha(X: AlgebraElement) -> TensorElement:
    r"""
    The right coaction
    :math:`\alpha : U_q^0(\mathfrak{b}_\mathbb{R}) \to U_q^0(\mathfrak{b}_\mathbb{R}) \otimes U_q^+(\mathfrak{b}_\mathbb{R})`,
    multiplicative and determined by

    .. math::

        \alpha(E_r) = E_r \otimes K_{\alpha_r} + 1 \otimes E_r, \qquad
        \alpha(F_r) = F_r \otimes 1 + L_{\alpha_r}^{-1} \otimes F_r,

    and :math:`\alpha(K_\omega) = K_\omega \otimes K_\omega`,
    :math:`\alpha(L_\omega) = L_\omega \otimes L_\omega`.

    Parameters
    ----------
    X
        An element of :func:`qborel.algebras.heisenberg_double`.
    """
    presentation = _check_heisenberg(X)
    double = drinfeld_double(presentation.datum)
    result = TensorElement(presentations=(presentation, double))
    for monomial, c in X.terms.items():
        result = result + _coaction_monomial(presentation, monomial).scale(c)
    return result


def canonical_map(x: AlgebraElement, y: AlgebraElement) -> TensorElement:
    """The Galois map :math:`x \\otimes y \\mapsto (x \\otimes 1) \\alpha(y)`."""
    presentation = _check_heisenberg(x)
    _check_heisenberg(y)
    double = drinfeld_double(presentation.datum)
    return tensor(x, double.one()) * coaction_alpha(y)


def _monomial_basis(
    presentation: HeisenbergDouble,
    degree: int,
    weights: Sequence[Weight],
) -> list[Monomial]:
    datum = presentation.datum
    letters = [presentation.f(r) for r in range(datum.rank)]
    letters += [presentation.e(r) for r in range(datum.rank)]
    result: dict[Monomial, None] = {}
    for omega, chi in itertools.product(weights, repeat=2):
        cartan = presentation.k(omega) * presentation.l(chi)
        for n in range(degree + 1):
            for word in itertools.product(letters, repeat=n):
                term = cartan
                for letter in word:
                    term = term * letter
                result.update(dict.fromkeys(term.terms))
    return list(result)


def _specialize(x: ExactScalar, t: Any) -> Any:
    """Evaluate an exact scalar at a rational value of :math:`t = q^{1/24}`."""
    numerator = sum((c * t**e for (e,), c in x.numer.terms()), QQ(0))
    denominator = sum((c * t**e for (e,), c in x.denom.terms()), QQ(0))
    if not denominator:
        raise ArithmeticError(f"the scalar {x} has a pole at t = {t}")
    return numerator / denominator


@dataclasses.dataclass(eq=False, repr=False)
class GaloisRank(
    mixins.Printable,
):
    """The rank of the canonical map on a span of monomial pairs."""

    num_columns: int
    """Number of monomial pairs :math:`x \\otimes y`."""

    num_rows: int
    """Number of monomials of the mixed tensor product that occur."""

    rank: int

    num_blocks: int
    """Number of connected blocks the matrix splits into."""

    @property
    def is_injective(self) -> bool:
        return self.rank == self.num_columns


def canonical_map_rank(
    datum: RootDatum,
    degree: int = 1,
    weights: None | Sequence[Weight] = None,
    t: Any = "1/2",
) -> GaloisRank:
    r"""
    The rank of the canonical map :math:`x \otimes y \mapsto (x \otimes 1)\alpha(y)`
    on all pairs of monomials with at most ``degree`` letters :math:`E_r, F_r`
    and Cartan parts :math:`K_\omega L_\chi` with :math:`\omega, \chi` in ``weights``.

    The matrix is split into connected blocks and each block is reduced
    exactly over :math:`\mathbb{Q}` after specializing :math:`t = q^{1/24}`
    to a rational number. Full rank at one specialization implies full
    rank over :math:`\mathbb{Q}(t)`.

    Parameters
    ----------
    datum
        The root datum.
    degree
        Maximal number of letters per monomial.
    weights
        Exponents of the Cartan parts, only :math:`0` by default.
    t
        The rational specialization of :math:`t`.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    presentation = heisenberg_double(datum)
    if weights is None:
        weights = [datum.zero]
    t = rational(t)
    basis = _monomial_basis(presentation, degree, [tuple(w) for w in weights])
    columns: list[dict] = []
    for m1, m2 in itertools.product(basis, repeat=2):
        x = presentation.element({m1: FIELD.one})
        y = presentation.element({m2: FIELD.one})
        columns.append(canonical_map(x, y).terms)
    row_index: dict = {}
    entries: list[tuple[int, int, Any]] = []
    for j, column in enumerate(columns):
        for key, c in column.items():
            i = row_index.setdefault(key, len(row_index))
            entries.append((i, j, _specialize(c, t)))
    num_rows, num_columns = len(row_index), len(columns)
    graph = scipy.sparse.coo_matrix(
        (
            np.ones(len(entries)),
            ([num_columns + i for i, _, _ in entries], [j for _, j, _ in entries]),
        ),
        shape=(num_rows + num_columns,) * 2,
    )
    _, labels = scipy.sparse.csgraph.connected_components(graph, directed=False)
    blocks: dict[int, list[tuple[int, int, Any]]] = {}
    for entry in entries:
        blocks.setdefault(int(labels[entry[1]]), []).append(entry)
    rank = 0
    for block in blocks.values():
        local_rows = {i: n for n, i in enumerate(sorted({i for i, _, _ in block}))}
        local_cols = {j: n for n, j in enumerate(sorted({j for _, j, _ in block}))}
        matrix = [[QQ(0)] * len(local_cols) for _ in local_rows]
        for i, j, value in block:
            matrix[local_rows[i]][local_cols[j]] += value
        rank += DomainMatrix(matrix, (len(local_rows), len(local_cols)), QQ).rank()
    logger.debug(
        "canonical map on %d pairs, %d rows, %d blocks, rank %d",
        num_columns, num_rows, len(blocks), rank,
    )
    return GaloisRank(num_columns=num_columns, num_rows=num_rows, rank=rank, num_blocks=len(blocks))


def _into_heisenberg(presentation: HeisenbergDouble, Y: AlgebraElement) -> AlgebraElement:
    # U_q(b) and U_q(b^-) embed into U_q^0(b_R) with the same normal form
    zero = presentation.datum.zero
    for fword, (omega, chi), eword in Y.terms:
        if (fword or chi != zero) and (eword or omega != zero):
            raise TypeError("the element does not lie in one Borel half")
    return presentation.element(dict(Y.terms))


def _adjoint_half(a: AlgebraElement, Y: AlgebraElement) -> AlgebraElement:
    presentation = a.presentation
    result = presentation.zero()
    delta = coproduct(Y)
    for (m1, m2), c in delta.terms.items():
        left = _into_heisenberg(presentation, antipode(delta.leg(0, m1)))
        right = _into_heisenberg(presentation, delta.leg(1, m2))
        result = result + (left * a * right).scale(c)
    return result


def adjoint_action(a: AlgebraElement, h: AlgebraElement) -> AlgebraElement:
    r"""
    The right adjoint action of :math:`U_q^+(\mathfrak{b}_\mathbb{R})` on
    :math:`U_q^0(\mathfrak{b}_\mathbb{R})`,

    .. math::

        X \triangleleft Y = \hat{S}(Y_{(1)}) X Y_{(2)}

    for :math:`Y` in one of the Borel halves, extended to
    :math:`F_v L_\chi K_\omega E_w` by the module property.

    Parameters
    ----------
    a
        An element of :func:`qborel.algebras.heisenberg_double`.
    h
        An element of :func:`qborel.algebras.drinfeld_double`.
    """
    presentation = _check_heisenberg(a)
    double = _check_double(h, presentation.datum)
    zero = presentation.datum.zero
    result = presentation.zero()
    for (fword, (omega, chi), eword), c in h.terms.items():
        lower = double.element({(fword, (zero, chi), ()): FIELD.one})
        upper = double.element({((), (omega, zero), eword): FIELD.one})
        result = result + _adjoint_half(_adjoint_half(a, lower), upper).scale(c)
    return result
