from __future__ import annotations
from typing import Any
import functools
import logging
from qborel.scalars import FIELD, ExactScalar, q_power, q_r
from ._element import Monomial, AlgebraElement
from ._tensor import TensorElement
from ._presentations import DrinfeldDouble
from ._hopf import coproduct, iterated_coproduct, antipode

__all__ = [
    "skew_pair",
    "degenerate_pair",
    "pair_tensors",
    "drinfeld_interchange_residual",
]

logger = logging.getLogger(__name__)


def _check_borel(x: AlgebraElement, y: AlgebraElement) -> DrinfeldDouble:
    p = x.presentation
    if not isinstance(p, DrinfeldDouble) or y.presentation is not p:
        raise TypeError("the skew pairing is defined between the Borel halves of U_q^+(b_R)")
    for (fword, (_, l_weight), _) in x.terms:
        if fword or any(l_weight):
            raise ValueError("the left argument must lie in U_q(b) = <K, E>")
    for (_, (k_weight, _), eword) in y.terms:
        if eword or any(k_weight):
            raise ValueError("the right argument must lie in U_q(b^-) = <L, F>")
    return p


@functools.lru_cache(maxsize=None)
def _pair_monomials(
    p: DrinfeldDouble,
    x: Monomial,
    y: Monomial,
    degenerate: bool,
) -> ExactScalar:
    datum = p.datum
    _, (k_weight, _), eword = x
    fword, (_, l_weight), _ = y
    if len(eword) != len(fword):
        return FIELD.zero
    if not eword and not any(k_weight):
        return FIELD.one
    if not eword:
        sign = 1 if degenerate else -1
        return q_power(sign * datum.pair(k_weight, l_weight))
    if degenerate:
        return FIELD.zero
    if any(k_weight):
        head = ((), (k_weight, datum.zero), ())
        rest = ((), (datum.zero, datum.zero), eword)
    else:
        r = eword[0]
        if len(eword) == 1:
            if fword != (r,):
                return FIELD.zero
            return 1 / (1 / q_r(datum, r) - q_r(datum, r))
        head = ((), (datum.zero, datum.zero), (r,))
        rest = ((), (datum.zero, datum.zero), eword[1:])
    result = FIELD.zero
    for (y1, y2), c in coproduct(p.element({y: FIELD.one})).terms.items():
        first = _pair_monomials(p, head, y1, degenerate)
        if first:
            result += c * first * _pair_monomials(p, rest, y2, degenerate)
    return result


def _pair(x: AlgebraElement, y: AlgebraElement, degenerate: bool) -> ExactScalar:
    p = _check_borel(x, y)
    result = FIELD.zero
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            result += cx * cy * _pair_monomials(p, mx, my, degenerate)
    return result


def skew_pair(x: AlgebraElement, y: AlgebraElement) -> ExactScalar:
    r"""
    The skew pairing between :math:`U_q(\mathfrak{b})` and
    :math:`U_q(\mathfrak{b}^-)`, both given as elements of
    :func:`drinfeld_double`.

    It is determined by :math:`(xy, z) = (x, z_{(1)})(y, z_{(2)})`,
    :math:`(x, yz) = (x_{(2)}, y)(x_{(1)}, z)` and

    .. math::

        (K_\omega, L_\chi) = q^{-(\omega, \chi)}, \qquad
        (E_r, F_s) = \frac{\delta_{rs}}{q_r^{-1} - q_r},

    with all other pairings of generators zero.

    Parameters
    ----------
    x
        An element of :math:`U_q(\mathfrak{b}) = \langle K_\omega, E_r \rangle`.
    y
        An element of :math:`U_q(\mathfrak{b}^-) = \langle L_\omega, F_r \rangle`.
    """
    return _pair(x, y, degenerate=False)


def degenerate_pair(x: AlgebraElement, y: AlgebraElement) -> ExactScalar:
    """
    The degenerate pairing :math:`(K_\\omega, L_\\chi)_0 = q^{(\\omega, \\chi)}`
    in which all pairings of :math:`E_r` with :math:`F_s` vanish.
    """
    return _pair(x, y, degenerate=True)


def pair_tensors(
    x: TensorElement,
    y: TensorElement,
    legs: list[tuple[int, int]],
) -> TensorElement | ExactScalar:
    """
    Contract legs of two tensors with the skew pairing.

    Parameters
    ----------
    x
        Tensor whose listed legs lie in :math:`U_q(\\mathfrak{b})`.
    y
        Tensor whose listed legs lie in :math:`U_q(\\mathfrak{b}^-)`.
    legs
        Pairs ``(i, j)``: leg ``i`` of ``x`` is paired with leg ``j`` of ``y``.
        The remaining legs of ``x`` followed by those of ``y`` form the result.
    """
    xi = [i for i, _ in legs]
    yj = [j for _, j in legs]
    rest_x = [i for i in range(x.num_legs) if i not in xi]
    rest_y = [j for j in range(y.num_legs) if j not in yj]
    p = x.presentations[xi[0]] if xi else None
    terms: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            value = cx * cy
            for i, j in legs:
                if not value:
                    break
                value = value * _pair_monomials(p, mx[i], my[j], False)
            if value:
                key = tuple(mx[i] for i in rest_x) + tuple(my[j] for j in rest_y)
                total = terms.get(key, FIELD.zero) + value
                if total:
                    terms[key] = total
                else:
                    terms.pop(key, None)
    if not rest_x and not rest_y:
        return terms.get((), FIELD.zero)
    return TensorElement(
        presentations=tuple(x.presentations[i] for i in rest_x)
        + tuple(y.presentations[j] for j in rest_y),
        terms=terms,
    )


def drinfeld_interchange_residual(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    r"""
    The residual of the interchange relation of the Drinfeld double,

    .. math::

        y x - (x_{(1)}, y_{(1)})\, x_{(2)} y_{(2)}\, (\hat{S}(x_{(3)}), y_{(3)}),

    which vanishes for :math:`x \in U_q(\mathfrak{b})` and
    :math:`y \in U_q(\mathfrak{b}^-)`.
    """
    _check_borel(x, y)
    p = x.presentation
    x3 = iterated_coproduct(x, 3).map_leg(2, antipode)
    y3 = iterated_coproduct(y, 3)
    result = p.zero()
    for (x1, x2, x3m), cx in x3.terms.items():
        for (y1, y2, y3m), cy in y3.terms.items():
            value = _pair_monomials(p, x1, y1, False)
            if not value:
                continue
            value = value * _pair_monomials(p, x3m, y3m, False)
            if not value:
                continue
            term = p.element({x2: FIELD.one}) * p.element({y2: FIELD.one})
            result = result + term.scale(cx * cy * value)
    return y * x - result
