"""
The implementing elements of :math:`U_q^0(\\mathfrak{b}_\\mathbb{R})` inside
:math:`\\mathrm{Fun}_q^0(AK)_{\\mathrm{loc}}` and the homomorphism :math:`\\pi`.
"""

from __future__ import annotations
import functools
import logging
from qborel.scalars import FIELD, evaluate
from qborel.roots import Weight, scale_weight
from qborel.algebras import (
    AlgebraElement,
    HeisenbergDouble,
    HeisenbergDoubleTilde,
    quantum_envelope,
    heisenberg_double,
    coproduct,
    antipode,
)
from qborel.polq import Polq, b, right_translate, LocalizedElement
from qborel.amplified import AmplifiedElement, from_localized, exp_atom
from ._coaction import _check_double, _into_heisenberg

__all__ = [
    "abs_b_element",
    "u_element",
    "z_element",
    "implementing_e",
    "implementing_f",
    "implementing_k",
    "implementing_l",
    "implementing_x",
    "pi_tilde",
    "pi_heisenberg",
    "implemented_adjoint_action",
]

logger = logging.getLogger(__name__)


def _single(algebra: Polq, u: Weight, b_weight: Weight, atom_weight: Weight) -> AmplifiedElement:
    key = (tuple(u), tuple(b_weight), exp_atom(tuple(atom_weight)))
    return AmplifiedElement(algebra=algebra, flavor="0", terms={key: algebra.one()})


def u_element(algebra: Polq, weight: Weight) -> AmplifiedElement:
    """The central unitary :math:`u_\\omega`."""
    zero = algebra.datum.zero
    return _single(algebra, weight, zero, zero)


def abs_b_element(algebra: Polq, weight: Weight) -> AmplifiedElement:
    """The positive element :math:`|b|_\\omega`."""
    zero = algebra.datum.zero
    return _single(algebra, zero, weight, zero)


def z_element(algebra: Polq, weight: Weight) -> AmplifiedElement:
    """The multiplier :math:`z_\\omega(\\chi) = q^{(\\omega, \\chi)}`."""
    zero = algebra.datum.zero
    return _single(algebra, zero, zero, weight)


def _q_r(algebra: Polq, r: int) -> float:
    datum = algebra.datum
    alpha = datum.simple_roots[r]
    return algebra.q_power(datum.pair(alpha, alpha) / 2)


@functools.lru_cache(maxsize=None)
def implementing_e(algebra: Polq, r: int) -> AmplifiedElement:
    r"""
    The implementing element

    .. math::

        e_r = (1 - q_r^2)^{-1}\, b_{\varpi_r}^{-1} (b_{\varpi_r} \triangleleft E_r),

    with :math:`b_\varpi^{-1} = u_{-\varpi} |b|_{-\varpi}`.
    """
    datum = algebra.datum
    if not 0 <= r < datum.rank:
        raise ValueError(f"simple root index {r} out of range for rank {datum.rank}")
    weight = datum.fundamental_weights[r]
    inverse = scale_weight(-1, weight)
    translated = right_translate(b(algebra, weight), quantum_envelope(datum).e(r))
    factor = 1 / (1 - _q_r(algebra, r) ** 2)
    localized = LocalizedElement(algebra=algebra, terms={(inverse, inverse): translated.scale(factor)})
    return from_localized(localized)


@functools.lru_cache(maxsize=None)
def implementing_k(algebra: Polq, weight: Weight) -> AmplifiedElement:
    """:math:`k_\\omega = q^{-(\\omega,\\omega)/2} z_\\omega u_{-\\omega}`."""
    weight = tuple(weight)
    factor = algebra.q_power(-algebra.datum.pair(weight, weight) / 2)
    return (z_element(algebra, weight) * u_element(algebra, scale_weight(-1, weight))).scale(factor)


@functools.lru_cache(maxsize=None)
def implementing_l(algebra: Polq, weight: Weight) -> AmplifiedElement:
    """:math:`l_\\omega = q^{-(\\omega,\\omega)/2} u_\\omega z_\\omega`."""
    weight = tuple(weight)
    factor = algebra.q_power(-algebra.datum.pair(weight, weight) / 2)
    return (u_element(algebra, weight) * z_element(algebra, weight)).scale(factor)


@functools.lru_cache(maxsize=None)
def implementing_f(algebra: Polq, r: int) -> AmplifiedElement:
    """:math:`f_r = e_r^* l_{-\\alpha_r}`."""
    minus = scale_weight(-1, algebra.datum.simple_roots[r])
    return implementing_e(algebra, r).star * implementing_l(algebra, minus)


@functools.lru_cache(maxsize=None)
def implementing_x(algebra: Polq, r: int) -> AmplifiedElement:
    """:math:`x_r = u_{\\alpha_r} e_r`, which acts on the Fock factor only."""
    return u_element(algebra, algebra.datum.simple_roots[r]) * implementing_e(algebra, r)


def _check_datum(algebra: Polq, X: AlgebraElement) -> None:
    if X.presentation.datum is not algebra.datum:
        raise TypeError("the element and the algebra belong to different root data")


def _letters(algebra: Polq, fword, eword) -> tuple[AmplifiedElement, AmplifiedElement]:
    one = u_element(algebra, algebra.datum.zero)
    head = one
    for r in fword:
        head = head * implementing_f(algebra, r)
    tail = one
    for r in eword:
        tail = tail * implementing_e(algebra, r)
    return head, tail


def pi_tilde(algebra: Polq, X: AlgebraElement) -> AmplifiedElement:
    r"""
    The homomorphism :math:`\pi : \tilde{U}_q^0(\mathfrak{b}_\mathbb{R}) \to
    \mathrm{Fun}_q^0(AK)_{\mathrm{loc}}` with :math:`U_\omega \mapsto u_\omega`,
    :math:`Z_\omega \mapsto z_\omega`, :math:`E_r \mapsto e_r` and
    :math:`F_r \mapsto f_r`.

    Parameters
    ----------
    algebra
        The algebra :math:`\mathrm{Pol}_q(K)` fixing the value of :math:`q`.
    X
        An element of :func:`qborel.algebras.heisenberg_double_tilde`.
    """
    if not isinstance(X.presentation, HeisenbergDoubleTilde):
        raise TypeError(f"expected an element of U~_q^0(b_R), got {X.presentation.name}")
    _check_datum(algebra, X)
    result = AmplifiedElement(algebra=algebra, flavor="0")
    for (fword, (omega, chi), eword), c in X.terms.items():
        head, tail = _letters(algebra, fword, eword)
        middle = u_element(algebra, omega) * z_element(algebra, chi)
        result = result + (head * middle * tail).scale(evaluate(c, algebra.q))
    return result


def pi_heisenberg(algebra: Polq, X: AlgebraElement) -> AmplifiedElement:
    """
    The restriction of :func:`pi_tilde` to :math:`U_q^0(\\mathfrak{b}_\\mathbb{R})`,
    with :math:`K_\\omega \\mapsto k_\\omega` and :math:`L_\\omega \\mapsto l_\\omega`.
    """
    if not isinstance(X.presentation, HeisenbergDouble):
        raise TypeError(f"expected an element of U_q^0(b_R), got {X.presentation.name}")
    _check_datum(algebra, X)
    result = AmplifiedElement(algebra=algebra, flavor="0")
    for (fword, (omega, chi), eword), c in X.terms.items():
        head, tail = _letters(algebra, fword, eword)
        middle = implementing_k(algebra, omega) * implementing_l(algebra, chi)
        result = result + (head * middle * tail).scale(evaluate(c, algebra.q))
    return result


def _implemented_half(algebra: Polq, x: AmplifiedElement, Y: AlgebraElement) -> AmplifiedElement:
    presentation = heisenberg_double(algebra.datum)
    result = AmplifiedElement(algebra=algebra, flavor="0")
    delta = coproduct(Y)
    for (m1, m2), c in delta.terms.items():
        left = pi_heisenberg(algebra, _into_heisenberg(presentation, antipode(delta.leg(0, m1))))
        right = pi_heisenberg(algebra, _into_heisenberg(presentation, delta.leg(1, m2)))
        result = result + (left * x * right).scale(evaluate(c, algebra.q))
    return result


def implemented_adjoint_action(x: AmplifiedElement, h: AlgebraElement) -> AmplifiedElement:
    r"""
    The adjoint action carried through :math:`\pi`,

    .. math::

        x \triangleright Y = \pi(\hat{S}(Y_{(1)})) \, x \, \pi(Y_{(2)}),

    for :math:`Y` in one of the Borel halves, extended to
    :math:`F_v L_\chi K_\omega E_w` by the module property. On
    :math:`\mathrm{Fun}_q^0(AK)` it agrees with the right translation.

    Parameters
    ----------
    x
        An element of flavor ``"0"``.
    h
        An element of :func:`qborel.algebras.drinfeld_double`.
    """
    if x.flavor != "0":
        raise TypeError("the adjoint action is defined on the flavor '0' only")
    double = _check_double(h, x.algebra.datum)
    algebra = x.algebra
    zero = algebra.datum.zero
    result = AmplifiedElement(algebra=algebra, flavor="0")
    for (fword, (omega, chi), eword), c in h.terms.items():
        lower = double.element({(fword, (zero, chi), ()): FIELD.one})
        upper = double.element({((), (omega, zero), eword): FIELD.one})
        moved = _implemented_half(algebra, _implemented_half(algebra, x, lower), upper)
        result = result + moved.scale(evaluate(c, algebra.q))
    return result
