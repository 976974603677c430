"""
The pairing of :math:`U_q^+(\\mathfrak{b}_\\mathbb{R})` with
:math:`\\mathrm{Fun}_q^+(AK)` and the translation actions it induces.
"""

from __future__ import annotations
import logging
from qborel.scalars import FIELD, evaluate as evaluate_scalar
from qborel.roots import RootDatum, Weight, add_weights, sub_weights, scale_weight
from qborel.algebras import (
    Monomial,
    AlgebraElement,
    DrinfeldDouble,
    quantum_envelope,
    drinfeld_double,
)
from qborel.polq import evaluate, left_translate, right_translate
from ._lattice import shift_atom, evaluate_atom
from ._element import AmplifiedElement, AmplifiedKey

__all__ = [
    "embed_monomial",
    "pair_plus",
    "translate_right",
    "translate_left",
    "modular_element",
]

logger = logging.getLogger(__name__)


def _check_double(a: AmplifiedElement, X: AlgebraElement) -> DrinfeldDouble:
    presentation = X.presentation
    if not isinstance(presentation, DrinfeldDouble):
        raise TypeError(f"expected an element of U_q^+(b_R), got {presentation.name}")
    if presentation.datum is not a.algebra.datum:
        raise TypeError("the algebra element belongs to a different root datum")
    if a.is_localized:
        raise ValueError("the pairing is not defined on elements containing u or |b|")
    return presentation


def embed_monomial(presentation: DrinfeldDouble, monomial: Monomial) -> tuple[AlgebraElement, Weight]:
    r"""
    The image of a monomial of :math:`U_q^+(\mathfrak{b}_\mathbb{R})` in the
    dual of :math:`\mathrm{Fun}_q^+(AK)`,

    .. math::

        F_v K_\omega L_\chi E_w \mapsto
            (F_v K_{\omega + \chi} E_w)_{\omega - \chi + \mathrm{wt}(w)},

    returned as the element of :math:`U_q(\mathfrak{g})` and the weight at
    which lattice functions are evaluated.

    Parameters
    ----------
    presentation
        The presentation the monomial belongs to.
    monomial
        A normal-ordered monomial ``(fword, (omega, chi), eword)``.
    """
    fword, (omega, chi), eword = monomial
    envelope = quantum_envelope(presentation.datum)
    image = envelope.element({(fword, (add_weights(omega, chi),), eword): FIELD.one})
    nu = add_weights(sub_weights(omega, chi), presentation.word_weight(eword))
    return image, nu


def pair_plus(X: AlgebraElement, a: AmplifiedElement) -> complex:
    r"""
    The pairing :math:`(Y_\nu, x f) = \langle x, Y \rangle f(\nu)` of
    :math:`U_q^+(\mathfrak{b}_\mathbb{R})` with the amplified algebra.

    Parameters
    ----------
    X
        An element of :func:`qborel.algebras.drinfeld_double`.
    a
        An element without :math:`u` and :math:`|b|` factors.
    """
    presentation = _check_double(a, X)
    algebra = a.algebra
    result = 0j
    for monomial, c in X.terms.items():
        image, nu = embed_monomial(presentation, monomial)
        scalar = evaluate_scalar(c, algebra.q)
        for (_, _, atom), x in a.terms.items():
            value = evaluate_atom(algebra, atom, nu)
            if value:
                result += scalar * value * evaluate(x, image)
    return complex(result)


def _translate(a: AmplifiedElement, X: AlgebraElement, right: bool) -> AmplifiedElement:
    presentation = _check_double(a, X)
    algebra = a.algebra
    terms: dict[AmplifiedKey, object] = {}
    for monomial, c in X.terms.items():
        image, nu = embed_monomial(presentation, monomial)
        scalar = evaluate_scalar(c, algebra.q)
        for (u, b, atom), x in a.terms.items():
            factor, shifted = shift_atom(algebra, atom, scale_weight(-1, nu))
            moved = right_translate(x, image) if right else left_translate(image, x)
            moved = moved.scale(scalar * factor)
            key = (u, b, shifted)
            terms[key] = terms[key] + moved if key in terms else moved
    return a._new(terms)


def translate_right(a: AmplifiedElement, X: AlgebraElement) -> AmplifiedElement:
    r"""
    The right translation :math:`a \triangleleft X = (X \otimes \mathrm{id}) \Delta(a)`,
    so that :math:`x f \triangleleft Y_\nu = (x \triangleleft Y) f_{-\nu}`.

    On flavor ``"0"`` the coaction takes the place of the coproduct.
    """
    return _translate(a, X, right=True)


def translate_left(X: AlgebraElement, a: AmplifiedElement) -> AmplifiedElement:
    r"""The left translation :math:`X \triangleright a = (\mathrm{id} \otimes X) \Delta(a)` on flavor ``"+"``."""
    if a.flavor != "+":
        raise TypeError("the left translation is defined on the flavor '+' only")
    return _translate(a, X, right=False)


def modular_element(datum: RootDatum) -> AlgebraElement:
    r"""
    The element :math:`L_{-2\rho} K_{-2\rho}` of
    :math:`U_q^+(\mathfrak{b}_\mathbb{R})` implementing the modular
    automorphism of the invariant integral,
    :math:`(L_{-2\rho} K_{-2\rho}, a) = \varepsilon(\check{\sigma}^{-1}(a))`.
    """
    double = drinfeld_double(datum)
    minus_two_rho = scale_weight(-2, datum.rho)
    return double.l(minus_two_rho) * double.k(minus_two_rho)
