"""
Structure maps of the presented Hopf *-algebras, extended from generators.
"""

from __future__ import annotations
from typing import Any
import functools
from qborel.scalars import FIELD, ExactScalar
from ._element import Monomial, AlgebraElement
from ._tensor import TensorElement, tensor
from ._presentations import AbstractPresentation

__all__ = [
    "coproduct",
    "iterated_coproduct",
    "counit",
    "antipode",
    "unitary_antipode",
    "star",
]


@functools.lru_cache(maxsize=None)
def _coproduct_monomial(presentation: AbstractPresentation, monomial: Monomial) -> TensorElement:
    result = tensor(presentation.one(), presentation.one())
    for letter in presentation.letters(monomial):
        result = result * presentation.coproduct_letter(letter)
    return result


def coproduct(a: AlgebraElement) -> TensorElement:
    r"""
    The coproduct :math:`\Delta`, multiplicative and determined by

    .. math::

        \Delta(K_\omega) = K_\omega \otimes K_\omega, \quad
        \Delta(E_r) = E_r \otimes K_{\alpha_r} + 1 \otimes E_r, \quad
        \Delta(F_r) = F_r \otimes 1 + K_{\alpha_r}^{-1} \otimes F_r,

    with :math:`K^{-1}_{\alpha_r}` replaced by :math:`L_{\alpha_r}^{-1}` in
    the Drinfeld double.

    Parameters
    ----------
    a
        An element of :func:`quantum_envelope` or :func:`drinfeld_double`.
    """
    p = a.presentation
    result = TensorElement(presentations=(p, p))
    for monomial, c in a.terms.items():
        result = result + _coproduct_monomial(p, monomial).scale(c)
    return result


def iterated_coproduct(a: AlgebraElement, legs: int = 3) -> TensorElement:
    """:math:`(\\Delta \\otimes \\mathrm{id} \\otimes \\cdots)\\Delta(a)` with the given number of legs."""
    if legs < 1:
        raise ValueError(f"number of legs must be positive, got {legs}")
    if legs == 1:
        return tensor(a)
    result = coproduct(a)
    for _ in range(legs - 2):
        result = result.map_leg(0, coproduct)
    return result


def counit(a: AlgebraElement) -> ExactScalar:
    """The counit, :math:`\\varepsilon(K_\\omega) = 1` and :math:`\\varepsilon(E_r) = \\varepsilon(F_r) = 0`."""
    p = a.presentation
    result = FIELD.zero
    for monomial, c in a.terms.items():
        value = c
        for letter in p.letters(monomial):
            value = value * p.counit_letter(letter)
        result += value
    return result


def _anti_extension(method: str):
    @functools.lru_cache(maxsize=None)
    def on_monomial(presentation: AbstractPresentation, monomial: Monomial) -> AlgebraElement:
        result = presentation.one()
        for letter in reversed(presentation.letters(monomial)):
            result = result * getattr(presentation, method)(letter)
        return result

    def extension(a: AlgebraElement | TensorElement) -> Any:
        if isinstance(a, TensorElement):
            result = a
            for i in range(a.num_legs):
                result = result.map_leg(i, extension)
            return result
        p = a.presentation
        result = p.zero()
        for monomial, c in a.terms.items():
            result = result + on_monomial(p, monomial).scale(c)
        return result

    return extension


_antipode = _anti_extension("antipode_letter")
_unitary_antipode = _anti_extension("unitary_antipode_letter")
_star = _anti_extension("star_letter")


def antipode(a: AlgebraElement | TensorElement) -> Any:
    r"""
    The antipode :math:`\hat{S}`, anti-multiplicative with
    :math:`\hat{S}(K_\omega) = K_{-\omega}`,
    :math:`\hat{S}(E_r) = -E_r K_{\alpha_r}^{-1}` and
    :math:`\hat{S}(F_r) = -K_{\alpha_r} F_r`.
    Tensors are mapped leg by leg.
    """
    return _antipode(a)


def unitary_antipode(a: AlgebraElement | TensorElement) -> Any:
    r"""
    The unitary antipode :math:`\hat{R}` of :math:`U_q(\mathfrak{g})`,
    :math:`\hat{R}(E_r) = -q_r^{-1} E_r K_{\alpha_r}^{-1}` and
    :math:`\hat{R}(F_r) = -q_r K_{\alpha_r} F_r`.
    """
    return _unitary_antipode(a)


def star(a: AlgebraElement | TensorElement) -> Any:
    """
    The conjugate-linear anti-multiplicative involution of a star presentation.
    Scalars are real, so coefficients are unchanged. Tensors are mapped leg by leg.
    """
    return _star(a)
