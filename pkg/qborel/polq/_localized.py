from __future__ import annotations
from typing import Any
import logging
import dataclasses
from qborel import mixins
from qborel.roots import Weight, add_weights, sub_weights, scale_weight, longest_element_action
from ._element import Polq, MatrixCoeffElement, bihomogeneous_components, product, star

__all__ = [
    "LocalizedElement",
    "exchange_weight",
    "localize",
    "u",
    "abs_b",
    "localized_multiply",
    "localized_star",
]

logger = logging.getLogger(__name__)

LocalizedKey = tuple[Weight, Weight]


def exchange_weight(algebra: Polq, left: Weight, right: Weight) -> Weight:
    r"""The weight :math:`\mathrm{lwt}(x) - w_0 \mathrm{rwt}(x)` that governs :math:`|b|_\omega x`."""
    return sub_weights(left, longest_element_action(algebra.datum, right))


@dataclasses.dataclass(eq=False, repr=False)
class LocalizedElement(
    mixins.Printable,
):
    r"""
    An element :math:`\sum u_\omega |b|_\chi x_{\omega \chi}` of
    :math:`\mathrm{Pol}_q(K)_{\mathrm{loc}}`, in the normal order with the
    central unitaries :math:`u_\omega` first, then :math:`|b|_\chi`, then a
    matrix coefficient.

    The exchange relation
    :math:`|b|_\chi x = q^{(\chi, \mathrm{lwt}(x) - w_0 \mathrm{rwt}(x))} x |b|_\chi`
    is applied by :func:`localized_multiply` to restore the normal order.
    """

    algebra: Polq
    terms: dict[LocalizedKey, MatrixCoeffElement] = dataclasses.field(default_factory=dict)
    """Map from :math:`(\\omega, \\chi)` to the matrix coefficient part."""

    def _new(self, terms: dict[LocalizedKey, MatrixCoeffElement]) -> LocalizedElement:
        return LocalizedElement(algebra=self.algebra, terms=terms)

    def _check(self, other: Any) -> None:
        if not isinstance(other, LocalizedElement):
            raise TypeError(f"expected a LocalizedElement, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise TypeError("cannot combine localized elements of different algebras")

    def scale(self, factor: Any) -> LocalizedElement:
        return self._new({k: x.scale(factor) for k, x in self.terms.items()})

    def __neg__(self) -> LocalizedElement:
        return self.scale(-1)

    def __add__(self, other: LocalizedElement) -> LocalizedElement:
        self._check(other)
        terms = dict(self.terms)
        for key, x in other.terms.items():
            terms[key] = terms[key] + x if key in terms else x
        return self._new(terms)

    def __sub__(self, other: LocalizedElement) -> LocalizedElement:
        return self + (-other)

    def __mul__(self, other: Any) -> LocalizedElement:
        if isinstance(other, LocalizedElement):
            return localized_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> LocalizedElement:
        return self.scale(other)

    @property
    def norm(self) -> float:
        return max((x.norm for x in self.terms.values()), default=0.0)

    @property
    def star(self) -> LocalizedElement:
        return localized_star(self)


def localize(x: MatrixCoeffElement) -> LocalizedElement:
    """Embed a matrix coefficient into the localization."""
    zero = x.algebra.datum.zero
    return LocalizedElement(algebra=x.algebra, terms={(zero, zero): x})


def u(algebra: Polq, weight: Weight) -> LocalizedElement:
    """The central unitary :math:`u_\\omega` of any integral weight."""
    return LocalizedElement(algebra=algebra, terms={(tuple(weight), algebra.datum.zero): algebra.one()})


def abs_b(algebra: Polq, weight: Weight) -> LocalizedElement:
    """The positive element :math:`|b|_\\omega` of any integral weight."""
    return LocalizedElement(algebra=algebra, terms={(algebra.datum.zero, tuple(weight)): algebra.one()})


def _move_right(algebra: Polq, chi: Weight, x: MatrixCoeffElement) -> list[tuple[float, MatrixCoeffElement]]:
    # x |b|_chi = q^{-(chi, s(x))} |b|_chi x per bihomogeneous component
    datum = algebra.datum
    result = []
    for (left, right), component in bihomogeneous_components(x).items():
        exponent = -datum.pair(chi, exchange_weight(algebra, left, right))
        result.append((algebra.q_power(exponent), component))
    return result


def localized_multiply(a: LocalizedElement, b: LocalizedElement) -> LocalizedElement:
    r"""
    The product in :math:`\mathrm{Pol}_q(K)_{\mathrm{loc}}`,

    .. math::

        (u_\omega |b|_\chi x)(u_{\omega'} |b|_{\chi'} x')
            = q^{-(\chi', \mathrm{lwt}(x) - w_0 \mathrm{rwt}(x))}
              u_{\omega + \omega'} |b|_{\chi + \chi'} x x'.

    Parameters
    ----------
    a
        Left factor.
    b
        Right factor.
    """
    a._check(b)
    algebra = a.algebra
    terms: dict[LocalizedKey, MatrixCoeffElement] = {}
    for (omega, chi), x in a.terms.items():
        for (omega_, chi_), y in b.terms.items():
            key = (add_weights(omega, omega_), add_weights(chi, chi_))
            for factor, component in _move_right(algebra, chi_, x):
                value = product(component, y).scale(factor)
                terms[key] = terms[key] + value if key in terms else value
    return a._new(terms)


def localized_star(a: LocalizedElement) -> LocalizedElement:
    r"""
    The involution, determined by :math:`u_\omega^* = u_{-\omega}`,
    :math:`|b|_\omega^* = |b|_\omega` and the star of :math:`\mathrm{Pol}_q(K)`.
    """
    algebra = a.algebra
    terms: dict[LocalizedKey, MatrixCoeffElement] = {}
    for (omega, chi), x in a.terms.items():
        key = (scale_weight(-1, omega), chi)
        for factor, component in _move_right(algebra, chi, star(x)):
            value = component.scale(factor)
            terms[key] = terms[key] + value if key in terms else value
    return a._new(terms)
