"""
The coproduct of :math:`\\mathrm{Fun}_q^+(AK)` and the coaction on
:math:`\\mathrm{Fun}_q^0(AK)`, computed against a cover :math:`1 \\otimes c`
so that only finitely many lattice points contribute.
"""

from __future__ import annotations
from typing import Callable, TypeAlias
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel.roots import Weight, add_weights, sub_weights
from qborel.polq import Polq, bihomogeneous_components
from ._lattice import Atom, delta_atom
from ._element import Flavor, AmplifiedElement, shift_weight

__all__ = [
    "FirstLeg",
    "AmplifiedTensor",
    "coproduct_plus",
    "coaction_gamma",
]

logger = logging.getLogger(__name__)

FirstLeg: TypeAlias = tuple[Atom, Weight, int, int]
r"""The first leg :math:`U_\varpi(e_i, e_k) f` as ``(f, varpi, i, k)``."""


@dataclasses.dataclass(eq=False, repr=False)
class AmplifiedTensor(
    mixins.Printable,
):
    r"""
    An element :math:`\sum U_\varpi(e_i, e_k) f \otimes a_{f \varpi i k}` of
    the tensor product of two amplified algebras, grouped by the first leg.
    """

    algebra: Polq
    flavors: tuple[Flavor, Flavor]
    terms: dict[FirstLeg, AmplifiedElement] = dataclasses.field(default_factory=dict)

    def first(self, label: FirstLeg) -> AmplifiedElement:
        """The first leg of a term as an amplified element."""
        atom, weight, i, k = label
        zero = self.algebra.datum.zero
        return AmplifiedElement(
            algebra=self.algebra,
            flavor=self.flavors[0],
            terms={(zero, zero, atom): self.algebra.unit(weight, i, k)},
        )

    def contract(self, functional: Callable[[AmplifiedElement], complex]) -> AmplifiedElement:
        r"""
        Apply a functional to the first leg, :math:`(\phi \otimes \mathrm{id})(t)`.

        Parameters
        ----------
        functional
            A linear functional on amplified elements of the first flavor.
        """
        result = AmplifiedElement(algebra=self.algebra, flavor=self.flavors[1])
        for label, second in self.terms.items():
            c = functional(self.first(label))
            if c:
                result = result + second.scale(c)
        return result

    def multiply_legs(
        self,
        mapping: None | Callable[[AmplifiedElement], AmplifiedElement] = None,
    ) -> AmplifiedElement:
        r"""
        The product :math:`m(\phi \otimes \mathrm{id})(t)` of the two legs,
        for a linear map :math:`\phi` of the first leg.
        """
        if self.flavors[0] != self.flavors[1]:
            raise TypeError(f"cannot multiply legs of flavors {self.flavors}")
        result = AmplifiedElement(algebra=self.algebra, flavor=self.flavors[1])
        for label, second in self.terms.items():
            first = self.first(label)
            if mapping is not None:
                first = mapping(first)
            result = result + first * second
        return result


def _cover_offsets(cover: AmplifiedElement) -> set[Weight]:
    offsets = set()
    for (u, _, (kind, chi)), y in cover.terms.items():
        if kind != "delta":
            raise ValueError("the cover must consist of finitely supported functions")
        for left, right in bihomogeneous_components(y):
            offsets.add(sub_weights(shift_weight(cover.flavor, u, left, right), chi))
    return offsets


def _coproduct(a: AmplifiedElement, cover: AmplifiedElement, flavors: tuple[Flavor, Flavor]) -> AmplifiedTensor:
    if a.is_localized:
        raise ValueError("the coproduct is not defined on elements containing u or |b|")
    if cover.algebra is not a.algebra:
        raise TypeError("the cover belongs to a different algebra")
    if cover.flavor != flavors[1]:
        raise TypeError(f"expected a cover of flavor {flavors[1]!r}, got {cover.flavor!r}")
    algebra = a.algebra
    zero = algebra.datum.zero
    offsets = None
    terms: dict[FirstLeg, AmplifiedElement] = {}
    for (_, _, atom), x in a.terms.items():
        kind, weight = atom
        if kind == "exp":
            splits = [(atom, atom)]
        else:
            if offsets is None:
                offsets = _cover_offsets(cover)
            splits = []
            for offset in offsets:
                mu = add_weights(weight, offset)
                splits.append((delta_atom(mu), delta_atom(sub_weights(weight, mu))))
        for varpi, c in x.blocks.items():
            for i, row in enumerate(c):
                if not np.any(row):
                    continue
                for k in range(c.shape[0]):
                    block = np.zeros_like(c)
                    block[k] = row
                    x2 = algebra.element({varpi: block})
                    for atom1, atom2 in splits:
                        second = AmplifiedElement(
                            algebra=algebra,
                            flavor=flavors[1],
                            terms={(zero, zero, atom2): x2},
                        )
                        second = second * cover
                        if not second.terms:
                            continue
                        label = (atom1, varpi, i, k)
                        terms[label] = terms[label] + second if label in terms else second
    logger.debug("coproduct with %d first-leg terms", len(terms))
    return AmplifiedTensor(algebra=algebra, flavors=flavors, terms=terms)


def coproduct_plus(a: AmplifiedElement, cover: AmplifiedElement) -> AmplifiedTensor:
    r"""
    The coproduct :math:`\Delta(a)(1 \otimes c)` of
    :math:`\mathrm{Fun}_q^+(AK)`, with
    :math:`\Delta(x f) = \Delta(x) \Delta(f)` and
    :math:`\Delta(f)(\omega, \chi) = f(\omega + \chi)`.

    Parameters
    ----------
    a
        An element of flavor ``"+"``.
    cover
        A finitely supported element of flavor ``"+"``.
    """
    if a.flavor != "+":
        raise TypeError("the coproduct is defined on the flavor '+' only, use coaction_gamma")
    return _coproduct(a, cover, ("+", "+"))


def coaction_gamma(a: AmplifiedElement, cover: AmplifiedElement) -> AmplifiedTensor:
    r"""
    The left coaction :math:`\gamma(a)(1 \otimes c)` of
    :math:`\mathrm{Fun}_q^+(AK)` on :math:`\mathrm{Fun}_q^0(AK)`, given by
    the same formula as the coproduct with the second leg of flavor ``"0"``.

    Parameters
    ----------
    a
        An element of flavor ``"0"`` without :math:`u` and :math:`|b|` factors.
    cover
        A finitely supported element of flavor ``"0"``.
    """
    if a.flavor != "0":
        raise TypeError("the coaction is defined on the flavor '0' only")
    return _coproduct(a, cover, ("+", "0"))
