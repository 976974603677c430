"""
The amplified function algebras :math:`\\mathrm{Fun}_q^+(AK)` and
:math:`\\mathrm{Fun}_q^0(AK)_{\\mathrm{loc}}`, generated by matrix
coefficients and functions on the weight lattice.
"""

from __future__ import annotations
from typing import Any, Literal, TypeAlias
import logging
import dataclasses
from qborel import mixins
from qborel.roots import Weight, add_weights, sub_weights, scale_weight
from qborel.polq import (
    Polq,
    MatrixCoeffElement,
    LocalizedElement,
    bihomogeneous_components,
    exchange_weight,
    product,
    star,
    antipode,
    counit,
    haar,
    modular_automorphism,
)
from ._lattice import Atom, LatticeFunction, shift_atom, multiply_atoms, evaluate_atom, exp_atom

__all__ = [
    "Flavor",
    "FLAVORS",
    "AmplifiedKey",
    "AmplifiedElement",
    "amplified",
    "amplified_one",
    "from_localized",
    "shift_weight",
    "amplified_multiply",
    "amplified_star",
    "counit_plus",
    "antipode_plus",
    "invariant_integral",
    "modular_plus",
]

logger = logging.getLogger(__name__)

Flavor: TypeAlias = Literal["+", "0"]

FLAVORS: tuple[Flavor, ...] = ("+", "0")

AmplifiedKey: TypeAlias = tuple[Weight, Weight, Atom]
"""The exponents of :math:`u_\\omega`, :math:`|b|_\\chi` and the lattice function of a term."""


def _check_flavor(flavor: str) -> Flavor:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}, expected one of {FLAVORS}")
    return flavor  # type: ignore[return-value]


def shift_weight(flavor: Flavor, u: Weight, left: Weight, right: Weight) -> Weight:
    r"""
    The weight :math:`s` in the exchange relation :math:`f y = y f_s` for
    :math:`y = u_\omega x` with :math:`x` of bidegree ``(left, right)``.

    For flavor ``"+"`` this is :math:`\mathrm{lwt}(x) - \mathrm{rwt}(x)`, for
    flavor ``"0"`` it is :math:`\omega + \mathrm{lwt}(x)`.
    """
    if flavor == "+":
        return sub_weights(left, right)
    return add_weights(u, left)


@dataclasses.dataclass(eq=False, repr=False)
class AmplifiedElement(
    mixins.Printable,
):
    r"""
    An element :math:`\sum u_\omega |b|_\chi x f` in normal order, stored as
    one matrix coefficient part per triple :math:`(\omega, \chi, f)` of
    exponents and basis function.

    With flavor ``"+"`` the exponents vanish and the element lies in
    :math:`\mathrm{Fun}_q^+(AK)`, with :math:`f x = x f_{\mathrm{lwt}(x) - \mathrm{rwt}(x)}`.
    With flavor ``"0"`` it lies in :math:`\mathrm{Fun}_q^0(AK)_{\mathrm{loc}}`,
    with :math:`f y = y f_{\mathrm{lwt}(y)}`.
    """

    algebra: Polq
    flavor: Flavor
    terms: dict[AmplifiedKey, MatrixCoeffElement] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        _check_flavor(self.flavor)
        if self.flavor == "+":
            zero = self.algebra.datum.zero
            for u, b, _ in self.terms:
                if u != zero or b != zero:
                    raise ValueError("elements of flavor '+' cannot contain u or |b|")

    def _new(self, terms: dict[AmplifiedKey, MatrixCoeffElement]) -> AmplifiedElement:
        return AmplifiedElement(algebra=self.algebra, flavor=self.flavor, terms=terms)

    def _check(self, other: Any) -> None:
        if not isinstance(other, AmplifiedElement):
            raise TypeError(f"expected an AmplifiedElement, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise TypeError("cannot combine amplified elements of different algebras")
        if other.flavor != self.flavor:
            raise TypeError(f"cannot combine flavors {self.flavor!r} and {other.flavor!r}")

    @property
    def is_compact(self) -> bool:
        """Whether every lattice function is finitely supported."""
        return all(atom[0] == "delta" for _, _, atom in self.terms)

    @property
    def is_localized(self) -> bool:
        zero = self.algebra.datum.zero
        return any(u != zero or b != zero for u, b, _ in self.terms)

    @property
    def norm(self) -> float:
        return max((x.norm for x in self.terms.values()), default=0.0)

    def scale(self, factor: Any) -> AmplifiedElement:
        return self._new({k: x.scale(factor) for k, x in self.terms.items()})

    def __neg__(self) -> AmplifiedElement:
        return self.scale(-1)

    def __add__(self, other: AmplifiedElement) -> AmplifiedElement:
        self._check(other)
        terms = dict(self.terms)
        for key, x in other.terms.items():
            terms[key] = terms[key] + x if key in terms else x
        return self._new(terms)

    def __sub__(self, other: AmplifiedElement) -> AmplifiedElement:
        return self + (-other)

    def __mul__(self, other: Any) -> AmplifiedElement:
        if isinstance(other, AmplifiedElement):
            return amplified_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> AmplifiedElement:
        return self.scale(other)

    @property
    def star(self) -> AmplifiedElement:
        return amplified_star(self)


def _add(terms: dict, key: AmplifiedKey, value: MatrixCoeffElement) -> None:
    terms[key] = terms[key] + value if key in terms else value


def amplified(
    x: MatrixCoeffElement,
    f: None | LatticeFunction = None,
    flavor: Flavor = "+",
) -> AmplifiedElement:
    """
    The element :math:`x f`.

    Parameters
    ----------
    x
        A matrix coefficient.
    f
        A function on the weight lattice, the constant function by default.
    flavor
        ``"+"`` or ``"0"``.
    """
    algebra = x.algebra
    zero = algebra.datum.zero
    if f is None:
        terms = {(zero, zero, exp_atom(zero)): x}
    else:
        if f.algebra is not algebra:
            raise TypeError("the function and the matrix coefficient belong to different algebras")
        terms = {(zero, zero, atom): x.scale(c) for atom, c in f.terms.items()}
    return AmplifiedElement(algebra=algebra, flavor=_check_flavor(flavor), terms=terms)


def amplified_one(algebra: Polq, flavor: Flavor = "+") -> AmplifiedElement:
    return amplified(algebra.one(), flavor=flavor)


def from_localized(a: LocalizedElement, f: None | LatticeFunction = None) -> AmplifiedElement:
    """
    The element :math:`a f` of :math:`\\mathrm{Fun}_q^0(AK)_{\\mathrm{loc}}`
    for an element :math:`a` of :math:`\\mathrm{Pol}_q(K)_{\\mathrm{loc}}`.
    """
    algebra = a.algebra
    atoms = {exp_atom(algebra.datum.zero): 1} if f is None else f.terms
    terms: dict[AmplifiedKey, MatrixCoeffElement] = {}
    for (omega, chi), x in a.terms.items():
        for atom, c in atoms.items():
            _add(terms, (omega, chi, atom), x.scale(c))
    return AmplifiedElement(algebra=algebra, flavor="0", terms=terms)


def _split(x: MatrixCoeffElement) -> list[tuple[tuple[Weight, Weight], MatrixCoeffElement]]:
    return list(bihomogeneous_components(x).items())


def amplified_multiply(a: AmplifiedElement, b: AmplifiedElement) -> AmplifiedElement:
    r"""
    The normal-ordered product

    .. math::

        (u_\omega |b|_\chi x f)(u_{\omega'} |b|_{\chi'} y g)
            = q^{-(\chi', \mathrm{lwt}(x) - w_0 \mathrm{rwt}(x))}
              u_{\omega + \omega'} |b|_{\chi + \chi'} x y \, f_{s(u_{\omega'} y)} g.

    Parameters
    ----------
    a
        Left factor.
    b
        Right factor, of the same flavor.
    """
    a._check(b)
    algebra = a.algebra
    datum = algebra.datum
    zero = datum.zero
    left_parts = {key: _split(x) for key, x in a.terms.items()}
    terms: dict[AmplifiedKey, MatrixCoeffElement] = {}
    for (u2, b2, atom2), y in b.terms.items():
        for (left, right), y_part in _split(y):
            s = shift_weight(a.flavor, u2, left, right)
            for (u1, b1, atom1), x_parts in left_parts.items():
                factor, shifted = shift_atom(algebra, atom1, s)
                pointwise = multiply_atoms(algebra, shifted, atom2)
                if pointwise is None:
                    continue
                factor *= pointwise[0]
                key = (add_weights(u1, u2), add_weights(b1, b2), pointwise[1])
                for (l1, r1), x_part in x_parts:
                    exchange = 1.0
                    if b2 != zero:
                        exchange = algebra.q_power(-datum.pair(b2, exchange_weight(algebra, l1, r1)))
                    _add(terms, key, product(x_part, y_part).scale(factor * exchange))
    return a._new(terms)


def amplified_star(a: AmplifiedElement) -> AmplifiedElement:
    r"""
    The involution, with :math:`f^*(\omega) = \overline{f(\omega)}`,
    :math:`u_\omega^* = u_{-\omega}`, :math:`|b|_\omega^* = |b|_\omega` and the
    star of :math:`\mathrm{Pol}_q(K)`, so that :math:`(xf)^* = x^* \bar{f}_{s(x^*)}`.
    """
    algebra = a.algebra
    datum = algebra.datum
    terms: dict[AmplifiedKey, MatrixCoeffElement] = {}
    for (u, b, atom), x in a.terms.items():
        inverse = scale_weight(-1, u)
        for (left, right), part in _split(star(x)):
            factor, shifted = shift_atom(algebra, atom, shift_weight(a.flavor, inverse, left, right))
            factor *= algebra.q_power(-datum.pair(b, exchange_weight(algebra, left, right)))
            _add(terms, (inverse, b, shifted), part.scale(factor))
    return a._new(terms)


def _check_plain(a: AmplifiedElement, operation: str) -> None:
    if a.is_localized:
        raise ValueError(f"{operation} is not defined on elements containing u or |b|")


def counit_plus(a: AmplifiedElement) -> complex:
    r"""The counit :math:`\varepsilon(xf) = \varepsilon(x) f(0)` of :math:`\mathrm{Fun}_q^+(AK)`."""
    if a.flavor != "+":
        raise TypeError("the counit is defined on the flavor '+' only")
    zero = a.algebra.datum.zero
    return complex(sum(
        counit(x) * evaluate_atom(a.algebra, atom, zero)
        for (_, _, atom), x in a.terms.items()
    ))


def antipode_plus(a: AmplifiedElement) -> AmplifiedElement:
    r"""
    The antipode :math:`S(xf) = S(f) S(x)` of :math:`\mathrm{Fun}_q^+(AK)`,
    with :math:`S(f)(\omega) = f(-\omega)`.
    """
    if a.flavor != "+":
        raise TypeError("the antipode is defined on the flavor '+' only")
    algebra = a.algebra
    zero = algebra.datum.zero
    terms: dict[AmplifiedKey, MatrixCoeffElement] = {}
    for (_, _, (kind, weight)), x in a.terms.items():
        reflected = (kind, scale_weight(-1, weight))
        for (left, right), part in _split(antipode(x)):
            factor, shifted = shift_atom(algebra, reflected, sub_weights(left, right))
            _add(terms, (zero, zero, shifted), part.scale(factor))
    return a._new(terms)


def invariant_integral(a: AmplifiedElement) -> complex:
    r"""
    The invariant integral :math:`\psi(xf) = \psi(x) \sum_\omega f(\omega)`,
    left and right invariant on flavor ``"+"`` and relatively invariant on
    flavor ``"0"``.
    """
    _check_plain(a, "the invariant integral")
    if not a.is_compact:
        raise ValueError("the invariant integral needs finitely supported functions")
    return complex(sum(haar(x) for x in a.terms.values()))


def modular_plus(a: AmplifiedElement) -> AmplifiedElement:
    r"""The modular automorphism :math:`\check{\sigma}^+(xf) = \check{\sigma}(x) f` of the integral."""
    if a.flavor != "+":
        raise TypeError("the modular automorphism is defined on the flavor '+' only")
    return a._new({k: modular_automorphism(x) for k, x in a.terms.items()})
