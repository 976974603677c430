"""
Functions on the weight lattice that are finite combinations of point
masses and exponentials.
"""

from __future__ import annotations
from typing import Any, Literal, TypeAlias
import dataclasses
from qborel import mixins
from qborel.roots import Weight, add_weights, scale_weight
from qborel.polq import Polq

__all__ = [
    "Atom",
    "delta_atom",
    "exp_atom",
    "shift_atom",
    "multiply_atoms",
    "evaluate_atom",
    "LatticeFunction",
    "delta",
    "z",
    "constant",
]

Atom: TypeAlias = tuple[Literal["delta", "exp"], Weight]
"""
A basis function on :math:`P`, either the point mass
``("delta", chi)`` or the exponential ``("exp", omega)``,
:math:`\\chi' \\mapsto q^{(\\omega, \\chi')}`.
"""


def delta_atom(weight: Weight) -> Atom:
    return ("delta", tuple(weight))


def exp_atom(weight: Weight) -> Atom:
    return ("exp", tuple(weight))


def shift_atom(algebra: Polq, atom: Atom, weight: Weight) -> tuple[float, Atom]:
    r"""
    The shift :math:`f_\lambda(\chi) = f(\chi - \lambda)` of a basis function,
    as a scalar times a basis function.
    """
    kind, omega = atom
    if kind == "delta":
        return 1.0, delta_atom(add_weights(omega, weight))
    return algebra.q_power(-algebra.datum.pair(omega, weight)), atom


def multiply_atoms(algebra: Polq, a: Atom, b: Atom) -> None | tuple[float, Atom]:
    """The pointwise product of two basis functions, ``None`` if it vanishes."""
    (kind_a, wa), (kind_b, wb) = a, b
    if kind_a == "exp" and kind_b == "exp":
        return 1.0, exp_atom(add_weights(wa, wb))
    if kind_a == "delta" and kind_b == "delta":
        return (1.0, a) if wa == wb else None
    if kind_a == "delta":
        a, b = b, a
        wa, wb = wb, wa
    return algebra.q_power(algebra.datum.pair(wa, wb)), b


def evaluate_atom(algebra: Polq, atom: Atom, weight: Weight) -> float:
    kind, omega = atom
    if kind == "delta":
        return float(tuple(weight) == omega)
    return algebra.q_power(algebra.datum.pair(omega, weight))


@dataclasses.dataclass(eq=False, repr=False)
class LatticeFunction(
    mixins.Printable,
):
    """
    A function :math:`P \\to \\mathbb{C}` given as a finite linear
    combination of :class:`Atom`.

    Point masses span the finitely supported functions, the exponentials
    :math:`z_\\omega` and the constant function are the multipliers needed
    by the implementing elements.
    """

    algebra: Polq
    """Fixes the root datum and the value of :math:`q`."""

    terms: dict[Atom, complex] = dataclasses.field(default_factory=dict)

    def _new(self, terms: dict[Atom, complex]) -> LatticeFunction:
        return LatticeFunction(algebra=self.algebra, terms={a: c for a, c in terms.items() if c})

    @property
    def is_compact(self) -> bool:
        """Whether the function is finitely supported."""
        return all(kind == "delta" for kind, _ in self.terms)

    @property
    def support(self) -> tuple[Weight, ...]:
        if not self.is_compact:
            raise ValueError("a function with exponential terms has infinite support")
        return tuple(w for _, w in self.terms)

    def __call__(self, weight: Weight) -> complex:
        return sum(
            (c * evaluate_atom(self.algebra, a, weight) for a, c in self.terms.items()),
            0j,
        )

    def __add__(self, other: LatticeFunction) -> LatticeFunction:
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        return self._new(terms)

    def __mul__(self, other: Any) -> LatticeFunction:
        if not isinstance(other, LatticeFunction):
            return self._new({a: other * c for a, c in self.terms.items()})
        terms: dict[Atom, complex] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                result = multiply_atoms(self.algebra, a, b)
                if result is not None:
                    factor, atom = result
                    terms[atom] = terms.get(atom, 0) + factor * c * d
        return self._new(terms)

    def __rmul__(self, other: Any) -> LatticeFunction:
        return self * other

    def shift(self, weight: Weight) -> LatticeFunction:
        """The shifted function :math:`f_\\lambda(\\chi) = f(\\chi - \\lambda)`."""
        terms: dict[Atom, complex] = {}
        for a, c in self.terms.items():
            factor, atom = shift_atom(self.algebra, a, weight)
            terms[atom] = terms.get(atom, 0) + factor * c
        return self._new(terms)

    def conjugate(self) -> LatticeFunction:
        return self._new({a: complex(c).conjugate() for a, c in self.terms.items()})

    def reflect(self) -> LatticeFunction:
        """The function :math:`\\omega \\mapsto f(-\\omega)`."""
        return self._new({(kind, scale_weight(-1, w)): c for (kind, w), c in self.terms.items()})

    def total(self) -> complex:
        r"""The sum :math:`\sum_\omega f(\omega)` of a finitely supported function."""
        if not self.is_compact:
            raise ValueError("cannot sum a function with exponential terms over P")
        return complex(sum(self.terms.values()))


def delta(algebra: Polq, weight: Weight) -> LatticeFunction:
    """The point mass :math:`\\delta_\\chi`."""
    return LatticeFunction(algebra=algebra, terms={delta_atom(weight): 1})


def z(algebra: Polq, weight: Weight) -> LatticeFunction:
    """The positive multiplier :math:`z_\\omega(\\chi) = q^{(\\omega, \\chi)}`."""
    return LatticeFunction(algebra=algebra, terms={exp_atom(weight): 1})


def constant(algebra: Polq, value: complex = 1) -> LatticeFunction:
    return LatticeFunction(algebra=algebra, terms={exp_atom(algebra.datum.zero): value})
