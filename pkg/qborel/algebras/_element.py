from __future__ import annotations
from typing import Any, TypeAlias, TYPE_CHECKING
import collections
import dataclasses
import numpy as np
from qborel import mixins
from qborel.scalars import FIELD, ExactScalar, random_exact
from qborel.roots import Weight
from ._serre import Word

if TYPE_CHECKING:
    from ._presentations import AbstractPresentation

__all__ = [
    "Cartan",
    "Monomial",
    "add_terms",
    "AlgebraElement",
    "multiply",
    "is_zero",
    "random_element",
]

Cartan: TypeAlias = tuple[Weight, ...]
"""One weight per Cartan family of a presentation."""

Monomial: TypeAlias = tuple[Word, Cartan, Word]
"""A normal-ordered monomial: F-word, Cartan part, E-word."""


def add_terms(
    result: dict[Any, ExactScalar],
    terms: dict[Any, ExactScalar],
    factor: Any = 1,
) -> dict[Any, ExactScalar]:
    """Accumulate ``factor * terms`` into ``result`` in place, dropping zeros."""
    for key, coefficient in terms.items():
        value = result.get(key, FIELD.zero) + factor * coefficient
        if value:
            result[key] = value
        else:
            result.pop(key, None)
    return result


@dataclasses.dataclass(eq=False, repr=False)
class AlgebraElement(
    mixins.Printable,
):
    """
    A finite linear combination of normal-ordered monomials of a presented
    algebra.

    Elements are created through the generator methods of a presentation and
    combined with the usual arithmetic operators. Scalars are exact, elements
    of :data:`qborel.scalars.FIELD`.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        datum = qborel.roots.datum_from_label("A1")
        U = qborel.algebras.quantum_envelope(datum)
        U.e(0) * U.f(0) - U.f(0) * U.e(0)
    """

    presentation: AbstractPresentation
    """The algebra this element belongs to."""

    terms: dict[Monomial, ExactScalar] = dataclasses.field(default_factory=dict)
    """Map from normal-ordered monomials to nonzero coefficients."""

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected an AlgebraElement, got {type(other).__name__}")
        if other.presentation is not self.presentation:
            raise TypeError(
                f"cannot combine elements of {self.presentation.name} "
                f"and {other.presentation.name}"
            )

    def _new(self, terms: dict[Monomial, ExactScalar]) -> AlgebraElement:
        return AlgebraElement(presentation=self.presentation, terms=terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Largest total length of the E- and F-words."""
        return max((len(f) + len(e) for f, _, e in self.terms), default=0)

    def scale(self, factor: Any) -> AlgebraElement:
        if not factor:
            return self._new({})
        return self._new({m: factor * c for m, c in self.terms.items()})

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __add__(self, other: Any) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = self.presentation.scalar(other)
        self._check(other)
        return self._new(add_terms(dict(self.terms), other.terms))

    def __radd__(self, other: Any) -> AlgebraElement:
        return self + other

    def __sub__(self, other: Any) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = self.presentation.scalar(other)
        self._check(other)
        return self._new(add_terms(dict(self.terms), other.terms, -1))

    def __rsub__(self, other: Any) -> AlgebraElement:
        return (-self) + other

    def __mul__(self, other: Any) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> AlgebraElement:
        return self.scale(other)

    def __truediv__(self, other: Any) -> AlgebraElement:
        return self.scale(FIELD.one / other)

    def __pow__(self, power: int) -> AlgebraElement:
        if power < 0:
            raise ValueError(f"negative power {power} of an algebra element")
        result = self.presentation.one()
        for _ in range(power):
            result = result * self
        return result

    def monomials(self) -> list[tuple[AlgebraElement, ExactScalar]]:
        """Split into ``(monomial element, coefficient)`` pairs."""
        return [
            (self._new({m: FIELD.one}), c)
            for m, c in self.terms.items()
        ]


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """
    The normal-ordered product of two elements of the same presentation.

    Parameters
    ----------
    a
        Left factor.
    b
        Right factor.
    """
    a._check(b)
    presentation = a.presentation
    result: dict[Monomial, ExactScalar] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            add_terms(result, presentation.multiply_monomials(m1, m2), c1 * c2)
    return a._new(result)


def is_zero(a: AlgebraElement) -> bool:
    """Whether the normal form of an element has no monomials."""
    return a.is_zero


def random_element(
    presentation: AbstractPresentation,
    rng: np.random.Generator,
    degree: int = 3,
    num_terms: int = 2,
    families: None | tuple[int, ...] = None,
    letters: str = "FE",
) -> AlgebraElement:
    """
    A random element built from products of generators.

    Parameters
    ----------
    presentation
        The algebra.
    rng
        The random number generator.
    degree
        Maximal number of E/F letters per term.
    num_terms
        Number of random products that are summed.
    families
        Indices of the Cartan families to draw from, all by default.
    letters
        Which of ``"E"`` and ``"F"`` may occur.
    """
    datum = presentation.datum
    if families is None:
        families = tuple(range(len(presentation.families)))
    result = presentation.zero()
    for _ in range(num_terms):
        term = presentation.scalar(random_exact(rng, degree=1, exponent_range=24))
        for i in families:
            weight = tuple(int(c) for c in rng.integers(-1, 2, size=datum.rank))
            term = term * presentation.cartan(i, weight)
        for _ in range(int(rng.integers(0, degree + 1))):
            kind = letters[int(rng.integers(len(letters)))]
            r = int(rng.integers(datum.rank))
            term = term * (presentation.e(r) if kind == "E" else presentation.f(r))
        result = result + term
    return result
