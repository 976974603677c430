from __future__ import annotations
from typing import Any, Callable, Sequence
import dataclasses
import itertools
from qborel import mixins
from qborel.scalars import FIELD, ExactScalar
from ._element import Monomial, AlgebraElement, add_terms

__all__ = [
    "TensorElement",
    "tensor",
]


@dataclasses.dataclass(eq=False, repr=False)
class TensorElement(
    mixins.Printable,
):
    """
    A finite sum of tensor products of normal-ordered monomials, one leg per
    presentation.

    The legs may belong to different presentations, which is how the mixed
    tensor algebra :math:`U_q^0(\\mathfrak{b}_\\mathbb{R}) \\otimes
    U_q^+(\\mathfrak{b}_\\mathbb{R})` of a coaction is represented.
    """

    presentations: tuple[Any, ...]
    """The presentation of each leg."""

    terms: dict[tuple[Monomial, ...], ExactScalar] = dataclasses.field(default_factory=dict)
    """Map from tuples of monomials to nonzero coefficients."""

    @property
    def num_legs(self) -> int:
        return len(self.presentations)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _new(self, terms: dict) -> TensorElement:
        return TensorElement(presentations=self.presentations, terms=terms)

    def _check(self, other: TensorElement) -> None:
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected a TensorElement, got {type(other).__name__}")
        if len(other.presentations) != len(self.presentations) or any(
            a is not b for a, b in zip(self.presentations, other.presentations)
        ):
            raise TypeError("tensor legs belong to different presentations")

    def scale(self, factor: Any) -> TensorElement:
        if not factor:
            return self._new({})
        return self._new({m: factor * c for m, c in self.terms.items()})

    def __neg__(self) -> TensorElement:
        return self.scale(-1)

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        return self._new(add_terms(dict(self.terms), other.terms))

    def __sub__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        return self._new(add_terms(dict(self.terms), other.terms, -1))

    def __mul__(self, other: Any) -> TensorElement:
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._check(other)
        result: dict = {}
        for ms1, c1 in self.terms.items():
            for ms2, c2 in other.terms.items():
                legs = [
                    p.multiply_monomials(m1, m2).items()
                    for p, m1, m2 in zip(self.presentations, ms1, ms2)
                ]
                for combination in itertools.product(*legs):
                    coefficient = c1 * c2
                    for _, c in combination:
                        coefficient = coefficient * c
                    key = tuple(m for m, _ in combination)
                    add_terms(result, {key: coefficient})
        return self._new(result)

    def __rmul__(self, other: Any) -> TensorElement:
        return self.scale(other)

    def leg(self, i: int, monomial: Monomial) -> AlgebraElement:
        return AlgebraElement(self.presentations[i], {monomial: FIELD.one})

    def map_leg(
        self,
        i: int,
        function: Callable[[AlgebraElement], AlgebraElement | TensorElement],
    ) -> TensorElement:
        """
        Apply a linear map to one leg. Maps into tensor products splice their
        legs in place of leg ``i``.

        Parameters
        ----------
        i
            Index of the leg.
        function
            A linear map, evaluated on monomials.
        """
        result: dict = {}
        presentations = None
        for ms, c in self.terms.items():
            image = function(self.leg(i, ms[i]))
            if isinstance(image, AlgebraElement):
                inner = {(m,): x for m, x in image.terms.items()}
                inner_presentations = (image.presentation,)
            else:
                inner = image.terms
                inner_presentations = image.presentations
            presentations = (
                self.presentations[:i] + inner_presentations + self.presentations[i + 1 :]
            )
            for key, x in inner.items():
                add_terms(result, {ms[:i] + key + ms[i + 1 :]: c * x})
        if presentations is None:
            presentations = self.presentations
        return TensorElement(presentations=presentations, terms=result)

    def permute(self, order: Sequence[int]) -> TensorElement:
        """Reorder the legs, leg ``j`` of the result is leg ``order[j]`` of ``self``."""
        order = tuple(order)
        if sorted(order) != list(range(self.num_legs)):
            raise ValueError(f"{order} is not a permutation of {self.num_legs} legs")
        return TensorElement(
            presentations=tuple(self.presentations[j] for j in order),
            terms={tuple(ms[j] for j in order): c for ms, c in self.terms.items()},
        )

    def flip(self) -> TensorElement:
        """Swap the two legs of a two-fold tensor."""
        if self.num_legs != 2:
            raise ValueError(f"flip needs two legs, got {self.num_legs}")
        return self.permute((1, 0))

    def multiply_legs(self) -> AlgebraElement:
        """The multiplication map, all legs must share one presentation."""
        presentation = self.presentations[0]
        if any(p is not presentation for p in self.presentations):
            raise TypeError("multiplication needs all legs in one presentation")
        result = presentation.zero()
        for ms, c in self.terms.items():
            term = presentation.scalar(c)
            for m in ms:
                term = term * AlgebraElement(presentation, {m: FIELD.one})
            result = result + term
        return result


def tensor(*elements: AlgebraElement) -> TensorElement:
    """
    The tensor product of algebra elements.

    Parameters
    ----------
    elements
        One element per leg.
    """
    terms: dict = {}
    for combination in itertools.product(*(e.terms.items() for e in elements)):
        coefficient = FIELD.one
        for _, c in combination:
            coefficient = coefficient * c
        add_terms(terms, {tuple(m for m, _ in combination): coefficient})
    return TensorElement(
        presentations=tuple(e.presentation for e in elements),
        terms=terms,
    )
