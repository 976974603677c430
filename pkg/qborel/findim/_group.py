"""Finite abelian groups as products of cyclic groups."""

from __future__ import annotations
import functools
import dataclasses
import numpy as np
from qborel import mixins

__all__ = [
    "FiniteAbelianGroup",
    "parse_group",
]


@dataclasses.dataclass(eq=False, repr=False)
class FiniteAbelianGroup(
    mixins.Printable,
):
    r"""
    The group :math:`\mathbb{Z}/n_1 \times \cdots \times \mathbb{Z}/n_k`.

    Elements are numbered by the row-major order of their coordinates, so
    that :math:`\mathbb{C}^G = \mathbb{C}^{n_1} \otimes \cdots \otimes \mathbb{C}^{n_k}`.
    """

    factors: tuple[int, ...]
    """The orders :math:`n_i` of the cyclic factors."""

    def __post_init__(self):
        self.factors = tuple(int(n) for n in self.factors)
        if not self.factors:
            raise ValueError("a group needs at least one cyclic factor, use (1,) for the trivial group")
        if any(n < 1 for n in self.factors):
            raise ValueError(f"cyclic factors must be positive, got {self.factors}")

    @property
    def order(self) -> int:
        return int(np.prod(self.factors))

    @functools.cached_property
    def elements(self) -> np.ndarray:
        """The coordinates of every element, one row per element."""
        return np.array(list(np.ndindex(*self.factors)), dtype=int).reshape(self.order, len(self.factors))

    def index(self, coordinates) -> int:
        return int(np.ravel_multi_index(tuple(np.mod(coordinates, self.factors)), self.factors))

    @functools.cached_property
    def addition(self) -> np.ndarray:
        """The table ``addition[s, t]`` of the index of :math:`s + t`."""
        total = (self.elements[:, np.newaxis, :] + self.elements[np.newaxis, :, :]) % np.array(self.factors)
        return np.ravel_multi_index(tuple(np.moveaxis(total, -1, 0)), self.factors)

    @functools.cached_property
    def negation(self) -> np.ndarray:
        """The index of :math:`-s` for every element :math:`s`."""
        return np.ravel_multi_index(tuple((-self.elements % np.array(self.factors)).T), self.factors)


def parse_group(spec: str) -> FiniteAbelianGroup:
    """
    Parse a comma-separated list of cyclic orders such as ``"2,2,3"``.

    Raises
    ------
    ValueError
        If the list is empty or contains something other than positive integers.
    """
    try:
        factors = tuple(int(part) for part in spec.split(","))
    except ValueError:
        raise ValueError(f"malformed group spec {spec!r}, expected orders like '2,2,3'") from None
    return FiniteAbelianGroup(factors=factors)
