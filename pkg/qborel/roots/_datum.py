from __future__ import annotations
from typing import Any, TypeAlias, Sequence
import functools
import itertools
import logging
import dataclasses
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from qborel import mixins

__all__ = [
    "Weight",
    "add_weights",
    "sub_weights",
    "scale_weight",
    "RootDatum",
    "build_root_datum",
    "CARTAN_MATRICES",
    "datum_from_label",
]

logger = logging.getLogger(__name__)

Weight: TypeAlias = tuple[int, ...]
"""A weight, stored by its coordinates in the basis of fundamental weights."""


def add_weights(*weights: Weight) -> Weight:
    """Sum of weights."""
    return tuple(sum(c) for c in zip(*weights))


def sub_weights(a: Weight, b: Weight) -> Weight:
    """Difference of two weights."""
    return tuple(x - y for x, y in zip(a, b))


def scale_weight(c: int, a: Weight) -> Weight:
    """Integer multiple of a weight."""
    return tuple(c * x for x in a)


@dataclasses.dataclass(eq=False, repr=False)
class RootDatum(
    mixins.Printable,
):
    r"""
    The root system of a complex semisimple Lie algebra together with its
    weight lattice, Weyl group and the normalized invariant inner product.

    Weights are integer tuples in the basis of fundamental weights
    :math:`\varpi_r`, so that the coordinate :math:`\lambda_r` equals
    :math:`(\check{\alpha}_r, \lambda)`. The inner product is normalized so
    that the shortest roots have :math:`(\alpha, \alpha) = 2`.

    Use :func:`build_root_datum` or :func:`datum_from_label` to construct
    instances, they validate the Cartan matrix.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        datum = qborel.roots.datum_from_label("A2")
        datum.positive_roots
    """

    cartan_matrix: tuple[tuple[int, ...], ...]
    r"""Cartan matrix with entries :math:`a_{rs} = (\check{\alpha}_r, \alpha_s)`."""

    symmetrizer: tuple[int, ...]
    r"""Positive integers :math:`d_r = (\alpha_r, \alpha_r) / 2`."""

    label: None | str = None
    """Optional human readable name such as ``"A2"``."""

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @functools.cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        a = self.cartan_matrix
        return tuple(tuple(a[i][j] for i in range(self.rank)) for j in range(self.rank))

    @functools.cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        return tuple(
            tuple(int(i == j) for i in range(self.rank)) for j in range(self.rank)
        )

    @property
    def rho(self) -> Weight:
        """Half the sum of the positive roots, equal to the sum of the fundamental weights."""
        return (1,) * self.rank

    @functools.cached_property
    def _cartan_inverse(self) -> DomainMatrix:
        a = DomainMatrix(
            [[QQ(x) for x in row] for row in self.cartan_matrix],
            (self.rank, self.rank),
            QQ,
        )
        return a.inv()

    @functools.cached_property
    def gram(self) -> tuple[tuple[Any, ...], ...]:
        """Inner products of the fundamental weights, :math:`D A^{-1}`."""
        inverse = self._cartan_inverse.to_list()
        return tuple(
            tuple(QQ(self.symmetrizer[i]) * inverse[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def pair(self, a: Weight, b: Weight) -> Any:
        """The invariant inner product :math:`(a, b)` as an element of :data:`sympy.QQ`."""
        g = self.gram
        result = QQ(0)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        result += x * y * g[i][j]
        return result

    def to_root_coordinates(self, weight: Weight) -> tuple[Any, ...]:
        """Coordinates of a weight in the basis of simple roots."""
        inverse = self._cartan_inverse.to_list()
        return tuple(
            sum((inverse[i][j] * weight[j] for j in range(self.rank)), QQ(0))
            for i in range(self.rank)
        )

    def height(self, weight: Weight) -> Any:
        """Sum of the simple-root coordinates."""
        return sum(self.to_root_coordinates(weight), QQ(0))

    def reflect(self, r: int, weight: Weight) -> Weight:
        r"""The simple reflection :math:`s_r \lambda = \lambda - (\check{\alpha}_r, \lambda) \alpha_r`."""
        c = weight[r]
        if c == 0:
            return tuple(weight)
        return sub_weights(weight, scale_weight(c, self.simple_roots[r]))

    def is_dominant(self, weight: Weight) -> bool:
        return all(c >= 0 for c in weight)

    def root_from_coordinates(self, coordinates: Sequence[int]) -> Weight:
        """The element :math:`\\sum_r c_r \\alpha_r` of the root lattice."""
        return add_weights(
            self.zero,
            *(scale_weight(c, a) for c, a in zip(coordinates, self.simple_roots)),
        )

    @functools.cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        """The positive roots ordered by height, then by simple-root coordinates."""
        orbit = set(self.simple_roots)
        frontier = list(orbit)
        while frontier:
            new = []
            for root in frontier:
                for r in range(self.rank):
                    image = self.reflect(r, root)
                    if image not in orbit:
                        orbit.add(image)
                        new.append(image)
            frontier = new
        positive = [
            root
            for root in orbit
            if all(c >= 0 for c in self.to_root_coordinates(root))
        ]
        return tuple(
            sorted(
                positive,
                key=lambda root: (self.height(root), self.to_root_coordinates(root)),
            )
        )

    @functools.cached_property
    def longest_word(self) -> tuple[int, ...]:
        from ._weyl import longest_word

        return longest_word(self)


def _symmetrizer(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    n = len(a)
    d: list[Any] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = QQ(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                value = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = value
                    component.append(j)
                    stack.append(j)
                elif d[j] != value:
                    raise ValueError(f"Cartan matrix {a} is not symmetrizable")
        smallest = min(d[i] for i in component)
        for i in component:
            d[i] = d[i] / smallest
    for x in d:
        if x.denominator != 1:
            raise ValueError(f"Cartan matrix {a} has a non-integral symmetrizer")
    return tuple(int(x.numerator) for x in d)


def build_root_datum(
    cartan_matrix: Sequence[Sequence[int]],
    label: None | str = None,
) -> RootDatum:
    """
    Validate a Cartan matrix of finite type and build its root datum.

    Parameters
    ----------
    cartan_matrix
        Square integer matrix with :math:`a_{rs} = (\\check{\\alpha}_r, \\alpha_s)`.
    label
        Optional name for the datum.
    """
    a = tuple(tuple(int(x) for x in row) for row in cartan_matrix)
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError(f"Cartan matrix must be square and nonempty, got {a}")
    for i, j in itertools.product(range(n), repeat=2):
        if i == j and a[i][j] != 2:
            raise ValueError(f"diagonal entries of a Cartan matrix must be 2, got {a}")
        if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
            raise ValueError(f"invalid off-diagonal pattern in {a}")
    d = _symmetrizer(a)
    symmetrized = DomainMatrix(
        [[QQ(d[i] * a[i][j]) for j in range(n)] for i in range(n)],
        (n, n),
        QQ,
    )
    for k in range(1, n + 1):
        minor = symmetrized.extract(list(range(k)), list(range(k)))
        if minor.det() <= 0:
            raise ValueError(f"Cartan matrix {a} is not of finite type")
    datum = RootDatum(cartan_matrix=a, symmetrizer=d, label=label)
    logger.debug(
        "built root datum %s with %d positive roots",
        label or a,
        len(datum.positive_roots),
    )
    return datum


CARTAN_MATRICES: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}
"""Cartan matrices selectable by label, the long root comes first in B2 and G2."""


@functools.lru_cache(maxsize=None)
def datum_from_label(label: str) -> RootDatum:
    """
    Return the (cached) root datum for a label in :data:`CARTAN_MATRICES`.

    Parameters
    ----------
    label
        One of ``"A1"``, ``"A2"``, ``"A3"``, ``"B2"``, ``"G2"``.
    """
    try:
        matrix = CARTAN_MATRICES[label.upper()]
    except KeyError:
        raise ValueError(
            f"unknown datum label {label!r}, expected one of {sorted(CARTAN_MATRICES)}"
        ) from None
    return build_root_datum(matrix, label=label.upper())
