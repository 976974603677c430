"""
Matrix coefficients of the irreducible type-I representations and the Hopf
:math:`*`-algebra structure of :math:`\\mathrm{Pol}_q(K)`.
"""

from __future__ import annotations
from typing import Any, Iterable, Sequence
import functools
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel.scalars import rational, evaluate as evaluate_scalar
from qborel.roots import (
    Weight,
    RootDatum,
    add_weights,
    sub_weights,
    longest_element_action,
    scale_weight,
    dominant_weights,
)
from qborel.algebras import AlgebraElement, QuantumEnvelope, TensorElement
from qborel.representations import (
    GradedRep,
    build_irrep,
    represent,
    numeric_domain,
    lowest_weight_vector,
    contragredient_intertwiner,
)
from ._clebsch_gordan import CGComponent, clebsch_gordan

__all__ = [
    "Polq",
    "polq",
    "MatrixCoeffElement",
    "PolTensor",
    "evaluate",
    "evaluate_tensor",
    "evaluate_on_tensor",
    "product",
    "coproduct",
    "counit",
    "antipode",
    "star",
    "haar",
    "b",
    "bihomogeneous_components",
    "lwt",
    "rwt",
    "modular_automorphism",
    "left_translate",
    "right_translate",
    "residual",
    "random_element",
]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(eq=False, repr=False)
class Polq(
    mixins.Printable,
):
    """
    The algebra :math:`\\mathrm{Pol}_q(K)` of a root datum at a fixed rational
    value of :math:`q`, together with the caches of the representations,
    Clebsch-Gordan decompositions and contragredient intertwiners it needs.

    Use :func:`polq` to obtain a shared instance.
    """

    datum: RootDatum
    """The root datum of :math:`K`."""

    q: Any = "1/2"
    """The deformation parameter."""

    _intertwiners: dict = dataclasses.field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self.q = rational(self.q)
        numeric_domain(self.q)

    @property
    def q_float(self) -> float:
        return float(self.q)

    def q_power(self, exponent: Any) -> float:
        return numeric_domain(self.q).q_power(exponent)

    def rep(self, weight: Weight) -> GradedRep:
        """The numeric irreducible representation :math:`V_\\varpi`."""
        return build_irrep(self.datum, tuple(weight), "numeric", self.q)

    def dimension(self, weight: Weight) -> int:
        return self.rep(weight).dimension

    def clebsch_gordan(
        self,
        left: Weight,
        right: Weight,
        highest_weights: None | Iterable[Weight] = None,
    ) -> tuple[CGComponent, ...]:
        return clebsch_gordan(self.datum, left, right, self.q, highest_weights=highest_weights)

    def intertwiner(self, weight: Weight) -> np.ndarray:
        r"""The unitary :math:`V_{-w_0 \varpi} \to \bar{V}_\varpi`."""
        weight = tuple(weight)
        if weight not in self._intertwiners:
            self._intertwiners[weight] = contragredient_intertwiner(self.rep(weight))
        return self._intertwiners[weight]

    def dual_weight(self, weight: Weight) -> Weight:
        return scale_weight(-1, longest_element_action(self.datum, weight))

    def element(self, blocks: dict[Weight, np.ndarray]) -> MatrixCoeffElement:
        return MatrixCoeffElement(algebra=self, blocks=blocks)

    def zero(self) -> MatrixCoeffElement:
        return self.element({})

    def one(self) -> MatrixCoeffElement:
        return self.element({self.datum.zero: np.ones((1, 1), dtype=complex)})

    def matrix_coefficient(
        self,
        weight: Weight,
        xi: np.ndarray,
        eta: np.ndarray,
    ) -> MatrixCoeffElement:
        r"""
        The matrix coefficient :math:`U_\varpi(\xi, \eta)`, the functional
        :math:`x \mapsto \langle \xi, \pi_\varpi(x) \eta \rangle`.

        Parameters
        ----------
        weight
            The highest weight :math:`\varpi`.
        xi
            The bra vector, in the orthonormal basis of :math:`V_\varpi`.
        eta
            The ket vector.
        """
        weight = tuple(weight)
        n = self.dimension(weight)
        xi = np.asarray(xi, dtype=complex)
        eta = np.asarray(eta, dtype=complex)
        if xi.shape != (n,) or eta.shape != (n,):
            raise ValueError(f"vectors of V_{weight} must have length {n}")
        return self.element({weight: np.outer(xi.conj(), eta)})

    def unit(self, weight: Weight, i: int, j: int) -> MatrixCoeffElement:
        """The matrix coefficient :math:`U_\\varpi(e_i, e_j)` of two basis vectors."""
        weight = tuple(weight)
        block = np.zeros((self.dimension(weight),) * 2, dtype=complex)
        block[i, j] = 1
        return self.element({weight: block})


@functools.lru_cache(maxsize=None)
def polq(datum: RootDatum, q: Any = "1/2") -> Polq:
    """
    The shared :class:`Polq` instance of a datum and a value of :math:`q`.

    Parameters
    ----------
    datum
        The root datum.
    q
        Rational value of :math:`q` in :math:`(0, 1)`.
    """
    return _polq(datum, rational(q))


@functools.lru_cache(maxsize=None)
def _polq(datum: RootDatum, q: Any) -> Polq:
    return Polq(datum=datum, q=q)


@dataclasses.dataclass(eq=False, repr=False)
class MatrixCoeffElement(
    mixins.Printable,
):
    r"""
    An element :math:`\sum_\varpi \sum_{ij} C^\varpi_{ij} U_\varpi(e_i, e_j)`
    of :math:`\mathrm{Pol}_q(K)`, stored as one coefficient matrix per
    highest weight.
    """

    algebra: Polq
    """The algebra this element belongs to."""

    blocks: dict[Weight, np.ndarray] = dataclasses.field(default_factory=dict)
    """Coefficient matrix :math:`C^\\varpi` of each highest weight."""

    def _new(self, blocks: dict[Weight, np.ndarray]) -> MatrixCoeffElement:
        return MatrixCoeffElement(algebra=self.algebra, blocks=blocks)

    def _check(self, other: MatrixCoeffElement) -> None:
        if not isinstance(other, MatrixCoeffElement):
            raise TypeError(f"expected a MatrixCoeffElement, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise TypeError("cannot combine elements of different Pol_q(K) instances")

    def scale(self, factor: Any) -> MatrixCoeffElement:
        return self._new({w: factor * c for w, c in self.blocks.items()})

    def __neg__(self) -> MatrixCoeffElement:
        return self.scale(-1)

    def __add__(self, other: Any) -> MatrixCoeffElement:
        if not isinstance(other, MatrixCoeffElement):
            other = self.algebra.one().scale(other)
        self._check(other)
        blocks = dict(self.blocks)
        for w, c in other.blocks.items():
            blocks[w] = blocks[w] + c if w in blocks else c
        return self._new(blocks)

    def __radd__(self, other: Any) -> MatrixCoeffElement:
        return self + other

    def __sub__(self, other: Any) -> MatrixCoeffElement:
        return self + (-other)

    def __rsub__(self, other: Any) -> MatrixCoeffElement:
        return (-self) + other

    def __mul__(self, other: Any) -> MatrixCoeffElement:
        if isinstance(other, MatrixCoeffElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> MatrixCoeffElement:
        return self.scale(other)

    @property
    def norm(self) -> float:
        """Largest absolute value of a coefficient."""
        return max((float(np.max(np.abs(c))) for c in self.blocks.values() if c.size), default=0.0)

    @property
    def star(self) -> MatrixCoeffElement:
        return star(self)


@dataclasses.dataclass(eq=False, repr=False)
class PolTensor(
    mixins.Printable,
):
    r"""
    An element of :math:`\mathrm{Pol}_q(K) \otimes \mathrm{Pol}_q(K)`, stored
    as arrays :math:`T_{abcd}` with
    :math:`\sum T_{abcd} U_\varpi(e_a, e_b) \otimes U_{\varpi'}(e_c, e_d)`.
    """

    algebra: Polq
    blocks: dict[tuple[Weight, Weight], np.ndarray] = dataclasses.field(default_factory=dict)


def _check_envelope(algebra: Polq, x: AlgebraElement) -> None:
    if not isinstance(x.presentation, QuantumEnvelope):
        raise TypeError(f"matrix coefficients pair with U_q(g), not {x.presentation.name}")
    if x.presentation.datum is not algebra.datum:
        raise TypeError("the algebra element belongs to a different root datum")


def evaluate(x: MatrixCoeffElement, X: AlgebraElement) -> complex:
    r"""
    Pair a matrix coefficient with an element of :math:`U_q(\mathfrak{g})`,
    :math:`U_\varpi(\xi, \eta)(X) = \langle \xi, \pi_\varpi(X) \eta \rangle`.

    Parameters
    ----------
    x
        An element of :math:`\mathrm{Pol}_q(K)`.
    X
        An element of :func:`qborel.algebras.quantum_envelope`.
    """
    algebra = x.algebra
    _check_envelope(algebra, X)
    result = 0j
    for weight, c in x.blocks.items():
        result += np.sum(c * represent(algebra.rep(weight), X))
    return complex(result)


def evaluate_tensor(t: PolTensor, X: AlgebraElement, Y: AlgebraElement) -> complex:
    """Pair an element of the tensor square with :math:`X \\otimes Y`."""
    algebra = t.algebra
    _check_envelope(algebra, X)
    _check_envelope(algebra, Y)
    result = 0j
    for (w1, w2), c in t.blocks.items():
        px = represent(algebra.rep(w1), X)
        py = represent(algebra.rep(w2), Y)
        result += np.einsum("abcd,ab,cd->", c, px, py)
    return complex(result)


def evaluate_on_tensor(x: MatrixCoeffElement, y: MatrixCoeffElement, t: TensorElement) -> complex:
    """
    Pair :math:`x \\otimes y` with a two-legged element of
    :math:`U_q(\\mathfrak{g}) \\otimes U_q(\\mathfrak{g})`, as used for the
    duality between the product of :math:`\\mathrm{Pol}_q(K)` and the
    coproduct of :math:`U_q(\\mathfrak{g})`.
    """
    if t.num_legs != 2:
        raise ValueError(f"expected a tensor with two legs, got {t.num_legs}")
    result = 0j
    for (m1, m2), c in t.terms.items():
        value = evaluate(x, t.leg(0, m1)) * evaluate(y, t.leg(1, m2))
        result += evaluate_scalar(c, x.algebra.q) * value
    return complex(result)


def product(
    x: MatrixCoeffElement,
    y: MatrixCoeffElement,
    highest_weights: None | Iterable[Weight] = None,
) -> MatrixCoeffElement:
    r"""
    The product of two matrix coefficients, re-expanded in irreducible
    matrix coefficients through the Clebsch-Gordan isometries
    :math:`\Phi_\mu : V_\mu \to V_\varpi \otimes V_{\varpi'}`,

    .. math::

        C^\mu = \Phi_\mu^T (C^\varpi \otimes C^{\varpi'}) \bar{\Phi}_\mu.

    Parameters
    ----------
    x
        Left factor.
    y
        Right factor.
    highest_weights
        If given, only the summands with these highest weights are computed.
    """
    x._check(y)
    algebra = x.algebra
    keep = None if highest_weights is None else frozenset(tuple(w) for w in highest_weights)
    blocks: dict[Weight, np.ndarray] = {}
    for w1, c1 in x.blocks.items():
        for w2, c2 in y.blocks.items():
            combined = np.kron(c1, c2)
            for component in algebra.clebsch_gordan(w1, w2, keep):
                mu = component.highest_weight
                phi = component.isometry
                value = phi.T @ combined @ phi.conj()
                blocks[mu] = blocks[mu] + value if mu in blocks else value
    return x._new(blocks)


def coproduct(x: MatrixCoeffElement) -> PolTensor:
    r"""
    The coproduct
    :math:`\Delta(U_\varpi(\xi, \eta)) = \sum_i U_\varpi(\xi, e_i) \otimes U_\varpi(e_i, \eta)`.
    """
    blocks = {}
    for weight, c in x.blocks.items():
        identity = np.eye(c.shape[0])
        blocks[(weight, weight)] = np.einsum("ij,kl->iklj", c, identity)
    return PolTensor(algebra=x.algebra, blocks=blocks)


def counit(x: MatrixCoeffElement) -> complex:
    """The counit :math:`\\varepsilon(U_\\varpi(\\xi, \\eta)) = \\langle \\xi, \\eta \\rangle`."""
    return complex(sum(np.trace(c) for c in x.blocks.values()))


def star(x: MatrixCoeffElement) -> MatrixCoeffElement:
    r"""
    The involution

    .. math::

        U_\varpi(\xi, \eta)^* = q^{-(\rho, \mathrm{wt}(\xi) - \mathrm{wt}(\eta))}
            U_{-w_0 \varpi}(\bar{\xi}, \bar{\eta}),

    where the conjugate vectors are carried to :math:`V_{-w_0 \varpi}` by the
    contragredient intertwiner.
    """
    algebra = x.algebra
    datum = algebra.datum
    blocks: dict[Weight, np.ndarray] = {}
    for weight, c in x.blocks.items():
        rep = algebra.rep(weight)
        levels = np.array([float(datum.pair(datum.rho, w)) for w in rep.weights])
        factors = algebra.q_float ** (-(levels[:, np.newaxis] - levels[np.newaxis, :]))
        j = algebra.intertwiner(weight)
        value = j.T @ (c.conj() * factors) @ j.conj()
        dual = algebra.dual_weight(weight)
        blocks[dual] = blocks[dual] + value if dual in blocks else value
    return x._new(blocks)


def antipode(x: MatrixCoeffElement) -> MatrixCoeffElement:
    """The antipode :math:`S(U_\\varpi(\\xi, \\eta)) = U_\\varpi(\\eta, \\xi)^*`."""
    return star(x._new({w: c.conj().T for w, c in x.blocks.items()}))


def haar(x: MatrixCoeffElement) -> complex:
    r"""
    The Haar state :math:`\psi(U_\varpi(\xi, \eta)) = \delta_{\varpi, 0} \langle \xi, \eta \rangle`.
    """
    c = x.blocks.get(x.algebra.datum.zero)
    if c is None:
        return 0j
    return complex(c[0, 0])


def b(algebra: Polq, weight: Weight) -> MatrixCoeffElement:
    r"""
    The normal element :math:`b_\varpi = U_\varpi(\xi_\varpi, \eta_{w_0 \varpi})`
    pairing the highest weight vector with the unit lowest weight vector.

    Parameters
    ----------
    algebra
        The algebra :math:`\mathrm{Pol}_q(K)`.
    weight
        A dominant weight :math:`\varpi`.
    """
    rep = algebra.rep(weight)
    xi = np.zeros(rep.dimension)
    xi[0] = 1
    return algebra.matrix_coefficient(weight, xi, lowest_weight_vector(rep))


def bihomogeneous_components(
    x: MatrixCoeffElement,
    tolerance: float = 1e-12,
) -> dict[tuple[Weight, Weight], MatrixCoeffElement]:
    """
    Split an element by left and right weight, dropping components whose
    coefficients are all below ``tolerance``.
    """
    algebra = x.algebra
    result: dict[tuple[Weight, Weight], dict[Weight, np.ndarray]] = {}
    for weight, c in x.blocks.items():
        rep = algebra.rep(weight)
        for left, rows in rep.blocks.items():
            for right, cols in rep.blocks.items():
                if np.max(np.abs(c[np.ix_(rows, cols)]), initial=0) <= tolerance:
                    continue
                block = np.zeros_like(c)
                block[np.ix_(rows, cols)] = c[np.ix_(rows, cols)]
                result.setdefault((left, right), {})[weight] = block
    return {key: x._new(blocks) for key, blocks in result.items()}


def _bidegree(x: MatrixCoeffElement) -> tuple[Weight, Weight]:
    components = bihomogeneous_components(x)
    if len(components) != 1:
        raise ValueError(f"element has {len(components)} bihomogeneous components, expected 1")
    return next(iter(components))


def lwt(x: MatrixCoeffElement) -> Weight:
    """The left weight :math:`\\mathrm{wt}(\\xi)` of a bihomogeneous element."""
    return _bidegree(x)[0]


def rwt(x: MatrixCoeffElement) -> Weight:
    """The right weight :math:`\\mathrm{wt}(\\eta)` of a bihomogeneous element."""
    return _bidegree(x)[1]


def modular_automorphism(x: MatrixCoeffElement) -> MatrixCoeffElement:
    r"""
    The modular automorphism of the Haar state,
    :math:`\check{\sigma}(x) = q^{2(\rho, \mathrm{lwt}(x) + \mathrm{rwt}(x))} x`,
    so that :math:`\psi(x \check{\sigma}(y)) = \psi(y x)`.
    """
    algebra = x.algebra
    datum = algebra.datum
    blocks = {}
    for weight, c in x.blocks.items():
        levels = np.array(
            [float(datum.pair(datum.rho, w)) for w in algebra.rep(weight).weights],
            dtype=float,
        )
        factors = algebra.q_float ** (2 * (levels[:, np.newaxis] + levels[np.newaxis, :]))
        blocks[weight] = c * factors
    return x._new(blocks)


def left_translate(X: AlgebraElement, x: MatrixCoeffElement) -> MatrixCoeffElement:
    r"""The left translation :math:`X \triangleright x = (\mathrm{id} \otimes X) \Delta(x)`."""
    _check_envelope(x.algebra, X)
    return x._new({
        w: c @ represent(x.algebra.rep(w), X).T for w, c in x.blocks.items()
    })


def right_translate(x: MatrixCoeffElement, X: AlgebraElement) -> MatrixCoeffElement:
    r"""The right translation :math:`x \triangleleft X = (X \otimes \mathrm{id}) \Delta(x)`."""
    _check_envelope(x.algebra, X)
    return x._new({
        w: represent(x.algebra.rep(w), X).T @ c for w, c in x.blocks.items()
    })


def residual(x: MatrixCoeffElement, y: MatrixCoeffElement) -> float:
    """Largest absolute coefficient of :math:`x - y`."""
    return (x - y).norm


def random_element(
    algebra: Polq,
    rng: np.random.Generator,
    bound: int = 1,
    weights: None | Sequence[Weight] = None,
) -> MatrixCoeffElement:
    """
    A random element with complex Gaussian coefficients.

    Parameters
    ----------
    algebra
        The algebra.
    rng
        The random number generator.
    bound
        Use every dominant weight with coordinates at most ``bound``.
    weights
        Use these highest weights instead.
    """
    if weights is None:
        weights = dominant_weights(algebra.datum, bound)
    blocks = {}
    for weight in weights:
        n = algebra.dimension(weight)
        blocks[tuple(weight)] = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return algebra.element(blocks)
