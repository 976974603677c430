"""
An independent solver for the invariant functionals of
:math:`\\mathrm{Pol}_q(K)` and the normalization constants of its Haar state.
"""

from __future__ import annotations
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel.roots import Weight, dominant_weights
from qborel.representations import kernel
from ._element import Polq, MatrixCoeffElement, haar, product, star

__all__ = [
    "HaarError",
    "InvariantFunctionals",
    "haar_invariance_oracle",
    "quantum_dimension",
    "integral_normalization",
    "haar_integral",
    "OrthogonalityConstant",
    "orthogonality_constants",
]

logger = logging.getLogger(__name__)


class HaarError(ArithmeticError):
    """The invariant functional is not unique up to scale."""


@dataclasses.dataclass(eq=False, repr=False)
class InvariantFunctionals(
    mixins.Printable,
):
    r"""
    The space of functionals on :math:`\mathrm{span}\{U_\varpi(e_i, e_j)\}`
    that are invariant under both translation actions of
    :math:`U_q(\mathfrak{g})`, one basis per highest weight.

    A functional is stored as the matrix :math:`\Phi` with
    :math:`\phi(U_\varpi(e_i, e_j)) = \Phi_{ij}`.
    """

    algebra: Polq
    cutoff: int
    solutions: dict[Weight, np.ndarray] = dataclasses.field(repr=False)
    """Array of shape ``(k, d, d)`` of independent solutions per highest weight."""

    @property
    def dimensions(self) -> dict[Weight, int]:
        return {w: s.shape[0] for w, s in self.solutions.items()}

    @property
    def dimension(self) -> int:
        return sum(self.dimensions.values())

    @property
    def is_unique(self) -> bool:
        return self.dimension == 1

    def __call__(self, x: MatrixCoeffElement) -> complex:
        """The unique invariant functional normalized by :math:`\\phi(1) = 1`."""
        if not self.is_unique:
            raise HaarError(
                f"invariant functionals form a space of dimension {self.dimension}"
            )
        zero = self.algebra.datum.zero
        scale = self.solutions[zero][0, 0, 0]
        result = 0j
        for weight, c in x.blocks.items():
            if weight not in self.solutions:
                raise ValueError(f"V_{weight} lies beyond the cutoff {self.cutoff}")
            if self.solutions[weight].shape[0]:
                result += np.sum(c * self.solutions[weight][0]) / scale
        return complex(result)


def _invariance_system(algebra: Polq, weight: Weight) -> np.ndarray:
    rep = algebra.rep(weight)
    n = rep.dimension
    identity = np.eye(n)
    generators = [(m, 0) for m in rep.e + rep.f]
    generators += [(rep.k(w), 1) for w in algebra.datum.fundamental_weights]
    rows = []
    for matrix, counit in generators:
        shifted = matrix - counit * identity
        rows.append(np.kron(shifted, identity))
        rows.append(np.kron(identity, shifted.T))
    return np.concatenate(rows, axis=0)


def haar_invariance_oracle(
    algebra: Polq,
    cutoff: int = 1,
    threshold: float = 1e-8,
) -> InvariantFunctionals:
    r"""
    Solve :math:`\pi(X) \Phi = \varepsilon(X) \Phi` and
    :math:`\Phi \pi(X) = \varepsilon(X) \Phi` for the generators :math:`X`
    of :math:`U_q(\mathfrak{g})`, on every highest weight up to ``cutoff``.

    This characterizes the functionals with
    :math:`\phi(X \triangleright x) = \varepsilon(X) \phi(x) = \phi(x \triangleleft X)`
    without using the formula for :func:`haar`.

    Parameters
    ----------
    algebra
        The algebra :math:`\mathrm{Pol}_q(K)`.
    cutoff
        Use the dominant weights with every coordinate at most ``cutoff``.
    threshold
        Singular values below this count as zero.
    """
    solutions = {}
    for weight in dominant_weights(algebra.datum, cutoff):
        n = algebra.dimension(weight)
        basis = kernel(_invariance_system(algebra, weight), threshold)
        solutions[weight] = basis.T.reshape(-1, n, n)
    result = InvariantFunctionals(algebra=algebra, cutoff=cutoff, solutions=solutions)
    logger.debug(
        "invariant functionals up to cutoff %d: dimensions %s",
        cutoff,
        result.dimensions,
    )
    return result


def _levels(algebra: Polq, weight: Weight) -> np.ndarray:
    datum = algebra.datum
    return np.array([float(datum.pair(datum.rho, w)) for w in algebra.rep(weight).weights])


def quantum_dimension(algebra: Polq, weight: Weight) -> float:
    r"""The quantum dimension :math:`\sum_i q^{-2(\rho, \mathrm{wt}(e_i))}` of :math:`V_\varpi`."""
    return float(np.sum(algebra.q_float ** (-2 * _levels(algebra, weight))))


def integral_normalization(algebra: Polq) -> float:
    r"""
    The value :math:`\prod_{\alpha > 0} (1 - q^{2(\rho, \alpha)})` of the
    trace-class integral on the unit, its ratio to the Haar state.
    """
    datum = algebra.datum
    result = 1.0
    for alpha in datum.positive_roots:
        result *= 1 - algebra.q_power(2 * datum.pair(datum.rho, alpha))
    return result


def haar_integral(x: MatrixCoeffElement) -> complex:
    """The Haar state rescaled to the normalization of :func:`integral_normalization`."""
    return integral_normalization(x.algebra) * haar(x)


@dataclasses.dataclass(eq=False, repr=False)
class OrthogonalityConstant(
    mixins.Printable,
):
    r"""
    The ratio :math:`c_\varpi` in
    :math:`\psi(U_\varpi(e_i, e_j)^* U_\varpi(e_i, e_j)) = c_\varpi q^{-2(\rho, \mathrm{wt}(e_i))}`.
    """

    highest_weight: Weight
    constant: float
    """Mean of the ratio over all basis pairs."""

    spread: float
    """Largest deviation of a single ratio from the mean."""

    expected: float
    """The reciprocal quantum dimension."""

    haar_deviation: float
    """Largest difference between the oracle and :func:`haar` on a single pair."""


def orthogonality_constants(algebra: Polq, cutoff: int = 1) -> dict[Weight, OrthogonalityConstant]:
    """
    Measure the orthogonality constant of every highest weight up to
    ``cutoff`` and compare it with the reciprocal quantum dimension.

    The values :math:`\\psi(U^* U)` are taken from the unique invariant
    functional of :func:`haar_invariance_oracle`, which only needs the
    trivial summand of each product, and are checked against :func:`haar`.

    Parameters
    ----------
    algebra
        The algebra :math:`\\mathrm{Pol}_q(K)`.
    cutoff
        Use the dominant weights with every coordinate at most ``cutoff``.
    """
    zero = algebra.datum.zero
    oracle = haar_invariance_oracle(algebra, cutoff=0)
    result = {}
    for weight in dominant_weights(algebra.datum, cutoff):
        levels = _levels(algebra, weight)
        n = len(levels)
        ratios = np.empty((n, n))
        deviation = 0.0
        for i in range(n):
            for j in range(n):
                u = algebra.unit(weight, i, j)
                trivial = product(star(u), u, highest_weights=[zero])
                value = oracle(trivial)
                deviation = max(deviation, abs(value - haar(trivial)))
                ratios[i, j] = value.real * algebra.q_float ** (2 * levels[i])
        constant = float(np.mean(ratios))
        result[weight] = OrthogonalityConstant(
            highest_weight=weight,
            constant=constant,
            spread=float(np.max(np.abs(ratios - constant))),
            expected=1 / quantum_dimension(algebra, weight),
            haar_deviation=deviation,
        )
        logger.debug("orthogonality constant of V_%s: %s", weight, constant)
    return result
