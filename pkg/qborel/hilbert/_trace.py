r"""
Traces against powers of :math:`|b|_\rho` on the big cell: the invariant
integral of :math:`\mathrm{Pol}_q(K)` and the invariant weights of the
adjoint coaction.
"""

from __future__ import annotations
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel.roots import scale_weight
from qborel.polq import Polq, MatrixCoeffElement, bihomogeneous_components
from qborel.galois import implementing_k, implementing_l
from ._space import TruncatedSpace, TruncatedOperator
from ._theta import theta_w0
from ._model import big_cell, full_B_action

__all__ = [
    "HaarTrace",
    "haar_trace_formula",
    "phi_ad",
    "psi_ad",
]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(eq=False, repr=False)
class HaarTrace(
    mixins.Printable,
):
    r"""
    The value of :math:`\int_T \mathrm{Tr}\big((\pi_t * \theta_{w_0})(x) |b|_\rho^2\big) dt`
    on a Fock window, with :math:`\int_T dt = 1`, in three normalizations.
    """

    raw: complex
    """The truncated trace itself."""

    normalized: complex
    r"""The trace times :math:`\prod_{\beta > 0} (1 - q^{2(\rho, \beta)})`, the Haar state up to the tail."""

    displayed: complex
    r"""The trace scaled so that :math:`\psi(1) = \prod_{\beta > 0} (1 - q^{2(\rho, \beta)})`."""

    tail: float
    r"""An estimate :math:`q^{2D \min_\beta (\rho, \beta)}` of the relative truncation error."""

    rescaling: float
    r"""The factor :math:`\prod_{\beta > 0} (1 - q^{2(\rho, \beta)})^2` taking :attr:`raw` to :attr:`displayed`."""


def _volume(algebra) -> float:
    datum = algebra.datum
    return float(np.prod([1 - algebra.q_power(2 * datum.pair(datum.rho, beta)) for beta in datum.positive_roots]))


def haar_trace_formula(x: MatrixCoeffElement, space: TruncatedSpace) -> HaarTrace:
    r"""
    Evaluate the trace formula for the invariant integral of
    :math:`\mathrm{Pol}_q(K)` on the Fock window of ``space``.

    The torus integral is the projection onto the components of left
    weight zero, which are the only ones with a nonzero integral over
    :math:`T`.

    Parameters
    ----------
    x
        A matrix coefficient.
    space
        The window, only its Fock factor is used.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        algebra = qborel.polq.polq(qborel.roots.datum_from_label("A1"), "1/2")
        space = qborel.hilbert.TruncatedSpace(datum=algebra.datum, cutoff=40)
        qborel.hilbert.haar_trace_formula(algebra.one(), space).displayed
    """
    algebra = x.algebra
    datum = algebra.datum
    space = space.fock()
    weights = big_cell(algebra, space).abs_b(scale_weight(2, datum.rho))
    raw = 0j
    for (left, _), part in bihomogeneous_components(x).items():
        if left == datum.zero:
            raw += complex(np.sum(theta_w0(part, space).matrix.diagonal() * weights))
    volume = _volume(algebra)
    smallest = min(datum.pair(datum.rho, beta) for beta in datum.positive_roots)
    tail = algebra.q_power(2 * space.cutoff * smallest)
    logger.debug("haar trace on %d Fock vectors, tail estimate %.3g", space.dimension, tail)
    return HaarTrace(
        raw=raw,
        normalized=raw * volume,
        displayed=raw * volume**2,
        tail=tail,
        rescaling=volume**2,
    )


def phi_ad(algebra: Polq, x: TruncatedOperator) -> complex:
    r"""
    The weight :math:`\phi_{\mathrm{Ad}}(x) = \mathrm{Tr}(x |b|_\rho^{-2})`
    of an operator on a window, read off its diagonal.
    """
    space = x.space
    weights = big_cell(algebra, space.fock()).abs_b(scale_weight(-2, algebra.datum.rho))
    return complex(np.sum(x.matrix.diagonal() * np.tile(weights, len(space.weights))))


def psi_ad(algebra: Polq, x: TruncatedOperator) -> complex:
    r"""
    The weight
    :math:`\psi_{\mathrm{Ad}}(x) = \mathrm{Tr}(x |b|_\rho^{-2} K_{-2\rho}^* K_{-2\rho})`,
    with :math:`K_\omega` acting through :math:`k_\omega`.
    """
    omega = scale_weight(-2, algebra.datum.rho)
    modular = full_B_action(implementing_l(algebra, omega) * implementing_k(algebra, omega), x.space)
    return phi_ad(algebra, x @ modular)
