r"""
Galois unitaries of coactions on :math:`B(K)` from their GNS
characterization, the biduality :math:`\mathrm{Ad}_{\mathrm{Ad}_\alpha} = \alpha`
and the invariant weights of the Heisenberg double and its adjoint coaction.
"""

from __future__ import annotations
from typing import Callable
import logging
import dataclasses
import numpy as np
import scipy.sparse
from qborel import mixins
from ._legs import legs, max_entry
from ._system import MUSystem
from ._heisenberg import heisenberg_double, adjoint_coaction, matrix_units

__all__ = [
    "Coaction",
    "gns_galois_unitary",
    "implemented_coaction",
    "fixed_point_dimension",
    "invariant_functionals",
    "BidualityReport",
    "biduality_check",
    "WeightReport",
    "weight_correspondence_check",
]

logger = logging.getLogger(__name__)

Coaction = Callable[[scipy.sparse.spmatrix], scipy.sparse.spmatrix]
"""A coaction of a quantum group on :math:`\\ell^2(Q)` on :math:`B(\\mathbb{C}^n)`."""


def gns_galois_unitary(coaction: Coaction, n: int, vacuum: np.ndarray) -> scipy.sparse.csr_matrix:
    r"""
    The Galois unitary of an ergodic coaction :math:`\gamma` on
    :math:`N = B(\mathbb{C}^n)` with tracial invariant weight, from

    .. math::

        \mathcal{G}^*(\xi \otimes \Lambda_N(x)) = \gamma(x)(\xi \otimes \Omega),

    where :math:`\Lambda_N(e_{ij}) = e_i \otimes \bar{e}_j` and
    :math:`\Omega` is the vector with :math:`\langle y\Omega, \Omega\rangle`
    the Haar weight of the quantum group.

    Parameters
    ----------
    coaction
        The coaction, with values on :math:`\mathbb{C}^n \otimes L^2(Q)`.
    n
        The dimension of :math:`\mathbb{C}^n`.
    vacuum
        The vector :math:`\Omega \in L^2(Q)`.

    Returns
    -------
    :
        The map :math:`\mathcal{G}` from :math:`\mathbb{C}^n \otimes L^2(Q)`
        to :math:`\mathbb{C}^n \otimes L^2(N)`.
    """
    m = len(vacuum)
    if m != n * n:
        raise ValueError(f"a Galois object B(C^{n}) needs a quantum group on a space of dimension {n * n}, got {m}")
    inject = scipy.sparse.kron(
        scipy.sparse.identity(n, format="csr"),
        scipy.sparse.csr_matrix(np.asarray(vacuum, dtype=complex)[:, np.newaxis]),
        format="csr",
    )
    rows, cols, data = [], [], []
    for index, x in enumerate(matrix_units(n)):
        images = scipy.sparse.coo_matrix(coaction(x) @ inject)
        rows.append(images.row)
        cols.append(images.col * n * n + index)
        data.append(images.data)
    adjoint = scipy.sparse.csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n * m, n * n * n),
    )
    return adjoint.conj().T.tocsr()


def implemented_coaction(unitary: scipy.sparse.spmatrix, n: int) -> Coaction:
    r"""The adjoint coaction :math:`x \mapsto \mathcal{G}^*(x \otimes 1)\mathcal{G}` of a Galois unitary."""

    def coaction(x: scipy.sparse.spmatrix) -> scipy.sparse.csr_matrix:
        placed = scipy.sparse.kron(x, scipy.sparse.identity(n * n), format="csr")
        return (unitary.conj().T @ placed @ unitary).tocsr()

    return coaction


def _difference_columns(coaction: Coaction, n: int, m: int) -> scipy.sparse.csr_matrix:
    rows, cols, data = [], [], []
    one = scipy.sparse.identity(m, format="csr")
    for index, x in enumerate(matrix_units(n)):
        difference = scipy.sparse.coo_matrix(coaction(x) - scipy.sparse.kron(x, one))
        rows.append(difference.row * (n * m) + difference.col)
        cols.append(np.full(difference.nnz, index))
        data.append(difference.data)
    return scipy.sparse.csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=((n * m) ** 2, n * n),
    )


def _kernel(matrix: scipy.sparse.spmatrix, tolerance: float = 1e-10) -> np.ndarray:
    gram = (matrix.conj().T @ matrix).toarray()
    values, vectors = np.linalg.eigh(gram)
    scale = max(float(np.max(np.abs(values), initial=0)), 1.0)
    return vectors[:, values <= tolerance * scale]


def fixed_point_dimension(coaction: Coaction, n: int, m: int) -> int:
    r"""The dimension of :math:`\{x : \gamma(x) = x \otimes 1\}`, one for an ergodic coaction."""
    return _kernel(_difference_columns(coaction, n, m)).shape[1]


def invariant_functionals(coaction: Coaction, n: int, m: int) -> np.ndarray:
    r"""
    A basis of the matrices :math:`C` with
    :math:`(\phi_C \otimes \mathrm{id})\gamma(x) = \phi_C(x) 1` for
    :math:`\phi_C(x) = \mathrm{Tr}(Cx)`, as an array of shape ``(k, n, n)``.
    """
    rows, cols, data = [], [], []
    for index, x in enumerate(matrix_units(n)):
        i, j = divmod(index, n)
        image = scipy.sparse.coo_matrix(coaction(x))
        a, r = np.divmod(image.row, m)
        b, c = np.divmod(image.col, m)
        rows.append(index * m * m + r * m + c)
        cols.append(b * n + a)
        data.append(image.data)
        diagonal = np.arange(m)
        rows.append(index * m * m + diagonal * m + diagonal)
        cols.append(np.full(m, j * n + i))
        data.append(-np.ones(m))
    system = scipy.sparse.csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n * n * m * m, n * n),
        dtype=complex,
    )
    kernel = _kernel(system)
    return kernel.T.reshape(-1, n, n)


def _integrated_residual(coaction: Coaction, n: int, vacuum: np.ndarray) -> float:
    r"""The distance of :math:`(\mathrm{id} \otimes \phi)\gamma(x)` from :math:`\mathrm{Tr}(x) 1` on the matrix units."""
    project = scipy.sparse.kron(
        scipy.sparse.identity(n, format="csr"),
        scipy.sparse.csr_matrix(np.asarray(vacuum, dtype=complex)[:, np.newaxis]),
        format="csr",
    )
    result = 0.0
    for x in matrix_units(n):
        value = (project.conj().T @ coaction(x) @ project).toarray()
        result = max(result, float(np.max(np.abs(value - x.diagonal().sum() * np.eye(n)))))
    return result


def _trace_distance(functionals: np.ndarray) -> float:
    if len(functionals) != 1:
        return float("inf")
    c = functionals[0]
    c = c / (np.trace(c) / len(c))
    return float(np.max(np.abs(c - np.eye(len(c)))))


@dataclasses.dataclass(eq=False, repr=False)
class BidualityReport(
    mixins.Printable,
):
    r"""The checks of :math:`\mathrm{Ad}_{\mathrm{Ad}_{\tilde{\alpha}}} = \tilde{\alpha}`."""

    unitarity: float
    """Largest deviation from unitarity of the two Galois unitaries."""

    adjoint: float
    r"""Distance between :math:`\mathrm{Ad}_{\tilde{\alpha}}` from the GNS Galois unitary and from its closed form."""

    biduality: float
    r"""Distance between :math:`\mathrm{Ad}_{\mathrm{Ad}_{\tilde{\alpha}}}` and :math:`\tilde{\alpha}`."""

    fixed_points: int
    r"""Dimension of the fixed points of :math:`\tilde{\alpha}`."""

    adjoint_fixed_points: int
    r"""Dimension of the fixed points of :math:`\mathrm{Ad}_{\tilde{\alpha}}`."""

    @property
    def residual(self) -> float:
        return max(self.unitarity, self.adjoint, self.biduality)

    @property
    def is_ergodic(self) -> bool:
        return self.fixed_points == 1 and self.adjoint_fixed_points == 1


def _vacua(n: int) -> tuple[np.ndarray, np.ndarray]:
    delta = np.eye(n)[0]
    ones = np.ones(n)
    return np.kron(delta, ones), np.kron(ones, delta)


def biduality_check(system: MUSystem) -> BidualityReport:
    r"""
    Compute the Galois unitary of :math:`\tilde{\alpha}` and of
    :math:`\mathrm{Ad}_{\tilde{\alpha}}` from the GNS formula and check that
    the adjoint coaction of the second is :math:`\tilde{\alpha}` again.

    The quantum group of :math:`\tilde{\alpha}` is :math:`\hat{M} \otimes M`
    with Haar vector :math:`\delta_0 \otimes \mathbb{1}`, that of the adjoint
    coaction is :math:`M \otimes \hat{M}` with :math:`\mathbb{1} \otimes \delta_0`.
    """
    n = system.order
    double = heisenberg_double(system)
    vacuum, dual_vacuum = _vacua(n)
    unitary = gns_galois_unitary(double.alpha, n, vacuum)
    adjoint = implemented_coaction(unitary, n)

    def closed_form(x):
        return adjoint_coaction(system, x)

    dual_unitary = gns_galois_unitary(closed_form, n, dual_vacuum)
    bidual = implemented_coaction(dual_unitary, n)
    identity = scipy.sparse.identity(n**3, format="csr")
    unitarity = max(
        max_entry(unitary.conj().T @ unitary - identity),
        max_entry(dual_unitary.conj().T @ dual_unitary - identity),
    )
    adjoint_residual = bidual_residual = 0.0
    for x in matrix_units(n):
        adjoint_residual = max(adjoint_residual, max_entry(adjoint(x) - closed_form(x)))
        bidual_residual = max(bidual_residual, max_entry(bidual(x) - double.alpha(x)))
    result = BidualityReport(
        unitarity=unitarity,
        adjoint=adjoint_residual,
        biduality=bidual_residual,
        fixed_points=fixed_point_dimension(double.alpha, n, n * n),
        adjoint_fixed_points=fixed_point_dimension(closed_form, n, n * n),
    )
    logger.debug("biduality for a group of order %d: %s", n, result)
    return result


@dataclasses.dataclass(eq=False, repr=False)
class WeightReport(
    mixins.Printable,
):
    r"""
    The invariant weights of :math:`\tilde{\alpha}` and
    :math:`\mathrm{Ad}_{\tilde{\alpha}}`. For a finite group the operator
    :math:`h` with :math:`\varphi(x) = \mathrm{Tr}(h^{1/2} x h^{1/2})` is
    trivial, so both weights are the trace.
    """

    num_functionals: int
    r"""Dimension of the invariant functionals of :math:`\tilde{\alpha}`."""

    num_adjoint_functionals: int
    r"""Dimension of the invariant functionals of :math:`\mathrm{Ad}_{\tilde{\alpha}}`."""

    trace_distance: float
    """Distance of the normalized invariant functional of the first from the trace."""

    adjoint_trace_distance: float
    """The same for the adjoint coaction."""

    integrated: float
    r"""Distance of :math:`(\mathrm{id} \otimes \varphi)\gamma(x)` from :math:`\mathrm{Tr}(x)1` for both coactions."""

    @property
    def is_unique(self) -> bool:
        return self.num_functionals == 1 and self.num_adjoint_functionals == 1

    @property
    def residual(self) -> float:
        return max(self.trace_distance, self.adjoint_trace_distance, self.integrated)


def weight_correspondence_check(system: MUSystem) -> WeightReport:
    """Solve the invariance equations of both coactions and compare their solutions with the trace."""
    n = system.order
    double = heisenberg_double(system)
    vacuum, dual_vacuum = _vacua(n)

    def adjoint(x):
        return adjoint_coaction(system, x)

    functionals = invariant_functionals(double.alpha, n, n * n)
    adjoint_functionals = invariant_functionals(adjoint, n, n * n)
    return WeightReport(
        num_functionals=len(functionals),
        num_adjoint_functionals=len(adjoint_functionals),
        trace_distance=_trace_distance(functionals),
        adjoint_trace_distance=_trace_distance(adjoint_functionals),
        integrated=max(
            _integrated_residual(double.alpha, n, vacuum),
            _integrated_residual(adjoint, n, dual_vacuum),
        ),
    )
