r"""
The Heisenberg double :math:`\tilde{N} = B(\ell^2(G))` as a Galois object
for :math:`\tilde{M} = \hat{M} \otimes M`, its Galois unitary and its
adjoint coaction.

Leg convention: :math:`\tilde{\alpha}(x)` has its legs in the order
:math:`\tilde{N}, \hat{M}, M` and :math:`\mathrm{Ad}_{\tilde{\alpha}}(x)` in
the order :math:`\tilde{N}, M, \hat{M}`. The four-leg Galois unitary acts on
:math:`L^2(\tilde{N}) \otimes L^2(\tilde{M})` with
:math:`L^2(\tilde{N}) = L^2(\tilde{M}) = \ell^2(G) \otimes \ell^2(G)`, where
:math:`\tilde{N}` acts on :math:`L^2(\tilde{N})` by :math:`x \mapsto V(x \otimes 1)V^*`.
"""

from __future__ import annotations
import logging
import dataclasses
import numpy as np
import scipy.sparse
from qborel import mixins
from ._legs import legs, flip, max_entry
from ._system import IdentityCheck, MUSystem

__all__ = [
    "HeisenbergDouble",
    "heisenberg_double",
    "GaloisUnitary",
    "galois_unitary",
    "galois_checks",
    "adjoint_coaction",
    "adjoint_checks",
    "matrix_units",
]

logger = logging.getLogger(__name__)


def matrix_units(n: int):
    """The matrix units :math:`e_{ij}` of :math:`M_n` as sparse matrices, row-major."""
    for i in range(n):
        for j in range(n):
            yield scipy.sparse.csr_matrix(([1.0], ([i], [j])), shape=(n, n), dtype=complex)


def _conjugate(u: scipy.sparse.spmatrix, x: scipy.sparse.spmatrix) -> scipy.sparse.csr_matrix:
    return (u @ x @ u.conj().T).tocsr()


@dataclasses.dataclass(eq=False, repr=False)
class HeisenbergDouble(
    mixins.Printable,
):
    r"""
    The coaction

    .. math::

        \tilde{\alpha}(x) = \hat{V}_{12} V_{13} (x \otimes 1 \otimes 1) V_{13}^* \hat{V}_{12}^*

    of :math:`\hat{M} \otimes M` on :math:`B(\ell^2(G))`.
    """

    system: MUSystem

    @property
    def order(self) -> int:
        return self.system.order

    def implementing(self) -> scipy.sparse.csr_matrix:
        r""":math:`\hat{V}_{12} V_{13}`."""
        dims = self.system.dims(3)
        return (legs(self.system.v_hat, (0, 1), dims) @ legs(self.system.v, (0, 2), dims)).tocsr()

    def alpha(self, x: np.ndarray | scipy.sparse.spmatrix) -> scipy.sparse.csr_matrix:
        x = scipy.sparse.csr_matrix(x, dtype=complex)
        return _conjugate(self.implementing(), legs(x, (0,), self.system.dims(3)))

    def represent(self, x: np.ndarray | scipy.sparse.spmatrix) -> scipy.sparse.csr_matrix:
        r"""The standard representation :math:`x \mapsto V(x \otimes 1)V^*` on :math:`L^2(\tilde{N})`."""
        x = scipy.sparse.csr_matrix(x, dtype=complex)
        return _conjugate(self.system.v, legs(x, (0,), self.system.dims(2)))

    def unit_vector(self) -> np.ndarray:
        r"""
        The vector :math:`\delta_0 \otimes \mathbb{1}` with
        :math:`\langle y \Omega, \Omega \rangle` the Haar weight of
        :math:`\hat{M} \otimes M`.
        """
        n = self.order
        return np.kron(np.eye(n)[0], np.ones(n))


def heisenberg_double(system: MUSystem) -> HeisenbergDouble:
    return HeisenbergDouble(system=system)


@dataclasses.dataclass(eq=False, repr=False)
class GaloisUnitary(
    mixins.Printable,
):
    r"""The Galois unitary of the Heisenberg double in its two forms."""

    full: scipy.sparse.csr_matrix = dataclasses.field(repr=False)
    r""":math:`\tilde{W} = W_{14} W_{24} W_{31}^*` on four legs."""

    compact: scipy.sparse.csr_matrix = dataclasses.field(repr=False)
    r""":math:`W_{13} \hat{W}_{12}` on three legs, with the first leg in the ordinary representation."""


def galois_unitary(system: MUSystem) -> GaloisUnitary:
    dims = system.dims(4)
    full = legs(system.w, (0, 3), dims) @ legs(system.w, (1, 3), dims) @ legs(system.w, (2, 0), dims).conj().T
    dims = system.dims(3)
    compact = legs(system.w, (0, 2), dims) @ legs(system.w_hat, (0, 1), dims)
    return GaloisUnitary(full=full.tocsr(), compact=compact.tocsr())


def _unitarity(u: scipy.sparse.spmatrix) -> float:
    identity = scipy.sparse.identity(u.shape[0], format="csr")
    return max_entry(u.conj().T @ u - identity)


def galois_checks(system: MUSystem) -> tuple[IdentityCheck, ...]:
    r"""
    The identities of the Galois unitary :math:`\tilde{W}` of the
    Heisenberg double:

    * unitarity,
    * :math:`V_{12}^* W_{14} W_{24} W_{31}^* V_{12} = W_{14} W_{31}^*`, relating the two forms,
    * :math:`\tilde{\alpha}(x) = \tilde{W}^*(1 \otimes x)\tilde{W}` on the matrix units,
    * the hybrid pentagon :math:`\tilde{W}_{12}\tilde{W}_{13}W_{23} = \tilde{W}_{23}\tilde{W}_{12}`,
      with :math:`W_{\tilde{M}} = \hat{W}_{13} W_{24}`,
    * :math:`(\tilde{\alpha} \otimes \mathrm{id})(\tilde{W}) = \tilde{W}_{13} W_{23}`,
    * the coaction property :math:`(\tilde{\alpha} \otimes \mathrm{id})\tilde{\alpha} = (\mathrm{id} \otimes \Delta_{\tilde{M}})\tilde{\alpha}`.

    Big legs of :math:`L^2(\tilde{N})` and :math:`L^2(\tilde{M})` are pairs of
    legs of :math:`\ell^2(G)`.
    """
    n = system.order
    double = heisenberg_double(system)
    unitary = galois_unitary(system)
    result = [
        IdentityCheck(name="galois unitary", residual=_unitarity(unitary.full)),
        IdentityCheck(name="compact galois unitary", residual=_unitarity(unitary.compact)),
    ]

    dims = system.dims(4)
    v12 = legs(system.v, (0, 1), dims)
    lhs = v12.conj().T @ unitary.full @ v12
    rhs = legs(system.w, (0, 3), dims) @ legs(system.w, (2, 0), dims).conj().T
    result.append(IdentityCheck(name="V12^* W~ V12 = W14 W31^*", residual=max_entry(lhs - rhs)))

    implementation = 0.0
    for x in matrix_units(n):
        expected = _conjugate(v12, legs(double.alpha(x), (0, 2, 3), dims))
        image = unitary.full.conj().T @ legs(double.represent(x), (2, 3), dims) @ unitary.full
        implementation = max(implementation, max_entry(image - expected))
    result.append(IdentityCheck(name="alpha(x) = W~^*(1 ⊗ x)W~", residual=implementation))

    dims = system.dims(6)
    w_ab = legs(unitary.full, (0, 1, 2, 3), dims)
    w_ac = legs(unitary.full, (0, 1, 4, 5), dims)
    w_bc = legs(unitary.full, (2, 3, 4, 5), dims)
    quantum = legs(system.w_hat, (0, 2), system.dims(4)) @ legs(system.w, (1, 3), system.dims(4))
    quantum_bc = legs(quantum, (2, 3, 4, 5), dims)
    result.append(IdentityCheck(
        name="hybrid pentagon",
        residual=max_entry(w_ab @ w_ac @ quantum_bc - w_bc @ w_ab),
    ))
    result.append(IdentityCheck(
        name="(alpha ⊗ id)(W~) = W~13 W23",
        residual=max_entry(w_ab.conj().T @ w_bc @ w_ab - w_ac @ quantum_bc),
    ))

    dims = system.dims(5)
    implementing = legs(double.implementing(), (0, 1, 2), dims)
    coproduct = legs(system.w_hat, (1, 3), dims) @ legs(system.w, (2, 4), dims)
    coaction = 0.0
    for x in matrix_units(n):
        image = legs(double.alpha(x), (0, 3, 4), dims)
        lhs = _conjugate(implementing, image)
        rhs = coproduct.conj().T @ image @ coproduct
        coaction = max(coaction, max_entry(lhs - rhs))
    result.append(IdentityCheck(name="alpha coaction property", residual=coaction))
    for check in result:
        logger.debug("%s: %.3g", check.name, check.residual)
    return tuple(result)


def adjoint_coaction(system: MUSystem, x: np.ndarray | scipy.sparse.spmatrix) -> scipy.sparse.csr_matrix:
    r"""
    The adjoint coaction of :math:`M \otimes \hat{M}` on :math:`B(\ell^2(G))`,

    .. math::

        \mathrm{Ad}_{\tilde{\alpha}}(x) = \hat{W}_{12}^* W_{13}^* (x \otimes 1 \otimes 1) W_{13} \hat{W}_{12}.

    Parameters
    ----------
    system
        The multiplicative unitaries of the group.
    x
        An :math:`|G| \times |G|` matrix.
    """
    x = scipy.sparse.csr_matrix(x, dtype=complex)
    compact = galois_unitary(system).compact
    return (compact.conj().T @ legs(x, (0,), system.dims(3)) @ compact).tocsr()


def adjoint_checks(system: MUSystem, rng: np.random.Generator) -> tuple[IdentityCheck, ...]:
    r"""
    The identities of the adjoint coaction, on a random matrix:

    * :math:`\mathrm{Ad}(1) = 1`,
    * the coaction property for :math:`M \otimes \hat{M}`, whose comultiplication
      is implemented by :math:`W_{24}` and :math:`\hat{W}_{35}`,
    * :math:`\mathrm{Ad}_{\tilde{\alpha}} = (\mathrm{Ad}(\hat{J}J) \otimes \varsigma_{23})
      \tilde{\alpha}(\mathrm{Ad}(J\hat{J})(x))`.
    """
    n = system.order
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    image = adjoint_coaction(system, x)
    result = [
        IdentityCheck(
            name="Ad(1) = 1",
            residual=max_entry(adjoint_coaction(system, np.eye(n)) - scipy.sparse.identity(n**3)),
        ),
    ]

    dims = system.dims(5)
    compact = legs(galois_unitary(system).compact, (0, 1, 2), dims)
    placed = legs(image, (0, 3, 4), dims)
    lhs = compact.conj().T @ placed @ compact
    coproduct = legs(system.w, (1, 3), dims) @ legs(system.w_hat, (2, 4), dims)
    rhs = coproduct.conj().T @ placed @ coproduct
    scale = max(max_entry(lhs), 1.0)
    result.append(IdentityCheck(name="Ad coaction property", residual=max_entry(lhs - rhs) / scale))

    parity = system.parity()
    flipped = heisenberg_double(system).alpha(parity @ x @ parity)
    swap = legs(flip(n, n), (1, 2), system.dims(3))
    outer = legs(parity, (0,), system.dims(3))
    rhs = _conjugate(outer @ swap, flipped)
    result.append(IdentityCheck(
        name="Ad = (Ad(J^J) ⊗ flip) alpha(Ad(JJ^) .)",
        residual=max_entry(image - rhs) / max(max_entry(image), 1.0),
    ))
    for check in result:
        logger.debug("%s: %.3g", check.name, check.residual)
    return tuple(result)
