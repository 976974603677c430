r"""
The multiplicative unitaries of the function algebra :math:`M = \ell^\infty(G)`
of a finite abelian group with comultiplication :math:`\Delta f(s, t) = f(s + t)`
and the counting measure as Haar weight, and of its dual, the group algebra
:math:`\hat{M}` generated by the translations :math:`\lambda_g`.
"""

from __future__ import annotations
import logging
import dataclasses
import numpy as np
import scipy.sparse
from qborel import mixins
from ._group import FiniteAbelianGroup
from ._legs import legs, permutation, flip, max_entry

__all__ = [
    "MAX_ORDER",
    "IdentityCheck",
    "MUSystem",
    "build_system",
    "system_checks",
]

logger = logging.getLogger(__name__)

MAX_ORDER = 64
"""The largest group order :func:`build_system` accepts."""


@dataclasses.dataclass(eq=False, repr=False)
class IdentityCheck(
    mixins.Printable,
):
    """The largest entry of the difference of the two sides of an operator identity."""

    name: str
    residual: float


@dataclasses.dataclass(eq=False, repr=False)
class MUSystem(
    mixins.Printable,
):
    r"""
    The unitaries :math:`W, V` of :math:`(M, \Delta)` on
    :math:`\ell^2(G) \otimes \ell^2(G)` and those of the dual,
    :math:`\hat{W} = \Sigma W^* \Sigma` and :math:`\hat{V} = \Sigma V^* \Sigma`.

    The Haar weights of :math:`M` and :math:`\hat{M}` are tracial, so the
    modular operators, the scaling constant and the modular elements are
    all trivial and :math:`J` is complex conjugation.
    """

    group: FiniteAbelianGroup
    w: scipy.sparse.csr_matrix = dataclasses.field(repr=False)
    v: scipy.sparse.csr_matrix = dataclasses.field(repr=False)
    w_hat: scipy.sparse.csr_matrix = dataclasses.field(repr=False)
    v_hat: scipy.sparse.csr_matrix = dataclasses.field(repr=False)

    @property
    def order(self) -> int:
        return self.group.order

    def dims(self, num_legs: int) -> tuple[int, ...]:
        return (self.order,) * num_legs

    def function(self, values: np.ndarray) -> scipy.sparse.csr_matrix:
        """The multiplication operator of a function on :math:`G`."""
        return scipy.sparse.diags(np.asarray(values, dtype=complex), format="csr")

    def delta_function(self, g: int) -> scipy.sparse.csr_matrix:
        r"""The minimal projection :math:`\delta_g \in M`."""
        values = np.zeros(self.order)
        values[g] = 1
        return self.function(values)

    def translation(self, g: int) -> scipy.sparse.csr_matrix:
        r""":math:`\lambda_g \delta_s = \delta_{s + g}`."""
        return permutation(self.group.addition[g])

    def comultiply(self, values: np.ndarray) -> scipy.sparse.csr_matrix:
        r""":math:`\Delta(f)`, the multiplication by :math:`f(s + t)`."""
        return self.function(np.asarray(values)[self.group.addition].ravel())

    def parity(self) -> scipy.sparse.csr_matrix:
        r"""The unitary :math:`\hat{J} J \xi(s) = \xi(-s)`."""
        return permutation(self.group.negation)

    def j_hat(self, x: scipy.sparse.spmatrix, num_legs: int = 1) -> scipy.sparse.csr_matrix:
        r"""
        :math:`(\hat{J} \otimes \cdots \otimes \hat{J}) x (\hat{J} \otimes \cdots \otimes \hat{J})`
        with :math:`\hat{J} \xi(s) = \overline{\xi(-s)}`.
        """
        p = self.parity()
        for _ in range(num_legs - 1):
            p = scipy.sparse.kron(p, self.parity(), format="csr")
        return p @ scipy.sparse.csr_matrix(x).conj() @ p.T


def build_system(group: FiniteAbelianGroup) -> MUSystem:
    r"""
    The multiplicative unitaries of :math:`\ell^\infty(G)`, derived from the
    GNS characterizations

    .. math::

        (\omega \otimes \mathrm{id})(W^*) \Lambda(x) = \Lambda((\omega \otimes \mathrm{id}) \Delta(x)),
        \qquad
        (\mathrm{id} \otimes \omega)(V) \Lambda(x) = \Lambda((\mathrm{id} \otimes \omega) \Delta(x)),

    with :math:`\Lambda(f) = f` for the counting measure. Only the vector
    states :math:`\omega_{\delta_a}` contribute because :math:`\Delta(x)` is
    diagonal.

    Parameters
    ----------
    group
        A finite abelian group of order at most :data:`MAX_ORDER`.
    """
    n = group.order
    if n > MAX_ORDER:
        raise ValueError(f"groups of order {n} > {MAX_ORDER} are out of reach of the dense checks")
    addition = group.addition
    a, u = np.divmod(np.arange(n * n), n)
    # W^*(delta_a ⊗ delta_t) = delta_a ⊗ delta_t(a + .)
    w_star = scipy.sparse.csr_matrix(
        (np.ones(n * n), (a * n + u, a * n + addition[a, u])), shape=(n * n, n * n), dtype=complex,
    )
    # V(delta_s ⊗ delta_a) = delta_s(. + a) ⊗ delta_a
    s = a
    v = scipy.sparse.csr_matrix(
        (np.ones(n * n), (s * n + u, addition[s, u] * n + u)), shape=(n * n, n * n), dtype=complex,
    )
    w = w_star.conj().T.tocsr()
    sigma = flip(n, n)
    logger.debug("multiplicative unitaries of a group of order %d", n)
    return MUSystem(
        group=group,
        w=w,
        v=v,
        w_hat=(sigma @ w.conj().T @ sigma).tocsr(),
        v_hat=(sigma @ v.conj().T @ sigma).tocsr(),
    )


def _unitarity(u: scipy.sparse.spmatrix) -> float:
    identity = scipy.sparse.identity(u.shape[0], format="csr")
    return max(max_entry(u.conj().T @ u - identity), max_entry(u @ u.conj().T - identity))


def _pentagon(system: MUSystem, u: scipy.sparse.spmatrix) -> float:
    dims = system.dims(3)
    u12, u13, u23 = (legs(u, p, dims) for p in [(0, 1), (0, 2), (1, 2)])
    return max_entry(u12 @ u13 @ u23 - u23 @ u12)


def system_checks(system: MUSystem) -> tuple[IdentityCheck, ...]:
    r"""
    The identities of the multiplicative unitaries:

    * unitarity of :math:`W, V, \hat{W}, \hat{V}` and their pentagon equations,
    * :math:`\Delta(x) = W^*(1 \otimes x) W = V(x \otimes 1) V^*` on :math:`M`,
    * :math:`\hat{\Delta}(y) = \hat{W}^*(1 \otimes y) \hat{W} = \hat{V}(y \otimes 1) \hat{V}^*` on :math:`\hat{M}`,
    * :math:`(\Delta \otimes \mathrm{id})(W) = W_{13} W_{23}`,
    * :math:`\hat{W}' = (\hat{J} \otimes \hat{J}) \hat{W} (\hat{J} \otimes \hat{J}) = V`,
    * the slices :math:`(\omega_{\delta_a} \otimes \mathrm{id})(W) = \lambda_a`.
    """
    n = system.order
    result = []
    names = {"W": system.w, "V": system.v, "W^": system.w_hat, "V^": system.v_hat}
    for name, u in names.items():
        result.append(IdentityCheck(name=f"{name} unitary", residual=_unitarity(u)))
        result.append(IdentityCheck(name=f"{name} pentagon", residual=_pentagon(system, u)))

    one = scipy.sparse.identity(n, format="csr")
    left = right = dual_left = dual_right = 0.0
    for g in range(n):
        f = system.delta_function(g)
        expected = system.comultiply(f.diagonal())
        left = max(left, max_entry(system.w.conj().T @ scipy.sparse.kron(one, f) @ system.w - expected))
        right = max(right, max_entry(system.v @ scipy.sparse.kron(f, one) @ system.v.conj().T - expected))
        lam = system.translation(g)
        expected = scipy.sparse.kron(lam, lam)
        dual_left = max(dual_left, max_entry(system.w_hat.conj().T @ scipy.sparse.kron(one, lam) @ system.w_hat - expected))
        dual_right = max(dual_right, max_entry(system.v_hat @ scipy.sparse.kron(lam, one) @ system.v_hat.conj().T - expected))
    result += [
        IdentityCheck(name="Delta = Ad W^*(1 ⊗ .)", residual=left),
        IdentityCheck(name="Delta = Ad V(. ⊗ 1)", residual=right),
        IdentityCheck(name="dual Delta = Ad W^^*(1 ⊗ .)", residual=dual_left),
        IdentityCheck(name="dual Delta = Ad V^(. ⊗ 1)", residual=dual_right),
    ]

    dims = system.dims(3)
    v12 = legs(system.v, (0, 1), dims)
    lhs = v12 @ legs(system.w, (0, 2), dims) @ v12.conj().T
    rhs = legs(system.w, (0, 2), dims) @ legs(system.w, (1, 2), dims)
    result.append(IdentityCheck(name="(Delta ⊗ id)(W) = W13 W23", residual=max_entry(lhs - rhs)))

    result.append(IdentityCheck(name="W^' = V", residual=max_entry(system.j_hat(system.w_hat, 2) - system.v)))

    slices = 0.0
    for a in range(n):
        block = system.w[a * n:(a + 1) * n, a * n:(a + 1) * n]
        slices = max(slices, max_entry(block - system.translation(a)))
    result.append(IdentityCheck(name="slices of W are translations", residual=slices))
    for check in result:
        logger.debug("%s: %.3g", check.name, check.residual)
    return tuple(result)
