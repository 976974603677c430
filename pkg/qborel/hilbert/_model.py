r"""
The representation of :math:`\mathrm{Fun}_q^0(AK)_{\mathrm{loc}}` on
:math:`L^2_{\mathrm{hol},q}(B)_0` in which

.. math::

    f \xi_\chi = f(-\chi) \xi_\chi, \qquad
    u_\omega \xi_\chi = \xi_{\chi + \omega}, \qquad
    x \xi_\chi = (\theta_{w_0}(x) \xi)_{\chi + \mathrm{lwt}(x)},

and :math:`|b|_\omega` acts by the modulus of :math:`\theta_{w_0}(b_\omega)`.
"""

from __future__ import annotations
import functools
import logging
import dataclasses
import numpy as np
import scipy.sparse
from qborel import mixins
from qborel.roots import Weight, add_weights
from qborel.polq import Polq, MatrixCoeffElement, b, bihomogeneous_components
from qborel.amplified import Atom, AmplifiedElement, evaluate_atom
from ._space import HilbertModelError, TruncatedSpace, TruncatedOperator
from ._theta import theta_w0

__all__ = [
    "BigCell",
    "big_cell",
    "lift",
    "pol_action",
    "full_B_action",
    "fock_action",
]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(eq=False, repr=False)
class BigCell(
    mixins.Printable,
):
    r"""
    The diagonal operators :math:`\theta_{w_0}(b_{\varpi_r})` on a Fock
    window, split into their moduli and a constant sign.

    The sign of :math:`\theta_{w_0}(b_\varpi)` depends on the phase of the
    lowest weight vector. It is absorbed into the action of the unitaries,
    :math:`u_\omega \xi_\chi = \sigma(\omega) \xi_{\chi+\omega}` with the
    character :math:`\sigma(\varpi_r)` equal to that sign, so that
    :math:`b_\varpi = u_\varpi |b|_\varpi` holds in the model.
    """

    space: TruncatedSpace
    """The Fock window."""

    moduli: np.ndarray = dataclasses.field(repr=False)
    r"""Diagonal of :math:`|\theta_{w_0}(b_{\varpi_r})|`, one row per fundamental weight."""

    signs: tuple[int, ...]
    r"""The constant sign of each :math:`\theta_{w_0}(b_{\varpi_r})`."""

    def abs_b(self, weight: Weight) -> np.ndarray:
        """Diagonal of :math:`|b|_\\omega` on the Fock window."""
        return np.prod(self.moduli ** np.array(weight, dtype=float)[:, np.newaxis], axis=0)

    def sign(self, weight: Weight) -> int:
        """The character :math:`\\sigma(\\omega)`."""
        flips = sum(c for c, s in zip(weight, self.signs) if s < 0)
        return -1 if flips % 2 else 1


@functools.lru_cache(maxsize=None)
def big_cell(algebra: Polq, space: TruncatedSpace) -> BigCell:
    """
    The (cached) operators :math:`\\theta_{w_0}(b_{\\varpi_r})` on the Fock
    window of ``space``.

    Raises
    ------
    HilbertModelError
        If some :math:`\\theta_{w_0}(b_{\\varpi_r})` is not diagonal with
        constant sign.
    """
    space = space.fock()
    moduli = []
    signs = []
    for r, weight in enumerate(algebra.datum.fundamental_weights):
        matrix = theta_w0(b(algebra, weight), space).matrix
        diagonal = matrix.diagonal()
        off_diagonal = matrix - scipy.sparse.diags(diagonal)
        if off_diagonal.nnz and np.max(np.abs(off_diagonal.data)) > 1e-10:
            raise HilbertModelError(f"theta_w0(b) of the fundamental weight {r} is not diagonal")
        if np.max(np.abs(diagonal.imag)) > 1e-10:
            raise HilbertModelError(f"theta_w0(b) of the fundamental weight {r} is not real")
        sign = np.sign(diagonal.real)
        if np.any(sign != sign[0]):
            raise HilbertModelError(f"theta_w0(b) of the fundamental weight {r} changes sign")
        moduli.append(np.abs(diagonal.real))
        signs.append(int(sign[0]))
    logger.debug("big cell on %d Fock vectors with signs %s", space.dimension, signs)
    return BigCell(space=space, moduli=np.array(moduli), signs=tuple(signs))


def lift(space: TruncatedSpace, weight: Weight, fock: TruncatedOperator) -> TruncatedOperator:
    """
    The operator :math:`\\xi_\\chi \\otimes v \\mapsto \\xi_{\\chi+\\omega}
    \\otimes Tv` built from an operator :math:`T` on the Fock window.
    """
    if space.radius is None:
        raise ValueError("lifting to the lattice needs a window with a radius")
    shift, valid = space.shift(weight)
    return TruncatedOperator(
        space=space,
        matrix=scipy.sparse.kron(shift, fock.matrix, format="csr"),
        valid=np.outer(valid, fock.valid).ravel(),
    )


def pol_action(x: MatrixCoeffElement, space: TruncatedSpace) -> TruncatedOperator:
    r"""The action :math:`x \xi_\chi = (\theta_{w_0}(x) \xi)_{\chi + \mathrm{lwt}(x)}` of a matrix coefficient."""
    result = TruncatedOperator.zeros(space)
    for (left, _), part in bihomogeneous_components(x).items():
        result = result + lift(space, left, theta_w0(part, space))
    return result


def _multiplier(space: TruncatedSpace, algebra: Polq, atom: Atom) -> TruncatedOperator:
    values = np.array([evaluate_atom(algebra, atom, tuple(-c for c in chi)) for chi in space.weights])
    return TruncatedOperator.diagonal(space, np.repeat(values, space.fock_dimension))


def _unitary(space: TruncatedSpace, cell: BigCell, weight: Weight) -> TruncatedOperator:
    fock = TruncatedOperator.identity(space.fock()).scale(cell.sign(weight))
    return lift(space, weight, fock)


def _modulus(space: TruncatedSpace, cell: BigCell, weight: Weight) -> TruncatedOperator:
    return TruncatedOperator.diagonal(space, np.tile(cell.abs_b(weight), len(space.weights)))


def full_B_action(a: AmplifiedElement, space: TruncatedSpace) -> TruncatedOperator:
    r"""
    The operator of an element :math:`\sum u_\omega |b|_\chi x f` of
    :math:`\mathrm{Fun}_q^0(AK)_{\mathrm{loc}}` on a window of
    :math:`L^2_{\mathrm{hol},q}(B)_0`.

    Parameters
    ----------
    a
        An amplified element of flavor ``"0"``.
    space
        A window with a lattice radius.
    """
    if a.flavor != "0":
        raise TypeError("only the flavor '0' acts on L^2(B)_0")
    if space.radius is None:
        raise ValueError("the action on L^2(B)_0 needs a window with a radius")
    algebra = a.algebra
    if algebra.datum is not space.datum:
        raise TypeError("the element and the window belong to different root data")
    cell = big_cell(algebra, space.fock())
    result = TruncatedOperator.zeros(space)
    for (u, modulus, atom), x in a.terms.items():
        term = _unitary(space, cell, u) @ _modulus(space, cell, modulus)
        term = term @ pol_action(x, space) @ _multiplier(space, algebra, atom)
        result = result + term
    return result


def fock_action(a: AmplifiedElement, space: TruncatedSpace) -> TruncatedOperator:
    r"""
    The operator of an element that preserves every lattice layer and does
    not depend on it, such as :math:`x_r = u_{\alpha_r} e_r`, on the Fock
    window of ``space``.

    Raises
    ------
    ValueError
        If some term shifts the lattice index or carries a nonconstant function.
    """
    if a.flavor != "0":
        raise TypeError("only the flavor '0' acts on L^2(B)_0")
    algebra = a.algebra
    zero = algebra.datum.zero
    fock = space.fock()
    cell = big_cell(algebra, fock)
    result = TruncatedOperator.zeros(fock)
    for (u, modulus, atom), x in a.terms.items():
        if atom[0] != "exp" or atom[1] != zero:
            raise ValueError(f"the term with function {atom} depends on the lattice layer")
        factor = cell.sign(u) * evaluate_atom(algebra, atom, zero)
        for (left, _), part in bihomogeneous_components(x).items():
            if add_weights(u, left) != zero:
                raise ValueError(f"the term with u-exponent {u} shifts the lattice layer")
            term = TruncatedOperator.diagonal(fock, cell.abs_b(modulus)) @ theta_w0(part, fock)
            result = result + term.scale(factor)
    return result
