r"""
Identities of the Galois object that hold only once :math:`b_\varpi =
u_\varpi |b|_\varpi` is imposed, verified as operator identities on windows
of :math:`L^2_{\mathrm{hol},q}(B)_0`.
"""

from __future__ import annotations
from typing import Sequence
import itertools
import logging
import dataclasses
import numpy as np
import scipy.linalg
import scipy.sparse
from qborel import mixins
from qborel.scalars import FIELD, evaluate
from qborel.roots import add_weights, scale_weight
from qborel.algebras import (
    AlgebraElement,
    serre_words,
    quantum_envelope,
    drinfeld_double,
    heisenberg_double,
    heisenberg_double_tilde,
)
from qborel.representations import represent
from qborel.polq import Polq
from qborel.amplified import (
    AmplifiedElement,
    exp_atom,
    coaction_gamma,
    translate_left,
    translate_right,
)
from qborel.galois import (
    u_element,
    abs_b_element,
    implementing_e,
    implementing_x,
    pi_tilde,
    pi_heisenberg,
    coaction_alpha,
    implemented_adjoint_action,
)
from ._space import HilbertModelError, TruncatedSpace, TruncatedOperator
from ._model import full_B_action, lift
from ._fock import fock_generator

__all__ = [
    "WindowCheck",
    "heisenberg_relation_checks",
    "translation_equals_adjoint_check",
    "intertwiner_check",
    "generation_check",
    "coaction_matrix_check",
]

logger = logging.getLogger(__name__)


@dataclasses.dataclass(eq=False, repr=False)
class WindowCheck(
    mixins.Printable,
):
    """The residual of one identity on a window."""

    name: str
    residual: float
    num_valid: int


def _compare(name: str, lhs: TruncatedOperator, rhs: TruncatedOperator) -> WindowCheck:
    result = WindowCheck(
        name=name,
        residual=lhs.residual(rhs, relative=True),
        num_valid=int(np.count_nonzero(lhs.valid & rhs.valid)),
    )
    logger.debug("%s: residual %.3g on %d columns", name, result.residual, result.num_valid)
    return result


def _sum(space: TruncatedSpace, terms: Sequence[tuple[complex, TruncatedOperator]]) -> tuple[TruncatedOperator, float]:
    total = TruncatedOperator.zeros(space)
    scale = 0.0
    for c, operator in terms:
        total = total + operator.scale(c)
        scale = max(scale, abs(c) * _largest(operator.matrix))
    return total, scale


def _largest(matrix: scipy.sparse.spmatrix) -> float:
    data = scipy.sparse.csr_matrix(matrix).data
    return float(np.max(np.abs(data))) if len(data) else 0.0


def _vanishing(name: str, total: TruncatedOperator, scale: float) -> WindowCheck:
    columns = np.flatnonzero(total.valid)
    if not len(columns):
        raise HilbertModelError(f"no column of the window is exact for {name}")
    residual = _largest(total.matrix[:, columns])
    if scale > 0:
        residual /= scale
    logger.debug("%s: residual %.3g on %d columns", name, residual, len(columns))
    return WindowCheck(name=name, residual=residual, num_valid=len(columns))


def _tilde_generators(algebra: Polq) -> dict[str, AlgebraElement]:
    datum = algebra.datum
    tilde = heisenberg_double_tilde(datum)
    result = {}
    for r in range(datum.rank):
        result[f"E{r}"] = tilde.e(r)
        result[f"F{r}"] = tilde.f(r)
    for s, omega in enumerate(datum.fundamental_weights):
        for sign, label in [(1, "+"), (-1, "-")]:
            result[f"U{label}{s}"] = tilde.u(scale_weight(sign, omega))
            result[f"Z{label}{s}"] = tilde.z(scale_weight(sign, omega))
    return result


def heisenberg_relation_checks(algebra: Polq, space: TruncatedSpace) -> tuple[WindowCheck, ...]:
    r"""
    The defining relations of :math:`\tilde{U}_q^0(\mathfrak{b}_\mathbb{R})`
    and of :math:`U_q^0(\mathfrak{n}_\mathbb{R})` in the image of :math:`\pi`.

    For every pair of generators :math:`A, B` the product of the operators
    of :math:`\pi(A)` and :math:`\pi(B)` is compared with the operator of
    :math:`\pi(AB)`, where :math:`AB` is computed in the normal form of
    :math:`\tilde{U}_q^0(\mathfrak{b}_\mathbb{R})`. The Serre relations are
    checked on the :math:`e_r` and :math:`f_r`, the :math:`q`-commutation
    relation on the :math:`x_r` in the Fock window, and the action of
    :math:`x_r` on every lattice layer is compared with the Fock operator.

    Parameters
    ----------
    algebra
        The algebra fixing :math:`q` and the root datum.
    space
        A window with a lattice radius.
    """
    datum = algebra.datum
    generators = _tilde_generators(algebra)
    operators = {name: full_B_action(pi_tilde(algebra, X), space) for name, X in generators.items()}
    result = []
    for (a, x), (b, y) in itertools.product(generators.items(), repeat=2):
        lhs = operators[a] @ operators[b]
        rhs = full_B_action(pi_tilde(algebra, x * y), space)
        result.append(_compare(f"pi({a}) pi({b})", lhs, rhs))

    for r, s in itertools.permutations(range(datum.rank), 2):
        if datum.cartan_matrix[r][s] == 0:
            continue
        for letter in "EF":
            terms = []
            for word, c in serre_words(datum, r, s):
                operator = TruncatedOperator.identity(space)
                for index in word:
                    operator = operator @ operators[f"{letter}{index}"]
                terms.append((evaluate(c, algebra.q), operator))
            total, scale = _sum(space, terms)
            result.append(_vanishing(f"serre {letter}{r}{s}", total, scale))

    fock = space.fock()
    for r, s in itertools.product(range(datum.rank), repeat=2):
        x_r = fock_generator(algebra, fock, r)
        x_s_star = fock_generator(algebra, fock, s, dagger=True)
        factor = algebra.q_power(-datum.pair(datum.simple_roots[r], datum.simple_roots[s]))
        lhs = x_r @ x_s_star - (x_s_star @ x_r).scale(factor)
        rhs = TruncatedOperator.zeros(fock)
        if r == s:
            q_r = algebra.q_power(datum.symmetrizer[r])
            rhs = TruncatedOperator.identity(fock).scale(1 / (1 / q_r - q_r))
        result.append(_compare(f"x{r} x{s}* commutation", lhs, rhs))

    for r in range(datum.rank):
        layered = full_B_action(implementing_x(algebra, r), space)
        stacked = lift(space, datum.zero, fock_generator(algebra, fock, r))
        result.append(_compare(f"x{r} on lattice layers", layered, stacked))
    return tuple(result)


def translation_equals_adjoint_check(x: AmplifiedElement, X: AlgebraElement, space: TruncatedSpace) -> WindowCheck:
    r"""
    Compare the right translation :math:`x \triangleleft X` with the adjoint
    action :math:`\pi(\hat{S}(X_{(1)})) x \pi(X_{(2)})` on a window.

    Parameters
    ----------
    x
        A compact element of flavor ``"0"``.
    X
        An element of :func:`qborel.algebras.drinfeld_double`.
    space
        A window with a lattice radius.
    """
    if not x.is_compact:
        raise ValueError("the translation is compared on compact elements only")
    lhs = full_B_action(translate_right(x, X), space)
    rhs = full_B_action(implemented_adjoint_action(x, X), space)
    return _compare("translation = adjoint action", lhs, rhs)


def _add(terms: dict, key, value: AmplifiedElement) -> None:
    terms[key] = terms[key] + value if key in terms else value


def intertwiner_check(
    x: AmplifiedElement,
    X: AlgebraElement,
    cover: AmplifiedElement,
    space: TruncatedSpace,
) -> WindowCheck:
    r"""
    The intertwining property of the coaction,

    .. math::

        \gamma(x)(1 \otimes \pi(X) c)
        = \sum (X_{(1)} \triangleright x_{(-1)}) \otimes \pi(X_{(0)}) x_{(0)} c,

    with :math:`\alpha(X) = X_{(0)} \otimes X_{(1)}`. Both sides are grouped
    by the matrix coefficient of the first leg and the second legs are
    compared as operators on the window.

    Parameters
    ----------
    x
        A compact element of flavor ``"0"``.
    X
        An element of :func:`qborel.algebras.heisenberg_double`.
    cover
        A finitely supported element of flavor ``"0"`` cutting the coaction off.
    space
        A window with a lattice radius.
    """
    algebra = x.algebra
    lhs = coaction_gamma(x, pi_heisenberg(algebra, X) * cover).terms
    rhs: dict = {}
    alpha = coaction_alpha(X)
    gamma = coaction_gamma(x, cover)
    for label, second in gamma.terms.items():
        first = gamma.first(label)
        for (m0, m1), c in alpha.terms.items():
            moved = translate_left(alpha.leg(1, m1), first)
            acted = pi_heisenberg(algebra, alpha.leg(0, m0)) * second
            acted = acted.scale(evaluate(c, algebra.q))
            for (_, _, atom), coefficient in moved.terms.items():
                for weight, block in coefficient.blocks.items():
                    for i, k in zip(*np.nonzero(np.abs(block) > 1e-14)):
                        _add(rhs, (atom, weight, int(i), int(k)), acted.scale(block[i, k]))
    residual = 0.0
    num_valid = space.dimension
    zero = AmplifiedElement(algebra=algebra, flavor="0")
    for label in set(lhs) | set(rhs):
        left = full_B_action(lhs.get(label, zero), space)
        right = full_B_action(rhs.get(label, zero), space)
        check = _compare(f"intertwiner {label}", left, right)
        residual = max(residual, check.residual)
        num_valid = min(num_valid, check.num_valid)
    return WindowCheck(name="intertwiner", residual=residual, num_valid=num_valid)


def _box(rank: int, bound: int) -> list:
    return list(itertools.product(range(-bound, bound + 1), repeat=rank))


def generation_check(algebra: Polq, space: TruncatedSpace, degree: int, bound: int) -> WindowCheck:
    r"""
    Check that the matrix coefficients :math:`U_\varpi(e_i, e_j)` with every
    coordinate of :math:`\varpi` at most ``bound`` lie in the span of the
    elements :math:`u_\omega |b|_\chi w`, with :math:`\omega, \chi` in the box
    of radius ``bound`` and :math:`w` a word of length at most ``degree`` in
    the :math:`e_r` and :math:`e_r^*`.

    The span is computed from the operators on the columns of the lattice
    layer :math:`\chi = 0` that are exact for every operator involved, and
    the residual is the largest relative least-squares error of a target.
    """
    if degree < 0 or bound < 0:
        raise ValueError(f"degree and bound must be non-negative, got {degree} and {bound}")
    datum = algebra.datum
    zero = datum.zero
    letters = []
    for r in range(datum.rank):
        e = implementing_e(algebra, r)
        letters += [e, e.star]
    words = [u_element(algebra, zero)]
    layer = [words[0]]
    for _ in range(degree):
        layer = [w * letter for w in layer for letter in letters]
        words += layer
    prefactors = [u_element(algebra, a) * abs_b_element(algebra, b) for a in _box(datum.rank, bound) for b in _box(datum.rank, bound)]
    candidates = [full_B_action(p * w, space) for p in prefactors for w in words]
    targets = []
    for weight in itertools.product(range(bound + 1), repeat=datum.rank):
        dimension = algebra.dimension(weight)
        for i, j in itertools.product(range(dimension), repeat=2):
            x = AmplifiedElement(algebra=algebra, flavor="0", terms={(zero, zero, exp_atom(zero)): algebra.unit(weight, i, j)})
            targets.append(full_B_action(x, space))
    valid = np.logical_and.reduce([op.valid for op in candidates + targets])
    offset = space.weight_index[zero] * space.fock_dimension
    columns = offset + np.flatnonzero(valid[offset:offset + space.fock_dimension])
    if not len(columns):
        raise HilbertModelError("no column of the central layer is exact, increase the radius or the cutoff")
    matrix = np.stack([op.matrix[:, columns].toarray().ravel() for op in candidates], axis=1)
    residual = 0.0
    for target in targets:
        vector = target.matrix[:, columns].toarray().ravel()
        solution, *_ = np.linalg.lstsq(matrix, vector, rcond=None)
        norm = np.linalg.norm(vector)
        error = np.linalg.norm(matrix @ solution - vector)
        residual = max(residual, error / norm if norm else error)
    logger.debug(
        "generation: %d candidates, %d targets, %d columns, residual %.3g",
        len(candidates), len(targets), len(columns), residual,
    )
    return WindowCheck(name="generation", residual=float(residual), num_valid=len(columns))


def _to_envelope(Y: AlgebraElement) -> AlgebraElement:
    envelope = quantum_envelope(Y.presentation.datum)
    terms = {}
    for (fword, (omega, chi), eword), c in Y.terms.items():
        key = (fword, (add_weights(omega, chi),), eword)
        terms[key] = terms[key] + c if key in terms else c
    return envelope.element(terms)


def _plus_representation(algebra: Polq, cutoff: int):
    """
    The double acting on the direct sum of the :math:`V_\\varpi` with every
    coordinate of :math:`\\varpi` at most ``cutoff``, through :math:`L_\\omega \\mapsto K_\\omega`.
    """
    reps = [algebra.rep(w) for w in itertools.product(range(cutoff + 1), repeat=algebra.datum.rank)]

    def plus(Y: AlgebraElement) -> np.ndarray:
        image = _to_envelope(Y)
        return scipy.linalg.block_diag(*[np.asarray(represent(rep, image)) for rep in reps])

    return plus, sum(rep.dimension for rep in reps)


_Tensor = list[tuple[TruncatedOperator, np.ndarray]]


def _tensor_product(a: _Tensor, b: _Tensor) -> _Tensor:
    return [(x @ y, s @ t) for x, s in a for y, t in b]


def _compare_tensors(name: str, space: TruncatedSpace, a: _Tensor, b: _Tensor, dimension: int) -> WindowCheck:
    residual = 0.0
    num_valid = space.dimension
    for i, j in itertools.product(range(dimension), repeat=2):
        left = TruncatedOperator.zeros(space)
        right = TruncatedOperator.zeros(space)
        for operator, matrix in a:
            if matrix[i, j]:
                left = left + operator.scale(matrix[i, j])
        for operator, matrix in b:
            if matrix[i, j]:
                right = right + operator.scale(matrix[i, j])
        columns = left.valid & right.valid
        num_valid = min(num_valid, int(np.count_nonzero(columns)))
        if left.matrix.nnz or right.matrix.nnz:
            residual = max(residual, left.residual(right, relative=True))
    logger.debug("%s: residual %.3g", name, residual)
    return WindowCheck(name=name, residual=residual, num_valid=num_valid)


def coaction_matrix_check(algebra: Polq, space: TruncatedSpace, rep_cutoff: int) -> tuple[WindowCheck, ...]:
    r"""
    The coaction :math:`\alpha` as an operator identity on the window times
    the representations :math:`V_\varpi` of the second leg with every
    coordinate of :math:`\varpi` at most ``rep_cutoff``.

    The first leg acts through :math:`\pi`, the second through the
    quotient of the Drinfeld double onto :math:`U_q(\mathfrak{g})`. The
    checks are the multiplicativity :math:`\alpha(XY) = \alpha(X)\alpha(Y)`
    on pairs of generators and the group-like coaction of the modular
    element :math:`L_{-2\rho} K_{-2\rho}`.
    """
    datum = algebra.datum
    heisenberg = heisenberg_double(datum)
    plus, dimension = _plus_representation(algebra, rep_cutoff)
    cache: dict = {}

    def first(m) -> TruncatedOperator:
        if m not in cache:
            cache[m] = full_B_action(pi_heisenberg(algebra, heisenberg.element({m: FIELD.one})), space)
        return cache[m]

    def image(X: AlgebraElement) -> _Tensor:
        alpha = coaction_alpha(X)
        return [
            (first(m0).scale(evaluate(c, algebra.q)), plus(alpha.leg(1, m1)))
            for (m0, m1), c in alpha.terms.items()
        ]

    generators = {}
    for r in range(datum.rank):
        generators[f"E{r}"] = heisenberg.e(r)
        generators[f"F{r}"] = heisenberg.f(r)
    for s, omega in enumerate(datum.fundamental_weights):
        generators[f"K{s}"] = heisenberg.k(omega)
        generators[f"L{s}"] = heisenberg.l(omega)
    result = []
    for (a, x), (b, y) in itertools.product(generators.items(), repeat=2):
        lhs = image(x * y)
        rhs = _tensor_product(image(x), image(y))
        result.append(_compare_tensors(f"alpha({a} {b})", space, lhs, rhs, dimension))

    minus_two_rho = scale_weight(-2, datum.rho)
    modular = heisenberg.l(minus_two_rho) * heisenberg.k(minus_two_rho)
    double = drinfeld_double(datum)
    grouplike = [(full_B_action(pi_heisenberg(algebra, modular), space), plus(double.l(minus_two_rho) * double.k(minus_two_rho)))]
    result.append(_compare_tensors("alpha(L K) group-like", space, image(modular), grouplike, dimension))
    return tuple(result)
