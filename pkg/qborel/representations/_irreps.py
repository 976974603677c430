from __future__ import annotations
from typing import Any, Literal
import functools
import logging
import dataclasses
import numpy as np
import scipy.linalg
from sympy.polys.matrices import DomainMatrix
from qborel import mixins
from qborel.scalars import (
    FIELD,
    EXACT,
    AbstractScalarDomain,
    NumericDomain,
    rational,
    q_int,
    evaluate,
)
from qborel.roots import Weight, RootDatum, add_weights, sub_weights
from qborel.algebras import Word, AlgebraElement, QuantumEnvelope
from ._linalg import (
    EXACT_DOMAIN,
    exact_matrix,
    exact_zeros,
    exact_identity,
    exact_diag,
)

__all__ = [
    "RepresentationError",
    "numeric_domain",
    "verma_inner_product",
    "GradedRep",
    "build_irrep",
    "represent",
]

logger = logging.getLogger(__name__)


class RepresentationError(ArithmeticError):
    """A numerical consistency check failed while building a representation."""


@functools.lru_cache(maxsize=None)
def numeric_domain(q: Any) -> NumericDomain:
    """The (cached) numeric scalar domain at a rational value of :math:`q`."""
    return NumericDomain(q=rational(q))


def _check_weight(datum: RootDatum, weight: Weight) -> Weight:
    weight = tuple(int(c) for c in weight)
    if len(weight) != datum.rank or not datum.is_dominant(weight):
        raise ValueError(f"{weight} is not a dominant weight of rank {datum.rank}")
    return weight


def _word_weight(datum: RootDatum, highest_weight: Weight, word: Word) -> Weight:
    return sub_weights(
        highest_weight,
        add_weights(datum.zero, *(datum.simple_roots[r] for r in word)),
    )


def _raise(
    datum: RootDatum,
    highest_weight: Weight,
    r: int,
    word: Word,
    domain: AbstractScalarDomain,
) -> list[tuple[Word, Any]]:
    """Expand :math:`E_r F_w \\xi` in the vectors :math:`F_v \\xi` of the Verma module."""
    result = []
    for j, s in enumerate(word):
        if s != r:
            continue
        mu = _word_weight(datum, highest_weight, word[j + 1 :])
        value = q_int(mu[r], domain, power=datum.symmetrizer[r])
        if value:
            result.append((word[:j] + word[j + 1 :], value))
    return result


@functools.lru_cache(maxsize=None)
def verma_inner_product(
    datum: RootDatum,
    highest_weight: Weight,
    v: Word,
    w: Word,
    domain: AbstractScalarDomain = EXACT,
) -> Any:
    r"""
    The contravariant form :math:`\langle F_v \xi, F_w \xi \rangle` on the
    Verma module of highest weight :math:`\varpi`, normalized by
    :math:`\langle \xi, \xi \rangle = 1` and the adjointness
    :math:`F_r^* = K_{\alpha_r}^{-1} E_r`.

    Parameters
    ----------
    datum
        The root datum.
    highest_weight
        The highest weight :math:`\varpi`.
    v
        Word of the left vector, :math:`F_v = F_{v_0} F_{v_1} \cdots`.
    w
        Word of the right vector.
    domain
        Scalar domain of the result.
    """
    if len(v) != len(w):
        return domain.zero
    if not v:
        return domain.one
    if sorted(v) != sorted(w):
        return domain.zero
    r = v[0]
    weight = _word_weight(datum, highest_weight, w)
    alpha = datum.simple_roots[r]
    factor = domain.q_power(-datum.pair(alpha, add_weights(weight, alpha)))
    result = domain.zero
    for word, value in _raise(datum, highest_weight, r, w, domain):
        result = result + value * verma_inner_product(datum, highest_weight, v[1:], word, domain)
    return factor * result


@dataclasses.dataclass(eq=False, repr=False)
class GradedRep(
    mixins.Printable,
):
    r"""
    A weight-graded representation of :math:`U_q(\mathfrak{k})` given by
    the matrices of :math:`E_r` and :math:`F_r`, with :math:`K_\omega` acting
    by :math:`q^{(\omega, \mathrm{wt})}` on each basis vector.

    The exact flavor uses the (non-orthonormal) vectors :math:`F_w \xi_\varpi`
    as basis and stores matrices over :data:`qborel.scalars.FIELD`. The
    numeric flavor uses the orthonormal basis obtained by a Cholesky
    factorization of the contravariant form in each weight space, so that
    :math:`E_r^* = F_r K_{\alpha_r}` holds as a matrix identity.
    """

    datum: RootDatum
    """The root datum."""

    highest_weight: Weight
    """The highest weight of the representation."""

    flavor: Literal["exact", "numeric"]
    """Whether the matrices are exact or floating point."""

    q: None | Any
    """The rational value of :math:`q` in the numeric flavor."""

    weights: tuple[Weight, ...]
    """The weight of each basis vector."""

    words: tuple[Word, ...]
    """The F-word spanning each basis vector, empty for contragredients."""

    e: tuple[Any, ...] = dataclasses.field(repr=False)
    """Matrices of :math:`E_r`."""

    f: tuple[Any, ...] = dataclasses.field(repr=False)
    """Matrices of :math:`F_r`."""

    gram: None | DomainMatrix = dataclasses.field(default=None, repr=False)
    """Contravariant form of the exact basis."""

    dual: bool = False
    """Whether this is the contragredient of an irreducible representation."""

    @property
    def dimension(self) -> int:
        return len(self.weights)

    @property
    def is_exact(self) -> bool:
        return self.flavor == "exact"

    @property
    def domain(self) -> AbstractScalarDomain:
        return EXACT if self.is_exact else numeric_domain(self.q)

    @functools.cached_property
    def blocks(self) -> dict[Weight, list[int]]:
        """Indices of the basis vectors of each weight."""
        result: dict[Weight, list[int]] = {}
        for i, weight in enumerate(self.weights):
            result.setdefault(weight, []).append(i)
        return result

    def identity(self) -> Any:
        if self.is_exact:
            return exact_identity(self.dimension)
        return np.eye(self.dimension)

    def zeros(self) -> Any:
        if self.is_exact:
            return exact_zeros(self.dimension, self.dimension)
        return np.zeros((self.dimension, self.dimension))

    def k(self, weight: Weight) -> Any:
        """The diagonal matrix of :math:`K_\\omega`."""
        values = [self.domain.q_power(self.datum.pair(weight, w)) for w in self.weights]
        if self.is_exact:
            return exact_diag(values)
        return np.diag(values)

    def numeric(self, q: Any = None) -> GradedRep:
        """The numeric flavor of the same representation."""
        if not self.is_exact:
            return self
        return build_irrep(self.datum, self.highest_weight, "numeric", q)

    def check_numeric(self, operation: str) -> None:
        if self.is_exact:
            raise TypeError(f"{operation} needs the numeric flavor, radicals occur")


def _cholesky(gram: np.ndarray) -> np.ndarray:
    try:
        return scipy.linalg.cholesky(gram, lower=True)
    except np.linalg.LinAlgError as e:
        raise RepresentationError("the contravariant form is not positive definite") from e


@functools.lru_cache(maxsize=None)
def _build_exact_basis(
    datum: RootDatum,
    highest_weight: Weight,
) -> tuple[tuple[tuple[int, ...], tuple[Word, ...]], ...]:
    """
    The contents of the nonzero weight spaces and their basis words.

    Each weight space is spanned by :math:`F_r` applied to the basis of the
    weight spaces one step higher, and the contravariant form picks an
    independent subset of these words.
    """
    result = []
    bases: dict[tuple[int, ...], tuple[Word, ...]] = {datum.zero: ((),)}
    layer = [datum.zero]
    while layer:
        next_layer = set()
        for content in sorted(layer):
            if content == datum.zero:
                candidates = [()]
            else:
                candidates = set()
                for r, c in enumerate(content):
                    if not c:
                        continue
                    upper = list(content)
                    upper[r] -= 1
                    candidates.update((r,) + w for w in bases.get(tuple(upper), ()))
                candidates = sorted(candidates)
            if not candidates:
                continue
            gram = exact_matrix([
                [verma_inner_product(datum, highest_weight, v, w) for w in candidates]
                for v in candidates
            ])
            _, pivots = gram.rref()
            if not pivots:
                continue
            bases[content] = tuple(candidates[p] for p in pivots)
            result.append((content, bases[content]))
            for r in range(datum.rank):
                larger = list(content)
                larger[r] += 1
                next_layer.add(tuple(larger))
        layer = sorted(next_layer)
    logger.debug("weight spaces of %s: %s", highest_weight, [len(ws) for _, ws in result])
    return tuple(result)


@functools.lru_cache(maxsize=None)
def _build_irrep(
    datum: RootDatum,
    highest_weight: Weight,
    flavor: str,
    q: Any,
) -> GradedRep:
    domain = EXACT if flavor == "exact" else numeric_domain(q)
    layout = _build_exact_basis(datum, highest_weight)
    words = [w for _, ws in layout for w in ws]
    offsets = {}
    start = 0
    for content, ws in layout:
        offsets[content] = list(range(start, start + len(ws)))
        start += len(ws)
    n = len(words)
    weights = tuple(_word_weight(datum, highest_weight, w) for w in words)
    contents = {content: ws for content, ws in layout}

    def inner(v: Word, w: Word) -> Any:
        return verma_inner_product(datum, highest_weight, v, w, domain)

    grams = {}
    for content, ws in layout:
        values = [[inner(v, w) for w in ws] for v in ws]
        grams[content] = exact_matrix(values) if domain.is_exact else np.array(values, dtype=float)
    factors = {}
    if not domain.is_exact:
        factors = {content: _cholesky(g) for content, g in grams.items()}

    def block(target: tuple[int, ...], source: tuple[int, ...], images) -> Any:
        target_words = contents[target]
        source_words = contents[source]
        cross = [
            [
                sum((c * inner(v, u) for u, c in images(w)), domain.zero)
                for w in source_words
            ]
            for v in target_words
        ]
        if domain.is_exact:
            return grams[target].lu_solve(exact_matrix(cross))
        cross = np.array(cross, dtype=float)
        lower_target = factors[target]
        lower_source = factors[source]
        left = scipy.linalg.solve_triangular(lower_target, cross, lower=True)
        return scipy.linalg.solve_triangular(lower_source, left.T, lower=True).T

    e_matrices = []
    f_matrices = []
    for r in range(datum.rank):
        e = [[domain.zero] * n for _ in range(n)] if domain.is_exact else np.zeros((n, n))
        f = [[domain.zero] * n for _ in range(n)] if domain.is_exact else np.zeros((n, n))
        for content in contents:
            for shift, matrix, images in [
                (-1, e, lambda w, r=r: _raise(datum, highest_weight, r, w, domain)),
                (+1, f, lambda w, r=r: [((r,) + w, domain.one)]),
            ]:
                target = list(content)
                target[r] += shift
                target = tuple(target)
                if target not in contents:
                    continue
                values = block(target, content, images)
                rows = offsets[target]
                cols = offsets[content]
                if domain.is_exact:
                    values = values.to_list()
                    for i, row in enumerate(rows):
                        for j, col in enumerate(cols):
                            matrix[row][col] = values[i][j]
                else:
                    matrix[np.ix_(rows, cols)] = values
        if domain.is_exact:
            e, f = exact_matrix(e), exact_matrix(f)
        e_matrices.append(e)
        f_matrices.append(f)

    gram = None
    if domain.is_exact:
        full = [[FIELD.zero] * n for _ in range(n)]
        for content, g in grams.items():
            idx = offsets[content]
            values = g.to_list()
            for i, row in enumerate(idx):
                for j, col in enumerate(idx):
                    full[row][col] = values[i][j]
        gram = exact_matrix(full)

    logger.debug(
        "built %s irrep of highest weight %s, dimension %d",
        flavor,
        highest_weight,
        n,
    )
    return GradedRep(
        datum=datum,
        highest_weight=highest_weight,
        flavor=flavor,
        q=None if domain.is_exact else domain.q,
        weights=weights,
        words=tuple(words),
        e=tuple(e_matrices),
        f=tuple(f_matrices),
        gram=gram,
    )


def build_irrep(
    datum: RootDatum,
    highest_weight: Weight,
    flavor: Literal["exact", "numeric"] = "numeric",
    q: Any = None,
) -> GradedRep:
    r"""
    Construct (and cache) the irreducible type-I representation
    :math:`V_\varpi` as the quotient of the Verma module by the radical of
    its contravariant form.

    Parameters
    ----------
    datum
        The root datum.
    highest_weight
        A dominant weight :math:`\varpi`.
    flavor
        ``"exact"`` for matrices over :math:`\mathbb{Q}(q^{1/24})` in the
        basis :math:`F_w \xi_\varpi`, ``"numeric"`` for an orthonormal basis.
    q
        Rational value of :math:`q` for the numeric flavor, defaults to 1/2.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        datum = qborel.roots.datum_from_label("A2")
        rep = qborel.representations.build_irrep(datum, (1, 0))
        rep.weights
    """
    highest_weight = _check_weight(datum, highest_weight)
    if flavor not in ("exact", "numeric"):
        raise ValueError(f"unknown flavor {flavor!r}")
    if flavor == "exact":
        return _build_irrep(datum, highest_weight, "exact", None)
    q = rational("1/2" if q is None else q)
    numeric_domain(q)
    return _build_irrep(datum, highest_weight, "numeric", q)


def represent(rep: GradedRep, x: AlgebraElement) -> Any:
    """
    The matrix of an element of :math:`U_q(\\mathfrak{g})` in a representation.

    Parameters
    ----------
    rep
        The representation.
    x
        An element of :func:`qborel.algebras.quantum_envelope`.
    """
    if not isinstance(x.presentation, QuantumEnvelope):
        raise TypeError(f"cannot represent an element of {x.presentation.name}")
    result = rep.zeros()
    for (fword, (weight,), eword), c in x.terms.items():
        term = rep.k(weight)
        for r in reversed(fword):
            term = rep.f[r] * term if rep.is_exact else rep.f[r] @ term
        for r in eword:
            term = term * rep.e[r] if rep.is_exact else term @ rep.e[r]
        if rep.is_exact:
            result = result + term * EXACT_DOMAIN.convert(c)
        else:
            result = result + evaluate(c, rep.q) * term
    return result
