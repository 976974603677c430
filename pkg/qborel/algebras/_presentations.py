"""
Triangular presentations of the quantized enveloping algebra and of its
Drinfeld and Heisenberg doubles.
"""

from __future__ import annotations
from typing import Any, TypeAlias
import abc
import functools
import logging
import dataclasses
from qborel import mixins
from qborel.scalars import FIELD, ExactScalar, q_power, q_r
from qborel.roots import Weight, RootDatum, add_weights, scale_weight
from ._serre import Word, reduce_word
from ._element import Cartan, Monomial, AlgebraElement, add_terms

__all__ = [
    "Letter",
    "AbstractPresentation",
    "QuantumEnvelope",
    "DrinfeldDouble",
    "HeisenbergDouble",
    "HeisenbergDoubleTilde",
    "quantum_envelope",
    "drinfeld_double",
    "heisenberg_double",
    "heisenberg_double_tilde",
]

logger = logging.getLogger(__name__)

Letter: TypeAlias = tuple
"""A generator: ``("F", r)``, ``("E", r)`` or ``("X", family, weight)``."""


@dataclasses.dataclass(eq=False, repr=False)
class AbstractPresentation(
    mixins.Printable,
    abc.ABC,
):
    r"""
    An algebra generated by Cartan families :math:`X_\omega`, :math:`\omega \in P`,
    and letters :math:`E_r`, :math:`F_r` with a triangular normal form
    :math:`F_v X_\omega E_w`.

    A presentation is fixed by the exchange exponents between the Cartan
    families, the exponents :math:`\lambda, \mu` in

    .. math::

        X_\omega E_r = q^{\lambda (\omega, \alpha_r)} E_r X_\omega, \qquad
        X_\omega F_r = q^{\mu (\omega, \alpha_r)} F_r X_\omega,

    the commutator :math:`[E_r, F_r]` and the quantum Serre relations among
    the :math:`E_r` and among the :math:`F_r`.
    """

    datum: RootDatum
    """The root datum."""

    _ef_cache: dict = dataclasses.field(default_factory=dict, init=False, repr=False)

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """Human readable name of the algebra."""

    @property
    @abc.abstractmethod
    def families(self) -> tuple[str, ...]:
        """Names of the Cartan families, in normal order."""

    @property
    @abc.abstractmethod
    def exchange(self) -> tuple[tuple[int, ...], ...]:
        """
        ``exchange[i][j]`` for ``i > j`` is the exponent :math:`\\kappa` in
        :math:`X^i_a X^j_b = q^{\\kappa (a, b)} X^j_b X^i_a`.
        """

    @property
    @abc.abstractmethod
    def e_exponents(self) -> tuple[int, ...]:
        """The exponent :math:`\\lambda` of each family."""

    @property
    @abc.abstractmethod
    def f_exponents(self) -> tuple[int, ...]:
        """The exponent :math:`\\mu` of each family."""

    @abc.abstractmethod
    def commutator(self, r: int) -> dict[Cartan, ExactScalar]:
        """The Cartan element :math:`E_r F_r - F_r E_r`."""

    # generators

    @property
    def zero_cartan(self) -> Cartan:
        return (self.datum.zero,) * len(self.families)

    def _family_index(self, family: int | str) -> int:
        if isinstance(family, str):
            try:
                return self.families.index(family)
            except ValueError:
                raise TypeError(f"{self.name} has no Cartan family {family!r}") from None
        if not 0 <= family < len(self.families):
            raise ValueError(f"family index {family} out of range")
        return family

    def _check_root(self, r: int) -> int:
        if not 0 <= r < self.datum.rank:
            raise ValueError(f"simple root index {r} out of range for rank {self.datum.rank}")
        return r

    def element(self, terms: dict[Monomial, ExactScalar]) -> AlgebraElement:
        return AlgebraElement(presentation=self, terms=terms)

    def zero(self) -> AlgebraElement:
        return self.element({})

    def scalar(self, value: Any) -> AlgebraElement:
        value = FIELD.one * value
        if not value:
            return self.zero()
        return self.element({((), self.zero_cartan, ()): value})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def e(self, r: int) -> AlgebraElement:
        return self.element({((), self.zero_cartan, (self._check_root(r),)): FIELD.one})

    def f(self, r: int) -> AlgebraElement:
        return self.element({((self._check_root(r),), self.zero_cartan, ()): FIELD.one})

    def cartan(self, family: int | str, weight: Weight) -> AlgebraElement:
        """The grouplike :math:`X_\\omega` of a Cartan family."""
        i = self._family_index(family)
        weight = tuple(int(c) for c in weight)
        if len(weight) != self.datum.rank:
            raise ValueError(f"weight {weight} does not have rank {self.datum.rank}")
        cartan = tuple(weight if j == i else self.datum.zero for j in range(len(self.families)))
        return self.element({((), cartan, ()): FIELD.one})

    def k(self, weight: Weight) -> AlgebraElement:
        """The element :math:`K_\\omega`."""
        return self.cartan("K", weight)

    def l(self, weight: Weight) -> AlgebraElement:
        """The element :math:`L_\\omega`."""
        return self.cartan("L", weight)

    def letters(self, monomial: Monomial) -> list[Letter]:
        """Factor a monomial into generators, in order."""
        fword, cartan, eword = monomial
        result: list[Letter] = [("F", r) for r in fword]
        result += [("X", i, w) for i, w in enumerate(cartan) if any(w)]
        result += [("E", r) for r in eword]
        return result

    def letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "E":
            return self.e(letter[1])
        if letter[0] == "F":
            return self.f(letter[1])
        return self.cartan(letter[1], letter[2])

    # normal ordering

    def word_weight(self, word: Word) -> Weight:
        datum = self.datum
        return add_weights(datum.zero, *(datum.simple_roots[r] for r in word))

    def _cartan_exponent(self, a: Cartan, b: Cartan) -> Any:
        x = 0
        for i in range(len(a)):
            for j in range(i):
                kappa = self.exchange[i][j]
                if kappa:
                    x += kappa * self.datum.pair(a[i], b[j])
        return x

    def _cartan_letter_exponent(self, exponents, cartan: Cartan, weight: Weight) -> Any:
        x = 0
        for c, w in zip(exponents, cartan):
            if c:
                x += c * self.datum.pair(w, weight)
        return x

    @staticmethod
    def _cartan_sum(*cartans: Cartan) -> Cartan:
        return tuple(add_weights(*ws) for ws in zip(*cartans))

    def _commute_ef(self, eword: Word, fword: Word) -> dict[Monomial, ExactScalar]:
        key = (eword, fword)
        if key in self._ef_cache:
            return self._ef_cache[key]
        if not eword or not fword:
            result = {(fword, self.zero_cartan, eword): FIELD.one}
            self._ef_cache[key] = result
            return result
        r = eword[-1]
        head = eword[:-1]
        result: dict[Monomial, ExactScalar] = {}
        for (f2, c2, e2), coefficient in self._commute_ef(head, fword).items():
            add_terms(result, {(f2, c2, e2 + (r,)): coefficient})
        for j, s in enumerate(fword):
            if s != r:
                continue
            tail = self.word_weight(fword[j + 1 :])
            rest = fword[:j] + fword[j + 1 :]
            for c, cc in self.commutator(r).items():
                factor = cc * q_power(self._cartan_letter_exponent(self.f_exponents, c, tail))
                for (f2, c2, e2), coefficient in self._commute_ef(head, rest).items():
                    x = self._cartan_exponent(c2, c) - self._cartan_letter_exponent(
                        self.e_exponents, c, self.word_weight(e2)
                    )
                    add_terms(
                        result,
                        {(f2, self._cartan_sum(c2, c), e2): coefficient * factor * q_power(x)},
                    )
        self._ef_cache[key] = result
        return result

    def _reduce(self, terms: dict[Monomial, ExactScalar]) -> dict[Monomial, ExactScalar]:
        result: dict[Monomial, ExactScalar] = {}
        for (fword, cartan, eword), coefficient in terms.items():
            freduced = reduce_word(self.datum, fword)
            ereduced = reduce_word(self.datum, eword)
            for f2, cf in freduced.items():
                for e2, ce in ereduced.items():
                    add_terms(result, {(f2, cartan, e2): coefficient * cf * ce})
        return result

    def multiply_monomials(self, m1: Monomial, m2: Monomial) -> dict[Monomial, ExactScalar]:
        """The normal form of the product of two normal-ordered monomials."""
        f1, c1, e1 = m1
        f2, c2, e2 = m2
        result: dict[Monomial, ExactScalar] = {}
        for (f3, c3, e3), coefficient in self._commute_ef(e1, f2).items():
            x = (
                self._cartan_letter_exponent(self.f_exponents, c1, self.word_weight(f3))
                - self._cartan_letter_exponent(self.e_exponents, c2, self.word_weight(e3))
                + self._cartan_exponent(c1, c3)
                + self._cartan_exponent(self._cartan_sum(c1, c3), c2)
            )
            add_terms(
                result,
                {(f1 + f3, self._cartan_sum(c1, c3, c2), e3 + e2): coefficient * q_power(x)},
            )
        return self._reduce(result)

    # structure maps on generators, extended by qborel.algebras.coproduct etc.

    def _undefined(self, what: str):
        raise TypeError(f"{what} is not defined on {self.name}")

    def coproduct_letter(self, letter: Letter):
        self._undefined("the coproduct")

    def counit_letter(self, letter: Letter) -> ExactScalar:
        self._undefined("the counit")

    def antipode_letter(self, letter: Letter) -> AlgebraElement:
        self._undefined("the antipode")

    def unitary_antipode_letter(self, letter: Letter) -> AlgebraElement:
        self._undefined("the unitary antipode")

    def star_letter(self, letter: Letter) -> AlgebraElement:
        self._undefined("the star operation")

    def _alpha(self, r: int) -> Weight:
        return self.datum.simple_roots[r]

    def _q_r(self, r: int) -> ExactScalar:
        return q_r(self.datum, r)

    def _denominator(self, r: int) -> ExactScalar:
        return self._q_r(r) - 1 / self._q_r(r)


@dataclasses.dataclass(eq=False, repr=False)
class QuantumEnvelope(
    AbstractPresentation,
):
    r"""
    The quantized enveloping algebra :math:`U_q(\mathfrak{g})`, with the
    compact real form :math:`U_q(\mathfrak{k})` as its star structure
    :math:`E_r^* = F_r K_{\alpha_r}`.

    .. math::

        E_r F_s - F_s E_r = \delta_{rs}
            \frac{K_{\alpha_r} - K_{\alpha_r}^{-1}}{q_r - q_r^{-1}}.
    """

    @property
    def name(self) -> str:
        return f"U_q(g) [{self.datum.label}]"

    @property
    def families(self) -> tuple[str, ...]:
        return ("K",)

    @property
    def exchange(self) -> tuple[tuple[int, ...], ...]:
        return ((0,),)

    @property
    def e_exponents(self) -> tuple[int, ...]:
        return (1,)

    @property
    def f_exponents(self) -> tuple[int, ...]:
        return (-1,)

    def commutator(self, r: int) -> dict[Cartan, ExactScalar]:
        alpha = self._alpha(r)
        c = 1 / self._denominator(r)
        return {(alpha,): c, (scale_weight(-1, alpha),): -c}

    def counit_letter(self, letter: Letter) -> ExactScalar:
        return FIELD.one if letter[0] == "X" else FIELD.zero

    def coproduct_letter(self, letter: Letter):
        from ._tensor import tensor

        if letter[0] == "X":
            x = self.letter(letter)
            return tensor(x, x)
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return tensor(self.e(r), self.k(alpha)) + tensor(self.one(), self.e(r))
        return tensor(self.f(r), self.one()) + tensor(self.k(scale_weight(-1, alpha)), self.f(r))

    def antipode_letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "X":
            return self.cartan(letter[1], scale_weight(-1, letter[2]))
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return -(self.e(r) * self.k(scale_weight(-1, alpha)))
        return -(self.k(alpha) * self.f(r))

    def unitary_antipode_letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "X":
            return self.cartan(letter[1], scale_weight(-1, letter[2]))
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return -(self.e(r) * self.k(scale_weight(-1, alpha))) / self._q_r(r)
        return -(self.k(alpha) * self.f(r)) * self._q_r(r)

    def star_letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "X":
            return self.letter(letter)
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return self.f(r) * self.k(alpha)
        return self.k(scale_weight(-1, alpha)) * self.e(r)


@dataclasses.dataclass(eq=False, repr=False)
class _AbstractDouble(
    AbstractPresentation,
):
    """Shared star structure of the doubles, :math:`K_\\omega^* = L_\\omega`."""

    @property
    def families(self) -> tuple[str, ...]:
        return ("K", "L")

    def star_letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "X":
            return self.cartan(1 - letter[1], letter[2])
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return self.f(r) * self.l(alpha)
        return self.k(scale_weight(-1, alpha)) * self.e(r)


@dataclasses.dataclass(eq=False, repr=False)
class DrinfeldDouble(
    _AbstractDouble,
):
    r"""
    The Drinfeld double :math:`U_q^+(\mathfrak{b}_\mathbb{R})` of the Borel
    halves :math:`U_q(\mathfrak{b}) = \langle K_\omega, E_r \rangle` and
    :math:`U_q(\mathfrak{b}^-) = \langle L_\omega, F_r \rangle`.

    .. math::

        E_r F_s - F_s E_r = \delta_{rs}
            \frac{K_{\alpha_r} - L_{\alpha_r}^{-1}}{q_r - q_r^{-1}}.
    """

    @property
    def name(self) -> str:
        return f"U_q^+(b_R) [{self.datum.label}]"

    @property
    def exchange(self) -> tuple[tuple[int, ...], ...]:
        return ((0, 0), (0, 0))

    @property
    def e_exponents(self) -> tuple[int, ...]:
        return (1, 1)

    @property
    def f_exponents(self) -> tuple[int, ...]:
        return (-1, -1)

    def commutator(self, r: int) -> dict[Cartan, ExactScalar]:
        alpha = self._alpha(r)
        zero = self.datum.zero
        c = 1 / self._denominator(r)
        return {(alpha, zero): c, (zero, scale_weight(-1, alpha)): -c}

    def counit_letter(self, letter: Letter) -> ExactScalar:
        return FIELD.one if letter[0] == "X" else FIELD.zero

    def coproduct_letter(self, letter: Letter):
        from ._tensor import tensor

        if letter[0] == "X":
            x = self.letter(letter)
            return tensor(x, x)
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return tensor(self.e(r), self.k(alpha)) + tensor(self.one(), self.e(r))
        return tensor(self.f(r), self.one()) + tensor(self.l(scale_weight(-1, alpha)), self.f(r))

    def antipode_letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "X":
            return self.cartan(letter[1], scale_weight(-1, letter[2]))
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return -(self.e(r) * self.k(scale_weight(-1, alpha)))
        return -(self.l(alpha) * self.f(r))


@dataclasses.dataclass(eq=False, repr=False)
class HeisenbergDouble(
    _AbstractDouble,
):
    r"""
    The Galois object :math:`U_q^0(\mathfrak{b}_\mathbb{R})`, the Heisenberg
    double of the Borel halves, with

    .. math::

        K_\omega L_\chi = q^{-2(\omega, \chi)} L_\chi K_\omega, \qquad
        E_r F_s - F_s E_r = -\delta_{rs}
            \frac{L_{\alpha_r}^{-1}}{q_r - q_r^{-1}}.
    """

    @property
    def name(self) -> str:
        return f"U_q^0(b_R) [{self.datum.label}]"

    @property
    def exchange(self) -> tuple[tuple[int, ...], ...]:
        return ((0, 0), (2, 0))

    @property
    def e_exponents(self) -> tuple[int, ...]:
        return (1, 1)

    @property
    def f_exponents(self) -> tuple[int, ...]:
        return (1, -1)

    def commutator(self, r: int) -> dict[Cartan, ExactScalar]:
        alpha = self._alpha(r)
        return {(self.datum.zero, scale_weight(-1, alpha)): -1 / self._denominator(r)}


@dataclasses.dataclass(eq=False, repr=False)
class HeisenbergDoubleTilde(
    AbstractPresentation,
):
    r"""
    The extension :math:`\tilde{U}_q^0(\mathfrak{b}_\mathbb{R})` generated by
    unitaries :math:`U_\omega`, positive elements :math:`Z_\omega` and the
    :math:`E_r, F_r`, with

    .. math::

        Z_\chi U_\omega = q^{-(\omega, \chi)} U_\omega Z_\chi, \qquad
        K_\omega = q^{-(\omega,\omega)/2} Z_\omega U_{-\omega}, \qquad
        L_\omega = q^{-(\omega,\omega)/2} U_\omega Z_\omega.

    The elements :math:`X_r = U_{\alpha_r} E_r` generate a copy of
    :math:`U_q^0(\mathfrak{n}_\mathbb{R})`, see :meth:`x`.
    """

    @property
    def name(self) -> str:
        return f"U~_q^0(b_R) [{self.datum.label}]"

    @property
    def families(self) -> tuple[str, ...]:
        return ("U", "Z")

    @property
    def exchange(self) -> tuple[tuple[int, ...], ...]:
        return ((0, 0), (-1, 0))

    @property
    def e_exponents(self) -> tuple[int, ...]:
        return (0, 1)

    @property
    def f_exponents(self) -> tuple[int, ...]:
        return (-1, 0)

    def _half_norm(self, weight: Weight) -> Any:
        return self.datum.pair(weight, weight) / 2

    def commutator(self, r: int) -> dict[Cartan, ExactScalar]:
        minus = scale_weight(-1, self._alpha(r))
        c = -q_power(-self._half_norm(minus)) / self._denominator(r)
        return {(minus, minus): c}

    def u(self, weight: Weight) -> AlgebraElement:
        return self.cartan("U", weight)

    def z(self, weight: Weight) -> AlgebraElement:
        return self.cartan("Z", weight)

    def k(self, weight: Weight) -> AlgebraElement:
        weight = tuple(weight)
        return self.u(scale_weight(-1, weight)) * self.z(weight) * q_power(self._half_norm(weight))

    def l(self, weight: Weight) -> AlgebraElement:
        weight = tuple(weight)
        return self.u(weight) * self.z(weight) * q_power(-self._half_norm(weight))

    def x(self, r: int) -> AlgebraElement:
        """The generator :math:`X_r = U_{\\alpha_r} E_r` of :math:`U_q^0(\\mathfrak{n}_\\mathbb{R})`."""
        return self.u(self._alpha(r)) * self.e(r)

    def star_letter(self, letter: Letter) -> AlgebraElement:
        if letter[0] == "X":
            if letter[1] == 0:
                return self.u(scale_weight(-1, letter[2]))
            return self.letter(letter)
        r = letter[1]
        alpha = self._alpha(r)
        if letter[0] == "E":
            return self.f(r) * self.l(alpha)
        return self.k(scale_weight(-1, alpha)) * self.e(r)


@functools.lru_cache(maxsize=None)
def quantum_envelope(datum: RootDatum) -> QuantumEnvelope:
    """The (cached) presentation of :math:`U_q(\\mathfrak{g})` for a root datum."""
    return QuantumEnvelope(datum=datum)


@functools.lru_cache(maxsize=None)
def drinfeld_double(datum: RootDatum) -> DrinfeldDouble:
    """The (cached) presentation of :math:`U_q^+(\\mathfrak{b}_\\mathbb{R})`."""
    return DrinfeldDouble(datum=datum)


@functools.lru_cache(maxsize=None)
def heisenberg_double(datum: RootDatum) -> HeisenbergDouble:
    """The (cached) presentation of :math:`U_q^0(\\mathfrak{b}_\\mathbb{R})`."""
    return HeisenbergDouble(datum=datum)


@functools.lru_cache(maxsize=None)
def heisenberg_double_tilde(datum: RootDatum) -> HeisenbergDoubleTilde:
    """The (cached) presentation of :math:`\\tilde{U}_q^0(\\mathfrak{b}_\\mathbb{R})`."""
    return HeisenbergDoubleTilde(datum=datum)
