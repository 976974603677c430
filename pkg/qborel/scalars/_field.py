"""
The exact field of rational functions in :math:`q` and the numeric domain
obtained by fixing :math:`q \\in (0, 1)`.
"""

from __future__ import annotations
from typing import Any, TypeAlias
import abc
import dataclasses
import numpy as np
from sympy import QQ
from sympy.polys.fields import field, FracElement
from qborel import mixins

__all__ = [
    "EXPONENT_DENOMINATOR",
    "FIELD",
    "T",
    "Q",
    "ExactScalar",
    "NumericScalar",
    "rational",
    "q_power",
    "evaluate",
    "random_exact",
    "AbstractScalarDomain",
    "ExactDomain",
    "NumericDomain",
    "EXACT",
]

EXPONENT_DENOMINATOR = 24
"""
Every exponent of :math:`q` that occurs is an integer multiple of
:math:`1/24`, so exact scalars are stored as rational functions of
:math:`t = q^{1/24}`.
"""

FIELD, T = field("t", QQ)
Q = T**EXPONENT_DENOMINATOR

ExactScalar: TypeAlias = FracElement
NumericScalar: TypeAlias = float | complex


def rational(value: Any) -> Any:
    """
    Convert an integer, a string like ``"1/2"``, or a rational number
    into an element of :data:`sympy.QQ`.

    Parameters
    ----------
    value
        The value to convert.
    """
    if isinstance(value, str):
        num, _, den = value.strip().partition("/")
        try:
            return QQ(int(num), int(den) if den else 1)
        except ValueError:
            raise ValueError(f"malformed rational number {value!r}") from None
    if isinstance(value, float):
        raise ValueError(f"refusing to convert the float {value} to a rational")
    return QQ.convert(value)


def q_power(exponent: Any) -> ExactScalar:
    r"""
    Return :math:`q^x` as an exact scalar.

    Parameters
    ----------
    exponent
        A rational number :math:`x` such that :math:`24x` is an integer.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        qborel.scalars.q_power(qborel.scalars.rational("1/2"))
    """
    x = rational(exponent) * EXPONENT_DENOMINATOR
    if x.denominator != 1:
        raise ValueError(
            f"q^{exponent} is outside the field, "
            f"exponents must be multiples of 1/{EXPONENT_DENOMINATOR}"
        )
    return T ** int(x.numerator)


def _evaluate_poly(poly, t: float) -> float:
    # sparse Horner scheme, highest exponent first
    result = 0.0
    previous = None
    for (e,), c in sorted(poly.terms(), reverse=True):
        if previous is not None:
            result *= t ** (previous - e)
        result += float(c)
        previous = e
    if previous:
        result *= t**previous
    return result


def evaluate(x: ExactScalar | int, q: Any) -> float:
    """
    Evaluate an exact scalar at a rational value of :math:`q`.

    Numerator and denominator are kept in lowest terms by the field
    arithmetic and are evaluated separately with Horner's scheme.

    Parameters
    ----------
    x
        The exact scalar.
    q
        A rational number strictly between 0 and 1.
    """
    if not isinstance(x, FracElement):
        return float(x)
    t = float(rational(q)) ** (1 / EXPONENT_DENOMINATOR)
    return _evaluate_poly(x.numer, t) / _evaluate_poly(x.denom, t)


def random_exact(
    rng: np.random.Generator,
    degree: int = 3,
    exponent_range: int = 48,
) -> ExactScalar:
    """
    Draw a random nonzero exact scalar. The numerator is a random Laurent
    polynomial in :math:`t` with small integer coefficients and the
    denominator a monomial times factors :math:`1 - q^k`, so that its value
    stays away from zero for every :math:`q` in :math:`(0, 1)`.

    Parameters
    ----------
    rng
        The random number generator.
    degree
        Number of terms in the numerator and of factors in the denominator.
    exponent_range
        Exponents are drawn from ``[-exponent_range, exponent_range]``.
    """

    def poly():
        result = FIELD.zero
        while not result:
            for _ in range(degree):
                c = int(rng.integers(-5, 6))
                e = int(rng.integers(-exponent_range, exponent_range + 1))
                result += c * T**e
        return result

    denominator = T ** int(rng.integers(-exponent_range, exponent_range + 1))
    for _ in range(degree):
        k = int(rng.integers(1, 4))
        denominator *= 1 - T ** (EXPONENT_DENOMINATOR * k)
    return poly() / denominator


@dataclasses.dataclass(eq=False, repr=False)
class AbstractScalarDomain(
    mixins.Printable,
    abc.ABC,
):
    """
    Interface shared by the exact and the numeric scalar domains.
    """

    @property
    @abc.abstractmethod
    def zero(self) -> Any:
        """The additive identity."""

    @property
    @abc.abstractmethod
    def one(self) -> Any:
        """The multiplicative identity."""

    @abc.abstractmethod
    def q_power(self, exponent: Any) -> Any:
        """Return :math:`q^x` in this domain."""

    @abc.abstractmethod
    def from_rational(self, value: Any) -> Any:
        """Embed a rational number."""

    @abc.abstractmethod
    def to_float(self, value: Any) -> NumericScalar:
        """Return the numeric value of an element of this domain."""

    @property
    @abc.abstractmethod
    def is_exact(self) -> bool:
        """Whether equality in this domain is decidable exactly."""


@dataclasses.dataclass(eq=False, repr=False)
class ExactDomain(
    AbstractScalarDomain,
):
    """
    The field :math:`\\mathbb{Q}(q^{1/24})`.
    """

    @property
    def zero(self) -> ExactScalar:
        return FIELD.zero

    @property
    def one(self) -> ExactScalar:
        return FIELD.one

    def q_power(self, exponent: Any) -> ExactScalar:
        return q_power(exponent)

    def from_rational(self, value: Any) -> ExactScalar:
        return FIELD.ground_new(rational(value))

    def to_float(self, value: Any) -> NumericScalar:
        raise TypeError("an exact scalar has no value until q is fixed")

    @property
    def is_exact(self) -> bool:
        return True


@dataclasses.dataclass(eq=False, repr=False)
class NumericDomain(
    AbstractScalarDomain,
):
    """
    Floating point scalars at a fixed rational value of :math:`q`.
    """

    q: Any = dataclasses.field(default_factory=lambda: QQ(1, 2))
    """The deformation parameter, a rational number in :math:`(0, 1)`."""

    def __post_init__(self):
        self.q = rational(self.q)
        if not (0 < self.q < 1):
            raise ValueError(f"q must lie strictly between 0 and 1, got {self.q}")

    @property
    def q_float(self) -> float:
        return float(self.q)

    @property
    def zero(self) -> float:
        return 0.0

    @property
    def one(self) -> float:
        return 1.0

    def q_power(self, exponent: Any) -> float:
        return self.q_float ** float(rational(exponent))

    def from_rational(self, value: Any) -> float:
        return float(rational(value))

    def to_float(self, value: Any) -> NumericScalar:
        if isinstance(value, FracElement):
            return evaluate(value, self.q)
        return value

    @property
    def is_exact(self) -> bool:
        return False


EXACT = ExactDomain()
