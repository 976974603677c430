from __future__ import annotations
from typing import Any, TYPE_CHECKING
from ._field import AbstractScalarDomain, EXACT

if TYPE_CHECKING:
    from qborel.roots import RootDatum

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_r",
]


def q_int(
    n: int,
    domain: AbstractScalarDomain = EXACT,
    power: Any = 1,
) -> Any:
    r"""
    The symmetric :math:`q`-integer

    .. math::

        [n]_q = \frac{q^{-n} - q^{n}}{q^{-1} - q}.

    Parameters
    ----------
    n
        Any integer, :math:`[-n]_q = -[n]_q`.
    domain
        The scalar domain of the result.
    power
        Compute :math:`[n]_{q^p}` instead, used for the root-dependent
        parameters :math:`q_r`.

    Examples
    --------

    .. jupyter-execute::

        import qborel

        qborel.scalars.q_int(3)
    """
    n = int(n)
    if n == 0:
        return domain.zero
    sign = 1 if n > 0 else -1
    n = abs(n)
    result = domain.zero
    for k in range(n):
        result = result + domain.q_power(power * (n - 1 - 2 * k))
    return sign * result


def q_factorial(
    n: int,
    domain: AbstractScalarDomain = EXACT,
    power: Any = 1,
) -> Any:
    """
    The :math:`q`-factorial :math:`[n]_q! = [n]_q [n-1]_q \\cdots [1]_q`.

    Parameters
    ----------
    n
        A nonnegative integer.
    domain
        The scalar domain of the result.
    power
        Compute the factorial in base :math:`q^p`.
    """
    if n < 0:
        raise ValueError(f"q-factorial of the negative integer {n} is undefined")
    result = domain.one
    for k in range(2, n + 1):
        result = result * q_int(k, domain, power)
    return result


def q_binomial(
    n: int,
    k: int,
    domain: AbstractScalarDomain = EXACT,
    power: Any = 1,
) -> Any:
    """
    Gaussian binomial coefficient :math:`[n]!/([k]![n-k]!)`.

    Parameters
    ----------
    n
        Upper index.
    k
        Lower index, zero outside :math:`0 \\le k \\le n`.
    domain
        The scalar domain of the result.
    power
        Compute the coefficient in base :math:`q^p`.
    """
    if k < 0 or k > n:
        return domain.zero
    return q_factorial(n, domain, power) / (
        q_factorial(k, domain, power) * q_factorial(n - k, domain, power)
    )


def q_r(
    datum: RootDatum,
    r: int,
    domain: AbstractScalarDomain = EXACT,
) -> Any:
    r"""
    The parameter :math:`q_r = q^{(\alpha_r, \alpha_r)/2}` of a simple root.

    Parameters
    ----------
    datum
        The root datum.
    r
        Zero-based index of the simple root.
    domain
        The scalar domain of the result.
    """
    if not 0 <= r < datum.rank:
        raise ValueError(f"simple root index {r} out of range for rank {datum.rank}")
    return domain.q_power(datum.symmetrizer[r])
