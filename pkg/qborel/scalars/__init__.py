"""
Exact rational functions in :math:`q`, numeric scalars at fixed :math:`q`,
and the :math:`q`-numbers built from them.
"""

from ._field import (
    EXPONENT_DENOMINATOR,
    FIELD,
    T,
    Q,
    ExactScalar,
    NumericScalar,
    rational,
    q_power,
    evaluate,
    random_exact,
    AbstractScalarDomain,
    ExactDomain,
    NumericDomain,
    EXACT,
)
from ._qnumbers import (
    q_int,
    q_factorial,
    q_binomial,
    q_r,
)

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
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_r",
]
