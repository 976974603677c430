"""
Finite-dimensional multiplicative unitaries of a finite abelian group, the
Heisenberg double as a Galois object for :math:`\\hat{M} \\otimes M`, its
Galois unitary, its adjoint coaction and the biduality between the two.
"""

from ._legs import (
    legs,
    permutation,
    flip,
    max_entry,
)
from ._group import (
    FiniteAbelianGroup,
    parse_group,
)
from ._system import (
    MAX_ORDER,
    IdentityCheck,
    MUSystem,
    build_system,
    system_checks,
)
from ._heisenberg import (
    HeisenbergDouble,
    heisenberg_double,
    GaloisUnitary,
    galois_unitary,
    galois_checks,
    adjoint_coaction,
    adjoint_checks,
    matrix_units,
)
from ._duality import (
    Coaction,
    gns_galois_unitary,
    implemented_coaction,
    fixed_point_dimension,
    invariant_functionals,
    BidualityReport,
    biduality_check,
    WeightReport,
    weight_correspondence_check,
)

__all__ = [
    "legs",
    "permutation",
    "flip",
    "max_entry",
    "FiniteAbelianGroup",
    "parse_group",
    "MAX_ORDER",
    "IdentityCheck",
    "MUSystem",
    "build_system",
    "system_checks",
    "HeisenbergDouble",
    "heisenberg_double",
    "GaloisUnitary",
    "galois_unitary",
    "galois_checks",
    "adjoint_coaction",
    "adjoint_checks",
    "matrix_units",
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
