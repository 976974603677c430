"""
The irreducible type-I representations of :math:`U_q(\\mathfrak{k})`, their
braid operators, contragredients and rank-one restrictions.
"""

from ._linalg import (
    EXACT_DOMAIN,
    exact_matrix,
    exact_zeros,
    exact_identity,
    exact_diag,
    to_numeric,
    kernel,
    is_exact,
)
from ._irreps import (
    RepresentationError,
    numeric_domain,
    verma_inner_product,
    GradedRep,
    build_irrep,
    represent,
)
from ._braid import (
    braid_operator,
    longest_braid_operator,
    lowest_weight_vector,
)
from ._contragredient import (
    contragredient,
    intertwiner,
    contragredient_intertwiner,
)
from ._su2 import (
    Su2Restriction,
    su2_restriction,
)

__all__ = [
    "EXACT_DOMAIN",
    "exact_matrix",
    "exact_zeros",
    "exact_identity",
    "exact_diag",
    "to_numeric",
    "kernel",
    "is_exact",
    "RepresentationError",
    "numeric_domain",
    "verma_inner_product",
    "GradedRep",
    "build_irrep",
    "represent",
    "braid_operator",
    "longest_braid_operator",
    "lowest_weight_vector",
    "contragredient",
    "intertwiner",
    "contragredient_intertwiner",
    "Su2Restriction",
    "su2_restriction",
]
