"""
The Galois object :math:`U_q^0(\\mathfrak{b}_\\mathbb{R})` of the Drinfeld
double, its adjoint action, and its realization by implementing elements in
:math:`\\mathrm{Fun}_q^0(AK)_{\\mathrm{loc}}`.
"""

from ._coaction import (
    coaction_alpha,
    canonical_map,
    GaloisRank,
    canonical_map_rank,
    adjoint_action,
)
from ._implementing import (
    abs_b_element,
    u_element,
    z_element,
    implementing_e,
    implementing_f,
    implementing_k,
    implementing_l,
    implementing_x,
    pi_tilde,
    pi_heisenberg,
    implemented_adjoint_action,
)

__all__ = [
    "coaction_alpha",
    "canonical_map",
    "GaloisRank",
    "canonical_map_rank",
    "adjoint_action",
    "abs_b_element",
    "u_element",
    "z_element",
    "implementing_e",
    "implementing_f",
    "implementing_k",
    "implementing_l",
    "implementing_x",
    "pi_tilde",
    "pi_heisenberg",
    "implemented_adjoint_action",
]
