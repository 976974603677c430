"""
Truncated Hilbert space models: the representations :math:`\\theta_r` and
:math:`\\theta_{w_0}` of :math:`\\mathrm{Pol}_q(K)`, the action of
:math:`\\mathrm{Fun}_q^0(AK)_{\\mathrm{loc}}` on :math:`L^2_{\\mathrm{hol},q}(B)_0`,
the Fock representation of :math:`U_q^0(\\mathfrak{n}_\\mathbb{R})`, the trace
formula for the Haar state, and the window checks of the Galois object.
"""

from ._space import (
    HilbertModelError,
    TruncatedSpace,
    TruncatedOperator,
)
from ._theta import (
    rank_one_generators,
    spin_matrix,
    theta_root,
    theta_w0,
    theta_rank1,
)
from ._model import (
    BigCell,
    big_cell,
    lift,
    pol_action,
    full_B_action,
    fock_action,
)
from ._fock import (
    FockLetter,
    fock_generator,
    fock_rep,
    highest_weight_gram,
    skew_pairing_gram,
    CyclicityRank,
    cyclicity_rank,
    fock_word_rank,
    boundedness_sequence,
)
from ._trace import (
    HaarTrace,
    haar_trace_formula,
    phi_ad,
    psi_ad,
)
from ._checks import (
    WindowCheck,
    heisenberg_relation_checks,
    translation_equals_adjoint_check,
    intertwiner_check,
    generation_check,
    coaction_matrix_check,
)

__all__ = [
    "HilbertModelError",
    "TruncatedSpace",
    "TruncatedOperator",
    "rank_one_generators",
    "spin_matrix",
    "theta_root",
    "theta_w0",
    "theta_rank1",
    "BigCell",
    "big_cell",
    "lift",
    "pol_action",
    "full_B_action",
    "fock_action",
    "FockLetter",
    "fock_generator",
    "fock_rep",
    "highest_weight_gram",
    "skew_pairing_gram",
    "CyclicityRank",
    "cyclicity_rank",
    "fock_word_rank",
    "boundedness_sequence",
    "HaarTrace",
    "haar_trace_formula",
    "phi_ad",
    "psi_ad",
    "WindowCheck",
    "heisenberg_relation_checks",
    "translation_equals_adjoint_check",
    "intertwiner_check",
    "generation_check",
    "coaction_matrix_check",
]
