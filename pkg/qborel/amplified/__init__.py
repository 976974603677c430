"""
The amplified function algebras :math:`\\mathrm{Fun}_q^+(AK)` and
:math:`\\mathrm{Fun}_q^0(AK)_{\\mathrm{loc}}`, their invariant integrals, the
coproduct and coaction, and the pairing with
:math:`U_q^+(\\mathfrak{b}_\\mathbb{R})`.
"""

from ._lattice import (
    Atom,
    delta_atom,
    exp_atom,
    shift_atom,
    multiply_atoms,
    evaluate_atom,
    LatticeFunction,
    delta,
    z,
    constant,
)
from ._element import (
    Flavor,
    FLAVORS,
    AmplifiedKey,
    AmplifiedElement,
    amplified,
    amplified_one,
    from_localized,
    shift_weight,
    amplified_multiply,
    amplified_star,
    counit_plus,
    antipode_plus,
    invariant_integral,
    modular_plus,
)
from ._coproduct import (
    FirstLeg,
    AmplifiedTensor,
    coproduct_plus,
    coaction_gamma,
)
from ._translation import (
    embed_monomial,
    pair_plus,
    translate_right,
    translate_left,
    modular_element,
)

__all__ = [
    "Atom",
    "delta_atom",
    "exp_atom",
    "shift_atom",
    "multiply_atoms",
    "evaluate_atom",
    "LatticeFunction",
    "delta",
    "z",
    "constant",
    "Flavor",
    "FLAVORS",
    "AmplifiedKey",
    "AmplifiedElement",
    "amplified",
    "amplified_one",
    "from_localized",
    "shift_weight",
    "amplified_multiply",
    "amplified_star",
    "counit_plus",
    "antipode_plus",
    "invariant_integral",
    "modular_plus",
    "FirstLeg",
    "AmplifiedTensor",
    "coproduct_plus",
    "coaction_gamma",
    "embed_monomial",
    "pair_plus",
    "translate_right",
    "translate_left",
    "modular_element",
]
