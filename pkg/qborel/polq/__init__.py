"""
The Hopf :math:`*`-algebra :math:`\\mathrm{Pol}_q(K)` of matrix coefficients,
its Haar state and its localization at the elements :math:`b_\\varpi`.
"""

from ._clebsch_gordan import (
    DecompositionError,
    TensorRep,
    tensor_rep,
    CGComponent,
    clebsch_gordan,
)
from ._element import (
    Polq,
    polq,
    MatrixCoeffElement,
    PolTensor,
    evaluate,
    evaluate_tensor,
    evaluate_on_tensor,
    product,
    coproduct,
    counit,
    antipode,
    star,
    haar,
    b,
    bihomogeneous_components,
    lwt,
    rwt,
    modular_automorphism,
    left_translate,
    right_translate,
    residual,
    random_element,
)
from ._haar import (
    HaarError,
    InvariantFunctionals,
    haar_invariance_oracle,
    quantum_dimension,
    integral_normalization,
    haar_integral,
    OrthogonalityConstant,
    orthogonality_constants,
)
from ._localized import (
    LocalizedElement,
    exchange_weight,
    localize,
    u,
    abs_b,
    localized_multiply,
    localized_star,
)

__all__ = [
    "DecompositionError",
    "TensorRep",
    "tensor_rep",
    "CGComponent",
    "clebsch_gordan",
    "Polq",
    "polq",
    "MatrixCoeffElement",
    "PolTensor",
    "evaluate",
    "evaluate_tensor",
    "evaluate_on_tensor",
    "product",
    "coproduct",
    "counit",
    "antipode",
    "star",
    "haar",
    "b",
    "bihomogeneous_components",
    "lwt",
    "rwt",
    "modular_automorphism",
    "left_translate",
    "right_translate",
    "residual",
    "random_element",
    "HaarError",
    "InvariantFunctionals",
    "haar_invariance_oracle",
    "quantum_dimension",
    "integral_normalization",
    "haar_integral",
    "OrthogonalityConstant",
    "orthogonality_constants",
    "LocalizedElement",
    "exchange_weight",
    "localize",
    "u",
    "abs_b",
    "localized_multiply",
    "localized_star",
]
