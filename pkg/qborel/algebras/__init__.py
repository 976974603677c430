"""
Normal-form arithmetic in the quantized enveloping algebra, its Drinfeld
double and its Heisenberg doubles, with their Hopf and star structures and
the skew pairing of the Borel halves.
"""

from ._serre import (
    Word,
    word_content,
    serre_words,
    serre_polynomial,
    SerreBasis,
    serre_basis,
    reduce_word,
)
from ._element import (
    Cartan,
    Monomial,
    AlgebraElement,
    multiply,
    is_zero,
    random_element,
)
from ._tensor import (
    TensorElement,
    tensor,
)
from ._presentations import (
    Letter,
    AbstractPresentation,
    QuantumEnvelope,
    DrinfeldDouble,
    HeisenbergDouble,
    HeisenbergDoubleTilde,
    quantum_envelope,
    drinfeld_double,
    heisenberg_double,
    heisenberg_double_tilde,
)
from ._hopf import (
    coproduct,
    iterated_coproduct,
    counit,
    antipode,
    unitary_antipode,
    star,
)
from ._pairing import (
    skew_pair,
    degenerate_pair,
    pair_tensors,
    drinfeld_interchange_residual,
)

__all__ = [
    "Word",
    "word_content",
    "serre_words",
    "serre_polynomial",
    "SerreBasis",
    "serre_basis",
    "reduce_word",
    "Cartan",
    "Monomial",
    "AlgebraElement",
    "multiply",
    "is_zero",
    "random_element",
    "TensorElement",
    "tensor",
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
    "coproduct",
    "iterated_coproduct",
    "counit",
    "antipode",
    "unitary_antipode",
    "star",
    "skew_pair",
    "degenerate_pair",
    "pair_tensors",
    "drinfeld_interchange_residual",
]
