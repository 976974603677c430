"""
Root systems, weight lattices and Weyl group combinatorics.
"""

from ._datum import (
    Weight,
    add_weights,
    sub_weights,
    scale_weight,
    RootDatum,
    build_root_datum,
    CARTAN_MATRICES,
    datum_from_label,
)
from ._weyl import (
    longest_word,
    reduced_words,
    beta_sequence,
    weyl_action,
    longest_element_action,
    dominant_weights,
    weyl_dimension,
    freudenthal_multiplicities,
)

__all__ = [
    "Weight",
    "add_weights",
    "sub_weights",
    "scale_weight",
    "RootDatum",
    "build_root_datum",
    "CARTAN_MATRICES",
    "datum_from_label",
    "longest_word",
    "reduced_words",
    "beta_sequence",
    "weyl_action",
    "longest_element_action",
    "dominant_weights",
    "weyl_dimension",
    "freudenthal_multiplicities",
]
