"""
Quantized enveloping algebras, quantum function algebras and their Galois
objects, with exact and truncated-numeric verification of their identities.
"""

from . import mixins
from . import scalars
from . import roots
from . import algebras
from . import representations
from . import polq
from . import amplified
from . import galois
from . import hilbert
from . import findim
from . import verify

__all__ = [
    "mixins",
    "scalars",
    "roots",
    "algebras",
    "representations",
    "polq",
    "amplified",
    "galois",
    "hilbert",
    "findim",
    "verify",
]
