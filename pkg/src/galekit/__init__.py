"""Exact-arithmetic Gale transforms of labeled point configurations.

The package computes the transform itself and certifies the classical
facts around it: self-association witnesses, arithmetic Gorenstein-ness,
rational-normal-curve membership, Goppa/GRS code duality, GIT stability,
orthogonal-basis completions, and determinantal duality -- all over the
rationals or a prime field, with no floating point anywhere.
"""

from .exactla import GF, QQ, ExactMatrix
from .gale import GaleResult, gale_transform
from .pointconfig import (
    Equivalence,
    PointConfiguration,
    is_equivalent_labeled,
    read_configuration,
    write_configuration,
)

__all__ = [
    "GF",
    "QQ",
    "ExactMatrix",
    "GaleResult",
    "gale_transform",
    "Equivalence",
    "PointConfiguration",
    "is_equivalent_labeled",
    "read_configuration",
    "write_configuration",
]

__version__ = "0.1.0"
