"""Equivariant K-classes, cohomology classes and tensor characters of matrix orbit closures."""

from .exactpoly import LaurentPoly
from .kclass import Rank2Config, k_class, k_rank2, k_uniform_rank2
from .linalg import RationalMatrix
from .matroid import Matroid
from .symfunc import SchurExpansion

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "Matroid", "RationalMatrix", "Rank2Config", "SchurExpansion",
    "k_class", "k_rank2", "k_uniform_rank2",
]
