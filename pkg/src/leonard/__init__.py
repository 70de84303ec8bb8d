"""Exact computations with Leonard systems over Q and GF(p)."""

from .field import GF, Field, FieldElement, Q
from .labels import ALL_LABELS, BasisLabel
from .matrix import Matrix
from .params import ParameterArray, validate

__all__ = [
    "ALL_LABELS",
    "BasisLabel",
    "Field",
    "FieldElement",
    "GF",
    "Matrix",
    "ParameterArray",
    "Q",
    "validate",
]
