"""Exact verification engine for almost contact B-metric geometry on Lie groups."""

from .description import (
    ManifoldDescription,
    example_sasaki5,
    parse_manifold,
    serialize_manifold,
)
from .errors import (
    ACBError,
    DegenerateCase,
    DimensionMismatch,
    NotApplicable,
    ParseError,
    SingularMetric,
    ValidationError,
)
from .lie import LieAlgebra
from .manifold import Manifold
from .structure import ACBStructure

__all__ = [
    "ACBError",
    "ACBStructure",
    "DegenerateCase",
    "DimensionMismatch",
    "LieAlgebra",
    "Manifold",
    "ManifoldDescription",
    "NotApplicable",
    "ParseError",
    "SingularMetric",
    "ValidationError",
    "example_sasaki5",
    "parse_manifold",
    "serialize_manifold",
]
