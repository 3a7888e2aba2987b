from .dq_variant_enum import DqVariantEnum
from .eigenvalue_expr import EigenvalueExpr, IntEigenvalue, PolyRootsEigenvalue, SurdPairEigenvalue
from .graph_shape import DegenerateShape, GraphShape, MultipartiteOtherShape, StarShape, TripartiteShape
from .quotient_matrix3 import QuotientMatrix3
from .spectrum_spec import SpectrumSpec

__all__ = [
    "DegenerateShape",
    "DqVariantEnum",
    "EigenvalueExpr",
    "GraphShape",
    "IntEigenvalue",
    "MultipartiteOtherShape",
    "PolyRootsEigenvalue",
    "QuotientMatrix3",
    "SpectrumSpec",
    "StarShape",
    "SurdPairEigenvalue",
    "TripartiteShape",
]
