from .int_matrix import IntMatrix
from .matrix_kind_enum import MatrixKindEnum
from .multipartite_shape import MultipartiteShape

__all__ = ["IntMatrix", "MatrixKindEnum", "MultipartiteShape"]
