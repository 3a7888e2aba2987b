from .big_poly import BigPoly
from .surd_value import SurdValue

__all__ = ["BigPoly", "SurdValue"]
